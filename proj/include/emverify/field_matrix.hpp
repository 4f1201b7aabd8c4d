#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "emverify/finite_field.hpp"

namespace emverify {

/// Square matrix over a FiniteField, row-major.
class FieldMatrix {
 public:
  using Element = FiniteField::Element;

  FieldMatrix(FieldPtr field, int dim);  // zero matrix
  static FieldMatrix identity(FieldPtr field, int dim);
  /// Identity plus `value` at (row, col).
  static FieldMatrix elementary(FieldPtr field, int dim, int row, int col, Element value);

  int dim() const { return dim_; }
  const FiniteField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  Element at(int r, int c) const { return entries_[static_cast<std::size_t>(r * dim_ + c)]; }
  void set(int r, int c, Element v) { entries_[static_cast<std::size_t>(r * dim_ + c)] = v; }
  const std::vector<Element>& entries() const { return entries_; }

  FieldMatrix operator*(const FieldMatrix& rhs) const;
  FieldMatrix inverse() const;
  FieldMatrix transpose() const;
  /// Entrywise Frobenius power x -> x^r.
  FieldMatrix entry_power(std::uint64_t r) const;
  bool is_upper_unitriangular() const;
  bool same_shape(const FieldMatrix& other) const;

  /// Rows separated by ';', entries by spaces (field-element codes).
  std::string to_string() const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  FieldPtr field_;
  int dim_;
  std::vector<Element> entries_;
};

struct FieldMatrixHash {
  std::size_t operator()(const FieldMatrix& g) const noexcept;
};

}  // namespace emverify
