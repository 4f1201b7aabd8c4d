#include "emverify/field_matrix.hpp"

#include <stdexcept>

namespace emverify {

FieldMatrix::FieldMatrix(FieldPtr field, int dim)
    : field_(std::move(field)), dim_(dim), entries_(static_cast<std::size_t>(dim * dim), 0) {
  if (!field_) throw std::invalid_argument("FieldMatrix: null field");
  if (dim < 1) throw std::invalid_argument("FieldMatrix: dimension must be >= 1");
}

FieldMatrix FieldMatrix::identity(FieldPtr field, int dim) {
  FieldMatrix m(std::move(field), dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::elementary(FieldPtr field, int dim, int row, int col, Element value) {
  FieldMatrix m = identity(std::move(field), dim);
  m.set(row, col, m.field().add(m.at(row, col), value));
  return m;
}

bool FieldMatrix::same_shape(const FieldMatrix& other) const {
  return dim_ == other.dim_ && (field_ == other.field_ || (field_->characteristic() == other.field_->characteristic() &&
                                                            field_->modulus() == other.field_->modulus()));
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
  if (!same_shape(rhs)) throw std::invalid_argument("FieldMatrix product: shape mismatch");
  const FiniteField& F = *field_;
  FieldMatrix out(field_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Element a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        const Element b = rhs.at(k, j);
        if (b == 0) continue;
        out.set(i, j, F.add(out.at(i, j), F.mul(a, b)));
      }
    }
  return out;
}

FieldMatrix FieldMatrix::inverse() const {
  const FiniteField& F = *field_;
  FieldMatrix a = *this;
  FieldMatrix inv = identity(field_, dim_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = col;
    while (pivot < dim_ && a.at(pivot, col) == 0) ++pivot;
    if (pivot == dim_) throw std::domain_error("FieldMatrix: singular matrix");
    if (pivot != col)
      for (int j = 0; j < dim_; ++j) {
        std::swap(a.entries_[static_cast<std::size_t>(pivot * dim_ + j)], a.entries_[static_cast<std::size_t>(col * dim_ + j)]);
        std::swap(inv.entries_[static_cast<std::size_t>(pivot * dim_ + j)], inv.entries_[static_cast<std::size_t>(col * dim_ + j)]);
      }
    const Element scale = F.inv(a.at(col, col));
    for (int j = 0; j < dim_; ++j) {
      a.set(col, j, F.mul(a.at(col, j), scale));
      inv.set(col, j, F.mul(inv.at(col, j), scale));
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col) continue;
      const Element factor = a.at(r, col);
      if (factor == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        a.set(r, j, F.sub(a.at(r, j), F.mul(factor, a.at(col, j))));
        inv.set(r, j, F.sub(inv.at(r, j), F.mul(factor, inv.at(col, j))));
      }
    }
  }
  return inv;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix out(field_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.set(j, i, at(i, j));
  return out;
}

FieldMatrix FieldMatrix::entry_power(std::uint64_t r) const {
  FieldMatrix out(field_, dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_->pow(entries_[i], r);
  return out;
}

bool FieldMatrix::is_upper_unitriangular() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j <= i; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string FieldMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < dim_; ++i) {
    if (i) out += ';';
    for (int j = 0; j < dim_; ++j) {
      if (j) out += ' ';
      out += std::to_string(at(i, j));
    }
  }
  return out;
}

std::size_t FieldMatrixHash::operator()(const FieldMatrix& g) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : g.entries()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace emverify
