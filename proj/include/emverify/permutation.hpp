#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace emverify {

/// Permutation of {0..degree-1} stored as its image array. Products compose
/// left to right: (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation identity(int degree);
  /// Cycles given with 1-based points, e.g. {{1,2},{3,4}} for (1,2)(3,4).
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool is_even() const;
  bool same_shape(const Permutation& other) const { return degree() == other.degree(); }

  /// 1-based cycle notation, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept;
};

}  // namespace emverify
