#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace emverify {

/// Class-algebra data of a finite group. `structure_matrix(j)` returns the
/// h x h matrix R with R[i][k] = #{x in C_j : x^-1 z_i in C_k} for fixed
/// class representatives z_i. Central characters are the common left
/// eigenvectors of these matrices.
struct ClassAlgebra {
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<int> inverse_class;
  int identity_class = 0;
  std::function<std::vector<std::vector<std::uint64_t>>(int)> structure_matrix;
};

struct DegreeReport {
  std::map<std::uint64_t, std::uint64_t> degrees;  // degree -> multiplicity
  std::uint64_t class_count = 0;
  std::uint64_t linear_count = 0;
  std::uint64_t derived_order = 0;
  std::uint64_t group_order = 0;
  std::uint64_t modular_prime = 0;

  /// sum degree^2 * mult = |G|, sum mult = class count, linear = |G| / |G'|.
  bool invariants_hold() const;
};

/// Least prime ell = 1 (mod exponent) with ell > 2 sqrt(order). Throws
/// std::runtime_error when none exists below `search_limit`.
std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent,
                          std::uint64_t search_limit = std::uint64_t{1} << 31);

/// Irreducible character degrees from the class algebra: simultaneous
/// eigenspaces of the class matrices over F_ell, then chi(1)^2 from the
/// orthogonality normalization.
DegreeReport degrees_from_class_algebra(const ClassAlgebra& algebra);

}  // namespace emverify
