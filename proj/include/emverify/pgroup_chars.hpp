#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "emverify/arith.hpp"
#include "emverify/errors.hpp"
#include "emverify/min_height.hpp"
#include "emverify/permutation.hpp"

namespace emverify {

/// Character degrees of a p-group, stored as exponents: counts[k] characters of
/// degree p^k. `order` is log_p of the group order.
struct PDegreeMultiset {
  int p = 2;
  std::map<int, BigInt> counts;
  int order = 0;

  BigInt character_count() const;
  /// sum counts[k] * p^(2k) == p^order
  bool sum_of_squares_holds() const;
  MinHeight min_positive_exponent() const;

  friend bool operator==(const PDegreeMultiset&, const PDegreeMultiset&) = default;
};

PDegreeMultiset trivial_multiset(int p);
PDegreeMultiset cyclic_multiset(int p);

/// Degrees of base wr C_p (Clifford theory over the base p-tuple).
PDegreeMultiset wreath_cyclic_p(const PDegreeMultiset& base, int p);
/// Degrees of a direct product.
PDegreeMultiset direct_product(const PDegreeMultiset& a, const PDegreeMultiset& b);
/// k-fold iterated wreath power of C_p (k = 0 is the trivial group).
PDegreeMultiset iterated_wreath(int k, int p);

PDegreeMultiset sylow_degrees_sym(int n, int p);
MinHeight mh_sylow_sym(int n, int p);
/// Sylow 2-subgroup of A_n, n = 2w: abelian for w <= 2, else has a degree-2 character.
MinHeight mh_sylow_alt(int n);

/// Permutation generators on {0..n-1} of a Sylow p-subgroup of S_n: one
/// iterated wreath product C_p wr ... wr C_p per p-adic digit block.
/// Throws BoundExceeded when p^nu_p(n!) > max_order.
std::vector<Permutation> sylow_generators_sym(int n, int p, std::int64_t max_order = std::int64_t{1} << 14);

}  // namespace emverify
