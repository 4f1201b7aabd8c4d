#pragma once

#include <cstdint>
#include <string>

#include "emverify/arith.hpp"
#include "emverify/concrete_group.hpp"

namespace emverify {

/// The order-q^5 group of 3x3 upper unitriangular matrices over F_{q^2} whose
/// (2,3) entry lies in F_q. Needs q odd; throws BoundExceeded when q^5 > bound.
MatrixGroup build_lemma33_group(int q, std::size_t bound = kDefaultGroupBound);

enum class SylowFamily { SL, Sp4, SU3, SU4 };

SylowFamily parse_sylow_family(const std::string& name);
std::string to_string(SylowFamily family);

/// Number of positive roots of the family's root system (log_q of the Sylow order).
int positive_root_count(SylowFamily family, int n);

/// Matrices a construction has to filter: all unitriangular matrices of the
/// ambient size for Sp4/SU3/SU4, 0 for SL (built from generators).
BigInt sylow_search_size(SylowFamily family, int n, int q);

/// Sylow p-subgroup (p | q) as a unipotent matrix group:
///  SL: upper unitriangular n x n over F_q;
///  Sp4: unitriangular elements preserving the alternating form antidiag(1,1,-1,-1);
///  SU3/SU4: unitriangular elements over F_{q^2} preserving the hermitian form antidiag(1,..,1).
MatrixGroup build_sylow_lie(SylowFamily family, int n, int q, std::size_t bound = kDefaultGroupBound);

}  // namespace emverify
