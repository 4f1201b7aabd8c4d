#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emverify/concrete_group.hpp"
#include "emverify/lie_heights.hpp"
#include "emverify/pgroup_chars.hpp"
#include "emverify/report.hpp"

namespace emverify {

inline constexpr std::int64_t kDefaultOracleBound = std::int64_t{1} << 14;
/// Largest unitriangular search run_lie will do for an Sp4/SU Sylow model.
inline constexpr std::int64_t kSylowSearchLimit = std::int64_t{1} << 22;

/// Every S_n block for 1 <= n <= n_max: mh_block against mh_sylow_sym(p*w).
Report run_sym(int n_max, const std::vector<std::int64_t>& primes);
/// Every A_n block for 2 <= n <= n_max; defect groups from S_{pw} (p odd) or A_{2w} (p = 2).
Report run_alt(int n_max, const std::vector<std::int64_t>& primes);

/// Degree multiset of a p-group computed by the generic engine. Throws unless
/// every degree is a power of p.
PDegreeMultiset engine_degrees(const PermGroup& group, int p);

/// Generators of a Sylow 2-subgroup of A_n (Schreier generators of the even
/// part of the S_n Sylow subgroup).
std::vector<Permutation> sylow_generators_alt(int n, std::int64_t max_order = kDefaultOracleBound);

/// Wreath recursion against the engine, for S_n with p in `primes` and A_{2w}
/// at p = 2, wherever the Sylow order is at most `bound`.
Report run_sylow_oracle(std::int64_t bound, const std::vector<std::int64_t>& primes = {2});

/// Unipotent heights against m(G,p) for every (family, rank, q), plus the
/// engine on the explicit Sylow subgroups that fit under `bound`.
Report run_lie(const std::vector<LieFamily>& families, int rank_max, const std::vector<std::int64_t>& q_list,
               std::int64_t bound = kDefaultOracleBound);

/// Per (p, q, i) records nu_p(Phi_{d p^i}(q)) against 1, d the order of q mod p,
/// together with the full scan over all d | p-1.
Report run_lemma42(const std::vector<std::int64_t>& p_list, std::int64_t q_max, int i_max);

/// Builds Y for each odd q and checks its degrees, class count and derived subgroup.
Report run_lemma33(const std::vector<std::int64_t>& q_list, std::int64_t bound = kDefaultOracleBound);

/// sym, alt, sylow-oracle, lie, lemma42 and lemma33 at their default settings.
Report run_default_suite();

}  // namespace emverify
