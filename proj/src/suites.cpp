#include "emverify/suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <stdexcept>

#include "emverify/cyclotomic.hpp"
#include "emverify/degree_data.hpp"
#include "emverify/errors.hpp"
#include "emverify/lie_sylow.hpp"
#include "emverify/symblocks.hpp"

namespace emverify {

namespace {

std::string s_target(const char* group, int n, std::int64_t p) {
  return std::string(group) + std::to_string(n) + " p=" + std::to_string(p);
}

// Runs work(i) for i in [0, count) on a small worker pool; results are
// concatenated in index order, so output does not depend on scheduling.
template <class F>
Report fan_out(std::size_t count, F work) {
  std::vector<Report> parts(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        parts[i] = work(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  Report out;
  for (auto& part : parts) out.append(std::move(part));
  return out;
}

void block_invariants(const BlockLabel& b, const HeightMultiset& h, const std::string& where, Report& report) {
  if (!h.counts.count(0)) report.violations.push_back(where + " " + b.id() + ": no character of height zero");
  if (!defect_check(b)) report.violations.push_back(where + " " + b.id() + ": defect differs from the weight formula");
}

MinHeight engine_mh(const DegreeReport& degrees, std::int64_t p) {
  std::optional<int> best;
  for (const auto& [deg, mult] : degrees.degrees) {
    if (deg == 1) continue;
    const int nu = nu_p(static_cast<std::int64_t>(deg), p);
    if (!best || nu < *best) best = nu;
  }
  return best ? MinHeight(*best) : MinHeight::infinity();
}

std::string degree_summary(const DegreeReport& r) {
  std::string out = "order=" + std::to_string(r.group_order) + " classes=" + std::to_string(r.class_count) + " degrees=";
  bool first = true;
  for (const auto& [deg, mult] : r.degrees) {
    out += (first ? "" : ",") + std::to_string(deg) + "^" + std::to_string(mult);
    first = false;
  }
  return out;
}

}  // namespace

Report run_sym(int n_max, const std::vector<std::int64_t>& primes) {
  std::vector<std::pair<int, int>> items;
  for (auto p : primes)
    for (int n = 1; n <= n_max; ++n) items.emplace_back(n, static_cast<int>(p));
  return fan_out(items.size(), [&items](std::size_t i) {
    const auto [n, p] = items[i];
    Report report;
    const std::string target = s_target("S", n, p);
    int characters = 0;
    for (const auto& b : blocks_sym(n, p)) {
      const HeightMultiset h = block_heights(b);
      characters += h.character_count();
      block_invariants(b, h, target, report);
      report.records.push_back(VerificationRecord::compare(target, b.id(), mh_block(b), mh_sylow_sym(p * b.weight, p),
                                                           "symblocks:mh_block / pgroup-chars:mh_sylow_sym"));
    }
    if (characters != partition_count(n))
      report.violations.push_back(target + ": blocks hold " + std::to_string(characters) + " characters, expected " +
                                  std::to_string(partition_count(n)));
    return report;
  });
}

Report run_alt(int n_max, const std::vector<std::int64_t>& primes) {
  std::vector<std::pair<int, int>> items;
  for (auto p : primes)
    for (int n = 2; n <= n_max; ++n) items.emplace_back(n, static_cast<int>(p));
  return fan_out(items.size(), [&items](std::size_t i) {
    const auto [n, p] = items[i];
    Report report;
    const std::string target = s_target("A", n, p);
    for (const auto& b : blocks_alt(n, p)) {
      const HeightMultiset h = block_heights(b);
      block_invariants(b, h, target, report);
      const MinHeight mhD = p == 2 ? mh_sylow_alt(2 * b.weight) : mh_sylow_sym(p * b.weight, p);
      report.records.push_back(VerificationRecord::compare(
          target, b.id(), mh_block(b), mhD,
          p == 2 ? "symblocks:mh_block / pgroup-chars:mh_sylow_alt" : "symblocks:mh_block / pgroup-chars:mh_sylow_sym"));
    }
    return report;
  });
}

PDegreeMultiset engine_degrees(const PermGroup& group, int p) {
  const DegreeReport r = char_degrees(group);
  if (!r.invariants_hold()) throw std::logic_error("engine degrees fail their own invariants");
  PDegreeMultiset out;
  out.p = p;
  for (std::size_t o = group.order(); o > 1; o /= static_cast<std::size_t>(p)) {
    if (o % static_cast<std::size_t>(p) != 0) throw std::invalid_argument("engine_degrees: not a p-group");
    ++out.order;
  }
  for (const auto& [deg, mult] : r.degrees) {
    int k = 0;
    for (auto d = deg; d > 1; d /= static_cast<std::uint64_t>(p)) {
      if (d % static_cast<std::uint64_t>(p) != 0) throw std::logic_error("engine_degrees: degree is not a power of p");
      ++k;
    }
    out.counts[k] += mult;
  }
  return out;
}

std::vector<Permutation> sylow_generators_alt(int n, std::int64_t max_order) {
  const auto gens = sylow_generators_sym(n, 2, 2 * max_order);
  const Permutation* odd = nullptr;
  for (const auto& g : gens)
    if (!g.is_even()) {
      odd = &g;
      break;
    }
  if (odd == nullptr) return gens;
  const Permutation t = *odd;
  const Permutation t_inv = t.inverse();
  std::vector<Permutation> out;
  for (const auto& s : gens) {
    if (s.is_even()) {
      out.push_back(s);
      out.push_back(t * s * t_inv);
    } else {
      out.push_back(s * t_inv);
      out.push_back(t * s);
    }
  }
  std::vector<Permutation> kept;
  for (auto& g : out) {
    if (g.is_identity()) continue;
    bool seen = false;
    for (const auto& k : kept) seen |= k == g;
    if (!seen) kept.push_back(std::move(g));
  }
  if (kept.empty()) kept.push_back(Permutation::identity(n));
  return kept;
}

Report run_sylow_oracle(std::int64_t bound, const std::vector<std::int64_t>& primes) {
  struct Item {
    int n;
    int p;
    bool alternating;
  };
  std::vector<Item> items;
  for (auto p : primes)
    for (int n = 2;; ++n) {
      if (BigInt(big_pow(BigInt(p), nu_p_factorial(n, p))) > bound) break;
      items.push_back({n, static_cast<int>(p), false});
    }
  for (int n = 4;; n += 2) {
    if (BigInt(big_pow(BigInt(2), nu_p_factorial(n, 2) - 1)) > bound) break;
    items.push_back({n, 2, true});
  }
  return fan_out(items.size(), [&items, bound](std::size_t i) {
    const Item it = items[i];
    Report report;
    const std::string target = std::string("Syl") + std::to_string(it.p) + "(" + (it.alternating ? "A" : "S") +
                               std::to_string(it.n) + ")";
    const auto gens = it.alternating ? sylow_generators_alt(it.n, bound) : sylow_generators_sym(it.n, it.p, bound);
    const PermGroup group = PermGroup::closure(gens, static_cast<std::size_t>(bound) + 1);
    const PDegreeMultiset engine = engine_degrees(group, it.p);
    if (it.alternating) {
      report.records.push_back(VerificationRecord::compare(target, "sylow", engine.min_positive_exponent(),
                                                           mh_sylow_alt(it.n),
                                                           "groupengine / pgroup-chars:mh_sylow_alt"));
      return report;
    }
    const PDegreeMultiset recursion = sylow_degrees_sym(it.n, it.p);
    auto record = VerificationRecord::compare(target, "sylow", engine.min_positive_exponent(),
                                              recursion.min_positive_exponent(),
                                              "groupengine / pgroup-chars:sylow_degrees_sym");
    record.detail = "order=" + std::to_string(group.order());
    report.records.push_back(record);
    if (!(engine == recursion)) report.violations.push_back(target + ": engine and recursion multisets differ");
    if (!recursion.sum_of_squares_holds()) report.violations.push_back(target + ": recursion fails sum of squares");
    return report;
  });
}

namespace {

std::vector<int> ranks_for(LieFamily family, int rank_max) {
  if (int r = fixed_rank(family)) return {r};
  const int low = family == LieFamily::D || family == LieFamily::D2 ? 4 : 2;
  std::vector<int> out;
  for (int r = low; r <= rank_max; ++r) out.push_back(r);
  return out;
}

// Explicit Sylow model available for this (family, rank), if any.
std::optional<std::pair<SylowFamily, int>> sylow_model(LieFamily family, int rank) {
  switch (family) {
    case LieFamily::A: return std::make_pair(SylowFamily::SL, rank + 1);
    case LieFamily::B: case LieFamily::C:
      if (rank == 2) return std::make_pair(SylowFamily::Sp4, 4);
      break;
    case LieFamily::A2:
      if (rank == 2) return std::make_pair(SylowFamily::SU3, 3);
      if (rank == 3) return std::make_pair(SylowFamily::SU4, 4);
      break;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace

Report run_lie(const std::vector<LieFamily>& families, int rank_max, const std::vector<std::int64_t>& q_list,
               std::int64_t bound) {
  struct Item {
    LieFamily family;
    int rank;
    std::int64_t q;
    bool sylow;
  };
  std::vector<Item> items;
  for (auto family : families)
    for (int rank : ranks_for(family, rank_max))
      for (auto q : q_list) {
        items.push_back({family, rank, q, false});
        if (auto model = sylow_model(family, rank)) {
          if (BigInt(big_pow(BigInt(q), positive_root_count(model->first, model->second))) <= bound &&
              sylow_search_size(model->first, model->second, static_cast<int>(q)) <= kSylowSearchLimit)
            items.push_back({family, rank, q, true});
        }
      }
  return fan_out(items.size(), [&items, bound](std::size_t i) {
    const Item it = items[i];
    Report report;
    const std::string block = it.sylow ? "sylow" : "principal";
    GroupSpec spec;
    std::string target = to_string(it.family) + std::to_string(it.rank) + "(" + std::to_string(it.q) + ")";
    MExponent m;
    try {
      spec = GroupSpec::from_field_size(it.family, it.rank, it.q);
      target = spec.to_string();
      m = m_of(spec);
    } catch (const std::invalid_argument& e) {
      report.records.push_back(VerificationRecord::skip(target, block, e.what(), "lieheights:m_of"));
      return report;
    }
    if (it.sylow) {
      const auto model = *sylow_model(it.family, it.rank);
      const MatrixGroup group = build_sylow_lie(model.first, model.second, static_cast<int>(it.q),
                                                static_cast<std::size_t>(bound) + 1);
      const DegreeReport degrees = char_degrees(group);
      if (!degrees.invariants_hold()) report.violations.push_back(target + ": engine degrees fail invariants");
      auto record = VerificationRecord::compare(target, block, engine_mh(degrees, spec.p), MinHeight(m.value),
                                                "groupengine:" + to_string(model.first) + " / lieheights:m_of");
      record.detail = degree_summary(degrees) + " field=" + group.element(0).field().modulus_string();
      report.records.push_back(record);
      return report;
    }
    MinHeight mh;
    try {
      mh = unipotent_mh(it.family, it.rank, it.q);
    } catch (const std::domain_error& e) {
      report.records.push_back(VerificationRecord::skip(target, block, e.what(), "lieheights:unipotent_mh"));
      return report;
    }
    const std::string provenance = "lieheights:unipotent_mh (unipotent characters only) / lieheights:m_of";
    auto record = VerificationRecord::compare(target, block, mh, MinHeight(m.value), provenance);
    if (record.status == Status::mismatch) record.detail = unipotent_restriction_note(it.family, it.rank, it.q);
    report.records.push_back(record);
    return report;
  });
}

Report run_lemma42(const std::vector<std::int64_t>& p_list, std::int64_t q_max, int i_max) {
  Report report;
  for (auto p : p_list) {
    for (std::int64_t q = 2; q <= q_max; ++q) {
      if (q % p == 0) continue;
      const std::int64_t d = multiplicative_order(q, p);
      const std::string target = "Phi p=" + std::to_string(p) + " q=" + std::to_string(q);
      for (int i = 1; i <= i_max; ++i) {
        const std::int64_t m = d * ipow(p, i);
        const int nu = nu_p(cyclotomic_value(m, BigInt(q)), p);
        report.records.push_back(VerificationRecord::compare(target, "m=" + std::to_string(m), MinHeight(nu),
                                                             MinHeight(1), "cyclo:cyclotomic_value / expected 1"));
      }
    }
    std::vector<std::int64_t> d_set;
    for (auto d : divisors(p - 1)) d_set.push_back(d);
    const Lemma42Report scan = lemma42_scan(p, d_set, i_max, q_max);
    for (const auto& v : scan.violations)
      report.violations.push_back("lemma42 p=" + std::to_string(v.p) + " d=" + std::to_string(v.d) +
                                  " q=" + std::to_string(v.q) + " m=" + std::to_string(v.m) + ": nu=" +
                                  std::to_string(v.observed_nu) + " expected " + std::to_string(v.expected_nu));
  }
  return report;
}

Report run_lemma33(const std::vector<std::int64_t>& q_list, std::int64_t bound) {
  return fan_out(q_list.size(), [&q_list, bound](std::size_t i) {
    const std::int64_t q = q_list[i];
    Report report;
    const std::string target = "Y(q=" + std::to_string(q) + ")";
    const auto pp = as_prime_power(q);
    if (!pp || pp->p == 2) {
      report.records.push_back(VerificationRecord::skip(target, "degrees", "q must be an odd prime power", "lie_sylow"));
      return report;
    }
    MatrixGroup group = build_lemma33_group(static_cast<int>(q), static_cast<std::size_t>(bound) + 1);
    const DegreeReport r = char_degrees(group);
    const auto uq = static_cast<std::uint64_t>(q);
    const std::map<std::uint64_t, std::uint64_t> expected = {{1, uq * uq * uq}, {uq, uq * uq * uq - uq}};
    if (r.degrees != expected) report.violations.push_back(target + ": degree multiset " + degree_summary(r));
    if (r.class_count != 2 * uq * uq * uq - uq) report.violations.push_back(target + ": class count");
    if (r.derived_order != uq * uq) report.violations.push_back(target + ": derived subgroup order");
    if (!r.invariants_hold()) report.violations.push_back(target + ": engine invariants");
    auto record = VerificationRecord::compare(target, "degrees", engine_mh(r, pp->p), MinHeight(pp->f),
                                              "groupengine:Y / expected f");
    record.detail = degree_summary(r) + " derived=" + std::to_string(r.derived_order) +
                    " field=" + group.element(0).field().modulus_string();
    report.records.push_back(record);
    return report;
  });
}

Report run_default_suite() {
  Report report;
  report.append(run_sym(20, {2, 3, 5}));
  report.append(run_alt(20, {2, 3, 5}));
  report.append(run_sylow_oracle(kDefaultOracleBound));
  report.append(run_lie({LieFamily::A, LieFamily::A2, LieFamily::B, LieFamily::C, LieFamily::D, LieFamily::D2,
                         LieFamily::D4_3, LieFamily::G2},
                        4, {2, 3, 4, 5, 7, 8, 9}));
  report.append(run_lemma42({3, 5, 7, 11}, 50, 2));
  report.append(run_lemma33({3, 5}));
  report.sort();
  return report;
}

}  // namespace emverify
