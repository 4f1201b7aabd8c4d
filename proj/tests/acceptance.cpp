// One [PASS]/[FAIL] line per acceptance criterion. Exit status is 1 if a
// criterion fails that is not listed in kUnattainable.

#include <cstdio>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>

#include "emverify/cyclotomic.hpp"
#include "emverify/degree_data.hpp"
#include "emverify/lie_sylow.hpp"
#include "emverify/suites.hpp"
#include "emverify/symblocks.hpp"

using namespace emverify;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

bool all_match(const Report& r, Outcome& o) {
  for (const auto& v : r.violations) o.fail(v);
  std::string mismatches;
  for (const auto& rec : r.records) {
    if (rec.status == Status::mismatch) {
      mismatches += (mismatches.empty() ? "" : ", ") + rec.target + " " + rec.block + " mhB=" + rec.mhB.to_string() +
                    " mhD=" + rec.mhD.to_string();
      o.pass = false;
    }
    if (rec.status == Status::skipped) o.fail(rec.target + " skipped: " + rec.reason);
  }
  if (!mismatches.empty()) o.note = o.note.empty() ? "mismatch: " + mismatches : o.note + "; mismatch: " + mismatches;
  return o.pass;
}

Outcome criterion1() {
  Outcome o;
  for (int p : {2, 3, 5, 7})
    for (int n = 1; n <= 40; ++n)
      for (const auto& b : blocks_sym(n, p)) {
        const MinHeight mhB = mh_block(b);
        const MinHeight mhD = mh_sylow_sym(p * b.weight, p);
        const MinHeight expected = b.weight >= p ? MinHeight(1) : MinHeight::infinity();
        if (mhB != mhD || mhB != expected) o.fail("S" + std::to_string(n) + " p=" + std::to_string(p) + " " + b.id());
      }
  all_match(run_sym(40, {2, 3, 5, 7}), o);
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int n = 2; n <= 30; ++n)
    for (const auto& b : blocks_alt(n, 2)) {
      const MinHeight expected = b.weight <= 2 ? MinHeight::infinity() : MinHeight(1);
      if (mh_block(b) != expected) o.fail("A" + std::to_string(n) + " p=2 " + b.id());
    }
  all_match(run_alt(30, {2, 3, 5}), o);
  return o;
}

Outcome criterion3() {
  Outcome o;
  struct Want {
    int q;
    std::uint64_t linear, nonlinear, classes;
  };
  for (const Want w : {Want{3, 27, 24, 51}, Want{5, 125, 120, 245}}) {
    const auto r = char_degrees(build_lemma33_group(w.q));
    const std::map<std::uint64_t, std::uint64_t> want = {{1, w.linear}, {static_cast<std::uint64_t>(w.q), w.nonlinear}};
    if (r.degrees != want || r.class_count != w.classes || r.linear_count != w.linear)
      o.fail("Y(q=" + std::to_string(w.q) + ")");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  int checked = 0;
  for (int n = 1; ipow(2, nu_p_factorial(n, 2)) <= (1 << 14); ++n) {
    const auto group = PermGroup::closure(sylow_generators_sym(n, 2), (1 << 14) + 1);
    if (!(engine_degrees(group, 2) == sylow_degrees_sym(n, 2))) o.fail("S" + std::to_string(n));
    ++checked;
  }
  if (checked < 15) o.fail("only " + std::to_string(checked) + " degrees checked");
  all_match(run_sylow_oracle(kDefaultOracleBound), o);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Report r = run_lie({LieFamily::A, LieFamily::B, LieFamily::C, LieFamily::D, LieFamily::D2, LieFamily::D4_3,
                            LieFamily::G2},
                           4, {2, 3, 4, 5, 7, 8, 9});
  all_match(r, o);
  std::size_t sylow = 0, skipped = 0;
  for (const auto& rec : r.records) {
    if (rec.block == "sylow" && rec.status == Status::match) ++sylow;
    if (rec.status == Status::skipped) ++skipped;
  }
  if (sylow == 0) o.fail("no Sylow instance checked");
  if (symbol_degree(Symbol{{0, 2}, {3}}, LieFamily::C).specialize(2) != 918) o.fail("symbol (0,2|3) at q=2");
  if (o.pass) o.note = std::to_string(r.count(Status::match)) + " match, " + std::to_string(skipped) + " skipped";
  return o;
}

Outcome criterion6() {
  Outcome o;
  all_match(run_lemma42({3, 5, 7, 11}, 50, 2), o);
  for (std::int64_t p : {3, 5, 7, 11}) {
    std::vector<std::int64_t> ds;
    for (auto d : divisors(p - 1)) ds.push_back(d);
    if (!lemma42_scan(p, ds, 2, 50).violations.empty()) o.fail("p=" + std::to_string(p));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int p : {2, 3, 5, 7})
    for (int n = 1; n <= 40; ++n) {
      if (!sylow_degrees_sym(n, p).sum_of_squares_holds()) o.fail("sum of squares S" + std::to_string(n));
      int total = 0;
      for (const auto& b : blocks_sym(n, p)) {
        const auto h = block_heights(b);
        total += h.character_count();
        if (!h.counts.count(0)) o.fail("no height zero " + b.id());
      }
      if (total != partition_count(n)) o.fail("character count S" + std::to_string(n));
    }
  for (int m = 1; m <= 200; ++m)
    for (std::int64_t q : {2, 3, 4, 5}) {
      BigInt prod = 1;
      for (auto d : divisors(m)) prod *= cyclotomic_value(d, q);
      if (prod != big_pow(q, m) - 1) o.fail("cyclotomic product m=" + std::to_string(m));
    }
  for (int q : {3, 5})
    if (!char_degrees(build_lemma33_group(q)).invariants_hold()) o.fail("engine sum of squares");
  const auto data = validate_degree_data();
  for (const auto& v : data.violations) o.fail(v);
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto json = [] {
    std::ostringstream out;
    write_report(out, run_default_suite(), Format::json);
    return out.str();
  };
  const std::string first = json();
  const std::string second = json();
  if (first != second) o.fail("default suite JSON differs between runs");
  if (first.empty()) o.fail("empty report");
  return o;
}

}  // namespace

// Criterion 5 asks the unipotent minimum to equal m(G,p) for every admissible
// group, which is false for B2(2), C2(2) (not quasi-simple) and B3(2), C3(2)
// (height 1 comes from non-unipotent characters).
const std::set<std::size_t> kUnattainable = {5};

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symmetric groups: mh(B) = mh(D), n <= 40, p in {2,3,5,7}", criterion1},
      {"alternating groups: mh(B) = mh(D), n <= 30, p in {2,3,5}", criterion2},
      {"group Y: degree counts and class counts for q = 3, 5", criterion3},
      {"Sylow 2-subgroups of S_n: recursion equals engine", criterion4},
      {"groups of Lie type: unipotent mh and Sylow mh equal m(G,p)", criterion5},
      {"cyclotomic valuation scan: no violations", criterion6},
      {"property suites", criterion7},
      {"default suite JSON is byte-identical across runs", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const bool known = kUnattainable.count(i + 1) != 0;
    if (!o.pass && !known) ++failures;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first
              << (o.note.empty() ? "" : "  (" + o.note + ")") << (!o.pass && known ? "  [known unattainable]" : "")
              << '\n';
  }
  return failures == 0 ? 0 : 1;
}
