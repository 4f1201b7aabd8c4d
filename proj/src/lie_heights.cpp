#include "emverify/lie_heights.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "emverify/degree_data.hpp"

namespace emverify {

namespace {

struct FamilyInfo {
  LieFamily family;
  const char* name;
};

constexpr std::array<FamilyInfo, 16> kFamilies{{
    {LieFamily::A, "A"},     {LieFamily::A2, "2A"},   {LieFamily::B, "B"},     {LieFamily::C, "C"},
    {LieFamily::D, "D"},     {LieFamily::D2, "2D"},   {LieFamily::D4_3, "3D4"}, {LieFamily::G2, "G2"},
    {LieFamily::F4, "F4"},   {LieFamily::E6, "E6"},   {LieFamily::E6_2, "2E6"}, {LieFamily::E7, "E7"},
    {LieFamily::E8, "E8"},   {LieFamily::B2_2, "2B2"}, {LieFamily::G2_2, "2G2"}, {LieFamily::F4_2, "2F4"},
}};

int binom2(int k) { return k >= 2 ? k * (k - 1) / 2 : 0; }

// Degree accumulator: q^a * prod Phi_e^m / 2^(c0 - twos).
struct Accumulator {
  int q_power = 0;
  int twos = 0;
  std::map<int, int> cyc;

  void qk_minus_one(int k, int sign) {
    for (auto e : divisors(k)) cyc[static_cast<int>(e)] += sign;
  }
  void qk_plus_one(int k, int sign) {
    for (auto e : divisors(2 * k))
      if (k % e != 0) cyc[static_cast<int>(e)] += sign;
  }
};

std::vector<std::pair<Partition, Partition>> bipartitions(int n) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int k = n; k >= 0; --k)
    for (const auto& a : partitions_of(k))
      for (const auto& b : partitions_of(n - k)) out.emplace_back(a, b);
  return out;
}

}  // namespace

std::string to_string(LieFamily family) {
  for (const auto& info : kFamilies)
    if (info.family == family) return info.name;
  throw std::invalid_argument("unknown Lie family");
}

LieFamily parse_lie_family(const std::string& name) {
  for (const auto& info : kFamilies)
    if (name == info.name) return info.family;
  throw std::invalid_argument("unknown Lie family '" + name + "'");
}

bool is_suzuki_ree(LieFamily family) {
  return family == LieFamily::B2_2 || family == LieFamily::G2_2 || family == LieFamily::F4_2;
}

int fixed_rank(LieFamily family) {
  switch (family) {
    case LieFamily::D4_3: return 4;
    case LieFamily::G2: return 2;
    case LieFamily::F4: return 4;
    case LieFamily::E6: case LieFamily::E6_2: return 6;
    case LieFamily::E7: return 7;
    case LieFamily::E8: return 8;
    case LieFamily::B2_2: return 2;
    case LieFamily::G2_2: return 2;
    case LieFamily::F4_2: return 4;
    default: return 0;
  }
}

GroupSpec GroupSpec::from_field_size(LieFamily family, int rank, std::int64_t field_size) {
  auto pp = as_prime_power(field_size);
  if (!pp) throw std::invalid_argument("field size " + std::to_string(field_size) + " is not a prime power");
  GroupSpec spec{family, rank, pp->p, pp->f};
  if (is_suzuki_ree(family)) {
    if (pp->f % 2 == 0) throw std::invalid_argument("Suzuki/Ree field size must be an odd power of p");
    spec.f = (pp->f - 1) / 2;
  }
  spec.validate();
  return spec;
}

std::int64_t GroupSpec::q() const { return ipow(p, f); }

std::string GroupSpec::to_string() const {
  std::string field = is_suzuki_ree(family) ? std::to_string(ipow(p, 2 * f + 1)) : std::to_string(q());
  std::string fam = emverify::to_string(family);
  if (fixed_rank(family) != 0) return fam + "(" + field + ")";
  return fam + std::to_string(rank) + "(" + field + ")";
}

void GroupSpec::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (f < 0 || (!is_suzuki_ree(family) && f < 1)) throw std::invalid_argument("field exponent must be positive");
  const int fr = fixed_rank(family);
  if (fr != 0 && rank != fr)
    throw std::invalid_argument(emverify::to_string(family) + " has rank " + std::to_string(fr));
  switch (family) {
    case LieFamily::A:
      if (rank == 1) throw std::invalid_argument("type A1 is excluded (abelian Sylow subgroups)");
      if (rank < 2) throw std::invalid_argument("type A needs rank >= 2");
      break;
    case LieFamily::A2:
      if (rank < 2) throw std::invalid_argument("type 2A needs rank >= 2");
      break;
    case LieFamily::B: case LieFamily::C:
      if (rank < 2) throw std::invalid_argument("types B and C need rank >= 2");
      break;
    case LieFamily::D: case LieFamily::D2:
      if (rank < 4) throw std::invalid_argument("types D and 2D need rank >= 4");
      break;
    case LieFamily::B2_2: case LieFamily::F4_2:
      if (p != 2) throw std::invalid_argument(emverify::to_string(family) + " requires p = 2");
      break;
    case LieFamily::G2_2:
      if (p != 3) throw std::invalid_argument("2G2 requires p = 3");
      break;
    default:
      break;
  }
}

MExponent m_of(const GroupSpec& spec) {
  spec.validate();
  const bool half_q_type = spec.family == LieFamily::B || spec.family == LieFamily::C ||
                           spec.family == LieFamily::F4 || spec.family == LieFamily::G2;
  if (half_q_type && spec.p == 2 && spec.f > 1) return {spec.f - 1};
  if (spec.family == LieFamily::G2 && spec.p == 3 && spec.f > 1) return {spec.f - 1};
  if (is_suzuki_ree(spec.family)) {
    if (spec.f < 1) throw std::invalid_argument(spec.to_string() + " is not quasi-simple");
    return {spec.f};
  }
  return {spec.f};
}

Symbol Symbol::from_bipartition(const Partition& top_part, const Partition& bottom_part, int defect) {
  if (defect < 0) throw std::invalid_argument("negative symbol defect");
  const int m = std::max({top_part.length() - defect, bottom_part.length(), 0});
  Symbol s;
  for (int i = 0; i < m + defect; ++i) s.top.push_back(top_part[m + defect - 1 - i] + i);
  for (int i = 0; i < m; ++i) s.bottom.push_back(bottom_part[m - 1 - i] + i);
  return s.reduced();
}

int Symbol::rank() const {
  int total = 0;
  for (int x : top) total += x;
  for (int x : bottom) total += x;
  const int entries = static_cast<int>(top.size() + bottom.size());
  return total - (entries - 1) * (entries - 1) / 4;
}

Symbol Symbol::reduced() const {
  for (std::size_t i = 1; i < top.size(); ++i)
    if (top[i] <= top[i - 1]) throw std::invalid_argument("symbol row is not strictly increasing");
  for (std::size_t i = 1; i < bottom.size(); ++i)
    if (bottom[i] <= bottom[i - 1]) throw std::invalid_argument("symbol row is not strictly increasing");
  Symbol s = *this;
  while (!s.top.empty() && !s.bottom.empty() && s.top.front() == 0 && s.bottom.front() == 0) {
    s.top.erase(s.top.begin());
    s.bottom.erase(s.bottom.begin());
    for (int& x : s.top) --x;
    for (int& x : s.bottom) --x;
  }
  return s;
}

Symbol Symbol::shifted() const {
  Symbol s;
  s.top.push_back(0);
  s.bottom.push_back(0);
  for (int x : top) s.top.push_back(x + 1);
  for (int x : bottom) s.bottom.push_back(x + 1);
  return s;
}

std::string Symbol::to_string() const {
  auto row = [](const std::vector<int>& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
    return out;
  };
  return "(" + row(top) + "|" + row(bottom) + ")";
}

DegreePolynomial symbol_degree(const Symbol& symbol, LieFamily family) {
  const Symbol s = symbol.reduced();
  const int a = static_cast<int>(s.top.size());
  const int b = static_cast<int>(s.bottom.size());
  const int total = a + b;
  const int defect = std::abs(a - b);
  const int n = s.rank();
  if (n < 1) throw std::invalid_argument("symbol " + s.to_string() + " has rank < 1");

  int c0 = 0;
  Accumulator acc;
  switch (family) {
    case LieFamily::B: case LieFamily::C:
      if (defect % 2 != 1) throw std::invalid_argument("types B/C need odd defect");
      c0 = (total - 1) / 2;
      for (int i = 1; i <= n; ++i) acc.qk_minus_one(2 * i, +1);
      break;
    case LieFamily::D: case LieFamily::D2: {
      if (family == LieFamily::D && defect % 4 != 0) throw std::invalid_argument("type D needs defect = 0 mod 4");
      if (family == LieFamily::D2 && defect % 4 != 2) throw std::invalid_argument("type 2D needs defect = 2 mod 4");
      const bool degenerate = s.top == s.bottom;
      c0 = degenerate ? total / 2 : (total - 2) / 2;
      if (family == LieFamily::D) acc.qk_minus_one(n, +1);
      else acc.qk_plus_one(n, +1);
      for (int i = 1; i < n; ++i) acc.qk_minus_one(2 * i, +1);
      break;
    }
    default:
      throw std::invalid_argument("symbol_degree: family " + to_string(family) + " is not classical");
  }

  auto same_row = [&acc](const std::vector<int>& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        acc.q_power += row[j];
        acc.qk_minus_one(row[i] - row[j], +1);
      }
  };
  same_row(s.top);
  same_row(s.bottom);
  for (int x : s.top)
    for (int y : s.bottom) {
      if (x == y) {
        acc.q_power += x;
        ++acc.twos;
      } else {
        acc.q_power += std::min(x, y);
        acc.qk_plus_one(std::abs(x - y), +1);
      }
    }
  for (const auto* row : {&s.top, &s.bottom})
    for (int x : *row)
      for (int k = 1; k <= x; ++k) acc.qk_minus_one(2 * k, -1);
  for (int k = total - 2; k >= 2; k -= 2) acc.q_power -= binom2(k);

  if (acc.twos > c0 || acc.q_power < 0)
    throw std::logic_error("symbol " + s.to_string() + " produced a non-polynomial degree");
  DegreePolynomial out;
  out.q_power = acc.q_power;
  out.d = std::int64_t{1} << (c0 - acc.twos);
  for (const auto& [e, m] : acc.cyc) {
    if (m < 0) throw std::logic_error("symbol " + s.to_string() + " left a cyclotomic factor in the denominator");
    if (m > 0) out.factors[e] = m;
  }
  return out;
}

DegreePolynomial typeA_degree(const Partition& lambda, bool twisted) {
  const int n = lambda.size();
  DegreePolynomial out;
  for (int i = 0; i < lambda.length(); ++i) out.q_power += i * lambda[i];
  const auto hooks = hook_lengths(lambda);
  for (int e = 2; e <= n; ++e) {
    int mult = n / e;
    for (int h : hooks)
      if (h % e == 0) --mult;
    if (mult < 0) throw std::logic_error("q-hook formula left a denominator");
    if (mult > 0) out.factors[e] = mult;
  }
  return twisted ? out.ennola() : out;
}

std::vector<Symbol> enumerate_symbols(LieFamily family, int rank) {
  std::vector<Symbol> out;
  auto add_defect = [&](int d, bool unordered) {
    const int shift = (d * d) / 4;
    if (shift > rank) return false;
    for (const auto& [a, b] : bipartitions(rank - shift)) {
      if (unordered && b > a) continue;
      out.push_back(Symbol::from_bipartition(a, b, d));
    }
    return true;
  };
  switch (family) {
    case LieFamily::B: case LieFamily::C:
      for (int d = 1; add_defect(d, false); d += 2) {}
      break;
    case LieFamily::D:
      add_defect(0, true);
      for (int d = 4; add_defect(d, false); d += 4) {}
      break;
    case LieFamily::D2:
      for (int d = 2; add_defect(d, false); d += 4) {}
      break;
    default:
      throw std::invalid_argument("no symbols for family " + to_string(family));
  }
  return out;
}

std::vector<DegreeRecord> unipotent_degrees(LieFamily family, int rank) {
  std::vector<DegreeRecord> out;
  switch (family) {
    case LieFamily::A: case LieFamily::A2:
      for (const auto& lambda : partitions_of(rank + 1))
        out.push_back({"phi" + lambda.to_string(), family, rank, typeA_degree(lambda, family == LieFamily::A2)});
      break;
    case LieFamily::B: case LieFamily::C: case LieFamily::D: case LieFamily::D2:
      for (const auto& s : enumerate_symbols(family, rank)) {
        auto deg = symbol_degree(s, family);
        if (family == LieFamily::D && s.top == s.bottom) {
          out.push_back({s.to_string() + "+", family, rank, deg});
          out.push_back({s.to_string() + "-", family, rank, deg});
        } else {
          out.push_back({s.to_string(), family, rank, deg});
        }
      }
      break;
    case LieFamily::G2: case LieFamily::D4_3:
      for (const auto& rec : static_degree_records())
        if (rec.family == family) out.push_back(rec);
      if (out.empty()) throw std::runtime_error("no static degree data for " + to_string(family));
      break;
    default:
      throw std::domain_error("unipotent degree enumeration is not implemented for " + to_string(family));
  }
  return out;
}

MinHeight unipotent_mh(LieFamily family, int rank, std::int64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  std::optional<int> best;
  for (const auto& rec : unipotent_degrees(family, rank)) {
    const int nu = rec.degree.eval_valuation(q, pp->p).nu;
    if (nu > 0 && (!best || nu < *best)) best = nu;
  }
  return best ? MinHeight(*best) : MinHeight::infinity();
}

int positive_roots(LieFamily family, int rank) {
  switch (family) {
    case LieFamily::A: case LieFamily::A2: return rank * (rank + 1) / 2;
    case LieFamily::B: case LieFamily::C: return rank * rank;
    case LieFamily::D: case LieFamily::D2: return rank * (rank - 1);
    case LieFamily::D4_3: return 12;
    case LieFamily::G2: return 6;
    case LieFamily::F4: return 24;
    case LieFamily::E6: case LieFamily::E6_2: return 36;
    case LieFamily::E7: return 63;
    case LieFamily::E8: return 120;
    case LieFamily::B2_2: return 2;
    case LieFamily::G2_2: return 3;
    case LieFamily::F4_2: return 12;
  }
  throw std::invalid_argument("unknown Lie family");
}

BigInt weyl_group_order(LieFamily family, int rank) {
  auto type_b = [](int k) { return big_pow(2, k) * factorial(k); };
  switch (family) {
    case LieFamily::A: return factorial(rank + 1);
    case LieFamily::A2: return type_b((rank + 1) / 2);
    case LieFamily::B: case LieFamily::C: return type_b(rank);
    case LieFamily::D: return big_pow(2, rank - 1) * factorial(rank);
    case LieFamily::D2: return type_b(rank - 1);
    case LieFamily::D4_3: case LieFamily::G2: return 12;
    default: throw std::domain_error("Weyl group order not tabulated for " + to_string(family));
  }
}

std::vector<std::int64_t> bad_primes(LieFamily family) {
  switch (family) {
    case LieFamily::A: case LieFamily::A2: return {};
    case LieFamily::B: case LieFamily::C: case LieFamily::D: case LieFamily::D2: case LieFamily::D4_3:
      return {2};
    case LieFamily::E8: return {2, 3, 5};
    default: return {2, 3};
  }
}

std::int64_t center_order(LieFamily family, int rank) {
  switch (family) {
    case LieFamily::A: case LieFamily::A2: return rank + 1;
    case LieFamily::B: case LieFamily::C: case LieFamily::E7: return 2;
    case LieFamily::D: case LieFamily::D2: return 4;
    case LieFamily::E6: case LieFamily::E6_2: return 3;
    default: return 1;
  }
}

std::string unipotent_restriction_note(LieFamily family, int rank, std::int64_t q) {
  const bool bc = family == LieFamily::B || family == LieFamily::C;
  if (bc && rank == 2 && q == 2) return "Sp4(2) is not quasi-simple";
  if (bc && rank == 3 && q == 2) return "Sp6(2) reaches height 1 only outside the unipotent characters";
  if (family == LieFamily::G2 && q == 2) return "G2(2) is not quasi-simple";
  return {};
}

}  // namespace emverify
