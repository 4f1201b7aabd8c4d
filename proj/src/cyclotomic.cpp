#include "emverify/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace emverify {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.empty() || b.back() != 1) throw std::invalid_argument("poly_exact_div: divisor must be monic");
  if (a.size() < b.size()) throw std::invalid_argument("poly_exact_div: degree too small");
  IntPoly rem = a;
  IntPoly quot(a.size() - b.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt c = rem[k + b.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("poly_exact_div: nonzero remainder");
  return quot;
}

BigInt poly_eval(const IntPoly& a, const BigInt& x) {
  BigInt v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

std::string poly_to_string(const IntPoly& a) {
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    const BigInt& c = a[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    out += c < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "X";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CyclotomicPoly cyclotomic(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic: index must be >= 1");
  static std::mutex mutex;
  static std::unordered_map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return {m, it->second};
  }
  IntPoly numerator(static_cast<std::size_t>(m) + 1, 0);
  numerator[0] = -1;
  numerator[static_cast<std::size_t>(m)] = 1;
  IntPoly divisor_product = {1};
  for (auto d : divisors(m))
    if (d < m) divisor_product = poly_mul(divisor_product, cyclotomic(static_cast<int>(d)).coefficients);
  IntPoly phi = poly_exact_div(numerator, divisor_product);
  std::lock_guard lock(mutex);
  cache.emplace(m, phi);
  return {m, std::move(phi)};
}

namespace {

// Phi_m(x) from a table whose entry k holds x^k - 1.
BigInt cyclotomic_value_from(std::int64_t m, const std::vector<BigInt>& x_pow_minus_one) {
  BigInt numerator = 1, denominator = 1;
  for (auto d : divisors(m)) {
    const int mu = mobius(m / d);
    if (mu == 0) continue;
    (mu > 0 ? numerator : denominator) *= x_pow_minus_one[static_cast<std::size_t>(d)];
  }
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) throw std::logic_error("cyclotomic_value: inexact quotient");
  return quotient;
}

std::vector<BigInt> powers_minus_one(const BigInt& x, std::int64_t k_max) {
  std::vector<BigInt> table(static_cast<std::size_t>(k_max) + 1);
  BigInt power = 1;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    table[static_cast<std::size_t>(k)] = power - 1;
    power *= x;
  }
  return table;
}

}  // namespace

BigInt cyclotomic_value(std::int64_t m, const BigInt& x) {
  if (m < 1) throw std::invalid_argument("cyclotomic_value: index must be >= 1");
  if (x < 2) throw std::invalid_argument("cyclotomic_value: needs x >= 2");
  return cyclotomic_value_from(m, powers_minus_one(x, m));
}

Valuation eval_valuation(const CyclotomicPoly& poly, const BigInt& q, std::int64_t p) {
  Valuation v{poly(q), 0};
  if (v.value == 0) throw std::domain_error("eval_valuation: polynomial vanishes at q");
  v.nu = nu_p(v.value, p);
  return v;
}

Lemma42Report lemma42_scan(std::int64_t p, const std::vector<std::int64_t>& d_set, int i_max, std::int64_t q_max) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("lemma42_scan: p must be an odd prime");
  for (auto d : d_set)
    if (d < 1 || (p - 1) % d != 0) throw std::invalid_argument("lemma42_scan: each d must divide p - 1");

  Lemma42Report report;
  report.p = p;
  report.i_max = i_max;
  report.q_max = q_max;
  for (std::int64_t q = 2; q <= q_max; ++q) {
    if (q % p == 0) continue;
    const std::int64_t d = multiplicative_order(q, p);
    if (std::find(d_set.begin(), d_set.end(), d) == d_set.end()) continue;
    report.scanned.emplace_back(d, q);

    std::vector<std::int64_t> special;  // d p^i, i >= 1
    for (std::int64_t i = 1, dp = d * p; i <= i_max; ++i, dp *= p) special.push_back(dp);
    const std::int64_t m_max = special.empty() ? d : special.back();
    const auto table = powers_minus_one(BigInt(q), m_max);
    for (std::int64_t m = 1; m <= m_max; ++m) {
      if (m == d) continue;
      const bool is_special = std::find(special.begin(), special.end(), m) != special.end();
      const int expected = is_special ? 1 : 0;
      const int observed = nu_p(cyclotomic_value_from(m, table), p);
      ++report.checks;
      if (observed != expected) report.violations.push_back({p, d, q, m, expected, observed});
    }
  }
  return report;
}

}  // namespace emverify
