#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "emverify/arith.hpp"

namespace emverify {

/// Dense integer polynomial, constant term first.
using IntPoly = std::vector<BigInt>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// Exact quotient a / b for monic b; throws if the remainder is nonzero.
IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b);
BigInt poly_eval(const IntPoly& a, const BigInt& x);
std::string poly_to_string(const IntPoly& a);

struct CyclotomicPoly {
  int index = 1;
  IntPoly coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  BigInt operator()(const BigInt& x) const { return poly_eval(coefficients, x); }
};

/// Phi_m from X^m - 1 divided by the Phi_d for proper divisors d. Memoized
/// behind a mutex, safe to call concurrently.
CyclotomicPoly cyclotomic(int m);

/// Phi_m(x) as prod_{d | m} (x^d - 1)^mu(m/d), exact; x >= 2.
BigInt cyclotomic_value(std::int64_t m, const BigInt& x);

struct Valuation {
  BigInt value;
  int nu = 0;
};

/// Exact Phi_m(q) and its p-adic valuation.
Valuation eval_valuation(const CyclotomicPoly& poly, const BigInt& q, std::int64_t p);

struct Lemma42Violation {
  std::int64_t p, d, q, m;
  int expected_nu, observed_nu;
};

struct Lemma42Report {
  std::int64_t p = 0;
  int i_max = 0;
  std::int64_t q_max = 0;
  std::int64_t checks = 0;
  /// (d, q) pairs that were scanned, q having multiplicative order d mod p.
  std::vector<std::pair<std::int64_t, std::int64_t>> scanned;
  std::vector<Lemma42Violation> violations;
};

/// For each q in [2, q_max] whose order mod p lies in d_set: nu_p(Phi_{d p^i}(q)) = 1
/// for 1 <= i <= i_max, and nu_p(Phi_m(q)) = 0 for every other m <= d p^i_max, m != d.
Lemma42Report lemma42_scan(std::int64_t p, const std::vector<std::int64_t>& d_set, int i_max, std::int64_t q_max);

}  // namespace emverify
