#pragma once

#include <cstdint>
#include <map>

#include "emverify/arith.hpp"
#include "emverify/cyclotomic.hpp"

namespace emverify {

/// sign * q^a * prod Phi_e(q)^mult / (c * d), kept factored.
struct DegreePolynomial {
  int sign = 1;
  int q_power = 0;
  std::int64_t c = 1;
  std::int64_t d = 1;
  std::map<int, int> factors;  // cyclotomic index -> multiplicity

  /// Exact value at any integer x; throws std::domain_error when c*d does not divide.
  BigInt evaluate(const BigInt& x) const;
  /// Value at an admissible q; throws std::domain_error unless a positive integer.
  BigInt specialize(std::int64_t q) const;
  Valuation eval_valuation(std::int64_t q, std::int64_t p) const;

  /// f(-X) rewritten in factored form (Phi_1(-X) = -Phi_2(X), Phi_e(-X) = Phi_2e(X) for odd e > 1, ...).
  DegreePolynomial negated_argument() const;
  /// Ennola twist: f(-X) with the overall sign flipped to make specializations positive.
  DegreePolynomial ennola() const;

  /// Is the polynomial part a pure power of q (no cyclotomic factors, no denominator)?
  bool is_pure_q_power() const { return factors.empty() && c == 1 && d == 1; }

  friend bool operator==(const DegreePolynomial&, const DegreePolynomial&) = default;
};

}  // namespace emverify
