#include "emverify/degree_polynomial.hpp"

#include <stdexcept>

namespace emverify {

BigInt DegreePolynomial::evaluate(const BigInt& x) const {
  BigInt value = sign;
  value *= big_pow(x, q_power);
  for (const auto& [e, mult] : factors) {
    if (mult < 0) throw std::domain_error("degree polynomial has a negative cyclotomic multiplicity");
    value *= big_pow(cyclotomic(e)(x), mult);
  }
  const BigInt denominator = BigInt(c) * d;
  if (value % denominator != 0)
    throw std::domain_error("degree polynomial is not integral at X = " + x.str());
  return value / denominator;
}

BigInt DegreePolynomial::specialize(std::int64_t q) const {
  BigInt v = evaluate(BigInt(q));
  if (v <= 0) throw std::domain_error("degree polynomial is not positive at q = " + std::to_string(q));
  return v;
}

Valuation DegreePolynomial::eval_valuation(std::int64_t q, std::int64_t p) const {
  Valuation v{specialize(q), 0};
  v.nu = nu_p(v.value, p);
  return v;
}

DegreePolynomial DegreePolynomial::negated_argument() const {
  DegreePolynomial out = *this;
  out.factors.clear();
  if (q_power % 2) out.sign = -out.sign;
  for (const auto& [e, mult] : factors) {
    int image = e;
    if (e == 1 || e == 2) {
      image = 3 - e;
      if (mult % 2) out.sign = -out.sign;
    } else if (e % 2 == 1) {
      image = 2 * e;
    } else if (e % 4 == 2) {
      image = e / 2;
    }
    out.factors[image] += mult;
  }
  return out;
}

DegreePolynomial DegreePolynomial::ennola() const {
  DegreePolynomial out = negated_argument();
  out.sign = 1;
  return out;
}

}  // namespace emverify
