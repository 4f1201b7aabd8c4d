#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace emverify {

/// F_{p^k} as F_p[x]/(m(x)) with m the lexicographically least monic
/// irreducible of degree k. Elements are encoded as integers 0..q-1 whose
/// base-p digits are the coefficients (digit i = coefficient of x^i).
/// Arithmetic runs off precomputed tables, so q should stay small (q <= 1024).
class FiniteField {
 public:
  using Element = std::uint16_t;

  FiniteField(int p, int k);
  static std::shared_ptr<const FiniteField> make(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  /// Modulus coefficients, constant term first, monic.
  const std::vector<int>& modulus() const { return modulus_; }
  /// e.g. "x^2+2x+2 over F_3"
  std::string modulus_string() const;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  /// Image of the integer n under Z -> F_p.
  Element from_int(long long n) const;

  Element add(Element a, Element b) const { return add_[index(a, b)]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const { return mul_[index(a, b)]; }
  Element neg(Element a) const { return neg_[a]; }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  Element frobenius(Element a) const { return pow(a, static_cast<std::uint64_t>(p_)); }

  /// Elements y with y^r = y, i.e. the subfield of order r (r | q, r a power of p).
  std::vector<Element> subfield(int r) const;
  /// An F_p-basis of the additive span of `elements`.
  std::vector<Element> prime_field_basis(const std::vector<Element>& elements) const;

 private:
  std::size_t index(Element a, Element b) const { return static_cast<std::size_t>(a) * q_ + b; }

  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace emverify
