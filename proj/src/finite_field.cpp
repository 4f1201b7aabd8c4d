#include "emverify/finite_field.hpp"

#include <set>
#include <stdexcept>

#include "emverify/arith.hpp"

namespace emverify {

namespace {

using Poly = std::vector<int>;  // coefficients mod p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_from_code(long long code, int p, int len) {
  Poly a(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i, code /= p) a[static_cast<std::size_t>(i)] = static_cast<int>(code % p);
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    const long long count = ipow(p, d);
    for (long long code = 0; code < count; ++code) {
      Poly g = poly_from_code(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(int p, int k) {
  const long long count = ipow(p, k);
  for (long long code = 0; code < count; ++code) {
    Poly f = poly_from_code(code, p, k);
    f.push_back(1);
    if (k == 1 || is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic must be prime");
  if (k < 1) throw std::invalid_argument("FiniteField: degree must be >= 1");
  const std::int64_t q = ipow(p, k);
  if (q > 1024) throw std::invalid_argument("FiniteField: order too large for table arithmetic");
  q_ = static_cast<int>(q);
  modulus_ = least_irreducible(p, k);

  auto encode = [&](const Poly& a) {
    int code = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) code = code * p + a[static_cast<std::size_t>(i)];
    return static_cast<Element>(code);
  };
  std::vector<Poly> polys;
  for (int e = 0; e < q_; ++e) polys.push_back(poly_from_code(e, p, k));

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(static_cast<std::size_t>(q_));
  inv_.assign(static_cast<std::size_t>(q_), 0);
  for (int a = 0; a < q_; ++a) {
    Poly n(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) n[static_cast<std::size_t>(i)] = (p - polys[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]) % p;
    neg_[static_cast<std::size_t>(a)] = encode(n);
    for (int b = 0; b < q_; ++b) {
      const Poly& pa = polys[static_cast<std::size_t>(a)];
      const Poly& pb = polys[static_cast<std::size_t>(b)];
      Poly s(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = (pa[static_cast<std::size_t>(i)] + pb[static_cast<std::size_t>(i)]) % p;
      add_[index(static_cast<Element>(a), static_cast<Element>(b))] = encode(s);
      Poly prod(static_cast<std::size_t>(2 * k), 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)]) % p;
      mul_[index(static_cast<Element>(a), static_cast<Element>(b))] = encode(poly_mod(prod, modulus_, p));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[index(static_cast<Element>(a), static_cast<Element>(b))] == 1) {
        inv_[static_cast<std::size_t>(a)] = static_cast<Element>(b);
        break;
      }
}

std::shared_ptr<const FiniteField> FiniteField::make(int p, int k) { return std::make_shared<const FiniteField>(p, k); }

std::string FiniteField::modulus_string() const {
  std::string out;
  for (int i = k_; i >= 0; --i) {
    const int c = modulus_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out + " over F_" + std::to_string(p_);
}

FiniteField::Element FiniteField::from_int(long long n) const {
  return static_cast<Element>(((n % p_) + p_) % p_);
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
  return inv_[a];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element r = one();
  while (e) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return r;
}

std::vector<FiniteField::Element> FiniteField::subfield(int r) const {
  std::vector<Element> out;
  for (int a = 0; a < q_; ++a)
    if (pow(static_cast<Element>(a), static_cast<std::uint64_t>(r)) == a) out.push_back(static_cast<Element>(a));
  if (static_cast<int>(out.size()) != r) throw std::invalid_argument("FiniteField: no subfield of that order");
  return out;
}

std::vector<FiniteField::Element> FiniteField::prime_field_basis(const std::vector<Element>& elements) const {
  std::vector<Element> basis;
  std::set<Element> span = {0};
  for (Element e : elements) {
    if (span.count(e)) continue;
    basis.push_back(e);
    std::set<Element> grown;
    for (Element s : span) {
      Element t = s;
      for (int c = 0; c < p_; ++c) {
        grown.insert(t);
        t = add(t, e);
      }
    }
    span = std::move(grown);
  }
  return basis;
}

}  // namespace emverify
