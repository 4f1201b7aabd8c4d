#include "emverify/pgroup_chars.hpp"

#include <numeric>

namespace emverify {

BigInt PDegreeMultiset::character_count() const {
  BigInt total = 0;
  for (const auto& [k, c] : counts) total += c;
  return total;
}

bool PDegreeMultiset::sum_of_squares_holds() const {
  BigInt total = 0;
  for (const auto& [k, c] : counts) total += c * big_pow(BigInt(p), 2 * k);
  return total == big_pow(BigInt(p), order);
}

MinHeight PDegreeMultiset::min_positive_exponent() const {
  for (const auto& [k, c] : counts)
    if (k > 0 && c > 0) return MinHeight(k);
  return MinHeight::infinity();
}

PDegreeMultiset trivial_multiset(int p) { return PDegreeMultiset{p, {{0, BigInt(1)}}, 0}; }

PDegreeMultiset cyclic_multiset(int p) { return PDegreeMultiset{p, {{0, BigInt(p)}}, 1}; }

namespace {

std::map<int, BigInt> convolve(const std::map<int, BigInt>& a, const std::map<int, BigInt>& b) {
  std::map<int, BigInt> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out[ka + kb] += ca * cb;
  return out;
}

}  // namespace

PDegreeMultiset wreath_cyclic_p(const PDegreeMultiset& base, int p) {
  if (base.p != p) throw std::invalid_argument("wreath_cyclic_p: mismatched prime");

  // Number of p-tuples of base characters per total exponent.
  std::map<int, BigInt> tuples = {{0, BigInt(1)}};
  for (int i = 0; i < p; ++i) tuples = convolve(tuples, base.counts);

  PDegreeMultiset out{p, {}, p * base.order + 1};
  for (const auto& [k, c] : base.counts) out.counts[p * k] += c * p;  // diagonal tuples extend p ways

  for (const auto& [e, total] : tuples) {
    BigInt off_diagonal = total;
    if (e % p == 0) {
      auto it = base.counts.find(e / p);
      if (it != base.counts.end()) off_diagonal -= it->second;
    }
    if (off_diagonal == 0) continue;
    if (off_diagonal % p != 0) throw std::logic_error("wreath_cyclic_p: orbit count not divisible by p");
    out.counts[e + 1] += off_diagonal / p;  // each free C_p-orbit induces one character
  }
  return out;
}

PDegreeMultiset direct_product(const PDegreeMultiset& a, const PDegreeMultiset& b) {
  if (a.p != b.p) throw std::invalid_argument("direct_product: mismatched prime");
  return PDegreeMultiset{a.p, convolve(a.counts, b.counts), a.order + b.order};
}

PDegreeMultiset iterated_wreath(int k, int p) {
  PDegreeMultiset w = trivial_multiset(p);
  for (int i = 0; i < k; ++i) w = wreath_cyclic_p(w, p);
  return w;
}

PDegreeMultiset sylow_degrees_sym(int n, int p) {
  if (n < 0) throw std::invalid_argument("sylow_degrees_sym: negative n");
  if (p < 2) throw std::invalid_argument("sylow_degrees_sym: p must be >= 2");
  PDegreeMultiset out = trivial_multiset(p);
  PDegreeMultiset level = trivial_multiset(p);
  for (int i = 0, rest = n; rest > 0; ++i, rest /= p) {
    if (i > 0) level = wreath_cyclic_p(level, p);
    for (int copies = rest % p; copies > 0; --copies) out = direct_product(out, level);
  }
  return out;
}

MinHeight mh_sylow_sym(int n, int p) { return sylow_degrees_sym(n, p).min_positive_exponent(); }

MinHeight mh_sylow_alt(int n) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("mh_sylow_alt: n must be even (n = 2w)");
  const int w = n / 2;
  if (w <= 2) return MinHeight::infinity();
  // w >= 3: A_6's Sylow 2-subgroup (D_8) for w = 3, and for w > 3 a quotient
  // (C2 wr C2) wr C2 of the S_{2w}-Sylow that survives restriction to A_{2w}.
  return MinHeight(1);
}

namespace {

// Generators of the k-fold wreath power of C_p acting on points offset..offset+p^k-1.
void wreath_generators(int k, int p, int offset, int degree, std::vector<Permutation>& out) {
  if (k == 0) return;
  wreath_generators(k - 1, p, offset, degree, out);
  const int block = static_cast<int>(ipow(p, k - 1));
  const int span = block * p;
  std::vector<std::uint16_t> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  for (int x = 0; x < span; ++x) images[static_cast<std::size_t>(offset + x)] = static_cast<std::uint16_t>(offset + (x + block) % span);
  out.emplace_back(std::move(images));
}

}  // namespace

std::vector<Permutation> sylow_generators_sym(int n, int p, std::int64_t max_order) {
  if (n < 1) throw std::invalid_argument("sylow_generators_sym: n must be >= 1");
  const int exponent = nu_p_factorial(n, p);
  BigInt order = big_pow(BigInt(p), exponent);
  if (order > max_order)
    throw BoundExceeded("Sylow " + std::to_string(p) + "-subgroup of S_" + std::to_string(n) +
                              " exceeds the oracle bound");
  std::vector<Permutation> gens;
  int offset = 0;
  std::vector<int> digits;
  for (int rest = n; rest > 0; rest /= p) digits.push_back(rest % p);
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    const int block = static_cast<int>(ipow(p, i));
    for (int copies = 0; copies < digits[static_cast<std::size_t>(i)]; ++copies) {
      wreath_generators(i, p, offset, n, gens);
      offset += block;
    }
  }
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return gens;
}

}  // namespace emverify
