#include "emverify/arith.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace emverify {

int nu_p(std::int64_t value, std::int64_t p) {
  if (value == 0) throw std::domain_error("nu_p of zero");
  if (p < 2) throw std::invalid_argument("nu_p needs p >= 2");
  if (value < 0) value = -value;
  int k = 0;
  while (value % p == 0) {
    value /= p;
    ++k;
  }
  return k;
}

int nu_p(const BigInt& value, std::int64_t p) {
  if (value == 0) throw std::domain_error("nu_p of zero");
  if (p < 2) throw std::invalid_argument("nu_p needs p >= 2");
  BigInt v = abs(value);
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

int nu_p_factorial(std::int64_t n, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("nu_p_factorial needs p >= 2");
  int total = 0;
  for (std::int64_t pk = p; pk <= n; pk *= p) {
    total += static_cast<int>(n / pk);
    if (pk > n / p) break;
  }
  return total;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> as_prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, f};
}

std::int64_t ipow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

BigInt big_pow(const BigInt& base, int exponent) {
  BigInt r = 1;
  BigInt b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::int64_t multiplicative_order(std::int64_t q, std::int64_t m) {
  if (std::gcd(q, m) != 1) throw std::invalid_argument("multiplicative_order: gcd(q, m) != 1");
  std::int64_t r = ((q % m) + m) % m;
  std::int64_t x = r;
  std::int64_t k = 1;
  while (x % m != 1 % m) {
    x = x * r % m;
    ++k;
  }
  return k;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

}  // namespace emverify
