#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace emverify {

using BigInt = boost::multiprecision::cpp_int;

/// p-adic valuation of a nonzero integer. Throws on zero.
int nu_p(std::int64_t value, std::int64_t p);
int nu_p(const BigInt& value, std::int64_t p);

/// nu_p(n!) by Legendre's formula.
int nu_p_factorial(std::int64_t n, std::int64_t p);

bool is_prime(std::int64_t n);

/// Writes q = p^f with p prime, or returns nullopt when q is not a prime power.
struct PrimePower {
  std::int64_t p = 0;
  int f = 0;
};
std::optional<PrimePower> as_prime_power(std::int64_t q);

std::int64_t ipow(std::int64_t base, int exponent);
BigInt big_pow(const BigInt& base, int exponent);
BigInt factorial(int n);

std::vector<std::int64_t> divisors(std::int64_t n);
int mobius(std::int64_t n);

/// Multiplicative order of q modulo m; requires gcd(q, m) = 1.
std::int64_t multiplicative_order(std::int64_t q, std::int64_t m);

/// Parses a comma-separated list of integers ("2,3,5").
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace emverify
