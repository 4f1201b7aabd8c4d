#include "doctest.h"
#include "emverify/cyclotomic.hpp"
#include "emverify/degree_polynomial.hpp"

using namespace emverify;

namespace {

IntPoly ints(std::vector<int> c) { return IntPoly(c.begin(), c.end()); }

}  // namespace

TEST_CASE("cyclotomic coefficients") {
  CHECK(cyclotomic(1).coefficients == ints({-1, 1}));
  CHECK(cyclotomic(6).coefficients == ints({1, -1, 1}));
  CHECK(cyclotomic(20).coefficients == ints({1, 0, -1, 0, 1, 0, -1, 0, 1}));
  CHECK(cyclotomic(105).coefficients[7] == -2);
}

TEST_CASE("product over divisors is X^m - 1") {
  for (int m = 1; m <= 200; ++m) {
    IntPoly prod = {1};
    for (auto d : divisors(m)) prod = poly_mul(prod, cyclotomic(static_cast<int>(d)).coefficients);
    IntPoly expected(static_cast<std::size_t>(m) + 1, 0);
    expected[0] = -1;
    expected[static_cast<std::size_t>(m)] = 1;
    CHECK(prod == expected);
    for (int q : {2, 3, 4, 5}) {
      BigInt value = 1;
      for (auto d : divisors(m)) value *= cyclotomic_value(d, q);
      CHECK(value == big_pow(q, m) - 1);
      CHECK(cyclotomic_value(m, q) == cyclotomic(m)(q));
    }
  }
}

TEST_CASE("valuations") {
  auto v = eval_valuation(cyclotomic(6), 2, 3);
  CHECK(v.value == 3);
  CHECK(v.nu == 1);
  v = eval_valuation(cyclotomic(1), 2, 5);
  CHECK(v.value == 1);
  CHECK(v.nu == 0);
  v = eval_valuation(cyclotomic(20), 2, 5);
  CHECK(v.value == 205);
  CHECK(v.nu == 1);
  CHECK(nu_p(cyclotomic_value(18, 2), 3) == 1);
  CHECK(nu_p(cyclotomic_value(4, 2), 3) == 0);
}

TEST_CASE("valuation scan over q of order d mod p") {
  for (std::int64_t p : {3, 5, 7, 11}) {
    std::vector<std::int64_t> ds;
    for (auto d : divisors(p - 1)) ds.push_back(d);
    const auto report = lemma42_scan(p, ds, 2, 50);
    CHECK(report.violations.empty());
    CHECK(report.checks > 0);
  }
  const auto five = lemma42_scan(5, {4}, 1, 2);
  REQUIRE(five.scanned.size() == 1);
  CHECK(five.scanned[0] == std::make_pair(std::int64_t{4}, std::int64_t{2}));
  CHECK_THROWS(lemma42_scan(5, {3}, 1, 10));
  CHECK_THROWS(lemma42_scan(4, {1}, 1, 10));
}

TEST_CASE("degree polynomials") {
  DegreePolynomial g{1, 1, 1, 6, {{2, 2}, {3, 1}}};  // q Phi2^2 Phi3 / 6
  CHECK(g.specialize(2) == 2 * 9 * 7 / 6);
  CHECK(g.eval_valuation(4, 2).nu == 1);
  DegreePolynomial bad{1, 0, 1, 2, {{3, 1}}};
  CHECK_THROWS_AS(bad.specialize(2), std::domain_error);

  DegreePolynomial a{1, 1, 1, 1, {{2, 1}}};  // q(q+1)
  const auto twisted = a.ennola();
  CHECK(twisted == DegreePolynomial{1, 1, 1, 1, {{1, 1}}});
  for (int x : {2, 3, 5, 7}) CHECK(a.negated_argument().evaluate(x) == a.evaluate(-x));
  DegreePolynomial mixed{1, 3, 1, 1, {{1, 2}, {3, 1}, {4, 1}, {6, 2}, {12, 1}}};
  for (int x : {2, 3, 4}) CHECK(mixed.negated_argument().evaluate(x) == mixed.evaluate(-x));
  CHECK(mixed.negated_argument().negated_argument() == mixed);
}
