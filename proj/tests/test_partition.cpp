#include <algorithm>
#include <map>

#include "doctest.h"
#include "emverify/partition.hpp"

using namespace emverify;

namespace {

// Hooks by walking the diagram cell by cell.
std::vector<int> hooks_by_cells(const Partition& lambda) {
  std::vector<int> out;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int leg = 0;
      for (int k = i + 1; k < lambda.length() && lambda[k] > j; ++k) ++leg;
      out.push_back(lambda[i] - j - 1 + leg + 1);
    }
  return out;
}

// Core by repeatedly stripping rim p-hooks straight off the diagram.
std::pair<Partition, int> core_by_rim_removal(Partition lambda, int p) {
  int removed = 0;
  for (bool again = true; again;) {
    again = false;
    std::vector<int> rows = lambda.parts();
    for (int i = 0; i < lambda.length() && !again; ++i)
      for (int j = 0; j < lambda[i] && !again; ++j) {
        int leg = 0;
        for (int k = i + 1; k < lambda.length() && lambda[k] > j; ++k) ++leg;
        if (lambda[i] - j + leg != p) continue;
        for (int r = i; r < i + leg; ++r) rows[static_cast<std::size_t>(r)] = lambda[r + 1] - 1;
        rows[static_cast<std::size_t>(i + leg)] = j;
        rows.erase(std::remove(rows.begin(), rows.end(), 0), rows.end());
        lambda = Partition(rows);
        ++removed;
        again = true;
      }
  }
  return {lambda, removed};
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition().size() == 0);
  CHECK(Partition({4, 2, 1}).to_string() == "(4,2,1)");
  CHECK(Partition({4, 2, 1})[5] == 0);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
  for (int n = 0; n <= 12; ++n)
    for (const auto& lambda : partitions_of(n)) CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("hook lengths") {
  CHECK(sorted(hook_lengths(Partition{2, 2})) == std::vector<int>{1, 2, 2, 3});
  CHECK(sorted(hook_lengths(Partition{4, 2, 1})) == std::vector<int>{1, 1, 1, 2, 3, 4, 6});
  CHECK(sorted(hook_lengths(Partition{5})) == std::vector<int>{1, 2, 3, 4, 5});
  for (int n = 0; n <= 12; ++n)
    for (const auto& lambda : partitions_of(n)) {
      CHECK(sorted(hook_lengths(lambda)) == sorted(hooks_by_cells(lambda)));
      CHECK(sorted(hook_lengths(lambda)) == sorted(hook_lengths(conjugate(lambda))));
    }
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(5).front() == Partition{5});
  for (int n = 0; n <= 20; ++n) CHECK(static_cast<std::int64_t>(partitions_of(n).size()) == partition_count(n));
  CHECK(partition_count(40) == 37338);
  CHECK(partition_count(100) == 190569292);
}

TEST_CASE("beta sets round trip for every bead count") {
  for (int n = 0; n <= 9; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int b = lambda.length(); b <= lambda.length() + 5; ++b) CHECK(BetaSet(lambda, b).to_partition() == lambda);
  CHECK_THROWS(BetaSet(Partition{2, 1}, 1));
}

TEST_CASE("core and quotient examples") {
  auto cq = core_quotient(Partition{4, 2, 1}, 2);
  CHECK(cq.core == Partition{1});
  CHECK(cq.weight == 3);
  for (int p : {2, 3, 5, 7}) {
    auto single = core_quotient(Partition{p}, p);
    CHECK(single.core.empty());
    CHECK(single.weight == 1);
  }
  auto stair = core_quotient(Partition{3, 2, 1}, 2);
  CHECK(stair.core == Partition{3, 2, 1});
  CHECK(stair.weight == 0);
  CHECK_THROWS(core_quotient(Partition{2}, 1));
}

TEST_CASE("cores agree with rim-hook stripping") {
  for (int p : {2, 3, 5, 7})
    for (int n = 0; n <= 14; ++n)
      for (const auto& lambda : partitions_of(n)) {
        const auto cq = core_quotient(lambda, p);
        const auto [core, removed] = core_by_rim_removal(lambda, p);
        CHECK(cq.core == core);
        CHECK(cq.weight == removed);
        CHECK(cq.core.size() + p * cq.weight == n);
        int quotient_size = 0;
        for (const auto& part : cq.quotient) quotient_size += part.size();
        CHECK(quotient_size == cq.weight);
        CHECK(core_quotient(cq.core, p).core == cq.core);
        for (int h : hook_lengths(cq.core)) CHECK(h % p != 0);
      }
}

TEST_CASE("from_core_quotient inverts core_quotient") {
  CoreQuotient cq{Partition{1}, {Partition{1}, Partition()}, 2, 1};
  const Partition lambda = from_core_quotient(cq);
  CHECK(lambda.size() == 3);
  CHECK(p_core(lambda, 2) == Partition{1});

  CHECK(from_core_quotient(CoreQuotient{Partition(), {Partition(), Partition(), Partition()}, 3, 0}) == Partition());
  CHECK_THROWS(from_core_quotient(CoreQuotient{Partition{2}, {Partition(), Partition()}, 2, 0}));
  for (int p : {2, 3, 5})
    for (int n = 0; n <= 12; ++n)
      for (const auto& lambda : partitions_of(n)) CHECK(from_core_quotient(core_quotient(lambda, p)) == lambda);
}

TEST_CASE("2-cores are staircases") {
  for (int n = 0; n <= 20; ++n) {
    std::vector<Partition> expected;
    for (int k = 0; k * (k + 1) / 2 <= n; ++k)
      if (k * (k + 1) / 2 == n) {
        std::vector<int> parts;
        for (int i = k; i >= 1; --i) parts.push_back(i);
        expected.emplace_back(parts);
      }
    CHECK(p_cores_of(n, 2) == expected);
  }
}

TEST_CASE("degrees and valuations") {
  CHECK(char_degree_exact(Partition{2, 2}) == 2);
  CHECK(char_degree_exact(Partition{1, 1, 1, 1, 1}) == 1);
  CHECK(char_valuation(Partition{2, 2}, 2) == 1);
  CHECK(char_valuation(Partition{3, 1, 1}, 3) == 1);
  CHECK(char_valuation(Partition{9}, 3) == 0);
  for (int n = 1; n <= 14; ++n) {
    BigInt squares = 0;
    for (const auto& lambda : partitions_of(n)) {
      const BigInt d = char_degree_exact(lambda);
      squares += d * d;
      CHECK(char_degree_exact(conjugate(lambda)) == d);
      for (int p : {2, 3, 5, 7}) CHECK(char_valuation(lambda, p) == nu_p(d, p));
    }
    CHECK(squares == factorial(n));
  }
}

TEST_CASE("multipartitions") {
  CHECK(multipartitions(0, 3).size() == 1);
  CHECK(multipartitions(2, 2).size() == 5);
  CHECK(multipartitions(3, 3).size() == 22);
}
