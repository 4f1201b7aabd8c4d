#include <map>
#include <set>

#include "doctest.h"
#include "emverify/symblocks.hpp"

using namespace emverify;

namespace {

// Height multiset straight from exact degrees of every partition with the core.
std::map<int, int> heights_by_degrees(const BlockLabel& b) {
  std::vector<int> nus;
  for (const auto& lambda : partitions_of(b.n)) {
    if (p_core(lambda, b.p) != b.core) continue;
    nus.push_back(nu_p(char_degree_exact(lambda), b.p));
  }
  std::map<int, int> out;
  const int low = *std::min_element(nus.begin(), nus.end());
  for (int v : nus) ++out[v - low];
  return out;
}

// A_n heights: the pair {lambda, lambda'} gives one character of the same degree,
// a self-conjugate lambda two characters of half the degree. Both conjugate cores belong.
std::map<int, int> alt_heights_by_degrees(const BlockLabel& b) {
  std::vector<int> nus;
  const Partition other = conjugate(b.core);
  for (const auto& lambda : partitions_of(b.n)) {
    const Partition c = p_core(lambda, b.p);
    if (c != b.core && c != other) continue;
    const Partition mu = conjugate(lambda);
    const BigInt d = char_degree_exact(lambda);
    if (lambda == mu) {
      if (b.weight == 0 && b.constituent != 0) {
        nus.push_back(nu_p(d / 2, b.p));
      } else {
        nus.push_back(nu_p(d / 2, b.p));
        nus.push_back(nu_p(d / 2, b.p));
      }
    } else if (lambda > mu) {
      nus.push_back(nu_p(d, b.p));
    }
  }
  std::map<int, int> out;
  const int low = *std::min_element(nus.begin(), nus.end());
  for (int v : nus) ++out[v - low];
  return out;
}

}  // namespace

TEST_CASE("blocks of S_4 at p = 2") {
  auto blocks = blocks_sym(4, 2);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].core.empty());
  CHECK(blocks[0].weight == 2);
  const auto h = block_heights(blocks[0]);
  CHECK(h.counts == std::map<int, int>{{0, 4}, {1, 1}});
  CHECK(h.defect == 3);
  CHECK(mh_block(blocks[0]) == MinHeight(1));
  CHECK(defect_check(blocks[0]));
}

TEST_CASE("small block lists") {
  auto one = blocks_sym(1, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].core == Partition{1});
  CHECK(one[0].weight == 0);
  for (int p : {2, 3, 5, 7}) {
    std::set<Partition> cores;
    for (const auto& b : blocks_sym(p, p)) cores.insert(b.core);
    std::set<Partition> expected;
    for (const auto& lambda : partitions_of(p)) expected.insert(p_core(lambda, p));
    CHECK(cores == expected);
  }
}

TEST_CASE("principal 3-block of S_5 has abelian defect and no positive height") {
  BlockLabel b{3, Partition{2}, 1, GroupKind::symmetric, 5, 0};
  const auto h = block_heights(b);
  CHECK(h.counts == std::map<int, int>{{0, 3}});
  CHECK(mh_block(b).is_infinite());
}

TEST_CASE("weight zero blocks") {
  for (const auto& b : blocks_sym(6, 2))
    if (b.weight == 0) {
      CHECK(block_heights(b).counts == std::map<int, int>{{0, 1}});
      CHECK(block_heights(b).defect == 0);
      CHECK(mh_block(b).is_infinite());
    }
}

TEST_CASE("A_6 principal 2-block") {
  auto blocks = blocks_alt(6, 2);
  BlockLabel principal;
  for (const auto& b : blocks)
    if (b.weight == 3) principal = b;
  REQUIRE(principal.weight == 3);
  CHECK(block_heights(principal).defect == 3);
  CHECK(defect_check(principal));
  CHECK(mh_block(principal) == MinHeight(1));
}

TEST_CASE("rejects a non-core label") {
  BlockLabel bad{2, Partition{2}, 1, GroupKind::symmetric, 4, 0};
  CHECK_THROWS(block_heights(bad));
}

TEST_CASE("quotient enumeration matches scan; heights match exact degrees") {
  for (int p : {2, 3, 5, 7})
    for (int n = 1; n <= 16; ++n) {
      int total = 0;
      for (const auto& b : blocks_sym(n, p)) {
        auto via_quotient = block_partitions(b);
        auto via_scan = block_partitions_by_scan(b);
        std::sort(via_quotient.begin(), via_quotient.end());
        std::sort(via_scan.begin(), via_scan.end());
        CHECK(via_quotient == via_scan);
        CHECK(block_heights(b).counts == heights_by_degrees(b));
        total += block_heights(b).character_count();
      }
      CHECK(total == partition_count(n));
    }
}

TEST_CASE("alternating heights match exact degrees") {
  for (int p : {2, 3, 5})
    for (int n = 2; n <= 14; ++n)
      for (const auto& b : blocks_alt(n, p)) CHECK(block_heights(b).counts == alt_heights_by_degrees(b));
}

TEST_CASE("character counts, height zero, defects for n <= 40") {
  for (int p : {2, 3, 5, 7})
    for (int n = 1; n <= 40; ++n) {
      int total = 0;
      for (const auto& b : blocks_sym(n, p)) {
        const auto h = block_heights(b);
        total += h.character_count();
        CHECK(h.counts.count(0) == 1);
        CHECK(h.counts.rbegin()->first <= h.defect);
        if (n <= 30) CHECK(defect_check(b));
      }
      CHECK(total == partition_count(n));
    }
}

TEST_CASE("abelian boundary") {
  CHECK(nonabelian_weight_threshold(GroupKind::symmetric, 2) == 2);
  CHECK(nonabelian_weight_threshold(GroupKind::alternating, 2) == 3);
  CHECK(nonabelian_weight_threshold(GroupKind::alternating, 5) == 5);
  for (int p : {2, 3, 5})
    for (int n = 2; n <= 30; ++n) {
      for (const auto& b : blocks_sym(n, p))
        CHECK(mh_block(b).is_infinite() == (b.weight < nonabelian_weight_threshold(GroupKind::symmetric, p)));
      for (const auto& b : blocks_alt(n, p)) {
        CHECK(defect_check(b));
        CHECK(mh_block(b).is_infinite() == (b.weight < nonabelian_weight_threshold(GroupKind::alternating, p)));
      }
    }
}

TEST_CASE("odd p: A_n blocks keep the positive heights of the S_n block") {
  for (int p : {3, 5})
    for (int n = 2; n <= 24; ++n)
      for (const auto& a : blocks_alt(n, p)) {
        if (a.weight == 0) continue;
        BlockLabel s = a;
        s.group = GroupKind::symmetric;
        s.constituent = 0;
        std::set<int> hs, ha;
        for (const auto& [h, c] : block_heights(s).counts)
          if (h > 0) hs.insert(h);
        for (const auto& [h, c] : block_heights(a).counts)
          if (h > 0) ha.insert(h);
        CHECK(hs == ha);
      }
}

TEST_CASE("block ids") {
  BlockLabel b{2, Partition{2, 1}, 3, GroupKind::symmetric, 9, 0};
  CHECK(b.id() == "core=(2,1) w=3");
  b.constituent = -1;
  CHECK(b.id() == "core=(2,1) w=3 -");
}
