#pragma once

#include <map>
#include <string>
#include <vector>

#include "emverify/min_height.hpp"
#include "emverify/partition.hpp"

namespace emverify {

enum class GroupKind { symmetric, alternating };

/// A p-block of S_n, or of A_n. An alternating label stands for the A_n-block
/// covered by the S_n-block(s) with core `core` (and its conjugate). For weight
/// zero and a self-conjugate core the two A_n constituents are separate
/// blocks, distinguished by `constituent` = +1 / -1 (0 otherwise).
struct BlockLabel {
  int p = 0;
  Partition core;
  int weight = 0;
  GroupKind group = GroupKind::symmetric;
  int n = 0;
  int constituent = 0;

  /// "core=(2,1) w=3", with a trailing "+"/"-" for split constituents.
  std::string id() const;
  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

struct HeightMultiset {
  std::map<int, int> counts;  // height -> number of characters
  int defect = 0;
  int min_valuation = 0;

  int character_count() const;
};

/// Blocks of S_n: one per p-core of size n - p*w.
std::vector<BlockLabel> blocks_sym(int n, int p);
/// Blocks of A_n (n >= 2): one per conjugate pair of S_n-blocks, with weight-zero
/// self-conjugate cores split in two.
std::vector<BlockLabel> blocks_alt(int n, int p);

/// Partitions of n with the block's core, through p-quotient tuples.
std::vector<Partition> block_partitions(const BlockLabel& b);
/// Same set, by scanning every partition of n (test fallback).
std::vector<Partition> block_partitions_by_scan(const BlockLabel& b);

HeightMultiset block_heights(const BlockLabel& b);
MinHeight mh_block(const BlockLabel& b);
bool defect_check(const BlockLabel& b);

/// Defect the block's defect group should have, from its weight alone.
int expected_defect(const BlockLabel& b);

/// Weight at and above which the defect group is non-abelian.
int nonabelian_weight_threshold(GroupKind group, int p);

}  // namespace emverify
