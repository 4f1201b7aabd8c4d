#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "emverify/arith.hpp"

namespace emverify {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based), zero past the end.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  /// "(4,2,1)"; "()" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, in reverse lexicographic order starting with (n).
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n (dynamic programming, exact).
std::int64_t partition_count(int n);

Partition conjugate(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

/// One hook length per cell, row by row.
std::vector<int> hook_lengths(const Partition& lambda);

/// Strictly decreasing first-column hook lengths padded to a bead count.
class BetaSet {
 public:
  BetaSet(const Partition& lambda, int bead_count);
  explicit BetaSet(std::vector<int> beads);  // any order, distinct, >= 0

  const std::vector<int>& beads() const { return beads_; }
  int bead_count() const { return static_cast<int>(beads_.size()); }
  Partition to_partition() const;

 private:
  std::vector<int> beads_;  // strictly decreasing
};

struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotient;  // one component per runner 0..p-1
  int p = 0;
  int weight = 0;

  friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

/// p-core and p-quotient read off the p-abacus. Beads are padded to the least
/// multiple of p that is >= length(lambda); runner r holds positions = r mod p.
CoreQuotient core_quotient(const Partition& lambda, int p);
Partition p_core(const Partition& lambda, int p);
int p_weight(const Partition& lambda, int p);
bool is_p_core(const Partition& lambda, int p);

/// Inverse of core_quotient under the same runner convention.
Partition from_core_quotient(const CoreQuotient& cq);

/// All p-cores of size n.
std::vector<Partition> p_cores_of(int n, int p);

/// All p-tuples of partitions with total size w.
std::vector<std::vector<Partition>> multipartitions(int w, int p);

/// nu_p of the degree of the S_n character labelled by lambda.
int char_valuation(const Partition& lambda, int p);

/// Exact degree n! / prod(hooks).
BigInt char_degree_exact(const Partition& lambda);

}  // namespace emverify
