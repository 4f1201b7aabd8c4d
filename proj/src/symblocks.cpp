#include "emverify/symblocks.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace emverify {

std::string BlockLabel::id() const {
  std::string out = "core=" + core.to_string() + " w=" + std::to_string(weight);
  if (constituent > 0) out += " +";
  if (constituent < 0) out += " -";
  return out;
}

int HeightMultiset::character_count() const {
  int total = 0;
  for (const auto& [h, c] : counts) total += c;
  return total;
}

std::vector<BlockLabel> blocks_sym(int n, int p) {
  if (n < 1) throw std::invalid_argument("blocks_sym: n must be >= 1");
  if (p < 2) throw std::invalid_argument("blocks_sym: p must be >= 2");
  std::vector<BlockLabel> out;
  for (int w = n / p; w >= 0; --w)
    for (auto& core : p_cores_of(n - p * w, p))
      out.push_back(BlockLabel{p, std::move(core), w, GroupKind::symmetric, n, 0});
  return out;
}

std::vector<BlockLabel> blocks_alt(int n, int p) {
  if (n < 2) throw std::invalid_argument("blocks_alt: n must be >= 2");
  std::vector<BlockLabel> out;
  for (const auto& sym : blocks_sym(n, p)) {
    const Partition dual = conjugate(sym.core);
    if (dual < sym.core) continue;  // represented by its conjugate block
    BlockLabel alt = sym;
    alt.group = GroupKind::alternating;
    if (sym.weight == 0 && dual == sym.core) {
      alt.constituent = 1;
      out.push_back(alt);
      alt.constituent = -1;
      out.push_back(alt);
    } else {
      out.push_back(alt);
    }
  }
  return out;
}

namespace {

void require_core(const BlockLabel& b) {
  if (b.p < 2) throw std::invalid_argument("block label: p must be >= 2");
  if (!is_p_core(b.core, b.p)) throw std::invalid_argument("block label: core is not a p-core");
  if (b.core.size() + b.p * b.weight != b.n) throw std::invalid_argument("block label: |core| + p*w != n");
}

int nu_group_order(const BlockLabel& b) {
  int v = nu_p_factorial(b.n, b.p);
  if (b.group == GroupKind::alternating && b.n >= 2 && b.p == 2) v -= 1;
  return v;
}

}  // namespace

std::vector<Partition> block_partitions(const BlockLabel& b) {
  require_core(b);
  std::vector<Partition> out;
  for (auto& quotient : multipartitions(b.weight, b.p))
    out.push_back(from_core_quotient(CoreQuotient{b.core, std::move(quotient), b.p, b.weight}));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> block_partitions_by_scan(const BlockLabel& b) {
  require_core(b);
  std::vector<Partition> out;
  for (auto& lambda : partitions_of(b.n))
    if (p_core(lambda, b.p) == b.core) out.push_back(std::move(lambda));
  std::sort(out.begin(), out.end());
  return out;
}

HeightMultiset block_heights(const BlockLabel& b) {
  // (valuation, multiplicity) per irreducible character of the block
  std::vector<std::pair<int, int>> chars;
  const int nu_two = b.p == 2 ? 1 : 0;

  if (b.group == GroupKind::symmetric) {
    for (const auto& lambda : block_partitions(b)) chars.emplace_back(char_valuation(lambda, b.p), 1);
  } else {
    if (b.n < 2) throw std::invalid_argument("alternating block needs n >= 2");
    const bool self_dual_core = conjugate(b.core) == b.core;
    if (b.constituent != 0) {
      if (b.weight != 0 || !self_dual_core)
        throw std::invalid_argument("split constituent label needs weight 0 and self-conjugate core");
      chars.emplace_back(char_valuation(b.core, b.p) - nu_two, 1);
    } else {
      for (const auto& lambda : block_partitions(b)) {
        const int v = char_valuation(lambda, b.p);
        if (!self_dual_core) {
          chars.emplace_back(v, 1);
          continue;
        }
        const Partition dual = conjugate(lambda);
        if (dual == lambda)
          chars.emplace_back(v - nu_two, 2);
        else if (lambda < dual)
          chars.emplace_back(v, 1);
      }
    }
  }

  HeightMultiset hm;
  hm.min_valuation = std::numeric_limits<int>::max();
  for (const auto& [v, mult] : chars) hm.min_valuation = std::min(hm.min_valuation, v);
  for (const auto& [v, mult] : chars) hm.counts[v - hm.min_valuation] += mult;
  hm.defect = nu_group_order(b) - hm.min_valuation;
  return hm;
}

MinHeight mh_block(const BlockLabel& b) {
  const HeightMultiset hm = block_heights(b);
  for (const auto& [h, c] : hm.counts)
    if (h > 0) return MinHeight(h);
  return MinHeight::infinity();
}

int expected_defect(const BlockLabel& b) {
  if (b.weight == 0) return 0;
  const int full = nu_p_factorial(static_cast<std::int64_t>(b.p) * b.weight, b.p);
  if (b.group == GroupKind::alternating && b.p == 2) return full - 1;
  return full;
}

bool defect_check(const BlockLabel& b) { return block_heights(b).defect == expected_defect(b); }

int nonabelian_weight_threshold(GroupKind group, int p) {
  // Sylow p-subgroup of S_{pw} is abelian iff w < p; for A_{2w} at p = 2 iff w <= 2.
  if (group == GroupKind::alternating && p == 2) return 3;
  return p;
}

}  // namespace emverify
