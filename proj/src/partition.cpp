#include "emverify/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace emverify {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::int64_t partition_count(int n) {
  std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
  return ways[n];
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  for (int col = 0; col < lambda[0]; ++col) {
    int height = 0;
    while (height < lambda.length() && lambda[height] > col) ++height;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

std::vector<int> hook_lengths(const Partition& lambda) {
  const Partition dual = conjugate(lambda);
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks.push_back((lambda[i] - j - 1) + (dual[j] - i - 1) + 1);
  return hooks;
}

BetaSet::BetaSet(const Partition& lambda, int bead_count) {
  if (bead_count < lambda.length()) throw std::invalid_argument("BetaSet: too few beads");
  beads_.reserve(static_cast<std::size_t>(bead_count));
  for (int i = 0; i < bead_count; ++i) beads_.push_back(lambda[i] + bead_count - 1 - i);
}

BetaSet::BetaSet(std::vector<int> beads) : beads_(std::move(beads)) {
  std::sort(beads_.begin(), beads_.end(), std::greater<>());
  for (std::size_t i = 0; i < beads_.size(); ++i) {
    if (beads_[i] < 0) throw std::invalid_argument("BetaSet: negative bead");
    if (i > 0 && beads_[i] == beads_[i - 1]) throw std::invalid_argument("BetaSet: repeated bead");
  }
}

Partition BetaSet::to_partition() const {
  std::vector<int> parts;
  const int b = bead_count();
  for (int i = 0; i < b; ++i) {
    int part = beads_[static_cast<std::size_t>(i)] - (b - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

namespace {

int padded_bead_count(int length, int p) { return (length + p - 1) / p * p; }

// Partition whose beta set on a single runner has the given levels.
Partition runner_partition(std::vector<int> levels) {
  if (levels.empty()) return {};
  return BetaSet(std::move(levels)).to_partition();
}

}  // namespace

CoreQuotient core_quotient(const Partition& lambda, int p) {
  if (p < 2) throw std::invalid_argument("core_quotient: p must be >= 2");
  const int b = padded_bead_count(lambda.length(), p);
  const BetaSet beta(lambda, b);

  std::vector<std::vector<int>> runners(static_cast<std::size_t>(p));
  for (int bead : beta.beads()) runners[static_cast<std::size_t>(bead % p)].push_back(bead / p);

  CoreQuotient cq;
  cq.p = p;
  std::vector<int> core_beads;
  for (int r = 0; r < p; ++r) {
    auto& levels = runners[static_cast<std::size_t>(r)];
    Partition component = runner_partition(levels);
    cq.weight += component.size();
    cq.quotient.push_back(std::move(component));
    for (int level = 0; level < static_cast<int>(levels.size()); ++level) core_beads.push_back(r + p * level);
  }
  cq.core = core_beads.empty() ? Partition{} : BetaSet(std::move(core_beads)).to_partition();
  return cq;
}

Partition p_core(const Partition& lambda, int p) { return core_quotient(lambda, p).core; }
int p_weight(const Partition& lambda, int p) { return core_quotient(lambda, p).weight; }
bool is_p_core(const Partition& lambda, int p) { return p_weight(lambda, p) == 0; }

Partition from_core_quotient(const CoreQuotient& cq) {
  const int p = cq.p;
  if (p < 2) throw std::invalid_argument("from_core_quotient: p must be >= 2");
  if (static_cast<int>(cq.quotient.size()) != p)
    throw std::invalid_argument("from_core_quotient: quotient needs p components");
  if (!is_p_core(cq.core, p)) throw std::invalid_argument("from_core_quotient: core is not a p-core");

  int longest = 0;
  for (const auto& component : cq.quotient) longest = std::max(longest, component.length());
  // Enough beads that every runner carries at least `longest` beads.
  const int b = padded_bead_count(cq.core.length() + p * longest, p);
  const BetaSet core_beta(cq.core, b);

  std::vector<int> bead_count(static_cast<std::size_t>(p), 0);
  for (int bead : core_beta.beads()) ++bead_count[static_cast<std::size_t>(bead % p)];

  std::vector<int> beads;
  beads.reserve(static_cast<std::size_t>(b));
  for (int r = 0; r < p; ++r) {
    const int k = bead_count[static_cast<std::size_t>(r)];
    const Partition& mu = cq.quotient[static_cast<std::size_t>(r)];
    for (int j = 0; j < k; ++j) beads.push_back(r + p * (mu[j] + k - 1 - j));
  }
  return BetaSet(std::move(beads)).to_partition();
}

std::vector<Partition> p_cores_of(int n, int p) {
  std::vector<Partition> out;
  for (auto& lambda : partitions_of(n))
    if (is_p_core(lambda, p)) out.push_back(std::move(lambda));
  return out;
}

std::vector<std::vector<Partition>> multipartitions(int w, int p) {
  std::vector<std::vector<Partition>> by_size;
  for (int k = 0; k <= w; ++k) by_size.push_back(partitions_of(k));

  std::vector<std::vector<Partition>> out;
  std::vector<Partition> current;
  std::function<void(int, int)> rec = [&](int slot, int remaining) {
    if (slot == p - 1) {
      for (const auto& mu : by_size[static_cast<std::size_t>(remaining)]) {
        current.push_back(mu);
        out.push_back(current);
        current.pop_back();
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k)
      for (const auto& mu : by_size[static_cast<std::size_t>(k)]) {
        current.push_back(mu);
        rec(slot + 1, remaining - k);
        current.pop_back();
      }
  };
  rec(0, w);
  return out;
}

int char_valuation(const Partition& lambda, int p) {
  if (p < 2) throw std::invalid_argument("char_valuation: p must be >= 2");
  int v = nu_p_factorial(lambda.size(), p);
  for (int h : hook_lengths(lambda)) v -= nu_p(h, p);
  return v;
}

BigInt char_degree_exact(const Partition& lambda) {
  BigInt hooks = 1;
  for (int h : hook_lengths(lambda)) hooks *= h;
  const BigInt total = factorial(lambda.size());
  if (total % hooks != 0) throw std::logic_error("hook product does not divide n!");
  return total / hooks;
}

}  // namespace emverify
