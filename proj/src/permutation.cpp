#include "emverify/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace emverify {

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("Permutation: not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<std::uint16_t> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<std::uint16_t> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  for (const auto& cycle : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i] - 1;
      const int to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("Permutation::from_cycles: point out of range");
      images[static_cast<std::size_t>(from)] = static_cast<std::uint16_t>(to);
    }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (!same_shape(rhs)) throw std::invalid_argument("Permutation product: degree mismatch");
  std::vector<std::uint16_t> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[x] = rhs.images_[images_[x]];
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[images_[x]] = static_cast<std::uint16_t>(x);
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Permutation::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  int transpositions = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      if (x != start) out += ',';
      out += std::to_string(x + 1);
      seen[x] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& g) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : g.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace emverify
