#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "emverify/char_degrees.hpp"
#include "emverify/errors.hpp"
#include "emverify/field_matrix.hpp"
#include "emverify/permutation.hpp"

namespace emverify {

template <class E>
struct ElementTraits;

template <>
struct ElementTraits<Permutation> {
  using Hash = PermutationHash;
};

template <>
struct ElementTraits<FieldMatrix> {
  using Hash = FieldMatrixHash;
};

inline constexpr std::size_t kDefaultGroupBound = std::size_t{1} << 16;

/// A finite group given by generators, fully enumerated. Elements are indexed
/// 0..order-1 with index 0 the identity; conjugacy classes are computed on
/// construction. Immutable once built.
template <class E>
class ConcreteGroup {
 public:
  using Index = std::uint32_t;

  static ConcreteGroup closure(std::vector<E> generators, std::size_t bound = kDefaultGroupBound) {
    if (generators.empty()) throw std::invalid_argument("closure: no generators");
    for (const auto& g : generators)
      if (!g.same_shape(generators.front())) throw std::invalid_argument("closure: inconsistent generator shapes");

    ConcreteGroup group;
    group.generators_ = std::move(generators);
    group.insert(group.generators_.front() * group.generators_.front().inverse());
    for (std::size_t next = 0; next < group.elements_.size(); ++next)
      for (const auto& g : group.generators_) {
        E product = group.elements_[next] * g;
        if (group.index_.count(product)) continue;
        if (group.elements_.size() >= bound)
          throw BoundExceeded("closure: group order exceeds bound " + std::to_string(bound));
        group.insert(std::move(product));
      }
    group.build_inverses();
    group.build_classes();
    return group;
  }

  std::size_t order() const { return elements_.size(); }
  const E& element(Index i) const { return elements_[i]; }
  const std::vector<E>& elements() const { return elements_; }
  const std::vector<E>& generators() const { return generators_; }

  bool contains(const E& g) const { return index_.count(g) != 0; }
  Index index_of(const E& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) throw std::out_of_range("element not in group");
    return it->second;
  }
  Index multiply(Index a, Index b) const { return index_of(elements_[a] * elements_[b]); }
  Index inverse(Index a) const { return inverse_[a]; }

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<Index>>& classes() const { return classes_; }
  int class_of(Index i) const { return class_of_[i]; }

  std::size_t center_order() const {
    std::size_t n = 0;
    for (const auto& c : classes_)
      if (c.size() == 1) ++n;
    return n;
  }

  bool is_abelian() const { return center_order() == order(); }

  std::uint64_t element_order(Index i) const {
    std::uint64_t k = 1;
    for (Index x = i; x != 0; x = multiply(x, i)) ++k;
    return k;
  }

  /// lcm of element orders (conjugates share an order, so one per class).
  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (const auto& c : classes_) e = std::lcm(e, element_order(c.front()));
    return e;
  }

  /// Order of [G,G], the normal closure of the generator commutators.
  std::size_t derived_subgroup_order() const {
    std::vector<Index> sub_gens;
    std::vector<bool> member(order(), false);
    std::vector<Index> members;
    auto rebuild = [&] {
      std::fill(member.begin(), member.end(), false);
      members.assign(1, 0);
      member[0] = true;
      for (std::size_t next = 0; next < members.size(); ++next)
        for (Index s : sub_gens) {
          const Index y = multiply(members[next], s);
          if (!member[y]) {
            member[y] = true;
            members.push_back(y);
          }
        }
    };
    rebuild();
    auto add = [&](Index x) {
      if (member[x]) return false;
      sub_gens.push_back(x);
      rebuild();
      return true;
    };
    std::vector<Index> gen_index;
    for (const auto& g : generators_) gen_index.push_back(index_of(g));
    for (Index a : gen_index)
      for (Index b : gen_index) add(multiply(multiply(inverse(a), inverse(b)), multiply(a, b)));
    for (bool grown = true; grown;) {
      grown = false;
      for (std::size_t i = 0; i < sub_gens.size(); ++i)
        for (Index g : gen_index) grown |= add(multiply(multiply(inverse(g), sub_gens[i]), g));
    }
    return members.size();
  }

  ClassAlgebra class_algebra() const {
    ClassAlgebra alg;
    alg.group_order = order();
    alg.exponent = exponent();
    alg.identity_class = class_of_[0];
    for (const auto& c : classes_) {
      alg.class_sizes.push_back(c.size());
      alg.inverse_class.push_back(class_of_[inverse_[c.front()]]);
    }
    alg.structure_matrix = [this](int j) {
      const std::size_t h = classes_.size();
      std::vector<std::vector<std::uint64_t>> r(h, std::vector<std::uint64_t>(h, 0));
      for (std::size_t i = 0; i < h; ++i) {
        const Index z = classes_[i].front();
        for (Index x : classes_[static_cast<std::size_t>(j)]) ++r[i][static_cast<std::size_t>(class_of_[multiply(inverse_[x], z)])];
      }
      return r;
    };
    return alg;
  }

 private:
  void insert(E g) {
    index_.emplace(g, static_cast<Index>(elements_.size()));
    elements_.push_back(std::move(g));
  }

  void build_inverses() {
    inverse_.resize(order());
    for (Index i = 0; i < order(); ++i) inverse_[i] = index_of(elements_[i].inverse());
  }

  void build_classes() {
    class_of_.assign(order(), -1);
    std::vector<Index> gen_index, gen_inverse;
    for (const auto& g : generators_) {
      gen_index.push_back(index_of(g));
      gen_inverse.push_back(inverse_[gen_index.back()]);
    }
    for (Index start = 0; start < order(); ++start) {
      if (class_of_[start] >= 0) continue;
      const int id = static_cast<int>(classes_.size());
      std::vector<Index> orbit = {start};
      class_of_[start] = id;
      for (std::size_t next = 0; next < orbit.size(); ++next)
        for (std::size_t g = 0; g < gen_index.size(); ++g) {
          const Index y = multiply(multiply(gen_inverse[g], orbit[next]), gen_index[g]);
          if (class_of_[y] < 0) {
            class_of_[y] = id;
            orbit.push_back(y);
          }
        }
      classes_.push_back(std::move(orbit));
    }
  }

  std::vector<E> generators_;
  std::vector<E> elements_;
  std::unordered_map<E, Index, typename ElementTraits<E>::Hash> index_;
  std::vector<Index> inverse_;
  std::vector<int> class_of_;
  std::vector<std::vector<Index>> classes_;
};

template <class E>
DegreeReport char_degrees(const ConcreteGroup<E>& group) {
  DegreeReport report = degrees_from_class_algebra(group.class_algebra());
  report.derived_order = group.derived_subgroup_order();
  return report;
}

/// Generator file: one generator per line (cycle notation or matrix rows).
template <class E>
std::string format_generators(const std::vector<E>& generators) {
  std::string out;
  for (const auto& g : generators) out += g.to_string() + "\n";
  return out;
}

using PermGroup = ConcreteGroup<Permutation>;
using MatrixGroup = ConcreteGroup<FieldMatrix>;

}  // namespace emverify
