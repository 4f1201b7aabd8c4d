#include "emverify/lie_sylow.hpp"

#include <functional>
#include <stdexcept>

#include "emverify/arith.hpp"

namespace emverify {

namespace {

PrimePower require_prime_power(int q) {
  auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

void require_bound(std::int64_t q, int exponent, std::size_t bound) {
  BigInt order = big_pow(BigInt(q), exponent);
  if (order > bound)
    throw BoundExceeded("group order " + order.str() + " exceeds bound " + std::to_string(bound));
}

// Visits every upper unitriangular dim x dim matrix over the field.
void for_each_unitriangular(const FieldPtr& field, int dim, const std::function<void(const FieldMatrix&)>& visit) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) slots.emplace_back(i, j);
  FieldMatrix m = FieldMatrix::identity(field, dim);
  const int q = field->order();
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (s == slots.size()) {
      visit(m);
      return;
    }
    for (int v = 0; v < q; ++v) {
      m.set(slots[s].first, slots[s].second, static_cast<FieldMatrix::Element>(v));
      rec(s + 1);
    }
  };
  rec(0);
}

// Adds members as generators until the closure contains all of them.
MatrixGroup generate_from_members(const std::vector<FieldMatrix>& members, std::size_t bound) {
  std::vector<FieldMatrix> gens = {members.front()};
  MatrixGroup group = MatrixGroup::closure(gens, bound);
  for (const auto& m : members) {
    if (group.contains(m)) continue;
    gens.push_back(m);
    group = MatrixGroup::closure(gens, bound);
  }
  if (group.order() != members.size()) throw std::logic_error("member set is not a group");
  return group;
}

FieldMatrix antidiagonal_form(const FieldPtr& field, const std::vector<long long>& signs) {
  const int dim = static_cast<int>(signs.size());
  FieldMatrix j(field, dim);
  for (int i = 0; i < dim; ++i) j.set(i, dim - 1 - i, field->from_int(signs[static_cast<std::size_t>(i)]));
  return j;
}

}  // namespace

MatrixGroup build_lemma33_group(int q, std::size_t bound) {
  const PrimePower pp = require_prime_power(q);
  if (pp.p == 2) throw std::invalid_argument("build_lemma33_group: q must be odd");
  require_bound(q, 5, bound);

  const FieldPtr big = FiniteField::make(static_cast<int>(pp.p), 2 * pp.f);  // F_{q^2}
  std::vector<FiniteField::Element> all(static_cast<std::size_t>(big->order()));
  for (int a = 0; a < big->order(); ++a) all[static_cast<std::size_t>(a)] = static_cast<FiniteField::Element>(a);
  const auto full_basis = big->prime_field_basis(all);
  const auto small_basis = big->prime_field_basis(big->subfield(q));

  std::vector<FieldMatrix> gens;
  for (auto u : full_basis) gens.push_back(FieldMatrix::elementary(big, 3, 0, 1, u));   // X_alpha
  for (auto v : small_basis) gens.push_back(FieldMatrix::elementary(big, 3, 1, 2, v));  // Y_beta
  MatrixGroup y = MatrixGroup::closure(std::move(gens), bound);
  if (y.order() != static_cast<std::size_t>(ipow(q, 5))) throw std::logic_error("Y has the wrong order");
  return y;
}

SylowFamily parse_sylow_family(const std::string& name) {
  if (name == "SL") return SylowFamily::SL;
  if (name == "Sp4") return SylowFamily::Sp4;
  if (name == "SU3") return SylowFamily::SU3;
  if (name == "SU4") return SylowFamily::SU4;
  throw std::invalid_argument("unsupported Sylow family: " + name);
}

std::string to_string(SylowFamily family) {
  switch (family) {
    case SylowFamily::SL: return "SL";
    case SylowFamily::Sp4: return "Sp4";
    case SylowFamily::SU3: return "SU3";
    case SylowFamily::SU4: return "SU4";
  }
  return "?";
}

int positive_root_count(SylowFamily family, int n) {
  switch (family) {
    case SylowFamily::SL: return n * (n - 1) / 2;
    case SylowFamily::Sp4: return 4;
    case SylowFamily::SU3: return 3;
    case SylowFamily::SU4: return 6;
  }
  return 0;
}

BigInt sylow_search_size(SylowFamily family, int n, int q) {
  switch (family) {
    case SylowFamily::SL: return 0;
    case SylowFamily::Sp4: return big_pow(BigInt(q), 6);
    case SylowFamily::SU3: return big_pow(BigInt(q), 2 * 3);
    case SylowFamily::SU4: return big_pow(BigInt(q), 2 * 6);
  }
  (void)n;
  return 0;
}

MatrixGroup build_sylow_lie(SylowFamily family, int n, int q, std::size_t bound) {
  const PrimePower pp = require_prime_power(q);
  const int p = static_cast<int>(pp.p);
  if (family == SylowFamily::SL && n < 2) throw std::invalid_argument("build_sylow_lie: SL_n needs n >= 2");
  if (family == SylowFamily::Sp4) n = 4;
  if (family == SylowFamily::SU3) n = 3;
  if (family == SylowFamily::SU4) n = 4;
  const int roots = positive_root_count(family, n);
  require_bound(q, roots, bound);

  MatrixGroup group = [&]() -> MatrixGroup {
    if (family == SylowFamily::SL) {
      const FieldPtr field = FiniteField::make(p, pp.f);
      std::vector<FiniteField::Element> all;
      for (int a = 0; a < field->order(); ++a) all.push_back(static_cast<FiniteField::Element>(a));
      std::vector<FieldMatrix> gens;
      for (auto t : field->prime_field_basis(all))
        for (int i = 0; i + 1 < n; ++i) gens.push_back(FieldMatrix::elementary(field, n, i, i + 1, t));
      return MatrixGroup::closure(std::move(gens), bound);
    }
    if (family == SylowFamily::Sp4) {
      const FieldPtr field = FiniteField::make(p, pp.f);
      const FieldMatrix form = antidiagonal_form(field, {1, 1, -1, -1});
      std::vector<FieldMatrix> members;
      for_each_unitriangular(field, 4, [&](const FieldMatrix& g) {
        if (g.transpose() * form * g == form) members.push_back(g);
      });
      return generate_from_members(members, bound);
    }
    // unitary: g^T J g^(q) = J over F_{q^2}
    const FieldPtr field = FiniteField::make(p, 2 * pp.f);
    const FieldMatrix form = antidiagonal_form(field, std::vector<long long>(static_cast<std::size_t>(n), 1));
    std::vector<FieldMatrix> members;
    for_each_unitriangular(field, n, [&](const FieldMatrix& g) {
      if (g.transpose() * form * g.entry_power(static_cast<std::uint64_t>(q)) == form) members.push_back(g);
    });
    return generate_from_members(members, bound);
  }();

  if (group.order() != static_cast<std::size_t>(ipow(q, roots)))
    throw std::logic_error("Sylow subgroup has unexpected order " + std::to_string(group.order()));
  return group;
}

}  // namespace emverify
