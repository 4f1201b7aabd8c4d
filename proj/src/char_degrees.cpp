#include "emverify/char_degrees.hpp"

#include <cmath>
#include <stdexcept>

#include "emverify/arith.hpp"
#include "emverify/modular_linalg.hpp"

namespace emverify {

namespace md = modular;

bool DegreeReport::invariants_hold() const {
  std::uint64_t squares = 0, count = 0;
  for (const auto& [d, m] : degrees) {
    squares += d * d * m;
    count += m;
  }
  const auto linear = degrees.count(1) ? degrees.at(1) : 0;
  return squares == group_order && count == class_count && linear == linear_count &&
         derived_order != 0 && linear_count * derived_order == group_order;
}

std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent, std::uint64_t search_limit) {
  if (exponent == 0) throw std::invalid_argument("dixon_prime: zero exponent");
  const auto floor_bound = static_cast<std::uint64_t>(2.0 * std::sqrt(static_cast<double>(order)));
  std::uint64_t ell = floor_bound / exponent * exponent + 1;
  while (ell * ell <= 4 * order) ell += exponent;  // strictly greater than 2 sqrt(order)
  for (; ell < search_limit; ell += exponent)
    if (is_prime(static_cast<std::int64_t>(ell))) return ell;
  throw std::runtime_error("dixon_prime: no admissible prime below the search limit");
}

namespace {

struct Eigenspace {
  md::Matrix basis;  // rows in reduced echelon form
  std::vector<int> pivots;
};

// Splits a space into the eigenspaces of the row action v -> v R.
std::vector<Eigenspace> split(const Eigenspace& space, const md::Matrix& r, std::uint64_t ell) {
  const std::size_t d = space.basis.size();
  const std::size_t h = r.size();
  // Restricted action: (B R) = A B, read A off the pivot columns of B.
  md::Matrix a(d, md::Row(d, 0));
  for (std::size_t row = 0; row < d; ++row) {
    md::Row image(h, 0);
    for (std::size_t i = 0; i < h; ++i) {
      const std::uint64_t coeff = space.basis[row][i];
      if (coeff == 0) continue;
      for (std::size_t k = 0; k < h; ++k)
        if (r[i][k]) image[k] = (image[k] + coeff * (r[i][k] % ell)) % ell;
    }
    for (std::size_t c = 0; c < d; ++c) a[row][c] = image[static_cast<std::size_t>(space.pivots[c])];
  }

  const auto eigenvalues = md::roots(md::characteristic_polynomial(a, ell), ell);
  if (eigenvalues.size() <= 1) return {space};

  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (std::uint64_t lambda : eigenvalues) {
    // left null space of A - lambda I = null space of its transpose
    md::Matrix shifted = md::transpose(a);
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + ell - lambda) % ell;
    const md::Matrix kernel = md::nullspace(shifted, ell);
    Eigenspace e;
    for (const auto& u : kernel) {
      md::Row v(h, 0);
      for (std::size_t c = 0; c < d; ++c) {
        if (u[c] == 0) continue;
        for (std::size_t k = 0; k < h; ++k) v[k] = (v[k] + u[c] * space.basis[c][k]) % ell;
      }
      e.basis.push_back(std::move(v));
    }
    e.pivots = md::rref(e.basis, ell);
    total += e.basis.size();
    out.push_back(std::move(e));
  }
  if (total != d) throw std::logic_error("class matrix is not diagonalizable over F_ell");
  return out;
}

}  // namespace

DegreeReport degrees_from_class_algebra(const ClassAlgebra& alg) {
  const std::size_t h = alg.class_sizes.size();
  const std::uint64_t ell = dixon_prime(alg.group_order, alg.exponent);

  std::vector<Eigenspace> spaces(1);
  for (std::size_t i = 0; i < h; ++i) {
    md::Row e(h, 0);
    e[i] = 1;
    spaces[0].basis.push_back(std::move(e));
    spaces[0].pivots.push_back(static_cast<int>(i));
  }

  auto all_lines = [&] {
    for (const auto& s : spaces)
      if (s.basis.size() > 1) return false;
    return true;
  };
  for (std::size_t j = 0; j < h && !all_lines(); ++j) {
    if (static_cast<int>(j) == alg.identity_class) continue;
    const md::Matrix r = alg.structure_matrix(static_cast<int>(j));
    std::vector<Eigenspace> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, r, ell)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (!all_lines()) throw std::logic_error("class matrices did not separate the central characters");

  DegreeReport report;
  report.group_order = alg.group_order;
  report.class_count = h;
  report.modular_prime = ell;
  const std::uint64_t order_mod = alg.group_order % ell;
  for (const auto& s : spaces) {
    const md::Row& v = s.basis.front();
    const std::uint64_t at_identity = v[static_cast<std::size_t>(alg.identity_class)];
    if (at_identity == 0) throw std::logic_error("central character vanishes on the identity class");
    const std::uint64_t scale = md::inv(at_identity, ell);
    std::uint64_t norm = 0;  // sum_i w_i w_{i*} / |C_i|
    for (std::size_t i = 0; i < h; ++i) {
      const std::uint64_t wi = v[i] * scale % ell;
      const std::uint64_t wbar = v[static_cast<std::size_t>(alg.inverse_class[i])] * scale % ell;
      norm = (norm + wi * wbar % ell * md::inv(alg.class_sizes[i] % ell, ell)) % ell;
    }
    const std::uint64_t degree_sq = order_mod * md::inv(norm, ell) % ell;
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= alg.group_order; ++d)
      if (d * d % ell == degree_sq) {
        degree = d;
        break;
      }
    if (degree == 0 || alg.group_order % degree != 0)
      throw std::logic_error("character degree could not be lifted from F_ell");
    ++report.degrees[degree];
  }
  report.linear_count = report.degrees.count(1) ? report.degrees[1] : 0;
  return report;
}

}  // namespace emverify
