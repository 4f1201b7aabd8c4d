#include "emverify/modular_linalg.hpp"

#include <stdexcept>

namespace emverify::modular {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t ell) { return a * b % ell; }

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t ell) {
  std::uint64_t r = 1 % ell;
  a %= ell;
  while (e) {
    if (e & 1u) r = r * a % ell;
    a = a * a % ell;
    e >>= 1u;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t ell) {
  if (a % ell == 0) throw std::domain_error("modular inverse of zero");
  return pow(a, ell - 2, ell);
}

std::vector<int> rref(Matrix& rows, std::uint64_t ell) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t scale = inv(rows[rank][c], ell);
    for (auto& x : rows[rank]) x = x * scale % ell;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t factor = rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = (rows[r][j] + (ell - factor) * rows[rank][j]) % ell;
    }
    pivots.push_back(static_cast<int>(c));
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

Matrix nullspace(const Matrix& a, std::uint64_t ell) {
  if (a.empty()) return {};
  const std::size_t cols = a.front().size();
  Matrix r = a;
  const std::vector<int> pivots = rref(r, ell);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[static_cast<std::size_t>(pivots[i])] = (ell - r[i][free]) % ell;
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a.front().size(), Row(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

std::vector<std::uint64_t> characteristic_polynomial(Matrix h, std::uint64_t ell) {
  const std::size_t n = h.size();
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const std::uint64_t pivot_inv = inv(h[m][m - 1], ell);
    for (i = m + 1; i < n; ++i) {
      const std::uint64_t t = h[i][m - 1] * pivot_inv % ell;
      if (t == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[i][c] = (h[i][c] + (ell - t) * h[m][c]) % ell;
      for (std::size_t r = 0; r < n; ++r) h[r][m] = (h[r][m] + t * h[r][i]) % ell;
    }
  }
  // p_{k+1}(x) = (x - h_kk) p_k(x) - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i(x)
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next(k + 2, 0);
    for (std::size_t d = 0; d <= k; ++d) {
      next[d + 1] = (next[d + 1] + p[k][d]) % ell;
      next[d] = (next[d] + (ell - h[k][k]) * p[k][d]) % ell;
    }
    std::uint64_t prod = 1;
    for (std::size_t ii = k; ii-- > 0;) {
      prod = prod * h[ii + 1][ii] % ell;
      if (prod == 0) break;
      const std::uint64_t coeff = h[ii][k] * prod % ell;
      if (coeff == 0) continue;
      for (std::size_t d = 0; d < p[ii].size(); ++d) next[d] = (next[d] + (ell - coeff) * p[ii][d]) % ell;
    }
    p[k + 1] = std::move(next);
  }
  return p[n];
}

std::vector<std::uint64_t> roots(const std::vector<std::uint64_t>& poly, std::uint64_t ell) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < ell; ++x) {
    std::uint64_t value = 0;
    for (std::size_t i = poly.size(); i-- > 0;) value = (value * x + poly[i]) % ell;
    if (value == 0) out.push_back(x);
  }
  return out;
}

}  // namespace emverify::modular
