#pragma once

#include <cstdint>
#include <vector>

namespace emverify::modular {

using Row = std::vector<std::uint64_t>;
using Matrix = std::vector<Row>;

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t ell);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t ell);
std::uint64_t inv(std::uint64_t a, std::uint64_t ell);

/// Reduced row echelon form in place; drops zero rows and returns pivot columns.
std::vector<int> rref(Matrix& rows, std::uint64_t ell);

/// Basis of { v : A v = 0 } as rows.
Matrix nullspace(const Matrix& a, std::uint64_t ell);

Matrix transpose(const Matrix& a);

/// Characteristic polynomial det(xI - A), constant term first (Hessenberg reduction).
std::vector<std::uint64_t> characteristic_polynomial(Matrix a, std::uint64_t ell);

/// Distinct roots in F_ell of a polynomial, by exhaustive evaluation.
std::vector<std::uint64_t> roots(const std::vector<std::uint64_t>& poly, std::uint64_t ell);

}  // namespace emverify::modular
