#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emverify/degree_polynomial.hpp"
#include "emverify/min_height.hpp"
#include "emverify/partition.hpp"

namespace emverify {

enum class LieFamily { A, A2, B, C, D, D2, D4_3, G2, F4, E6, E6_2, E7, E8, B2_2, G2_2, F4_2 };

/// "A", "2A", "B", "C", "D", "2D", "3D4", "G2", "F4", "E6", "2E6", "E7", "E8", "2B2", "2G2", "2F4".
std::string to_string(LieFamily family);
LieFamily parse_lie_family(const std::string& name);

bool is_suzuki_ree(LieFamily family);
/// Rank fixed by the family (exceptional types), or 0 when the rank is free.
int fixed_rank(LieFamily family);

/// Family, rank, defining prime p and exponent f: q = p^f, or q^2 = p^(2f+1)
/// for the Suzuki and Ree families.
struct GroupSpec {
  LieFamily family = LieFamily::A;
  int rank = 0;
  std::int64_t p = 2;
  int f = 1;

  /// From the field size: q itself, or q^2 = p^(2f+1) for Suzuki/Ree.
  static GroupSpec from_field_size(LieFamily family, int rank, std::int64_t field_size);
  std::int64_t q() const;  // p^f (for Suzuki/Ree the integer p^f with q^2 = p * (p^f)^2)
  std::string to_string() const;
  /// Throws std::invalid_argument when the spec falls outside the m(G,p) table.
  void validate() const;
};

struct MExponent {
  int value = 0;
};

/// p^m(G,p) as an exponent of p: the half-q branches give f-1, the q/sqrt(p)
/// branches give f, everything else f.
MExponent m_of(const GroupSpec& spec);

/// Pair of beta-sets; `top` holds at least as many entries as `bottom`.
struct Symbol {
  std::vector<int> top;     // strictly increasing
  std::vector<int> bottom;  // strictly increasing

  static Symbol from_bipartition(const Partition& top_part, const Partition& bottom_part, int defect);
  int defect() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }
  int rank() const;
  /// Strips common leading zeros (shift equivalence).
  Symbol reduced() const;
  /// One shift: prepend 0 to both rows and add 1 everywhere else.
  Symbol shifted() const;
  /// "(0,2|3)"
  std::string to_string() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Generic degree of the unipotent character of a classical group with this
/// symbol. Families: B, C (odd defect), D (defect = 0 mod 4), 2D (defect = 2 mod 4).
/// A D-type symbol with equal rows yields the degree of each of its two characters.
DegreePolynomial symbol_degree(const Symbol& symbol, LieFamily family);

/// q-hook formula for GL_{n+1} (twisted = false) or its Ennola dual for GU_{n+1}.
DegreePolynomial typeA_degree(const Partition& lambda, bool twisted);

struct DegreeRecord {
  std::string name;
  LieFamily family = LieFamily::A;
  int rank = 0;
  DegreePolynomial degree;

  friend bool operator==(const DegreeRecord&, const DegreeRecord&) = default;
};

/// Symbols of the given rank for a classical family, reduced; D-type degenerate
/// symbols appear once here.
std::vector<Symbol> enumerate_symbols(LieFamily family, int rank);

/// Complete unipotent degree list. A, 2A, B, C, D, 2D are generated; G2 and 3D4
/// come from the static data directory. Other families throw std::domain_error.
std::vector<DegreeRecord> unipotent_degrees(LieFamily family, int rank);

/// Minimal positive nu_p over the unipotent degrees at q = p^f, p the defining prime.
MinHeight unipotent_mh(LieFamily family, int rank, std::int64_t q);

/// Number of positive roots of the (twisted) root system of the algebraic group.
int positive_roots(LieFamily family, int rank);

/// Order of the (relative) Weyl group, the sum of squares of degrees at q = 1.
BigInt weyl_group_order(LieFamily family, int rank);

/// Bad primes of the underlying algebraic group.
std::vector<std::int64_t> bad_primes(LieFamily family);

/// |Z| of the simply connected algebraic group.
std::int64_t center_order(LieFamily family, int rank);

/// Known reason the unipotent minimum can differ from m(G,p) at this
/// (family, rank, q), or an empty string.
std::string unipotent_restriction_note(LieFamily family, int rank, std::int64_t q);

}  // namespace emverify
