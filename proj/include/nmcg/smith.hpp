#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nmcg/integer_matrix.hpp"

namespace nmcg {

/// Smith normal form with unimodular certificates: u * a * v == s.
///
/// The diagonal of s is non-negative and every entry divides the next one,
/// so s is uniquely determined by the input.
struct SmithForm {
  IntegerMatrix s;
  IntegerMatrix u;
  IntegerMatrix v;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SmithForm snf(const IntegerMatrix& a);

/// Finitely generated abelian group Z^free_rank x Z/d1 x ... x Z/dk with
/// 2 <= d1 | d2 | ... | dk.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  // Order of the group, or 0 when it is infinite.
  Integer order() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Renders "0" for the trivial group, otherwise the free part ("Z" or
/// "Z^r") followed by cyclic factors "Z/d" with each factor divisible by the
/// next one, joined by " x ".
std::string to_string(const AbelianInvariants& g);

/// Invariants of Z^ambient_rank / rowspan(relations).
AbelianInvariants invariant_factors(const IntegerMatrix& relations, std::size_t ambient_rank);

}  // namespace nmcg
