#pragma once

#include <string>
#include <vector>

#include "nmcg/integer_matrix.hpp"
#include "nmcg/smith.hpp"
#include "nmcg/surface.hpp"

namespace nmcg {

/// Homology class of a twist generator after conjugacy reductions:
/// A = [t_{a_1}], B = [t_{b_{r+1}}] (even genus only), XI = [t_xi],
/// U_j = [t_{u_j}].
struct H1Symbol {
  enum class Kind { A, B, XI, U };
  Kind kind = Kind::A;
  int index = 0;  // j for U_j

  std::string str() const;
  friend bool operator==(const H1Symbol&, const H1Symbol&) = default;
};

struct LedgerRelation {
  std::vector<Integer> coefficients;  // one per symbol; the relation is sum = 0
  std::string source;
};

struct RelationLedger {
  SurfaceSpec spec;
  std::vector<H1Symbol> symbols;
  std::vector<LedgerRelation> relations;

  IntegerMatrix matrix() const;  // relations x symbols
};

/// Relations among the symbols that hold in H1 of the twist subgroup, in a
/// fixed order. Requires g >= 3. Independent of the number of punctures.
RelationLedger build_ledger(const SurfaceSpec& spec);

AbelianInvariants compute_h1(const SurfaceSpec& spec);

/// One line per relation ("12A - XI = 0  [source]"), then "result: <group>".
std::string explain(const SurfaceSpec& spec);

/// "A", "2A - XI", "U_1 + U_2" etc.; "0" for the zero vector.
std::string format_relation(const std::vector<H1Symbol>& symbols, const std::vector<Integer>& coefficients);

}  // namespace nmcg
