#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmcg/integer_matrix.hpp"
#include "nmcg/surface.hpp"
#include "nmcg/word.hpp"

namespace nmcg {

enum class CurveKind { a, b, c, e, u, f, psi, lambda, xi, y };

/// Name of a generator of the pure or twist subgroup: a_i, b_i, c_i, e_i,
/// u_i, f_i, or one of psi, lambda, xi, y (no index).
struct GeneratorName {
  CurveKind kind = CurveKind::a;
  int index = 0;

  bool indexed() const;
  bool is_twist() const { return kind != CurveKind::y; }
  std::string str() const;
  static GeneratorName parse(std::string_view text);  // throws ParseError

  friend auto operator<=>(const GeneratorName&, const GeneratorName&) = default;
};

/// Circles {a_2..a_{g-1}, b_1..b_{r or r+1}, c_1..c_r, e_1..e_{n+s-1}, u_1..u_s}.
std::vector<GeneratorName> curve_catalog(const SurfaceSpec& spec);

/// Twists about the catalog circles together with the crosscap slide y.
std::vector<GeneratorName> pure_generators(const SurfaceSpec& spec);

/// Twist subgroup generators: the catalog plus f_1..f_{n+s-1}, xi for
/// g = 3; psi, xi for odd g >= 5; lambda, psi, xi for even g.
std::vector<GeneratorName> twist_generators(const SurfaceSpec& spec);

/// Index of the twist subgroup in the full mapping class group as the
/// product [M : PM] [PM : PM+] [PM+ : T] = n! * 2^n * 2.
struct IndexFactors {
  Integer permutations;  // n!
  Integer orientations;  // 2^n
  Integer determinant;   // 2
  Integer total;
};
IndexFactors subgroup_indices(const SurfaceSpec& spec);

/// Homology data of a two-sided circle c: its class [c] and the functional
/// x -> I(c, x), both in a fixed basis of the free part of H1.
struct CurveDatum {
  GeneratorName name;
  std::vector<Integer> klass;
  std::vector<Integer> functional;
  int sign = 1;
  bool two_sided = true;
  bool separating = false;
};

/// Matrix of x -> x + sign * functional(x) * klass.
IntegerMatrix twist_matrix(const CurveDatum& c, int sign, std::size_t dimension);

/// Integer matrices for the generators of the pure mapping class group,
/// acting on the free part of H1. Words compose right to left: the word
/// x1 x2 ... xk evaluates to M(x1) M(x2) ... M(xk).
///
/// Agreement of matrices is only a necessary condition for a relation: the
/// representation is not faithful.
class HomologyRepresentation {
 public:
  std::size_t dimension() const { return dimension_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const IntegerMatrix& matrix(std::string_view name) const;
  const std::optional<CurveDatum>& curve(std::string_view name) const;

  IntegerMatrix evaluate(const FreeWord& w) const;
  int det_hom(const FreeWord& w) const;
  bool verify_relation(const FreeWord& lhs, const FreeWord& rhs) const;

  // Parses and validates a configuration; see load_representation.
  static HomologyRepresentation load(std::istream& in, const SurfaceSpec& spec);

 private:
  void add(const GeneratorName& name, IntegerMatrix m, std::optional<CurveDatum> curve);

  std::size_t dimension_ = 0;
  Alphabet alphabet_;
  std::vector<IntegerMatrix> matrices_;
  std::vector<IntegerMatrix> inverses_;
  std::vector<int> determinants_;
  std::vector<std::optional<CurveDatum>> curves_;
};

/// Configuration text:
///   dim: k
///   curve <name> class: k ints functional: k ints sign: +1|-1 flags: two_sided[,separating]
///   matrix <name>: k*k ints (row-major)
/// Rejected when: dim differs from the free rank of H1 of the surface, a
/// generator of the pure or twist catalog is missing, a twist has
/// determinant other than +1, y has determinant other than -1, a separating
/// curve has a nonzero functional, or a curve is not two-sided.
HomologyRepresentation load_representation(std::istream& in, const SurfaceSpec& spec);

IntegerMatrix evaluate(const HomologyRepresentation& rep, const FreeWord& w);
int det_hom(const HomologyRepresentation& rep, const FreeWord& w);
bool verify_relation(const HomologyRepresentation& rep, const FreeWord& lhs, const FreeWord& rhs);

}  // namespace nmcg
