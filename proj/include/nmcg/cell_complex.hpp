#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nmcg/integer_matrix.hpp"
#include "nmcg/smith.hpp"
#include "nmcg/surface.hpp"

namespace nmcg {

struct CellEdge {
  std::string name;
  std::size_t tail = 0;
  std::size_t head = 0;
  bool boundary = false;  // traversed once by the 2-cell
};

/// CW complex obtained by gluing the sides of a polygon: vertex classes,
/// oriented edges and a single 2-cell attached along the polygon boundary.
class CellComplex {
 public:
  CellComplex(std::size_t vertex_count, std::vector<CellEdge> edges,
              std::vector<std::pair<std::size_t, int>> attaching);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return 1; }
  long euler_characteristic() const;

  const std::vector<CellEdge>& edges() const { return edges_; }
  std::size_t edge_index(std::string_view name) const;  // throws DomainError
  const std::vector<std::pair<std::size_t, int>>& attaching() const { return attaching_; }

  IntegerMatrix boundary1() const;  // vertices x edges
  IntegerMatrix boundary2() const;  // edges x faces

 private:
  std::size_t vertex_count_;
  std::vector<CellEdge> edges_;
  std::vector<std::pair<std::size_t, int>> attaching_;
};

/// Identifies like-named edges and the polygon corners they force together.
/// Throws DomainError if an edge occurs other than once or twice or with an
/// exponent other than +-1.
CellComplex glue(const PolygonModel& model);

/// Integral 1-chain, keyed by edge name.
using EdgeCycle = std::map<std::string, Integer>;

/// First homology with a fixed basis. Coordinates of a class are listed
/// free part first, then one coordinate per torsion factor, reduced modulo
/// that factor.
class CellularHomology {
 public:
  explicit CellularHomology(const CellComplex& complex);

  const AbelianInvariants& invariants() const { return invariants_; }
  std::vector<Integer> coordinates(const EdgeCycle& z) const;  // throws DomainError if not a cycle

 private:
  std::map<std::string, std::size_t, std::less<>> edge_index_;
  IntegerMatrix boundary1_;
  IntegerMatrix to_kernel_;    // edge chains -> kernel coordinates
  IntegerMatrix to_quotient_;  // kernel coordinates -> Smith coordinates
  std::vector<std::size_t> free_coords_;
  std::vector<std::pair<std::size_t, Integer>> torsion_coords_;
  AbelianInvariants invariants_;
};

AbelianInvariants h1(const CellComplex& complex);
std::vector<Integer> cycle_class(const CellComplex& complex, const EdgeCycle& z);

/// Expected H1 of N_{g,s}^n (marked points do not contribute):
/// Z^{g-1} x Z/2 when s = 0, Z^{g+s-1} otherwise.
AbelianInvariants expected_surface_h1(const SurfaceSpec& spec);

/// All side assignments for which build_polygon yields, for every g, s, n up
/// to the given bounds, a nonorientable complex with chi = 2 - g - s, the
/// expected H1 and a_g glued to a loop.
/// Enumeration order is fixed, so the first result is reproducible.
std::vector<SideAssignment> search_side_assignments(int max_genus, int max_boundary, int max_punctures);

}  // namespace nmcg
