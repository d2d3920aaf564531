#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nmcg {

/// Nonorientable surface N_{g,s}^n: genus g, s boundary components, n
/// punctures (treated as marked points).
struct SurfaceSpec {
  int g = 3;
  int s = 0;
  int n = 0;

  SurfaceSpec() = default;
  SurfaceSpec(int genus, int boundary, int punctures);

  // g = 2r + 1 (odd) or g = 2r + 2 (even).
  int r() const { return (g - 1) / 2; }
  bool even() const { return g % 2 == 0; }
  // Throws DomainError when g < 3.
  void require_genus_at_least_three() const;

  std::string name() const;  // "N_{g,s}^n"

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// An edge traversed by the polygon boundary, with exponent +1 or -1.
struct EdgeUse {
  std::string edge;
  int exponent = 1;

  friend bool operator==(const EdgeUse&, const EdgeUse&) = default;
};

/// A side of the polygon. Its label names the circle or arc it came from;
/// a side may run along several edges of the glued complex.
struct Side {
  std::string label;
  std::vector<EdgeUse> edges;

  // Common exponent of the edges, or 0 if they disagree.
  int exponent() const;
};

/// Cut polygon of a surface: boundary sides in cyclic order.
struct PolygonModel {
  std::vector<Side> sides;
  std::vector<std::string> puncture_marks;

  std::size_t multiplicity(std::string_view label) const;
  std::vector<EdgeUse> attaching_word() const;
};

/// Which glued edge, and with which exponent, each side of the genus chain
/// runs along. Sides of a_i (2 <= i < g) are indexed 0..3 as: first block
/// ascending, first block descending, last block ascending, last block
/// descending. a_1 is cut into two edges a_1.0 and a_1.1; one side runs
/// along both of them, the other two sides are a_1.0 (closing the first
/// block) and a_1.1 (opening the last block), with the puncture and hole
/// fan between them.
struct SideAssignment {
  std::array<int, 4> chain_edge{};
  std::array<int, 4> chain_sign{};
  std::array<int, 2> crosscap_sign{};
  bool composite_reversed = false;
  int composite_sign = 1;
  std::array<int, 2> split_sign{};

  friend bool operator==(const SideAssignment&, const SideAssignment&) = default;
};

/// The shipped assignment, found by search_side_assignments() and checked
/// against it in the test suite.
const SideAssignment& frozen_side_assignment();

/// Polygon with sides a_1..a_{g-1} a_g a_{g-1}..a_1, then v_i v_i for each
/// puncture and v u v for each hole, then a_1..a_g..a_2.
PolygonModel build_polygon(const SurfaceSpec& spec);
PolygonModel build_polygon(const SurfaceSpec& spec, const SideAssignment& assignment);

/// Polygon whose sides are single edges, from tokens "x" or "x^-1".
PolygonModel polygon_from_word(std::string_view word);

/// Token line "label" / "label^-1"; a side whose edges disagree in sign is
/// written "label^?".
std::string format_polygon_word(const PolygonModel& model);

/// True iff every edge that occurs twice occurs with opposite exponents.
bool is_orientable(const PolygonModel& model);

}  // namespace nmcg
