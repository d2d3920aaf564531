#include "nmcg/surface.hpp"

#include <map>
#include <sstream>

#include "nmcg/error.hpp"
#include "nmcg/word.hpp"

namespace nmcg {

SurfaceSpec::SurfaceSpec(int genus, int boundary, int punctures) : g(genus), s(boundary), n(punctures) {
  if (g < 1) throw DomainError("genus must be at least 1");
  if (s < 0 || n < 0) throw DomainError("boundary and puncture counts must be non-negative");
}

void SurfaceSpec::require_genus_at_least_three() const {
  if (g < 3) throw DomainError("genus must be at least 3, got " + std::to_string(g));
}

std::string SurfaceSpec::name() const {
  return "N_{" + std::to_string(g) + "," + std::to_string(s) + "}^" + std::to_string(n);
}

int Side::exponent() const {
  if (edges.empty()) return 0;
  const int e = edges.front().exponent;
  for (const auto& u : edges)
    if (u.exponent != e) return 0;
  return e;
}

std::size_t PolygonModel::multiplicity(std::string_view label) const {
  std::size_t count = 0;
  for (const auto& side : sides)
    if (side.label == label) ++count;
  return count;
}

std::vector<EdgeUse> PolygonModel::attaching_word() const {
  std::vector<EdgeUse> word;
  for (const auto& side : sides) word.insert(word.end(), side.edges.begin(), side.edges.end());
  return word;
}

const SideAssignment& frozen_side_assignment() {
  // First assignment produced by search_side_assignments(); see
  // tests/test_surface.cpp.
  static const SideAssignment kFrozen{
      .chain_edge = {0, 0, 1, 1},
      .chain_sign = {-1, 1, 1, 1},
      .crosscap_sign = {1, 1},
      .composite_reversed = true,
      .composite_sign = -1,
      .split_sign = {1, 1},
  };
  return kFrozen;
}

PolygonModel build_polygon(const SurfaceSpec& spec) { return build_polygon(spec, frozen_side_assignment()); }

PolygonModel build_polygon(const SurfaceSpec& spec, const SideAssignment& a) {
  const int g = spec.g;
  auto label = [](char kind, int i) { return std::string(1, kind) + "_" + std::to_string(i); };
  auto single = [](std::string lbl, std::string edge, int e) {
    return Side{std::move(lbl), {EdgeUse{std::move(edge), e}}};
  };
  auto chain_side = [&](int i, int which) {
    return single(label('a', i), label('a', i) + "." + std::to_string(a.chain_edge[which]),
                  a.chain_sign[which]);
  };
  const std::string a1 = label('a', 1);
  const std::string ag = label('a', g);

  PolygonModel model;
  auto& sides = model.sides;

  // First block.
  if (g == 1) {
    sides.push_back(single(a1, a1, a.crosscap_sign[0]));
  } else {
    Side composite{a1, {EdgeUse{a1 + ".0", a.composite_sign}, EdgeUse{a1 + ".1", a.composite_sign}}};
    if (a.composite_reversed) std::swap(composite.edges[0], composite.edges[1]);
    sides.push_back(std::move(composite));
    for (int i = 2; i < g; ++i) sides.push_back(chain_side(i, 0));
    sides.push_back(single(ag, ag, a.crosscap_sign[0]));
    for (int i = g - 1; i >= 2; --i) sides.push_back(chain_side(i, 1));
    sides.push_back(single(a1, a1 + ".0", a.split_sign[0]));
  }

  // Punctures, then holes.
  for (int j = 1; j <= spec.n; ++j) {
    sides.push_back(single(label('v', j), label('v', j), 1));
    sides.push_back(single(label('v', j), label('v', j), -1));
    model.puncture_marks.push_back(label('v', j));
  }
  for (int j = 1; j <= spec.s; ++j) {
    const std::string v = label('v', spec.n + j);
    sides.push_back(single(v, v, 1));
    sides.push_back(single(label('u', j), label('u', j), 1));
    sides.push_back(single(v, v, -1));
  }

  // Last block.
  if (g == 1) {
    sides.push_back(single(a1, a1, a.crosscap_sign[1]));
  } else {
    sides.push_back(single(a1, a1 + ".1", a.split_sign[1]));
    for (int i = 2; i < g; ++i) sides.push_back(chain_side(i, 2));
    sides.push_back(single(ag, ag, a.crosscap_sign[1]));
    for (int i = g - 1; i >= 2; --i) sides.push_back(chain_side(i, 3));
  }
  return model;
}

PolygonModel polygon_from_word(std::string_view word) {
  std::istringstream ss{std::string(word)};
  PolygonModel model;
  std::string tok;
  while (ss >> tok) {
    int e = 1;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      tok.resize(tok.size() - 3);
      e = -1;
    }
    if (!is_valid_symbol(tok)) throw ParseError("malformed polygon token '" + tok + "'");
    model.sides.push_back(Side{tok, {EdgeUse{tok, e}}});
  }
  return model;
}

std::string format_polygon_word(const PolygonModel& model) {
  std::string out;
  for (const auto& side : model.sides) {
    if (!out.empty()) out += ' ';
    out += side.label;
    const int e = side.exponent();
    if (e < 0) out += "^-1";
    if (e == 0) out += "^?";
  }
  return out;
}

bool is_orientable(const PolygonModel& model) {
  std::map<std::string, std::vector<int>> uses;
  for (const auto& u : model.attaching_word()) uses[u.edge].push_back(u.exponent);
  for (const auto& [edge, exps] : uses) {
    if (exps.size() == 2 && exps[0] == exps[1]) return false;
  }
  return true;
}

}  // namespace nmcg
