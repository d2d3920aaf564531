#include "nmcg/cell_complex.hpp"

#include <array>
#include <numeric>

#include "nmcg/error.hpp"

namespace nmcg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

CellComplex::CellComplex(std::size_t vertex_count, std::vector<CellEdge> edges,
                         std::vector<std::pair<std::size_t, int>> attaching)
    : vertex_count_(vertex_count), edges_(std::move(edges)), attaching_(std::move(attaching)) {}

long CellComplex::euler_characteristic() const {
  return static_cast<long>(vertex_count_) - static_cast<long>(edges_.size()) + static_cast<long>(face_count());
}

std::size_t CellComplex::edge_index(std::string_view name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return i;
  throw DomainError("no edge named '" + std::string(name) + "'");
}

IntegerMatrix CellComplex::boundary1() const {
  IntegerMatrix d(vertex_count_, edges_.size());
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    d(edges_[j].head, j) += 1;
    d(edges_[j].tail, j) -= 1;
  }
  return d;
}

IntegerMatrix CellComplex::boundary2() const {
  IntegerMatrix d(edges_.size(), 1);
  for (const auto& [edge, e] : attaching_) d(edge, 0) += e;
  return d;
}

CellComplex glue(const PolygonModel& model) {
  const std::vector<EdgeUse> word = model.attaching_word();
  const std::size_t corners = word.size();
  if (corners == 0) throw DomainError("polygon has no sides");

  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<std::vector<std::size_t>> uses;
  for (std::size_t k = 0; k < corners; ++k) {
    const auto& u = word[k];
    if (u.exponent != 1 && u.exponent != -1) {
      throw DomainError("edge '" + u.edge + "' has exponent " + std::to_string(u.exponent));
    }
    auto [it, fresh] = index.emplace(u.edge, names.size());
    if (fresh) {
      names.push_back(u.edge);
      uses.emplace_back();
    }
    uses[it->second].push_back(k);
  }

  // Use k runs from corner k to corner k+1, or backwards for exponent -1.
  auto tail_of = [&](std::size_t k) { return word[k].exponent > 0 ? k : (k + 1) % corners; };
  auto head_of = [&](std::size_t k) { return word[k].exponent > 0 ? (k + 1) % corners : k; };

  DisjointSets corner_sets(corners);
  for (std::size_t e = 0; e < names.size(); ++e) {
    if (uses[e].size() > 2) {
      throw DomainError("edge '" + names[e] + "' occurs " + std::to_string(uses[e].size()) +
                        " times; every edge must occur once or twice");
    }
    if (uses[e].size() == 2) {
      corner_sets.unite(tail_of(uses[e][0]), tail_of(uses[e][1]));
      corner_sets.unite(head_of(uses[e][0]), head_of(uses[e][1]));
    }
  }

  std::map<std::size_t, std::size_t> vertex_of_root;
  for (std::size_t k = 0; k < corners; ++k) vertex_of_root.emplace(corner_sets.find(k), vertex_of_root.size());
  auto vertex = [&](std::size_t corner) { return vertex_of_root.at(corner_sets.find(corner)); };

  std::vector<CellEdge> edges;
  for (std::size_t e = 0; e < names.size(); ++e) {
    const std::size_t k = uses[e].front();
    edges.push_back(CellEdge{names[e], vertex(tail_of(k)), vertex(head_of(k)), uses[e].size() == 1});
  }
  std::vector<std::pair<std::size_t, int>> attaching;
  for (const auto& u : word) attaching.emplace_back(index.at(u.edge), u.exponent);
  return CellComplex(vertex_of_root.size(), std::move(edges), std::move(attaching));
}

CellularHomology::CellularHomology(const CellComplex& complex) : boundary1_(complex.boundary1()) {
  for (std::size_t j = 0; j < complex.edge_count(); ++j) edge_index_.emplace(complex.edges()[j].name, j);

  const SmithForm f1 = snf(boundary1_);
  const std::size_t r1 = f1.rank();
  const std::size_t edges = complex.edge_count();
  const std::size_t k = edges - r1;
  const IntegerMatrix v1_inverse = inverse_unimodular(f1.v);
  to_kernel_ = IntegerMatrix(k, edges);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < edges; ++j) to_kernel_(i, j) = v1_inverse(r1 + i, j);

  const IntegerMatrix relations = (to_kernel_ * complex.boundary2()).transposed();
  const SmithForm f2 = snf(relations);
  const std::size_t r2 = f2.rank();
  to_quotient_ = f2.v.transposed();
  for (std::size_t i = 0; i < k; ++i) {
    const Integer d = i < r2 ? f2.s(i, i) : Integer(0);
    if (d == 0) {
      free_coords_.push_back(i);
    } else if (d != 1) {
      torsion_coords_.emplace_back(i, d);
      invariants_.torsion.push_back(d);
    }
  }
  invariants_.free_rank = free_coords_.size();
}

std::vector<Integer> CellularHomology::coordinates(const EdgeCycle& z) const {
  std::vector<Integer> chain(boundary1_.cols());
  for (const auto& [name, c] : z) {
    const auto it = edge_index_.find(name);
    if (it == edge_index_.end()) throw DomainError("no edge named '" + name + "'");
    chain[it->second] = c;
  }
  for (const auto& x : boundary1_ * chain)
    if (x != 0) throw DomainError("chain is not a cycle");
  const auto smith = to_quotient_ * (to_kernel_ * chain);
  std::vector<Integer> coords;
  for (std::size_t i : free_coords_) coords.push_back(smith[i]);
  for (const auto& [i, d] : torsion_coords_) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), smith[i].get_mpz_t(), d.get_mpz_t());
    coords.push_back(r);
  }
  return coords;
}

AbelianInvariants h1(const CellComplex& complex) { return CellularHomology(complex).invariants(); }

std::vector<Integer> cycle_class(const CellComplex& complex, const EdgeCycle& z) {
  return CellularHomology(complex).coordinates(z);
}

AbelianInvariants expected_surface_h1(const SurfaceSpec& spec) {
  if (spec.s == 0) return AbelianInvariants{static_cast<std::size_t>(spec.g - 1), {Integer(2)}};
  return AbelianInvariants{static_cast<std::size_t>(spec.g + spec.s - 1), {}};
}

namespace {

bool assignment_valid(const SideAssignment& a, int max_genus, int max_boundary, int max_punctures) {
  for (int g = 1; g <= max_genus; ++g) {
    for (int s = 0; s <= max_boundary; ++s) {
      for (int n = 0; n <= max_punctures; ++n) {
        const SurfaceSpec spec(g, s, n);
        const PolygonModel model = build_polygon(spec, a);
        if (is_orientable(model)) return false;
        const CellComplex complex = glue(model);
        if (complex.euler_characteristic() != 2 - g - s) return false;
        const CellEdge& crosscap = complex.edges()[complex.edge_index("a_" + std::to_string(g))];
        if (crosscap.tail != crosscap.head) return false;
        if (h1(complex) != expected_surface_h1(spec)) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<SideAssignment> search_side_assignments(int max_genus, int max_boundary, int max_punctures) {
  static constexpr std::array<std::array<int, 4>, 3> kPairings{{{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}}};
  auto sign = [](unsigned bits, unsigned i) { return (bits >> i) & 1U ? -1 : 1; };
  std::vector<SideAssignment> found;
  for (const auto& pairing : kPairings) {
    for (unsigned chain = 0; chain < 16; ++chain) {
      for (unsigned crosscap = 0; crosscap < 4; ++crosscap) {
        for (unsigned a1 = 0; a1 < 16; ++a1) {
          SideAssignment a;
          a.chain_edge = pairing;
          a.chain_sign = {sign(chain, 0), sign(chain, 1), sign(chain, 2), sign(chain, 3)};
          a.crosscap_sign = {sign(crosscap, 0), sign(crosscap, 1)};
          a.composite_reversed = (a1 & 1U) != 0;
          a.composite_sign = sign(a1, 1);
          a.split_sign = {sign(a1, 2), sign(a1, 3)};
          if (assignment_valid(a, max_genus, max_boundary, max_punctures)) found.push_back(a);
        }
      }
    }
  }
  return found;
}

}  // namespace nmcg
