#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <sstream>

#include "nmcg/cell_complex.hpp"
#include "nmcg/error.hpp"
#include "nmcg/h1_twist.hpp"
#include "nmcg/homology_rep.hpp"
#include "nmcg/presentation.hpp"
#include "nmcg/reidemeister_schreier.hpp"
#include "nmcg/smith.hpp"
#include "nmcg/surface.hpp"
#include "nmcg/tietze.hpp"

namespace py = pybind11;
using namespace nmcg;

namespace {

// Python ints are arbitrary precision; pass them through decimal strings.
Integer to_integer(const py::int_& x) { return Integer(py::str(x).cast<std::string>(), 10); }

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

using Rows = std::vector<std::vector<py::int_>>;

IntegerMatrix to_matrix(const Rows& rows, std::optional<std::size_t> cols) {
  const std::size_t c = cols ? *cols : (rows.empty() ? 0 : rows.front().size());
  IntegerMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionError("rows of unequal length");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = to_integer(rows[i][j]);
  }
  return m;
}

py::list to_rows(const IntegerMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::dict invariants_dict(const AbelianInvariants& g) {
  py::dict d;
  py::list torsion;
  for (const auto& t : g.torsion) torsion.append(to_py(t));
  d["free_rank"] = g.free_rank;
  d["torsion"] = torsion;
  d["text"] = to_string(g);
  return d;
}

}  // namespace

PYBIND11_MODULE(_nmcg, m) {
  m.doc() = "Exact invariants of twist subgroups of nonorientable mapping class groups";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def(
      "smith_normal_form",
      [](const Rows& rows, std::optional<std::size_t> cols) {
        const SmithForm f = snf(to_matrix(rows, cols));
        return py::make_tuple(to_rows(f.s), to_rows(f.u), to_rows(f.v));
      },
      py::arg("rows"), py::arg("cols") = py::none(),
      "Returns (S, U, V) with U A V = S. Pass cols for a matrix without rows.");

  m.def(
      "invariant_factors",
      [](const Rows& rows, std::size_t ambient_rank) {
        return invariants_dict(invariant_factors(to_matrix(rows, ambient_rank), ambient_rank));
      },
      py::arg("rows"), py::arg("ambient_rank"), "Invariants of Z^ambient_rank / rowspan(rows).");

  m.def(
      "abelianize", [](const std::string& text) { return invariants_dict(abelianization(parse_presentation(text))); },
      py::arg("presentation"));

  m.def(
      "reidemeister_schreier",
      [](const std::string& text, const std::map<std::string, long>& hom, long modulus, bool simplify) {
        const Presentation p = parse_presentation(text);
        const auto phi = FiniteQuotientHom::from_assignments(p.alphabet, modulus, hom);
        Presentation k = reidemeister_schreier(p, phi, default_transversal(p, phi));
        if (simplify) k = tietze_simplify(k);
        return to_string(k);
      },
      py::arg("presentation"), py::arg("hom"), py::arg("modulus"), py::arg("simplify") = false,
      "Presentation text of the kernel of the map onto Z/modulus.");

  m.def(
      "simplify", [](const std::string& text) { return to_string(tietze_simplify(parse_presentation(text))); },
      py::arg("presentation"));

  m.def(
      "surface_h1", [](int g, int s, int n) { return invariants_dict(h1(glue(build_polygon(SurfaceSpec(g, s, n))))); },
      py::arg("g"), py::arg("s"), py::arg("n"));

  m.def(
      "polygon_word", [](int g, int s, int n) { return format_polygon_word(build_polygon(SurfaceSpec(g, s, n))); },
      py::arg("g"), py::arg("s"), py::arg("n"));

  m.def(
      "twist_h1", [](int g, int s, int n) { return invariants_dict(compute_h1(SurfaceSpec(g, s, n))); },
      py::arg("g"), py::arg("s"), py::arg("n"));

  m.def(
      "explain", [](int g, int s, int n) { return explain(SurfaceSpec(g, s, n)); }, py::arg("g"), py::arg("s"),
      py::arg("n"));

  m.def(
      "twist_generators",
      [](int g, int s, int n) {
        std::vector<std::string> names;
        for (const auto& x : twist_generators(SurfaceSpec(g, s, n))) names.push_back(x.str());
        return names;
      },
      py::arg("g"), py::arg("s"), py::arg("n"));

  m.def(
      "subgroup_indices",
      [](int n) {
        const IndexFactors f = subgroup_indices(SurfaceSpec(3, 0, n));
        return py::make_tuple(to_py(f.permutations), to_py(f.orientations), to_py(f.determinant), to_py(f.total));
      },
      py::arg("n"), "(n!, 2^n, 2, product)");

  m.def(
      "verify_representation",
      [](const std::string& config, int g, int s, int n, std::optional<std::string> presentation) {
        std::istringstream in(config);
        const HomologyRepresentation rep = load_representation(in, SurfaceSpec(g, s, n));
        py::dict det;
        for (const auto& name : rep.alphabet().names()) det[py::str(name)] = rep.det_hom(parse_word(name, rep.alphabet()));
        py::dict out;
        out["dimension"] = rep.dimension();
        out["det"] = det;
        if (presentation) {
          const Presentation p = parse_presentation(*presentation);
          py::list ok;
          for (const auto& r : p.relators) {
            ok.append(rep.verify_relation(translate(r, p.alphabet, rep.alphabet()), FreeWord{}));
          }
          out["relators"] = ok;
        }
        return out;
      },
      py::arg("config"), py::arg("g"), py::arg("s"), py::arg("n"), py::arg("presentation") = py::none(),
      "Loads and validates a representation config; reports D of each generator and, given a presentation, "
      "whether each relator acts trivially.");
}
