#include "nmcg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "nmcg/cell_complex.hpp"
#include "nmcg/error.hpp"
#include "nmcg/h1_twist.hpp"
#include "nmcg/homology_rep.hpp"
#include "nmcg/presentation.hpp"
#include "nmcg/reidemeister_schreier.hpp"
#include "nmcg/smith.hpp"
#include "nmcg/surface.hpp"
#include "nmcg/tietze.hpp"

namespace nmcg::cli {

namespace {

// Opens `path`, falling back to the bundled data directory for bare names
// such as "tn3.pres". "-" yields `in`.
class Input {
 public:
  Input(const std::string& path, std::istream& in) {
    if (path == "-") {
      stream_ = &in;
      return;
    }
    std::filesystem::path p(path);
    if (!std::filesystem::exists(p) && !p.has_parent_path()) {
      const std::filesystem::path bundled = std::filesystem::path(NMCG_DATA_DIR) / p;
      if (std::filesystem::exists(bundled)) p = bundled;
    }
    file_.open(p);
    if (!file_) throw DomainError("cannot open '" + path + "'");
    stream_ = &file_;
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

struct SurfaceArgs {
  int g = 0;
  int s = 0;
  int n = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("g", g, "genus")->required();
    cmd->add_option("s", s, "boundary components")->required();
    cmd->add_option("n", n, "punctures")->required();
  }
  SurfaceSpec spec() const { return SurfaceSpec(g, s, n); }
};

std::map<std::string, long> parse_assignments(const std::vector<std::string>& items) {
  std::map<std::string, long> images;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--hom expects name=value, got '" + item + "'");
    const Integer v = parse_integer(std::string_view(item).substr(eq + 1));
    if (!v.fits_slong_p()) throw DomainError("--hom value out of range: '" + item + "'");
    if (!images.emplace(item.substr(0, eq), v.get_si()).second) {
      throw ParseError("--hom assigns '" + item.substr(0, eq) + "' twice");
    }
  }
  return images;
}

Transversal parse_transversal(const std::vector<std::string>& words, const Alphabet& alphabet) {
  Transversal t;
  for (const auto& w : words) t.representatives.push_back(w == "1" ? FreeWord{} : parse_word(w, alphabet));
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twist subgroups of mapping class groups of nonorientable surfaces", "nmcg"};
  app.require_subcommand(1);

  std::string file;
  bool certificates = false;
  bool cokernel = false;
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("matrix", file, "matrix file or -")->required();
  snf_cmd->add_flag("--certificates", certificates, "also print U and V with U A V = S");
  snf_cmd->add_flag("--cokernel", cokernel, "print the invariants of Z^cols / rowspan");

  auto* ab_cmd = app.add_subcommand("abelianize", "Abelianization of a finite presentation");
  ab_cmd->add_option("presentation", file, "presentation file or -")->required();

  std::vector<std::string> hom;
  long modulus = 0;
  bool simplify = false;
  std::vector<std::string> transversal;
  auto* rs_cmd = app.add_subcommand("rs", "Reidemeister-Schreier presentation of ker(G -> Z/m)");
  rs_cmd->add_option("presentation", file, "presentation file or -")->required();
  rs_cmd->add_option("--hom", hom, "generator image, name=value (repeatable)")->required();
  rs_cmd->add_option("--mod", modulus, "order of the cyclic quotient")->required();
  rs_cmd->add_flag("--simplify", simplify, "apply Tietze simplification");
  rs_cmd->add_option("--rep", transversal, "coset representative word, 1 for the identity (repeatable)");

  SurfaceArgs surface;
  auto* h1s_cmd = app.add_subcommand("h1-surface", "H1 of the glued polygon model");
  surface.attach(h1s_cmd);

  auto* poly_cmd = app.add_subcommand("polygon", "Side word and cell counts of the polygon model");
  surface.attach(poly_cmd);

  bool explain_flag = false;
  auto* h1t_cmd = app.add_subcommand("h1-twist", "H1 of the twist subgroup");
  surface.attach(h1t_cmd);
  h1t_cmd->add_flag("--explain", explain_flag, "list the relations used");

  std::string pres_file;
  auto* verify_cmd = app.add_subcommand("verify", "Validate a homology representation config");
  verify_cmd->add_option("config", file, "representation config or -")->required();
  surface.attach(verify_cmd);
  verify_cmd->add_option("--pres", pres_file, "presentation whose relators must act trivially");

  int punctures = 0;
  auto* idx_cmd = app.add_subcommand("indices", "Index of the twist subgroup");
  idx_cmd->add_option("n", punctures, "punctures")->required()->check(CLI::Range(0, 100000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsageError;
  }

  try {
    if (snf_cmd->parsed()) {
      Input input(file, in);
      const IntegerMatrix a = read_matrix(input.get());
      const SmithForm f = snf(a);
      if (cokernel) {
        out << to_string(invariant_factors(a, a.cols())) << '\n';
      } else {
        if (certificates) out << "# S\n";
        write_matrix(out, f.s);
        if (certificates) {
          out << "# U\n";
          write_matrix(out, f.u);
          out << "# V\n";
          write_matrix(out, f.v);
        }
      }
    } else if (ab_cmd->parsed()) {
      Input input(file, in);
      out << to_string(abelianization(read_presentation(input.get()))) << '\n';
    } else if (rs_cmd->parsed()) {
      Input input(file, in);
      const Presentation p = read_presentation(input.get());
      const auto phi = FiniteQuotientHom::from_assignments(p.alphabet, modulus, parse_assignments(hom));
      const Transversal t =
          transversal.empty() ? default_transversal(p, phi) : parse_transversal(transversal, p.alphabet);
      Presentation k = reidemeister_schreier(p, phi, t);
      for (const auto& sg : schreier_generators(p, phi, t)) {
        out << "# " << sg.name << " = " << format_word(sg.word, p.alphabet) << '\n';
      }
      if (simplify) k = tietze_simplify(k);
      write_presentation(out, k);
    } else if (h1s_cmd->parsed()) {
      const SurfaceSpec spec = surface.spec();
      const std::string group = to_string(h1(glue(build_polygon(spec))));
      out << "H1(" << spec.name() << ") = " << group << '\n';
    } else if (poly_cmd->parsed()) {
      const SurfaceSpec spec = surface.spec();
      const PolygonModel model = build_polygon(spec);
      const CellComplex cx = glue(model);
      out << format_polygon_word(model) << '\n';
      out << "V=" << cx.vertex_count() << " E=" << cx.edge_count() << " F=" << cx.face_count()
          << " chi=" << cx.euler_characteristic() << " H1=" << to_string(h1(cx)) << '\n';
    } else if (h1t_cmd->parsed()) {
      const SurfaceSpec spec = surface.spec();
      const std::string group = to_string(compute_h1(spec));
      out << "H1(T(" << spec.name() << ")) = " << group << '\n';
      if (explain_flag) out << explain(spec);
    } else if (verify_cmd->parsed()) {
      const SurfaceSpec spec = surface.spec();
      Input input(file, in);
      const HomologyRepresentation rep = load_representation(input.get(), spec);
      out << "config ok: dim " << rep.dimension() << ", " << rep.alphabet().size() << " generators\n";
      for (const auto& name : rep.alphabet().names()) {
        const int d = rep.det_hom(parse_word(name, rep.alphabet()));
        out << "D(" << name << ") = " << (d > 0 ? "+1" : "-1") << '\n';
      }
      if (!pres_file.empty()) {
        Input pres_input(pres_file, in);
        const Presentation p = read_presentation(pres_input.get());
        bool all = true;
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
          const FreeWord w = translate(p.relators[i], p.alphabet, rep.alphabet());
          const bool ok = rep.verify_relation(w, FreeWord{});
          all = all && ok;
          out << "relator " << i + 1 << ": " << (ok ? "identity" : "NOT identity") << '\n';
        }
        if (!all) {
          err << "nmcg: some relators do not act trivially on homology\n";
          return kDomainError;
        }
      }
    } else if (idx_cmd->parsed()) {
      const IndexFactors f = subgroup_indices(SurfaceSpec(3, 0, punctures));
      out << "n!=" << f.permutations.get_str() << " 2^n=" << f.orientations.get_str()
          << " 2=" << f.determinant.get_str() << " total=" << f.total.get_str() << '\n';
    }
  } catch (const DomainError& e) {
    err << "nmcg: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace nmcg::cli
