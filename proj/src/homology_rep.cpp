#include "nmcg/homology_rep.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <set>
#include <sstream>

#include "nmcg/cell_complex.hpp"
#include "nmcg/error.hpp"

namespace nmcg {

namespace {

struct KindName {
  CurveKind kind;
  std::string_view text;
  bool indexed;
};

constexpr std::array<KindName, 10> kKinds{{
    {CurveKind::a, "a", true},
    {CurveKind::b, "b", true},
    {CurveKind::c, "c", true},
    {CurveKind::e, "e", true},
    {CurveKind::u, "u", true},
    {CurveKind::f, "f", true},
    {CurveKind::psi, "psi", false},
    {CurveKind::lambda, "lambda", false},
    {CurveKind::xi, "xi", false},
    {CurveKind::y, "y", false},
}};

const KindName& kind_info(CurveKind kind) {
  return *std::find_if(kKinds.begin(), kKinds.end(), [kind](const KindName& k) { return k.kind == kind; });
}

void append_family(std::vector<GeneratorName>& out, CurveKind kind, int first, int last) {
  for (int i = first; i <= last; ++i) out.push_back(GeneratorName{kind, i});
}

// Largest admissible index of an indexed kind on the given surface.
int max_index(CurveKind kind, const SurfaceSpec& spec) {
  switch (kind) {
    case CurveKind::a: return spec.g;
    case CurveKind::b: return spec.even() ? spec.r() + 1 : spec.r();
    case CurveKind::c: return spec.r();
    case CurveKind::e:
    case CurveKind::f: return spec.n + spec.s - 1;
    case CurveKind::u: return spec.s;
    default: return 0;
  }
}

std::string dimension_mismatch(std::size_t got, std::size_t want) {
  return "vector of length " + std::to_string(got) + " in dimension " + std::to_string(want);
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Line-oriented reader for representation configs.
class ConfigReader {
 public:
  ConfigReader(std::istream& in, const SurfaceSpec& spec) : in_(in), spec_(spec) {}

  struct Entry {
    GeneratorName name;
    IntegerMatrix matrix;
    std::optional<CurveDatum> curve;
  };

  std::size_t dimension = 0;
  std::vector<Entry> entries;

  void run() {
    std::string line;
    bool have_dim = false;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream ss(line);
      tokens_.clear();
      pos_ = 0;
      for (std::string t; ss >> t;) tokens_.push_back(t);
      if (tokens_.empty()) continue;
      if (!have_dim) {
        expect("dim:");
        const Integer k = next_integer();
        if (k < 1 || !k.fits_ulong_p()) fail("dimension must be positive");
        dimension = k.get_ui();
        have_dim = true;
      } else if (tokens_[0] == "curve") {
        ++pos_;
        read_curve();
      } else if (tokens_[0] == "matrix") {
        ++pos_;
        read_matrix_block();
      } else {
        fail("unknown field '" + tokens_[0] + "'");
      }
      if (pos_ != tokens_.size()) fail("unexpected token '" + tokens_[pos_] + "'");
    }
    if (!have_dim) throw ParseError("representation config: missing 'dim:' header");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("representation config line " + std::to_string(line_no_) + ": " + what);
  }

  const std::string& next() {
    if (pos_ >= tokens_.size()) fail("unexpected end of line");
    return tokens_[pos_++];
  }
  void expect(std::string_view key) {
    const std::string& t = next();
    if (t != key) fail("expected '" + std::string(key) + "', got '" + t + "'");
  }
  Integer next_integer() {
    const std::string& t = next();
    try {
      return parse_integer(t);
    } catch (const ParseError&) {
      fail("expected an integer, got '" + t + "'");
    }
  }
  std::vector<Integer> next_vector(std::size_t k) {
    std::vector<Integer> v;
    v.reserve(k);
    for (std::size_t i = 0; i < k; ++i) v.push_back(next_integer());
    return v;
  }

  GeneratorName read_name(std::string_view text) {
    GeneratorName name;
    try {
      name = GeneratorName::parse(text);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    if (name.indexed() && name.index > max_index(name.kind, spec_)) {
      fail("generator " + name.str() + " does not exist on " + spec_.name());
    }
    if (!seen_.insert(name).second) fail("duplicate generator " + name.str());
    return name;
  }

  void read_curve() {
    CurveDatum c;
    c.name = read_name(next());
    if (!c.name.is_twist()) fail("y is not a twist; give it as a matrix block");
    expect("class:");
    c.klass = next_vector(dimension);
    expect("functional:");
    c.functional = next_vector(dimension);
    expect("sign:");
    const std::string& sign = next();
    if (sign == "+1") {
      c.sign = 1;
    } else if (sign == "-1") {
      c.sign = -1;
    } else {
      fail("sign must be +1 or -1");
    }
    expect("flags:");
    c.two_sided = false;
    std::istringstream flags(next());
    for (std::string flag; std::getline(flags, flag, ',');) {
      if (flag == "two_sided") {
        c.two_sided = true;
      } else if (flag == "separating") {
        c.separating = true;
      } else {
        fail("unknown flag '" + flag + "'");
      }
    }
    if (!c.two_sided) fail("twist about " + c.name.str() + " needs a two-sided curve");
    if (c.separating && std::any_of(c.functional.begin(), c.functional.end(),
                                    [](const Integer& x) { return x != 0; })) {
      fail("separating curve " + c.name.str() + " has a nonzero intersection functional");
    }
    IntegerMatrix m;
    try {
      m = twist_matrix(c, c.sign, dimension);
    } catch (const DomainError& e) {
      fail(e.what());
    }
    check_det(c.name, m);
    entries.push_back(Entry{c.name, std::move(m), std::move(c)});
  }

  void read_matrix_block() {
    std::string head = next();
    if (!head.ends_with(':')) fail("expected 'matrix <name>:'");
    head.pop_back();
    const GeneratorName name = read_name(head);
    IntegerMatrix m(dimension, dimension, next_vector(dimension * dimension));
    check_det(name, m);
    entries.push_back(Entry{name, std::move(m), std::nullopt});
  }

  void check_det(const GeneratorName& name, const IntegerMatrix& m) {
    const Integer d = det(m);
    const int want = name.is_twist() ? 1 : -1;
    if (d != want) {
      fail("determinant of " + name.str() + " is " + d.get_str() + ", expected " + std::to_string(want));
    }
  }

  std::istream& in_;
  const SurfaceSpec& spec_;
  std::size_t line_no_ = 0;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  std::set<GeneratorName> seen_;
};

}  // namespace

bool GeneratorName::indexed() const { return kind_info(kind).indexed; }

std::string GeneratorName::str() const {
  const KindName& k = kind_info(kind);
  std::string out(k.text);
  if (k.indexed) out += "_" + std::to_string(index);
  return out;
}

GeneratorName GeneratorName::parse(std::string_view text) {
  for (const KindName& k : kKinds) {
    if (!k.indexed) {
      if (text == k.text) return GeneratorName{k.kind, 0};
      continue;
    }
    if (text.size() < 3 || text.substr(0, 2) != std::string(k.text) + "_") continue;
    const std::string_view digits = text.substr(2);
    if (digits.front() == '0' ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 6) {
      break;
    }
    return GeneratorName{k.kind, std::stoi(std::string(digits))};
  }
  throw ParseError("unknown generator name '" + std::string(text) + "'");
}

std::vector<GeneratorName> curve_catalog(const SurfaceSpec& spec) {
  spec.require_genus_at_least_three();
  std::vector<GeneratorName> out;
  append_family(out, CurveKind::a, 2, spec.g - 1);
  append_family(out, CurveKind::b, 1, max_index(CurveKind::b, spec));
  append_family(out, CurveKind::c, 1, spec.r());
  append_family(out, CurveKind::e, 1, spec.n + spec.s - 1);
  append_family(out, CurveKind::u, 1, spec.s);
  return out;
}

std::vector<GeneratorName> pure_generators(const SurfaceSpec& spec) {
  auto out = curve_catalog(spec);
  out.push_back(GeneratorName{CurveKind::y, 0});
  return out;
}

std::vector<GeneratorName> twist_generators(const SurfaceSpec& spec) {
  auto out = curve_catalog(spec);
  if (spec.g == 3) {
    append_family(out, CurveKind::f, 1, spec.n + spec.s - 1);
  } else {
    if (spec.even()) out.push_back(GeneratorName{CurveKind::lambda, 0});
    out.push_back(GeneratorName{CurveKind::psi, 0});
  }
  out.push_back(GeneratorName{CurveKind::xi, 0});
  return out;
}

IndexFactors subgroup_indices(const SurfaceSpec& spec) {
  spec.require_genus_at_least_three();
  IndexFactors f;
  mpz_fac_ui(f.permutations.get_mpz_t(), static_cast<unsigned long>(spec.n));
  mpz_ui_pow_ui(f.orientations.get_mpz_t(), 2, static_cast<unsigned long>(spec.n));
  f.determinant = 2;
  f.total = f.permutations * f.orientations * f.determinant;
  return f;
}

IntegerMatrix twist_matrix(const CurveDatum& c, int sign, std::size_t dimension) {
  if (c.klass.size() != dimension) throw DimensionError(dimension_mismatch(c.klass.size(), dimension));
  if (c.functional.size() != dimension) {
    throw DimensionError(dimension_mismatch(c.functional.size(), dimension));
  }
  if (!c.two_sided) throw DomainError("twist about a one-sided curve " + c.name.str());
  if (sign != 1 && sign != -1) throw DomainError("twist sign must be +1 or -1");
  if (dot(c.functional, c.klass) != 0) {
    throw DomainError("curve " + c.name.str() + " has nonzero algebraic self-intersection");
  }
  IntegerMatrix m = IntegerMatrix::identity(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    for (std::size_t j = 0; j < dimension; ++j) m(i, j) += sign * c.klass[i] * c.functional[j];
  }
  return m;
}

const IntegerMatrix& HomologyRepresentation::matrix(std::string_view name) const {
  return matrices_[alphabet_.index_of(name)];
}

const std::optional<CurveDatum>& HomologyRepresentation::curve(std::string_view name) const {
  return curves_[alphabet_.index_of(name)];
}

IntegerMatrix HomologyRepresentation::evaluate(const FreeWord& w) const {
  IntegerMatrix m = IntegerMatrix::identity(dimension_);
  for (const Letter& l : w.letters()) {
    if (l.generator >= matrices_.size()) throw DomainError("word uses a generator outside the representation");
    m = m * (l.exponent > 0 ? matrices_[l.generator] : inverses_[l.generator]);
  }
  return m;
}

int HomologyRepresentation::det_hom(const FreeWord& w) const {
  int d = 1;
  for (const Letter& l : w.letters()) {
    if (l.generator >= determinants_.size()) {
      throw DomainError("word uses a generator outside the representation");
    }
    d *= determinants_[l.generator];  // det(M^-1) = det(M) when det(M) = +-1
  }
  return d;
}

bool HomologyRepresentation::verify_relation(const FreeWord& lhs, const FreeWord& rhs) const {
  return evaluate(lhs) == evaluate(rhs);
}

void HomologyRepresentation::add(const GeneratorName& name, IntegerMatrix m, std::optional<CurveDatum> curve) {
  alphabet_.add(name.str());
  determinants_.push_back(det(m) > 0 ? 1 : -1);
  inverses_.push_back(inverse_unimodular(m));
  matrices_.push_back(std::move(m));
  curves_.push_back(std::move(curve));
}

HomologyRepresentation HomologyRepresentation::load(std::istream& in, const SurfaceSpec& spec) {
  spec.require_genus_at_least_three();
  ConfigReader reader(in, spec);
  reader.run();

  const std::size_t rank = expected_surface_h1(spec).free_rank;
  if (reader.dimension != rank) {
    throw DomainError("representation config: dim " + std::to_string(reader.dimension) +
                      " differs from the free rank " + std::to_string(rank) + " of H1(" + spec.name() + ")");
  }
  std::set<GeneratorName> present;
  for (const auto& e : reader.entries) present.insert(e.name);
  for (const auto& list : {pure_generators(spec), twist_generators(spec)}) {
    for (const auto& name : list) {
      if (!present.contains(name)) {
        throw DomainError("representation config: missing generator " + name.str() + " for " + spec.name());
      }
    }
  }

  HomologyRepresentation rep;
  rep.dimension_ = reader.dimension;
  for (auto& e : reader.entries) rep.add(e.name, std::move(e.matrix), std::move(e.curve));
  return rep;
}

HomologyRepresentation load_representation(std::istream& in, const SurfaceSpec& spec) {
  return HomologyRepresentation::load(in, spec);
}

IntegerMatrix evaluate(const HomologyRepresentation& rep, const FreeWord& w) { return rep.evaluate(w); }

int det_hom(const HomologyRepresentation& rep, const FreeWord& w) { return rep.det_hom(w); }

bool verify_relation(const HomologyRepresentation& rep, const FreeWord& lhs, const FreeWord& rhs) {
  return rep.verify_relation(lhs, rhs);
}

}  // namespace nmcg
