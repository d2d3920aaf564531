#include "nmcg/h1_twist.hpp"

#include <sstream>

namespace nmcg {

namespace {

class LedgerBuilder {
 public:
  explicit LedgerBuilder(const SurfaceSpec& spec) {
    spec.require_genus_at_least_three();
    ledger_.spec = spec;
    auto& sym = ledger_.symbols;
    sym.push_back({H1Symbol::Kind::A, 0});
    if (spec.even()) sym.push_back({H1Symbol::Kind::B, 0});
    sym.push_back({H1Symbol::Kind::XI, 0});
    for (int j = 1; j <= spec.s; ++j) sym.push_back({H1Symbol::Kind::U, j});
  }

  std::size_t a() const { return 0; }
  std::size_t b() const { return 1; }
  std::size_t xi() const { return ledger_.spec.even() ? 2 : 1; }
  std::size_t u(int j) const { return xi() + static_cast<std::size_t>(j); }

  std::vector<Integer> zero() const { return std::vector<Integer>(ledger_.symbols.size(), 0); }

  void add(std::vector<Integer> v, std::string source) {
    ledger_.relations.push_back(LedgerRelation{std::move(v), std::move(source)});
  }
  void add_multiple(std::size_t symbol, long k, std::string source) {
    auto v = zero();
    v[symbol] = k;
    add(std::move(v), std::move(source));
  }
  std::vector<Integer> boundary_sum() const {
    auto v = zero();
    for (int j = 1; j <= ledger_.spec.s; ++j) v[u(j)] = 1;
    return v;
  }

  RelationLedger take() && { return std::move(ledger_); }

 private:
  RelationLedger ledger_;
};

}  // namespace

std::string H1Symbol::str() const {
  switch (kind) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::XI: return "XI";
    case Kind::U: return "U_" + std::to_string(index);
  }
  return {};
}

IntegerMatrix RelationLedger::matrix() const {
  IntegerMatrix m(relations.size(), symbols.size());
  for (std::size_t i = 0; i < relations.size(); ++i) {
    for (std::size_t j = 0; j < symbols.size(); ++j) m(i, j) = relations[i].coefficients[j];
  }
  return m;
}

RelationLedger build_ledger(const SurfaceSpec& spec) {
  LedgerBuilder lb(spec);
  const int g = spec.g;
  const int s = spec.s;

  if (g >= 7) lb.add_multiple(lb.a(), 1, "a_1 twist vanishes for g >= 7");
  if (g >= 6 && spec.even()) lb.add_multiple(lb.b(), 1, "b_{r+1} twist vanishes for even g >= 6");
  if (g >= 5) {
    for (int j = 1; j <= s; ++j) lb.add_multiple(lb.u(j), 1, "boundary twists are trivial for g >= 5");
  }
  if (g >= 4) lb.add_multiple(lb.xi(), 1, "[y^2] = [t_xi] = 0 via a one-holed Klein bottle, g >= 4");
  if (g == 4 && s >= 1) lb.add(lb.boundary_sum(), "sum of boundary twists vanishes for g = 4");
  if (g == 3) {
    auto v = lb.zero();
    v[lb.xi()] = 1;
    v[lb.a()] = -12;
    lb.add(std::move(v), "star relation (t_{a_1} t_{a_2})^6 = t_xi");
    if (s >= 1) {
      auto w = lb.boundary_sum();
      w[lb.xi()] = -1;
      lb.add(std::move(w), "[t_xi] = [t_{u_1}] + ... + [t_{u_s}] for g = 3");
    }
  }
  if (g >= 4) lb.add_multiple(lb.a(), 2, "[t_{a_1}^2] = 0 for g >= 4");
  for (int j = 1; j <= s; ++j) lb.add_multiple(lb.u(j), 2, "boundary twist squares vanish, 2[t_{u_j}] = 0");
  if (g == 3 && s == 0) lb.add_multiple(lb.a(), 12, "12[t_{a_1}] = [t_xi] = 0 for closed g = 3");
  if (g == 3) lb.add_multiple(lb.a(), 24, "24[t_{a_1}] = 0 for g = 3");
  return std::move(lb).take();
}

AbelianInvariants compute_h1(const SurfaceSpec& spec) {
  const RelationLedger ledger = build_ledger(spec);
  return invariant_factors(ledger.matrix(), ledger.symbols.size());
}

std::string format_relation(const std::vector<H1Symbol>& symbols, const std::vector<Integer>& coefficients) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const Integer& c = coefficients[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str();
    out += symbols[i].str();
  }
  return out.empty() ? "0" : out;
}

std::string explain(const SurfaceSpec& spec) {
  const RelationLedger ledger = build_ledger(spec);
  std::ostringstream out;
  out << "generators:";
  for (const auto& s : ledger.symbols) out << ' ' << s.str();
  out << '\n';
  for (const auto& r : ledger.relations) {
    out << "  " << format_relation(ledger.symbols, r.coefficients) << " = 0  [" << r.source << "]\n";
  }
  out << "result: " << to_string(invariant_factors(ledger.matrix(), ledger.symbols.size())) << '\n';
  return out.str();
}

}  // namespace nmcg
