#include "nmcg/presentation.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "nmcg/error.hpp"

namespace nmcg {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

void Presentation::validate() const {
  for (const auto& r : relators) {
    for (const auto& l : r.letters()) {
      if (l.generator >= alphabet.size()) {
        throw DomainError("relator refers to generator #" + std::to_string(l.generator) +
                          " outside an alphabet of size " + std::to_string(alphabet.size()));
      }
    }
  }
}

Presentation read_presentation(std::istream& in) {
  Presentation p;
  bool have_gens = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    const std::string key = colon == std::string::npos ? line : line.substr(0, colon);
    const std::string body = colon == std::string::npos ? std::string() : line.substr(colon + 1);
    const std::string where = "presentation line " + std::to_string(line_no) + ": ";
    if (colon == std::string::npos) throw ParseError(where + "expected 'gens:' or 'rel:'");
    try {
      if (key == "gens") {
        if (have_gens) throw ParseError("duplicate 'gens:' line");
        std::istringstream ss(body);
        std::string name;
        while (ss >> name) p.alphabet.add(name);
        have_gens = true;
      } else if (key == "rel") {
        if (!have_gens) throw ParseError("'rel:' before 'gens:'");
        p.relators.push_back(parse_word(body, p.alphabet));
      } else {
        throw ParseError("unknown field '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  if (!have_gens) throw ParseError("presentation: missing 'gens:' line");
  return p;
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream ss(text);
  return read_presentation(ss);
}

void write_presentation(std::ostream& out, const Presentation& p) {
  out << "gens:";
  for (const auto& n : p.alphabet.names()) out << ' ' << n;
  out << '\n';
  for (const auto& r : p.relators) {
    out << "rel:";
    if (!r.empty()) out << ' ' << format_word(r, p.alphabet);
    out << '\n';
  }
}

std::string to_string(const Presentation& p) {
  std::ostringstream ss;
  write_presentation(ss, p);
  return ss.str();
}

IntegerMatrix relation_matrix(const Presentation& p) {
  const std::size_t n = p.alphabet.size();
  IntegerMatrix m(p.relators.size(), n);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const auto sums = p.relators[i].exponent_sums(n);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = sums[j];
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  return invariant_factors(relation_matrix(p), p.alphabet.size());
}

}  // namespace nmcg
