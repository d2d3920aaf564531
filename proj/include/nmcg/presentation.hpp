#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nmcg/integer_matrix.hpp"
#include "nmcg/smith.hpp"
#include "nmcg/word.hpp"

namespace nmcg {

/// Finitely presented group <alphabet | relators>.
struct Presentation {
  Alphabet alphabet;
  std::vector<FreeWord> relators;

  // Throws DomainError if a relator mentions a generator outside the alphabet.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Text format:
//   # comment
//   gens: a_1 a_2 y
//   rel: a_1 a_2 a_1 a_2^-1 a_1^-1 a_2^-1
Presentation read_presentation(std::istream& in);
Presentation parse_presentation(const std::string& text);
void write_presentation(std::ostream& out, const Presentation& p);
std::string to_string(const Presentation& p);

/// Exponent-sum matrix: one row per relator, one column per generator.
IntegerMatrix relation_matrix(const Presentation& p);

AbelianInvariants abelianization(const Presentation& p);

}  // namespace nmcg
