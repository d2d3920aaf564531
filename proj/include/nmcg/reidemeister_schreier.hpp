#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nmcg/presentation.hpp"
#include "nmcg/word.hpp"

namespace nmcg {

/// Homomorphism from a free group onto the cyclic group Z/m, given by the
/// images of the generators. Whether it factors through a presentation is
/// checked by check_hom, never assumed.
class FiniteQuotientHom {
 public:
  FiniteQuotientHom(long modulus, std::vector<long> images);

  // Generators not mentioned map to 0. Throws ParseError on unknown names.
  static FiniteQuotientHom from_assignments(const Alphabet& alphabet, long modulus,
                                            const std::map<std::string, long>& images);

  long modulus() const { return modulus_; }
  long image(std::size_t generator) const { return images_.at(generator); }
  const std::vector<long>& images() const { return images_; }
  long image(const FreeWord& w) const;
  bool is_surjective() const;

 private:
  long modulus_;
  std::vector<long> images_;
};

/// True iff every relator maps to 0 in Z/m.
bool check_hom(const Presentation& p, const FiniteQuotientHom& phi);

/// One word per coset; representatives[c] maps to c, representatives[0] is
/// the empty word.
struct Transversal {
  std::vector<FreeWord> representatives;
};

// Throws DomainError unless t is a transversal for ker phi.
void validate_transversal(const Transversal& t, const FiniteQuotientHom& phi);

/// Powers of the first generator whose image is a unit mod m. For m = 2 and
/// a single odd generator y this is {1, y}.
Transversal default_transversal(const Presentation& p, const FiniteQuotientHom& phi);

/// Subgroup generator u x (rep of ux)^-1 for a pair (u, x) with ux not in U.
struct SchreierGenerator {
  std::size_t coset;      // label of u
  std::size_t generator;  // x
  FreeWord word;          // u x (rep of ux)^-1 over the original alphabet
  std::string name;
};

std::vector<SchreierGenerator> schreier_generators(const Presentation& p,
                                                   const FiniteQuotientHom& phi,
                                                   const Transversal& t);

/// Presentation of ker phi on the Schreier generators. Relators are the
/// rewrites of u r u^-1 for every representative u and relator r, plus the
/// rewrites of the representatives themselves (empty for Schreier
/// transversals). No simplification is applied.
Presentation reidemeister_schreier(const Presentation& p, const FiniteQuotientHom& phi,
                                   const Transversal& t);

}  // namespace nmcg
