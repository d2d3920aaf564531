#include "nmcg/reidemeister_schreier.hpp"

#include <numeric>
#include <optional>
#include <utility>

#include "nmcg/error.hpp"

namespace nmcg {

namespace {

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

// Multiplicative inverse of a mod m, assuming gcd(a, m) == 1.
long inverse_mod(long a, long m) {
  long r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return mod(s0, m);
}

// Index of the Schreier generator for each (coset, generator) pair, or
// nothing when u x is itself a representative.
class SchreierTable {
 public:
  SchreierTable(const Presentation& p, const FiniteQuotientHom& phi, const Transversal& t)
      : phi_(phi), width_(p.alphabet.size()), slots_(static_cast<std::size_t>(phi.modulus()) * width_) {
    if (p.alphabet.size() != phi.images().size()) {
      throw DimensionError("homomorphism has " + std::to_string(phi.images().size()) +
                           " images for an alphabet of size " + std::to_string(p.alphabet.size()));
    }
    if (!phi.is_surjective()) throw DomainError("homomorphism is not onto Z/" + std::to_string(phi.modulus()));
    validate_transversal(t, phi);

    Alphabet taken;
    for (std::size_t c = 0; c < t.representatives.size(); ++c) {
      for (std::size_t x = 0; x < width_; ++x) {
        const FreeWord& u = t.representatives[c];
        const FreeWord ux = u * FreeWord::generator(x);
        const FreeWord& rep = t.representatives[static_cast<std::size_t>(mod(static_cast<long>(c) + phi.image(x), phi.modulus()))];
        if (ux == rep) continue;
        std::string name = c == 0 ? p.alphabet.name(x) : p.alphabet.name(x) + "_c" + std::to_string(c);
        while (taken.contains(name)) name += '_';
        taken.add(name);
        slots_[c * width_ + x] = generators_.size();
        generators_.push_back(SchreierGenerator{c, x, ux * rep.inverse(), std::move(name)});
      }
    }
  }

  const std::vector<SchreierGenerator>& generators() const { return generators_; }

  // Rewrites w read from coset `start` as a word in the Schreier generators.
  FreeWord rewrite(const FreeWord& w, long start) const {
    std::vector<Letter> out;
    long c = start;
    for (const Letter& l : w.letters()) {
      if (l.exponent > 0) {
        emit(out, c, l.generator, 1);
        c = mod(c + phi_.image(l.generator), phi_.modulus());
      } else {
        c = mod(c - phi_.image(l.generator), phi_.modulus());
        emit(out, c, l.generator, -1);
      }
    }
    return FreeWord(out);
  }

 private:
  void emit(std::vector<Letter>& out, long coset, std::uint32_t x, int exponent) const {
    const auto& slot = slots_[static_cast<std::size_t>(coset) * width_ + x];
    if (slot) out.push_back(Letter{static_cast<std::uint32_t>(*slot), static_cast<std::int8_t>(exponent)});
  }

  const FiniteQuotientHom& phi_;
  std::size_t width_;
  std::vector<std::optional<std::size_t>> slots_;
  std::vector<SchreierGenerator> generators_;
};

}  // namespace

FiniteQuotientHom::FiniteQuotientHom(long modulus, std::vector<long> images)
    : modulus_(modulus), images_(std::move(images)) {
  if (modulus_ < 1) throw DomainError("quotient order must be at least 1");
  for (auto& x : images_) x = mod(x, modulus_);
}

FiniteQuotientHom FiniteQuotientHom::from_assignments(const Alphabet& alphabet, long modulus,
                                                      const std::map<std::string, long>& images) {
  std::vector<long> v(alphabet.size(), 0);
  for (const auto& [name, value] : images) v[alphabet.index_of(name)] = value;
  return FiniteQuotientHom(modulus, std::move(v));
}

long FiniteQuotientHom::image(const FreeWord& w) const {
  long sum = 0;
  for (const Letter& l : w.letters()) sum = mod(sum + l.exponent * images_.at(l.generator), modulus_);
  return sum;
}

bool FiniteQuotientHom::is_surjective() const {
  long g = modulus_;
  for (long x : images_) g = std::gcd(g, x);
  return g == 1;
}

bool check_hom(const Presentation& p, const FiniteQuotientHom& phi) {
  if (phi.images().size() != p.alphabet.size()) return false;
  for (const auto& r : p.relators)
    if (phi.image(r) != 0) return false;
  return true;
}

void validate_transversal(const Transversal& t, const FiniteQuotientHom& phi) {
  const auto m = static_cast<std::size_t>(phi.modulus());
  if (t.representatives.size() != m) {
    throw DomainError("transversal has " + std::to_string(t.representatives.size()) +
                      " representatives, expected " + std::to_string(m));
  }
  if (!t.representatives[0].empty()) throw DomainError("representative of the trivial coset must be empty");
  for (std::size_t c = 0; c < m; ++c) {
    if (phi.image(t.representatives[c]) != static_cast<long>(c)) {
      throw DomainError("representative " + std::to_string(c) + " lies in coset " +
                        std::to_string(phi.image(t.representatives[c])));
    }
  }
}

Transversal default_transversal(const Presentation& p, const FiniteQuotientHom& phi) {
  const long m = phi.modulus();
  for (std::size_t x = 0; x < p.alphabet.size(); ++x) {
    if (std::gcd(phi.image(x), m) != 1) continue;
    const long inv = inverse_mod(phi.image(x), m);
    Transversal t;
    for (long c = 0; c < m; ++c) {
      t.representatives.push_back(FreeWord::generator(x).pow(static_cast<int>(mod(c * inv, m))));
    }
    return t;
  }
  throw DomainError("no generator maps to a unit of Z/" + std::to_string(m) +
                    "; an explicit transversal is required");
}

std::vector<SchreierGenerator> schreier_generators(const Presentation& p,
                                                   const FiniteQuotientHom& phi,
                                                   const Transversal& t) {
  return SchreierTable(p, phi, t).generators();
}

Presentation reidemeister_schreier(const Presentation& p, const FiniteQuotientHom& phi,
                                   const Transversal& t) {
  p.validate();
  if (!check_hom(p, phi)) throw DomainError("homomorphism does not vanish on every relator");
  const SchreierTable table(p, phi, t);

  Presentation out;
  for (const auto& g : table.generators()) out.alphabet.add(g.name);
  for (std::size_t c = 0; c < t.representatives.size(); ++c) {
    for (const auto& r : p.relators) out.relators.push_back(table.rewrite(r, static_cast<long>(c)));
  }
  for (const auto& rep : t.representatives) {
    FreeWord w = table.rewrite(rep, 0);
    if (!w.empty()) out.relators.push_back(std::move(w));
  }
  return out;
}

}  // namespace nmcg
