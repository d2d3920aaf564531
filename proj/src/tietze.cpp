#include "nmcg/tietze.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace nmcg {

namespace {

void normalize(std::vector<FreeWord>& relators) {
  std::set<FreeWord> seen;
  std::vector<FreeWord> kept;
  for (const auto& r : relators) {
    FreeWord c = cyclically_reduce(r);
    if (c.empty()) continue;
    if (!seen.insert(cyclic_key(c)).second) continue;
    kept.push_back(std::move(c));
  }
  relators = std::move(kept);
}

FreeWord substitute(const FreeWord& w, std::uint32_t g, const FreeWord& replacement) {
  const FreeWord replacement_inverse = replacement.inverse();
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    if (l.generator != g) {
      out.push_back(l);
      continue;
    }
    const auto& piece = l.exponent > 0 ? replacement.letters() : replacement_inverse.letters();
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return FreeWord(out);
}

// Tries to eliminate generator g; returns false when no relator contains it
// exactly once.
bool eliminate(std::vector<FreeWord>& relators, std::uint32_t g) {
  std::optional<std::size_t> chosen;
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (relators[i].occurrences(g) != 1) continue;
    if (!chosen || relators[i].size() < relators[*chosen].size()) chosen = i;
  }
  if (!chosen) return false;

  // Rotate the relator to g^e w; then g = w^-1 (e = 1) or g = w (e = -1).
  std::vector<Letter> letters = relators[*chosen].letters();
  const auto pos = std::find_if(letters.begin(), letters.end(),
                                [g](const Letter& l) { return l.generator == g; });
  std::rotate(letters.begin(), pos, letters.end());
  const int e = letters.front().exponent;
  const FreeWord rest(std::span<const Letter>(letters.data() + 1, letters.size() - 1));
  const FreeWord replacement = e > 0 ? rest.inverse() : rest;

  relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(*chosen));
  for (auto& r : relators) r = substitute(r, g, replacement);
  return true;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p) {
  p.validate();
  std::vector<FreeWord> relators = p.relators;
  std::vector<bool> alive(p.alphabet.size(), true);

  for (;;) {
    normalize(relators);
    bool changed = false;
    for (std::uint32_t g = 0; g < alive.size() && !changed; ++g) {
      if (alive[g] && eliminate(relators, g)) {
        alive[g] = false;
        changed = true;
      }
    }
    if (!changed) break;
  }

  Presentation out;
  std::vector<std::uint32_t> renumber(alive.size(), 0);
  for (std::uint32_t g = 0; g < alive.size(); ++g) {
    if (!alive[g]) continue;
    renumber[g] = static_cast<std::uint32_t>(out.alphabet.add(p.alphabet.name(g)));
  }
  for (const auto& r : relators) {
    std::vector<Letter> letters = r.letters();
    for (auto& l : letters) l.generator = renumber[l.generator];
    out.relators.emplace_back(letters);
  }
  return out;
}

}  // namespace nmcg
