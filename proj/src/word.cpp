#include "nmcg/word.hpp"

#include <algorithm>
#include <sstream>

#include "nmcg/error.hpp"

namespace nmcg {

bool is_valid_symbol(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) {
  for (auto& n : names) add(std::move(n));
}

bool Alphabet::contains(std::string_view name) const {
  return index_.find(std::string(name)) != index_.end();
}

std::size_t Alphabet::index_of(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) throw ParseError("unknown generator '" + std::string(name) + "'");
  return it->second;
}

std::size_t Alphabet::add(std::string name) {
  if (!is_valid_symbol(name)) throw ParseError("invalid generator name '" + name + "'");
  if (contains(name)) throw ParseError("duplicate generator '" + name + "'");
  index_.emplace(name, names_.size());
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

FreeWord free_reduce(std::span<const Letter> letters) { return FreeWord(letters); }

FreeWord::FreeWord(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.exponent != 1 && l.exponent != -1) throw DomainError("letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeWord::FreeWord(std::initializer_list<Letter> letters)
    : FreeWord(std::span<const Letter>(letters.begin(), letters.size())) {}

FreeWord FreeWord::generator(std::size_t index, int exponent) {
  return FreeWord{Letter{static_cast<std::uint32_t>(index), static_cast<std::int8_t>(exponent)}};
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

FreeWord FreeWord::pow(int k) const {
  const FreeWord base = k < 0 ? inverse() : *this;
  FreeWord w;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) w = w * base;
  return w;
}

bool FreeWord::contains(std::size_t generator) const { return occurrences(generator) > 0; }

std::size_t FreeWord::occurrences(std::size_t generator) const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(), [generator](const Letter& l) { return l.generator == generator; }));
}

std::vector<long> FreeWord::exponent_sums(std::size_t alphabet_size) const {
  std::vector<long> sums(alphabet_size, 0);
  for (const Letter& l : letters_) sums.at(l.generator) += l.exponent;
  return sums;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> joined;
  joined.reserve(a.size() + b.size());
  joined.insert(joined.end(), a.letters_.begin(), a.letters_.end());
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(joined);
}

FreeWord cyclically_reduce(const FreeWord& w) {
  const auto& l = w.letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo] == l[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return FreeWord(std::span<const Letter>(l.data() + lo, hi - lo));
}

FreeWord cyclic_key(const FreeWord& w) {
  if (w.empty()) return w;
  std::vector<Letter> best = w.letters();
  auto consider = [&best](const std::vector<Letter>& word) {
    std::vector<Letter> rotated(word.size());
    for (std::size_t shift = 0; shift < word.size(); ++shift) {
      std::rotate_copy(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(shift), word.end(),
                       rotated.begin());
      if (rotated < best) best = rotated;
    }
  };
  consider(w.letters());
  consider(w.inverse().letters());
  return FreeWord(best);
}

FreeWord parse_word(std::string_view text, const Alphabet& alphabet) {
  std::istringstream ss{std::string(text)};
  std::vector<Letter> letters;
  std::string tok;
  while (ss >> tok) {
    int exponent = 1;
    constexpr std::string_view kInverse = "^-1";
    if (tok.size() > kInverse.size() && tok.ends_with(kInverse)) {
      tok.resize(tok.size() - kInverse.size());
      exponent = -1;
    }
    if (!is_valid_symbol(tok)) throw ParseError("malformed word token '" + tok + "'");
    letters.push_back(Letter{static_cast<std::uint32_t>(alphabet.index_of(tok)),
                             static_cast<std::int8_t>(exponent)});
  }
  return FreeWord(letters);
}

std::string format_word(const FreeWord& w, const Alphabet& alphabet) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(l.generator);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

FreeWord translate(const FreeWord& w, const Alphabet& from, const Alphabet& to) {
  std::vector<Letter> letters = w.letters();
  for (auto& l : letters) l.generator = static_cast<std::uint32_t>(to.index_of(from.name(l.generator)));
  return FreeWord(letters);
}

}  // namespace nmcg
