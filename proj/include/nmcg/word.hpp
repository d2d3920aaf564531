#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nmcg {

/// Ordered list of generator names. Names are nonempty tokens made of
/// letters, digits and underscores, unique within the alphabet.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  bool contains(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws ParseError if unknown

  std::size_t add(std::string name);

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

bool is_valid_symbol(std::string_view name);

struct Letter {
  std::uint32_t generator = 0;
  std::int8_t exponent = 1;  // +1 or -1

  Letter inverse() const { return Letter{generator, static_cast<std::int8_t>(-exponent)}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word: no letter is adjacent to its inverse.
class FreeWord {
 public:
  FreeWord() = default;
  // Reduces the given letters.
  explicit FreeWord(std::span<const Letter> letters);
  FreeWord(std::initializer_list<Letter> letters);

  static FreeWord generator(std::size_t index, int exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  FreeWord inverse() const;
  FreeWord pow(int k) const;
  bool contains(std::size_t generator) const;
  std::size_t occurrences(std::size_t generator) const;
  std::vector<long> exponent_sums(std::size_t alphabet_size) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

FreeWord free_reduce(std::span<const Letter> letters);

/// Removes letters that cancel cyclically (first against last).
FreeWord cyclically_reduce(const FreeWord& w);

/// Smallest word among all cyclic rotations of w and of w^-1; w must be
/// cyclically reduced. Two relators with equal keys define the same normal
/// closure.
FreeWord cyclic_key(const FreeWord& w);

// Word text: whitespace-separated tokens "name" or "name^-1".
FreeWord parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const FreeWord& w, const Alphabet& alphabet);

/// Rewrites w over `to`, matching generators by name.
FreeWord translate(const FreeWord& w, const Alphabet& from, const Alphabet& to);

}  // namespace nmcg
