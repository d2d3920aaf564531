#include <doctest.h>

#include "nmcg/error.hpp"
#include "nmcg/word.hpp"
#include "random_util.hpp"

using namespace nmcg;

namespace {

const Alphabet kAbc({"a", "b", "c"});

FreeWord w(const std::string& text) { return parse_word(text, kAbc); }

}  // namespace

TEST_SUITE("fpgroup") {
  TEST_CASE("alphabet") {
    Alphabet al;
    CHECK(al.add("x_1") == 0);
    CHECK(al.add("y") == 1);
    CHECK(al.index_of("y") == 1);
    CHECK(al.contains("x_1"));
    CHECK_THROWS_AS(al.add("y"), ParseError);
    CHECK_THROWS_AS(al.add("bad-name"), ParseError);
    CHECK_THROWS_AS(al.index_of("z"), ParseError);
  }

  TEST_CASE("free reduction") {
    CHECK(w("a b b^-1 a^-1").empty());
    CHECK(w("a b b^-1 c") == w("a c"));
    CHECK(w("a b").inverse() == w("b^-1 a^-1"));
    CHECK(w("a b").pow(3) == w("a b a b a b"));
    CHECK(w("a b").pow(-2) == w("b^-1 a^-1 b^-1 a^-1"));
    CHECK(w("a b").pow(0).empty());
    CHECK(w("a b") * w("b^-1 c") == w("a c"));
    CHECK(w("a b a^-1 c").occurrences(0) == 2);
    CHECK(w("a b a^-1 c").exponent_sums(3) == std::vector<long>{0, 1, 1});
  }

  TEST_CASE("words are reduced after any product") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      const FreeWord x = testing::random_word(rng, 3, 12);
      const FreeWord y = testing::random_word(rng, 3, 12);
      const FreeWord p = x * y;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(p[i] != p[i + 1].inverse());
      CHECK((x * x.inverse()).empty());
      CHECK((p * y.inverse()) == x);
    }
  }

  TEST_CASE("cyclic reduction and cyclic keys") {
    CHECK(cyclically_reduce(w("a b c a^-1")) == w("b c"));
    CHECK(cyclically_reduce(w("a b a^-1")) == w("b"));
    CHECK(cyclically_reduce(w("a b")) == w("a b"));

    const FreeWord r = w("a b a c^-1");
    const FreeWord key = cyclic_key(r);
    CHECK(cyclic_key(w("b a c^-1 a")) == key);
    CHECK(cyclic_key(w("c^-1 a b a")) == key);
    CHECK(cyclic_key(r.inverse()) == key);
    CHECK(cyclic_key(w("a b c")) != cyclic_key(w("a c b")));
  }

  TEST_CASE("word text") {
    CHECK(format_word(w("a b^-1 c"), kAbc) == "a b^-1 c");
    CHECK(format_word(FreeWord{}, kAbc).empty());
    CHECK_THROWS_AS(w("a d"), ParseError);
    CHECK_THROWS_AS(w("a^2"), ParseError);
    CHECK_THROWS_AS(w("^-1"), ParseError);
  }

  TEST_CASE("translation between alphabets") {
    const Alphabet other({"c", "a", "b", "z"});
    const FreeWord x = w("a b^-1 c");
    CHECK(format_word(translate(x, kAbc, other), other) == "a b^-1 c");
    CHECK_THROWS_AS(translate(x, kAbc, Alphabet({"a", "b"})), ParseError);
  }
}
