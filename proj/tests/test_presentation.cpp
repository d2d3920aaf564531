#include <doctest.h>

#include <sstream>

#include "data_path.hpp"
#include "nmcg/error.hpp"
#include "nmcg/presentation.hpp"

using namespace nmcg;

TEST_SUITE("fpgroup") {
  TEST_CASE("presentation text round trip") {
    const Presentation p = parse_presentation(
        "# braid group on three strands\n"
        "gens: s t\n"
        "\n"
        "rel: s t s t^-1 s^-1 t^-1\n");
    CHECK(p.alphabet.names() == std::vector<std::string>{"s", "t"});
    REQUIRE(p.relators.size() == 1);
    CHECK(parse_presentation(to_string(p)) == p);

    const Presentation trivial = parse_presentation("gens: x\nrel: x x^-1\n");
    CHECK(trivial.relators.front().empty());
    CHECK(parse_presentation(to_string(trivial)) == trivial);
  }

  TEST_CASE("presentation errors") {
    CHECK_THROWS_AS(parse_presentation(""), ParseError);
    CHECK_THROWS_AS(parse_presentation("rel: a\ngens: a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\ngens: b\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrelator: a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrel: b\n"), ParseError);
    try {
      parse_presentation("gens: a\nrel: a\nrel: q\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("relation matrix") {
    const Presentation p = parse_presentation("gens: a b\nrel: a a b^-1\nrel: a b a^-1 b^-1\n");
    CHECK(relation_matrix(p) == IntegerMatrix::from_rows({{2, -1}, {0, 0}}));
  }

  TEST_CASE("abelianization of standard groups") {
    auto ab = [](const std::string& text) { return to_string(abelianization(parse_presentation(text))); };
    CHECK(ab("gens: a b\n") == "Z^2");
    CHECK(ab("gens: a b\nrel: a b a^-1 b^-1\n") == "Z^2");
    CHECK(ab("gens: a b\nrel: a a b b\n") == "Z x Z/2");  // Klein bottle
    CHECK(ab("gens: x\nrel: x x x x x x\n") == "Z/6");
    CHECK(ab("gens: s t\nrel: s t s t^-1 s^-1 t^-1\n") == "Z");
    CHECK(ab("gens: a\nrel: a\n") == "0");
  }

  TEST_CASE("bundled presentations") {
    auto tn3 = testing::open_data("tn3.pres");
    CHECK(to_string(abelianization(read_presentation(tn3))) == "Z/12");
    // Braid relation identifies a_1 with a_2; y a y^-1 = a^-1 and y^2 = 1
    // force 2a = 2y = 0.
    auto mn3 = testing::open_data("mn3.pres");
    const Presentation m = read_presentation(mn3);
    CHECK(m.relators.size() == 5);
    CHECK(to_string(abelianization(m)) == "Z/2 x Z/2");
  }
}
