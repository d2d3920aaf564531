#include <doctest.h>

#include "data_path.hpp"
#include "nmcg/error.hpp"
#include "nmcg/presentation.hpp"
#include "nmcg/reidemeister_schreier.hpp"
#include "nmcg/tietze.hpp"
#include "random_util.hpp"

using namespace nmcg;

namespace {

std::string kernel_ab(const std::string& text, long m, const std::map<std::string, long>& images) {
  const Presentation p = parse_presentation(text);
  const auto phi = FiniteQuotientHom::from_assignments(p.alphabet, m, images);
  return to_string(abelianization(reidemeister_schreier(p, phi, default_transversal(p, phi))));
}

Presentation free_group(std::size_t rank) {
  Presentation p;
  for (std::size_t i = 0; i < rank; ++i) p.alphabet.add("x" + std::to_string(i));
  return p;
}

}  // namespace

TEST_SUITE("fpgroup") {
  TEST_CASE("homomorphisms onto cyclic groups") {
    const Presentation p = parse_presentation("gens: a b y\nrel: y y\nrel: a b\n");
    const auto phi = FiniteQuotientHom::from_assignments(p.alphabet, 2, {{"y", 1}});
    CHECK(phi.images() == std::vector<long>{0, 0, 1});
    CHECK(phi.is_surjective());
    CHECK(check_hom(p, phi));
    CHECK(phi.image(parse_word("y a y b", p.alphabet)) == 0);

    const auto bad = FiniteQuotientHom::from_assignments(p.alphabet, 2, {{"a", 1}});
    CHECK_FALSE(check_hom(p, bad));
    CHECK_THROWS_AS(reidemeister_schreier(p, bad, Transversal{{FreeWord{}, FreeWord::generator(0)}}),
                    DomainError);

    CHECK(FiniteQuotientHom(3, {-1, 4}).images() == std::vector<long>{2, 1});
    CHECK_FALSE(FiniteQuotientHom(4, {2, 0}).is_surjective());
    CHECK_THROWS_AS(FiniteQuotientHom(0, {}), DomainError);
    CHECK_THROWS_AS(FiniteQuotientHom::from_assignments(p.alphabet, 2, {{"q", 1}}), ParseError);
  }

  TEST_CASE("default transversal") {
    const Presentation p = parse_presentation("gens: a_1 a_2 y\n");
    const auto phi = FiniteQuotientHom::from_assignments(p.alphabet, 2, {{"y", 1}});
    const Transversal t = default_transversal(p, phi);
    REQUIRE(t.representatives.size() == 2);
    CHECK(t.representatives[0].empty());
    CHECK(format_word(t.representatives[1], p.alphabet) == "y");
    CHECK_NOTHROW(validate_transversal(t, phi));
    CHECK_THROWS_AS(validate_transversal(Transversal{{FreeWord{}, FreeWord::generator(0)}}, phi), DomainError);
  }

  TEST_CASE("Schreier generator names") {
    const Presentation p = parse_presentation("gens: a y\n");
    const auto phi = FiniteQuotientHom::from_assignments(p.alphabet, 2, {{"y", 1}});
    const auto gens = schreier_generators(p, phi, default_transversal(p, phi));
    std::vector<std::string> names;
    std::vector<std::string> words;
    for (const auto& g : gens) {
      names.push_back(g.name);
      words.push_back(format_word(g.word, p.alphabet));
    }
    CHECK(names == std::vector<std::string>{"a", "a_c1", "y_c1"});
    CHECK(words == std::vector<std::string>{"a", "y a y^-1", "y y"});
  }

  TEST_CASE("Nielsen-Schreier rank of free subgroups") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t k = 1 + trial % 4;
      const long m = 1 + static_cast<long>(rng() % 6);
      std::vector<long> images(k);
      for (auto& x : images) x = static_cast<long>(rng() % static_cast<std::uint64_t>(m));
      images[rng() % k] = 1;
      const Presentation f = free_group(k);
      const FiniteQuotientHom phi(m, images);
      const Transversal t = default_transversal(f, phi);
      const Presentation sub = reidemeister_schreier(f, phi, t);
      const std::size_t rank = static_cast<std::size_t>(m) * (k - 1) + 1;
      CHECK(sub.alphabet.size() == rank);
      CHECK(tietze_simplify(sub).relators.empty());
      CHECK(abelianization(sub).free_rank == rank);
    }
  }

  TEST_CASE("transversal that is not prefix closed") {
    const Presentation f = free_group(2);
    const FiniteQuotientHom phi(3, {1, 1});
    const Transversal t{{FreeWord{}, parse_word("x1", f.alphabet), parse_word("x0 x1", f.alphabet)}};
    const Presentation sub = reidemeister_schreier(f, phi, t);
    CHECK(to_string(abelianization(sub)) == "Z^4");
  }

  TEST_CASE("kernels of finite groups") {
    CHECK(kernel_ab("gens: x\nrel: x x x x x x\n", 2, {{"x", 1}}) == "Z/3");
    CHECK(kernel_ab("gens: x\nrel: x x x x x x\n", 3, {{"x", 1}}) == "Z/2");
    // Sign map of S_3; the kernel is A_3.
    CHECK(kernel_ab("gens: s t\nrel: s s\nrel: t t\nrel: s t s t s t\n", 2, {{"s", 1}, {"t", 1}}) == "Z/3");
    // Index-3 subgroup of Z^2.
    CHECK(kernel_ab("gens: a b\nrel: a b a^-1 b^-1\n", 3, {{"a", 1}}) == "Z^2");
    // Klein bottle group onto Z/2 via b: kernel is the torus.
    CHECK(kernel_ab("gens: a b\nrel: b a b^-1 a\n", 2, {{"b", 1}}) == "Z^2");
  }

  TEST_CASE("twist subgroup of M(N_3) by Reidemeister-Schreier") {
    auto in = testing::open_data("mn3.pres");
    const Presentation p = read_presentation(in);
    const auto phi = FiniteQuotientHom::from_assignments(p.alphabet, 2, {{"y", 1}});
    CHECK(check_hom(p, phi));
    const Presentation raw = reidemeister_schreier(p, phi, default_transversal(p, phi));
    CHECK(raw.alphabet.size() == 5);
    CHECK(raw.relators.size() == 10);
    CHECK(to_string(abelianization(raw)) == "Z/12");

    const Presentation simple = tietze_simplify(raw);
    CHECK(simple.alphabet.names() == std::vector<std::string>{"a_1_c1", "a_2_c1"});
    CHECK(simple.relators.size() == 2);
    CHECK(to_string(abelianization(simple)) == "Z/12");
  }
}
