#include <doctest.h>

#include <random>

#include "geq/brute.hpp"
#include "geq/dfa.hpp"
#include "geq/error.hpp"
#include "oracles.hpp"

using namespace geq;

TEST_CASE("solve_brute examples") {
  const auto z2 = cyclic_group(2);
  const auto r = solve_brute(z2, 1, parse_polynomial("x1 x1", z2.alphabet(), 1));
  REQUIRE(r.found());
  CHECK(*r.witness == std::vector<Element>{0});  // e, although a also solves

  CHECK_FALSE(solve_brute(z2, 1, parse_polynomial("a", z2.alphabet(), 1)).found());

  for (const auto& g : testing::corpus()) {
    const auto empty = solve_brute(g, 2, Polynomial{2, {}});
    REQUIRE(empty.found());
    CHECK(*empty.witness == std::vector<Element>{g.identity(), g.identity()});
  }
  const auto wa = solve_brute(z2, 1, parse_polynomial("a x1", z2.alphabet(), 1));
  REQUIRE(wa.found());
  CHECK(*wa.witness == std::vector<Element>{1});
}

TEST_CASE("solve_brute cap") {
  CHECK_THROWS_AS(solve_brute(cyclic_group(6), 9, Polynomial{9, {}}, 10'000'000), LimitExceeded);
  CHECK_THROWS_AS(solve_brute(cyclic_group(2), 4, Polynomial{4, {}}, 15), LimitExceeded);
}

TEST_CASE("witness is the least solving tuple and is valid") {
  std::mt19937 rng(31);
  for (const auto& g : testing::corpus()) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto p = testing::random_polynomial(rng, g.alphabet(), 2, 8);
      const auto r = solve_brute(g, 2, p);
      CHECK(r.found() == testing::recursive_solvable(g, 2, p));
      if (!r.found()) continue;
      CHECK(interpret(g, p, *r.witness) == g.identity());
      bool earlier = false;
      testing::for_each_tuple(g.order(), 2, [&](const std::vector<Element>& t) {
        if (t < *r.witness && interpret(g, p, t) == g.identity()) earlier = true;
      });
      CHECK_FALSE(earlier);
    }
  }
}

TEST_CASE("parallel solve_brute matches the serial reference above the threshold") {
  const auto g = cyclic_group(6);
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_polynomial(rng, g.alphabet(), 5, 12);
    const auto par = solve_brute(g, 5, p);
    const auto ser = serial::solve_brute(g, 5, p);
    CHECK(par.witness == ser.witness);
  }
}

TEST_CASE("witness substitution lands in the word problem") {
  std::mt19937 rng(41);
  for (const auto& g : testing::corpus()) {
    // Shortest word over A for each element, by BFS over the Cayley graph.
    std::vector<std::optional<Polynomial>> word_for(g.order());
    word_for[g.identity()] = Polynomial{};
    std::vector<Element> frontier{g.identity()};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (Letter a = 0; a < g.alphabet().size(); ++a) {
        const Element h = g.mul(frontier[i], g.letter_element(a));
        if (word_for[h]) continue;
        Polynomial w = *word_for[frontier[i]];
        w.tokens.push_back(Token::generator(a));
        word_for[h] = w;
        frontier.push_back(h);
      }
    }
    for (int trial = 0; trial < 40; ++trial) {
      const auto p = testing::random_polynomial(rng, g.alphabet(), 2, 8);
      const auto r = solve_brute(g, 2, p);
      if (!r.found()) continue;
      const std::vector<Polynomial> v{*word_for[(*r.witness)[0]], *word_for[(*r.witness)[1]]};
      CHECK(interpret(g, substitute(p, v, g.alphabet()), {}) == g.identity());
    }
  }
}

TEST_CASE("enumerate_language") {
  const auto z2 = cyclic_group(2);
  CHECK(enumerate_language(z2, 0, 2) == std::vector<std::string>{"", "a a"});
  CHECK(enumerate_language(z2, 1, 1) == std::vector<std::string>{"", "x1", "x1^-1"});
  for (const auto& g : testing::corpus()) CHECK(enumerate_language(g, 1, 0) == std::vector<std::string>{""});
  CHECK_THROWS_AS(enumerate_language(symmetric_group_3(true), 2, 8, 1000), LimitExceeded);
}

TEST_CASE("enumerated words are exactly the DFA members") {
  for (const auto& g : {cyclic_group(3), klein_four_group()}) {
    const auto words = enumerate_language(g, 1, 4);
    for (const auto& w : words) CHECK(membership(g, 1, parse_polynomial(w, g.alphabet(), 1)));
    std::size_t members = 0;
    const auto tokens = canonical_tokens(g.alphabet(), 1);
    for_each_word(tokens.size(), 4, [&](std::span<const std::size_t> w) {
      Polynomial p{1, {}};
      for (std::size_t a : w) p.tokens.push_back(tokens[a]);
      if (membership(g, 1, p)) ++members;
      return true;
    });
    CHECK(members == words.size());
  }
}
