#include <doctest.h>

#include <random>

#include "geq/error.hpp"
#include "geq/polynomial.hpp"
#include "oracles.hpp"

using namespace geq;

TEST_CASE("parse_polynomial") {
  const auto z2 = cyclic_group(2);
  const auto& A = z2.alphabet();

  const auto p = parse_polynomial("a x1", A, 1);
  CHECK(p.arity == 1);
  CHECK(p.tokens == std::vector<Token>{Token::generator(0), Token::var(1)});

  const auto q = parse_polynomial("x2^-1 a x2", A, 2);
  CHECK(q.tokens == std::vector<Token>{Token::var_inv(2), Token::generator(0), Token::var(2)});

  CHECK(parse_polynomial("   ", A, 3).empty());
  CHECK_THROWS_AS(parse_polynomial("x1", A, 0), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0", A, 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x3^-1", A, 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("e", A, 1), ParseError);  // identity is not in A
  CHECK_THROWS_AS(parse_polynomial("a^-1", A, 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y", A, 1), ParseError);
}

TEST_CASE("serialize") {
  const auto z2 = cyclic_group(2);
  const auto& A = z2.alphabet();
  CHECK(serialize(Polynomial{1, {Token::generator(0), Token::var(1)}}, A) == "a x1");
  CHECK(serialize(Polynomial{}, A) == "");
  CHECK(serialize(Polynomial{2, {Token::var_inv(2)}}, A) == "x2^-1");
  CHECK(serialize(parse_polynomial("  a   x1\tx1^-1 ", A, 1), A) == "a x1 x1^-1");
}

TEST_CASE("parse and serialize are inverse on random polynomials") {
  std::mt19937 rng(3);
  for (const auto& g : testing::corpus()) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = testing::random_polynomial(rng, g.alphabet(), 2, 8);
      CHECK(parse_polynomial(serialize(p, g.alphabet()), g.alphabet(), 2) == p);
    }
  }
}

TEST_CASE("interpret") {
  const auto z2 = cyclic_group(2);
  const Element a = *z2.find("a");
  const std::vector<Element> ta{a};
  CHECK(interpret(z2, Polynomial{1, {}}, ta) == z2.identity());
  CHECK(interpret(z2, parse_polynomial("x1 x1", z2.alphabet(), 1), ta) == z2.identity());

  const auto z3 = cyclic_group(3);
  const std::vector<Element> t3{*z3.find("a")};
  CHECK(interpret(z3, parse_polynomial("a x1^-1", z3.alphabet(), 1), t3) == z3.identity());

  CHECK_THROWS_AS(interpret(z2, Polynomial{1, {}}, std::vector<Element>{}), InvalidArgument);
}

TEST_CASE("interpret agrees with first-letter recursion and is multiplicative") {
  std::mt19937 rng(5);
  for (const auto& g : testing::corpus()) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = testing::random_polynomial(rng, g.alphabet(), 2, 7);
      const auto q = testing::random_polynomial(rng, g.alphabet(), 2, 7);
      std::vector<Element> t{static_cast<Element>(pick(rng)), static_cast<Element>(pick(rng))};
      CHECK(interpret(g, p, t) == testing::recursive_interpret(g, p.tokens, t));
      Polynomial pq = p;
      pq.tokens.insert(pq.tokens.end(), q.tokens.begin(), q.tokens.end());
      CHECK(interpret(g, pq, t) == g.mul(interpret(g, p, t), interpret(g, q, t)));
    }
  }
}

TEST_CASE("substitute") {
  const auto z2 = cyclic_group(2);
  const auto& A2 = z2.alphabet();
  const std::vector<Polynomial> va{parse_polynomial("a", A2, 0)};
  CHECK(serialize(substitute(parse_polynomial("x1 a", A2, 1), va, A2), A2) == "a a");
  CHECK(substitute(Polynomial{1, {}}, va, A2).empty());

  const auto z3 = cyclic_group(3);
  const auto& A3 = z3.alphabet();
  const std::vector<Polynomial> vaa{parse_polynomial("a a", A3, 0)};
  // a^-1 is labelled a2 in the stock Z/3.
  CHECK(serialize(substitute(parse_polynomial("x1^-1", A3, 1), vaa, A3), A3) == "a2 a2");

  const std::vector<Polynomial> bad{Polynomial{1, {Token::var(1)}}};
  CHECK_THROWS_AS(substitute(parse_polynomial("x1", A3, 1), bad, A3), InvalidArgument);
}

TEST_CASE("substitution soundness on random inputs") {
  std::mt19937 rng(9);
  for (const auto& g : testing::corpus()) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = testing::random_polynomial(rng, g.alphabet(), 2, 6);
      std::vector<Polynomial> v{testing::random_polynomial(rng, g.alphabet(), 0, 4),
                                testing::random_polynomial(rng, g.alphabet(), 0, 4)};
      const auto s = substitute(p, v, g.alphabet());
      CHECK(s.arity == 0);
      const std::vector<Element> values{interpret(g, v[0], {}), interpret(g, v[1], {})};
      CHECK(interpret(g, s, {}) == interpret(g, p, values));
    }
  }
}

TEST_CASE("canonical token order") {
  const auto g = klein_four_group();
  const auto tokens = canonical_tokens(g.alphabet(), 2);
  std::vector<std::string> labels;
  for (Token t : tokens) labels.push_back(token_label(t, g.alphabet()));
  CHECK(labels == std::vector<std::string>{"a", "b", "c", "x1", "x1^-1", "x2", "x2^-1"});
}
