#include <doctest.h>

#include "geq/brute.hpp"
#include "geq/error.hpp"
#include "geq/re_solver.hpp"
#include "oracles.hpp"

using namespace geq;

namespace {

Word word_of(const Alphabet& alphabet, const std::string& text) {
  return letters_of(parse_polynomial(text, alphabet, 0));
}

}  // namespace

TEST_CASE("finite_group_oracle") {
  const auto oracle = finite_group_oracle(cyclic_group(2));
  const auto& A = oracle.alphabet();
  CHECK(oracle.recognize(word_of(A, "a a"), 2) == Verdict::Accept);
  CHECK(oracle.recognize(word_of(A, "a"), 1) == Verdict::Reject);
  CHECK(oracle.recognize(word_of(A, "a a"), 1) == Verdict::Unknown);
}

TEST_CASE("free_group_oracle") {
  const FreeGroupOracle f1({"c"});
  const auto& A = f1.alphabet();
  CHECK(A.labels == std::vector<std::string>{"c", "c^-1"});
  CHECK(f1.recognize(word_of(A, "c c^-1"), 2) == Verdict::Accept);
  CHECK(f1.recognize(word_of(A, "c"), 1) == Verdict::Reject);
  CHECK(f1.recognize(word_of(A, "c c c^-1 c^-1"), 2) == Verdict::Unknown);
  CHECK(f1.recognize(word_of(A, "c c c^-1 c^-1"), 4) == Verdict::Accept);

  const auto f2 = free_group_oracle(2);
  CHECK(f2.alphabet().labels == std::vector<std::string>{"a", "a^-1", "b", "b^-1"});
  CHECK(f2.recognize(word_of(f2.alphabet(), "a b a^-1 b^-1"), 10) == Verdict::Reject);
  CHECK_THROWS_AS(free_group_oracle(0), InvalidArgument);
  CHECK_THROWS_AS(FreeGroupOracle({"a", "a"}), InvalidArgument);
}

TEST_CASE("oracle answers are monotone in the budget") {
  const auto fin = finite_group_oracle(symmetric_group_3(false));
  const auto free2 = free_group_oracle(2);
  for (const WordProblemOracle* oracle : {static_cast<const WordProblemOracle*>(&fin),
                                          static_cast<const WordProblemOracle*>(&free2)}) {
    const std::size_t k = oracle->alphabet().size();
    for_each_word(k, 5, [&](std::span<const std::size_t> w) {
      const Word word(w.begin(), w.end());
      std::optional<Verdict> definite;
      for (std::size_t m = 0; m <= 8; ++m) {
        const Verdict v = oracle->recognize(word, m);
        if (definite) CHECK(v == *definite);
        if (v != Verdict::Unknown) definite = v;
      }
      CHECK(definite.has_value());
      return true;
    });
  }
}

TEST_CASE("dovetail_solve over free groups") {
  const FreeGroupOracle f1({"c"});
  const auto& A = f1.alphabet();

  const auto r1 = dovetail_solve(f1, 1, parse_polynomial("x1 x1 c^-1 c^-1", A, 1), {8});
  REQUIRE(r1.solved());
  CHECK(r1.witness == std::vector<Word>{word_of(A, "c")});
  CHECK(r1.steps == 4);  // the substituted word has four letters

  const auto r2 = dovetail_solve(f1, 1, parse_polynomial("c x1 c^-1 x1^-1", A, 1), {8});
  REQUIRE(r2.solved());
  CHECK(r2.witness == std::vector<Word>{Word{}});
  CHECK(r2.steps == 2);

  const auto f2 = free_group_oracle(2);
  const auto r3 = dovetail_solve(f2, 1, parse_polynomial("a", f2.alphabet(), 1), {4});
  CHECK_FALSE(r3.solved());
  CHECK(r3.steps == 4);
}

TEST_CASE("dovetail_solve errors") {
  const auto f2 = free_group_oracle(2);
  const auto p = parse_polynomial("x1 x2 a", f2.alphabet(), 2);
  CHECK_THROWS_AS(dovetail_solve(f2, 2, p, {0}), InvalidArgument);
  CHECK_THROWS_AS(dovetail_solve(f2, 1, p, {3}), InvalidArgument);
  const auto constant = parse_polynomial("a", f2.alphabet(), 2);
  CHECK_THROWS_AS(dovetail_solve(f2, 2, constant, {6, 1000}), LimitExceeded);
}

TEST_CASE("dovetail returns the first accepting tuple in canonical order") {
  // In F_2, x1 x2 a^-1 is solved by (a, empty) and (empty, a); at m = 2 the
  // tuple with the empty first word comes first lexicographically by word rank.
  const auto f2 = free_group_oracle(2);
  const auto& A = f2.alphabet();
  const auto r = dovetail_solve(f2, 2, parse_polynomial("x1 x2 a^-1", A, 2), {4});
  REQUIRE(r.solved());
  CHECK(r.steps == 2);
  CHECK(r.witness == std::vector<Word>{Word{}, word_of(A, "a")});
}

TEST_CASE("dovetail agrees with brute force on Z/3 and its witnesses re-verify") {
  const auto g = cyclic_group(3);
  const auto oracle = finite_group_oracle(g);
  const auto tokens = canonical_tokens(g.alphabet(), 1);
  std::size_t mismatches = 0;
  for_each_word(tokens.size(), 3, [&](std::span<const std::size_t> w) {
    Polynomial p{1, {}};
    for (std::size_t a : w) p.tokens.push_back(tokens[a]);
    const auto r = dovetail_solve(oracle, 1, p, {6});
    if (r.solved() != solve_brute(g, 1, p).found()) ++mismatches;
    if (r.solved()) {
      const std::vector<Polynomial> v{from_word(r.witness[0])};
      const Word sub = letters_of(substitute(p, v, g.alphabet()));
      CHECK(oracle.recognize(sub, r.steps) == Verdict::Accept);
    }
    return true;
  });
  CHECK(mismatches == 0);
}
