#include "geq/brute.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "geq/error.hpp"
#include "geq/tuples.hpp"

namespace geq {

namespace {

constexpr std::ptrdiff_t kParallelThreshold = 1 << 12;
constexpr std::ptrdiff_t kBlock = 1 << 15;

bool solves(const FiniteGroup& g, const Polynomial& p, const TupleIndexer& idx, std::size_t index) {
  Element acc = g.identity();
  for (const Token& t : p.tokens) {
    switch (t.kind) {
      case Token::Kind::Generator:
        acc = g.mul(acc, g.letter_element(t.index));
        break;
      case Token::Kind::Var:
        acc = g.mul(acc, idx.digit(index, t.index));
        break;
      case Token::Kind::VarInv:
        acc = g.mul(acc, g.inv(idx.digit(index, t.index)));
        break;
    }
  }
  return acc == g.identity();
}

void check_arity(const Polynomial& p, std::size_t arity) {
  if (p.arity > arity) throw InvalidArgument("polynomial arity exceeds solver arity");
}

}  // namespace

SolutionReport solve_brute(const FiniteGroup& g, std::size_t arity, const Polynomial& p, std::size_t tuple_cap) {
  check_arity(p, arity);
  const TupleIndexer idx(g.order(), arity, tuple_cap);
  const auto count = static_cast<std::ptrdiff_t>(idx.count());

  // Blocks are scanned in order, each one in parallel; the first block that
  // holds a solution yields the global least index.
  std::ptrdiff_t best = std::numeric_limits<std::ptrdiff_t>::max();
  for (std::ptrdiff_t start = 0; start < count && best == std::numeric_limits<std::ptrdiff_t>::max();
       start += kBlock) {
    const std::ptrdiff_t stop = std::min(count, start + kBlock);
#pragma omp parallel for schedule(static) reduction(min : best) if (stop - start >= kParallelThreshold)
    for (std::ptrdiff_t i = start; i < stop; ++i) {
      if (i < best && solves(g, p, idx, static_cast<std::size_t>(i))) best = i;
    }
  }
  if (best == std::numeric_limits<std::ptrdiff_t>::max()) return {};
  return SolutionReport{idx.decode(static_cast<std::size_t>(best))};
}

namespace serial {

SolutionReport solve_brute(const FiniteGroup& g, std::size_t arity, const Polynomial& p, std::size_t tuple_cap) {
  check_arity(p, arity);
  const TupleIndexer idx(g.order(), arity, tuple_cap);
  std::vector<Element> tuple(arity);
  Polynomial full = p;
  full.arity = arity;
  for (std::size_t i = 0; i < idx.count(); ++i) {
    idx.decode(i, tuple);
    if (interpret(g, full, tuple) == g.identity()) return SolutionReport{tuple};
  }
  return {};
}

}  // namespace serial

std::vector<std::string> enumerate_language(const FiniteGroup& g, std::size_t arity, std::size_t max_len,
                                            std::size_t word_cap) {
  const auto tokens = canonical_tokens(g.alphabet(), arity);
  if (!count_words(tokens.size(), max_len, word_cap)) {
    throw LimitExceeded("more than " + std::to_string(word_cap) + " words of length <= " +
                        std::to_string(max_len));
  }
  // Tuple cap is checked once up front.
  const TupleIndexer idx(g.order(), arity, kDefaultTupleCap);
  std::vector<std::string> out;
  Polynomial p{arity, {}};
  for_each_word(tokens.size(), max_len, [&](std::span<const std::size_t> w) {
    p.tokens.clear();
    for (std::size_t a : w) p.tokens.push_back(tokens[a]);
    if (solve_brute(g, arity, p).found()) out.push_back(serialize(p, g.alphabet()));
    return true;
  });
  return out;
}

}  // namespace geq
