#include "geq/re_solver.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "geq/error.hpp"
#include "geq/free_word.hpp"
#include "geq/tuples.hpp"

namespace geq {

Verdict FiniteGroupOracle::recognize(std::span<const Letter> word, std::size_t budget) const {
  if (budget < word.size()) return Verdict::Unknown;
  Element acc = group_.identity();
  for (Letter a : word) acc = group_.mul(acc, group_.letter_element(a));
  return acc == group_.identity() ? Verdict::Accept : Verdict::Reject;
}

FreeGroupOracle::FreeGroupOracle(std::vector<std::string> names) {
  if (names.empty()) throw InvalidArgument("free group needs at least one generator");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InvalidArgument("empty free generator name");
    alphabet_.labels.push_back(names[i]);
    alphabet_.labels.push_back(names[i] + "^-1");
    alphabet_.inverse.push_back(static_cast<Letter>(2 * i + 1));
    alphabet_.inverse.push_back(static_cast<Letter>(2 * i));
  }
  for (std::size_t i = 0; i < alphabet_.labels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (alphabet_.labels[i] == alphabet_.labels[j]) {
        throw InvalidArgument("duplicate free generator label '" + alphabet_.labels[i] + "'");
      }
    }
  }
}

Verdict FreeGroupOracle::recognize(std::span<const Letter> word, std::size_t budget) const {
  if (budget < word.size()) return Verdict::Unknown;
  FreeWord w{rank(), {}};
  w.letters.reserve(word.size());
  for (Letter a : word) {
    const int gen = static_cast<int>(a / 2) + 1;
    w.letters.push_back(a % 2 == 0 ? gen : -gen);
  }
  return free_reduce(w).letters.empty() ? Verdict::Accept : Verdict::Reject;
}

FiniteGroupOracle finite_group_oracle(const FiniteGroup& g) { return FiniteGroupOracle(g); }

FreeGroupOracle free_group_oracle(std::size_t rank) {
  if (rank == 0 || rank > 26) throw InvalidArgument("free group rank must be in 1..26");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return FreeGroupOracle(std::move(names));
}

namespace {

struct TupleKeyHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

DovetailResult dovetail_solve(const WordProblemOracle& oracle, std::size_t arity, const Polynomial& p,
                              const DovetailOptions& options) {
  if (p.arity > arity) throw InvalidArgument("polynomial arity exceeds solver arity");
  if (options.max_steps == 0) throw InvalidArgument("max_steps must be at least 1");
  const Alphabet& alphabet = oracle.alphabet();
  for (const Token& t : p.tokens) {
    if (t.is_generator() && t.index >= alphabet.size()) throw InvalidArgument("generator outside oracle alphabet");
  }
  Polynomial full = p;
  full.arity = arity;

  // Words in length-then-lexicographic order; ranks are stable as m grows.
  std::vector<Word> words;
  std::unordered_set<std::vector<std::size_t>, TupleKeyHash> rejected;

  for (std::size_t m = 1; m <= options.max_steps; ++m) {
    const auto word_count = count_words(alphabet.size(), m, options.max_tuples_per_step);
    const auto tuple_count =
        word_count ? bounded_power(*word_count, arity, options.max_tuples_per_step) : std::nullopt;
    if (!tuple_count) {
      throw LimitExceeded("step " + std::to_string(m) + " needs more than " +
                          std::to_string(options.max_tuples_per_step) + " word tuples");
    }
    words.clear();
    for_each_word(alphabet.size(), m, [&](std::span<const std::size_t> w) {
      words.emplace_back(w.begin(), w.end());
      return true;
    });

    std::vector<std::vector<std::size_t>> tuples;
    tuples.reserve(*tuple_count);
    std::vector<std::size_t> ranks(arity, 0);
    for (std::size_t i = 0; i < *tuple_count; ++i) {
      std::size_t rest = i;
      for (std::size_t k = arity; k > 0; --k) {
        ranks[k - 1] = rest % words.size();
        rest /= words.size();
      }
      if (!rejected.contains(ranks)) tuples.push_back(ranks);
    }
    auto total_length = [&](const std::vector<std::size_t>& t) {
      std::size_t len = 0;
      for (std::size_t r : t) len += words[r].size();
      return len;
    };
    // Stable sort keeps lexicographic rank order within each total length.
    std::ranges::stable_sort(tuples, {}, total_length);

    std::vector<Verdict> verdicts(tuples.size(), Verdict::Unknown);
    const auto count = static_cast<std::ptrdiff_t>(tuples.size());
#pragma omp parallel for schedule(dynamic, 64) if (count >= 4096)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      std::vector<Polynomial> values;
      values.reserve(arity);
      for (std::size_t r : tuples[static_cast<std::size_t>(i)]) values.push_back(from_word(words[r]));
      const Word w = letters_of(substitute(full, values, alphabet));
      verdicts[static_cast<std::size_t>(i)] = oracle.recognize(w, m);
    }

    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (verdicts[i] == Verdict::Accept) {
        DovetailResult result{DovetailResult::Outcome::Solved, {}, m};
        for (std::size_t r : tuples[i]) result.witness.push_back(words[r]);
        return result;
      }
      if (verdicts[i] == Verdict::Reject) rejected.insert(tuples[i]);
    }
  }
  return DovetailResult{DovetailResult::Outcome::Exhausted, {}, options.max_steps};
}

}  // namespace geq
