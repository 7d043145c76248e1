#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "geq/group.hpp"
#include "geq/polynomial.hpp"

namespace geq {

enum class Verdict { Accept, Reject, Unknown };

/// Budgeted recognizer for the identity word problem over a symmetric
/// alphabet. A definite answer at budget m stays the same for every larger
/// budget. Implementations must allow concurrent calls to recognize().
class WordProblemOracle {
 public:
  virtual ~WordProblemOracle() = default;

  virtual const Alphabet& alphabet() const = 0;
  virtual Verdict recognize(std::span<const Letter> word, std::size_t budget) const = 0;
};

/// Evaluates through the Cayley table; one letter costs one step.
class FiniteGroupOracle final : public WordProblemOracle {
 public:
  explicit FiniteGroupOracle(FiniteGroup g) : group_(std::move(g)) {}

  const Alphabet& alphabet() const override { return group_.alphabet(); }
  Verdict recognize(std::span<const Letter> word, std::size_t budget) const override;
  const FiniteGroup& group() const { return group_; }

 private:
  FiniteGroup group_;
};

/// Free reduction in the free group on the given generator names. Letters
/// come in pairs: 2i is generator i, 2i+1 is its inverse `<name>^-1`.
class FreeGroupOracle final : public WordProblemOracle {
 public:
  explicit FreeGroupOracle(std::vector<std::string> names);

  const Alphabet& alphabet() const override { return alphabet_; }
  Verdict recognize(std::span<const Letter> word, std::size_t budget) const override;
  std::size_t rank() const { return alphabet_.size() / 2; }

 private:
  Alphabet alphabet_;
};

FiniteGroupOracle finite_group_oracle(const FiniteGroup& g);

/// Free group of the given rank on generators a, b, c, ...
FreeGroupOracle free_group_oracle(std::size_t rank);

struct DovetailOptions {
  std::size_t max_steps = 8;
  std::size_t max_tuples_per_step = 1'000'000;
};

struct DovetailResult {
  enum class Outcome { Solved, Exhausted };

  Outcome outcome = Outcome::Exhausted;
  /// Substituted words v_1..v_n when solved.
  std::vector<Word> witness;
  /// Step at which the witness was accepted, or max_steps when exhausted.
  std::size_t steps = 0;

  bool solved() const { return outcome == Outcome::Solved; }
};

/// Dovetailing search: at step m, every n-tuple of words of length <= m is
/// substituted into p and checked with budget m. Tuples are visited by total
/// length, then lexicographically (v_1 most significant, words in
/// length-then-lexicographic order). Definite rejections are memoized.
DovetailResult dovetail_solve(const WordProblemOracle& oracle, std::size_t arity, const Polynomial& p,
                              const DovetailOptions& options);

}  // namespace geq
