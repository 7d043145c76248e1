#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "geq/group.hpp"
#include "geq/polynomial.hpp"

namespace geq {

inline constexpr std::size_t kDefaultTupleCap = 10'000'000;
inline constexpr std::size_t kDefaultWordCap = 10'000'000;

struct SolutionReport {
  /// Lexicographically least solving tuple (x_1 most significant), if any.
  std::optional<std::vector<Element>> witness;

  bool found() const { return witness.has_value(); }
};

/// Exhaustive search of G^n in mixed-radix order. Throws LimitExceeded when
/// |G|^n exceeds `tuple_cap`.
SolutionReport solve_brute(const FiniteGroup& g, std::size_t arity, const Polynomial& p,
                           std::size_t tuple_cap = kDefaultTupleCap);

namespace serial {

SolutionReport solve_brute(const FiniteGroup& g, std::size_t arity, const Polynomial& p,
                           std::size_t tuple_cap = kDefaultTupleCap);

}  // namespace serial

/// Every solvable polynomial of length <= max_len, in length-then-lexicographic
/// order of the canonical alphabet, serialized.
std::vector<std::string> enumerate_language(const FiniteGroup& g, std::size_t arity, std::size_t max_len,
                                            std::size_t word_cap = kDefaultWordCap);

}  // namespace geq
