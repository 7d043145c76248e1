#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geq/group.hpp"
#include "geq/polynomial.hpp"
#include "geq/tuples.hpp"

namespace geq {

inline constexpr std::size_t kDefaultMaxStateEntries = 1'000'000;
inline constexpr std::size_t kDefaultStateLimit = 100'000;

/// A function G^n -> G stored by mixed-radix tuple index. After reading a
/// word w from the initial state, values[t] is w evaluated at tuple t.
struct SolverState {
  std::size_t arity = 0;
  std::vector<Element> values;

  bool operator==(const SolverState&) const = default;
};

/// Constant function with value e. Throws LimitExceeded when |G|^n > max_entries.
SolverState initial_state(const FiniteGroup& g, std::size_t arity,
                          std::size_t max_entries = kDefaultMaxStateEntries);

/// Pointwise right multiplication by the token's value at each tuple.
/// Parallelized over tuple indices for large states.
void step_in_place(const FiniteGroup& g, SolverState& s, Token t);
SolverState step(const FiniteGroup& g, const SolverState& s, Token t);

/// True iff some tuple is mapped to the identity.
bool is_accepting(const FiniteGroup& g, const SolverState& s);

/// Decides p in Eq_n(G, A) by running the state evolution over p's tokens.
bool membership(const FiniteGroup& g, std::size_t arity, const Polynomial& p,
                std::size_t max_entries = kDefaultMaxStateEntries);

namespace serial {

/// Single-threaded reference for step_in_place.
void step_in_place(const FiniteGroup& g, SolverState& s, Token t);
bool membership(const FiniteGroup& g, std::size_t arity, const Polynomial& p,
                std::size_t max_entries = kDefaultMaxStateEntries);

}  // namespace serial

/// Explicit automaton with a total transition function.
struct Dfa {
  std::vector<std::string> alphabet;
  /// Canonical encoding per state (the function values); minimized automata
  /// keep the encoding of each class's first member in BFS order.
  std::vector<std::vector<Element>> states;
  std::size_t initial = 0;
  std::vector<bool> accepting;
  /// Row-major: transitions[state * alphabet.size() + letter].
  std::vector<std::size_t> transitions;

  std::size_t state_count() const { return accepting.size(); }
  std::size_t accepting_count() const;
  std::size_t next(std::size_t state, std::size_t letter) const {
    return transitions[state * alphabet.size() + letter];
  }
  /// Runs the automaton on letter indices into `alphabet`.
  bool accepts(std::span<const std::size_t> word) const;
};

/// BFS over the canonical alphabet from the initial state. Throws
/// LimitExceeded once more than `state_limit` states are discovered.
Dfa build_reachable_dfa(const FiniteGroup& g, std::size_t arity, std::size_t state_limit = kDefaultStateLimit,
                        std::size_t max_entries = kDefaultMaxStateEntries);

/// Hopcroft partition refinement; states renumbered in BFS order from the initial state.
Dfa minimize_dfa(const Dfa& d);

enum class ExportFormat { Dot, Table };

/// "dot" or "table"; throws ParseError otherwise.
ExportFormat parse_export_format(std::string_view name);

std::string export_dfa(const Dfa& d, ExportFormat format);

}  // namespace geq
