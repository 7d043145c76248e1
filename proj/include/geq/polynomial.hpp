#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geq/group.hpp"

namespace geq {

/// One letter of an n-ary polynomial: a generator from A, a variable x_k,
/// or its formal inverse x_k^-1.
struct Token {
  enum class Kind : std::uint8_t { Generator, Var, VarInv };

  Kind kind = Kind::Generator;
  /// Letter index for generators, the 1-based variable number otherwise.
  std::uint32_t index = 0;

  static constexpr Token generator(Letter a) { return {Kind::Generator, a}; }
  static constexpr Token var(std::uint32_t k) { return {Kind::Var, k}; }
  static constexpr Token var_inv(std::uint32_t k) { return {Kind::VarInv, k}; }

  bool is_generator() const { return kind == Kind::Generator; }

  auto operator<=>(const Token&) const = default;
};

/// Word over A together with x_1..x_n and their inverses. The empty token
/// sequence is the empty polynomial.
struct Polynomial {
  std::size_t arity = 0;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }

  bool operator==(const Polynomial&) const = default;
};

using Word = std::vector<Letter>;

/// Tokens separated by whitespace: generator labels of `alphabet`, `x<k>`,
/// `x<k>^-1`. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const Alphabet& alphabet, std::size_t arity);

/// Space-separated token labels; the empty polynomial is "".
std::string serialize(const Polynomial& p, const Alphabet& alphabet);

std::string token_label(Token t, const Alphabet& alphabet);

/// Generators in alphabet order, then x_1, x_1^-1, ..., x_n, x_n^-1.
std::vector<Token> canonical_tokens(const Alphabet& alphabet, std::size_t arity);

/// Left-to-right product with x_k -> tuple[k-1]. Throws InvalidArgument
/// when the tuple length differs from the arity.
Element interpret(const FiniteGroup& g, const Polynomial& p, std::span<const Element> tuple);

/// Replaces x_k by values[k-1] and x_k^-1 by its formal inverse (reversed,
/// letterwise inverse). Every value must be variable-free.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> values, const Alphabet& alphabet);

/// Letters of a variable-free polynomial. Throws InvalidArgument otherwise.
Word letters_of(const Polynomial& p);

Polynomial from_word(std::span<const Letter> w);

}  // namespace geq
