#include "geq/polynomial.hpp"

#include <charconv>
#include <sstream>

#include "geq/error.hpp"

namespace geq {

namespace {

// Returns 0 when `s` is not of the form x<digits>.
std::uint64_t variable_number(std::string_view s) {
  if (s.size() < 2 || s.front() != 'x') return 0;
  std::uint64_t k = 0;
  const auto* first = s.data() + 1;
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc{} || ptr != last) return 0;
  return k;
}

bool is_variable_syntax(std::string_view s) {
  if (s.ends_with("^-1")) s.remove_suffix(3);
  if (s.size() < 2 || s.front() != 'x') return false;
  for (char c : s.substr(1)) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Alphabet& alphabet, std::size_t arity) {
  Polynomial p{arity, {}};
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    if (is_variable_syntax(word)) {
      const bool inverse = word.ends_with("^-1");
      const std::string_view base = inverse ? std::string_view(word).substr(0, word.size() - 3) : word;
      const auto k = variable_number(base);
      if (k == 0 || k > arity) {
        throw ParseError("variable '" + word + "' out of arity " + std::to_string(arity));
      }
      const auto idx = static_cast<std::uint32_t>(k);
      p.tokens.push_back(inverse ? Token::var_inv(idx) : Token::var(idx));
    } else if (auto a = alphabet.find(word)) {
      p.tokens.push_back(Token::generator(*a));
    } else {
      throw ParseError("unknown token '" + word + "' (not a generator in A or a variable)");
    }
  }
  return p;
}

std::string token_label(Token t, const Alphabet& alphabet) {
  switch (t.kind) {
    case Token::Kind::Generator:
      return alphabet.labels.at(t.index);
    case Token::Kind::Var:
      return "x" + std::to_string(t.index);
    case Token::Kind::VarInv:
      return "x" + std::to_string(t.index) + "^-1";
  }
  return {};
}

std::string serialize(const Polynomial& p, const Alphabet& alphabet) {
  std::string out;
  for (const Token& t : p.tokens) {
    if (!out.empty()) out += ' ';
    out += token_label(t, alphabet);
  }
  return out;
}

std::vector<Token> canonical_tokens(const Alphabet& alphabet, std::size_t arity) {
  std::vector<Token> out;
  out.reserve(alphabet.size() + 2 * arity);
  for (std::size_t a = 0; a < alphabet.size(); ++a) out.push_back(Token::generator(static_cast<Letter>(a)));
  for (std::size_t k = 1; k <= arity; ++k) {
    out.push_back(Token::var(static_cast<std::uint32_t>(k)));
    out.push_back(Token::var_inv(static_cast<std::uint32_t>(k)));
  }
  return out;
}

Element interpret(const FiniteGroup& g, const Polynomial& p, std::span<const Element> tuple) {
  if (tuple.size() != p.arity) {
    throw InvalidArgument("tuple has " + std::to_string(tuple.size()) + " entries, polynomial arity is " +
                          std::to_string(p.arity));
  }
  Element acc = g.identity();
  for (const Token& t : p.tokens) {
    switch (t.kind) {
      case Token::Kind::Generator:
        acc = g.mul(acc, g.letter_element(t.index));
        break;
      case Token::Kind::Var:
        acc = g.mul(acc, tuple[t.index - 1]);
        break;
      case Token::Kind::VarInv:
        acc = g.mul(acc, g.inv(tuple[t.index - 1]));
        break;
    }
  }
  return acc;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> values, const Alphabet& alphabet) {
  if (values.size() != p.arity) {
    throw InvalidArgument("substitution provides " + std::to_string(values.size()) + " words for arity " +
                          std::to_string(p.arity));
  }
  for (const auto& v : values) {
    for (const Token& t : v.tokens) {
      if (!t.is_generator()) throw InvalidArgument("substituted word contains a variable");
    }
  }
  Polynomial out{0, {}};
  for (const Token& t : p.tokens) {
    switch (t.kind) {
      case Token::Kind::Generator:
        out.tokens.push_back(t);
        break;
      case Token::Kind::Var: {
        const auto& v = values[t.index - 1].tokens;
        out.tokens.insert(out.tokens.end(), v.begin(), v.end());
        break;
      }
      case Token::Kind::VarInv: {
        const auto& v = values[t.index - 1].tokens;
        for (auto it = v.rbegin(); it != v.rend(); ++it) {
          out.tokens.push_back(Token::generator(alphabet.inverse.at(it->index)));
        }
        break;
      }
    }
  }
  return out;
}

Word letters_of(const Polynomial& p) {
  Word w;
  w.reserve(p.size());
  for (const Token& t : p.tokens) {
    if (!t.is_generator()) throw InvalidArgument("polynomial is not variable-free");
    w.push_back(t.index);
  }
  return w;
}

Polynomial from_word(std::span<const Letter> w) {
  Polynomial p{0, {}};
  p.tokens.reserve(w.size());
  for (Letter a : w) p.tokens.push_back(Token::generator(a));
  return p;
}

}  // namespace geq
