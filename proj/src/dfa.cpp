#include "geq/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "geq/error.hpp"

namespace geq {

namespace {

// Below this many tuples the OpenMP fork costs more than the loop.
constexpr std::ptrdiff_t kParallelThreshold = 1 << 14;

struct ValuesHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Element x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

void check_token(const FiniteGroup& g, const SolverState& s, Token t) {
  if (t.is_generator()) {
    if (t.index >= g.generators().size()) throw InvalidArgument("generator letter out of range");
  } else if (t.index == 0 || t.index > s.arity) {
    throw InvalidArgument("variable x" + std::to_string(t.index) + " out of arity " + std::to_string(s.arity));
  }
}

std::size_t stride_of(const FiniteGroup& g, const SolverState& s, std::uint32_t k) {
  std::size_t stride = 1;
  for (std::size_t j = s.arity; j > k; --j) stride *= g.order();
  return stride;
}

}  // namespace

SolverState initial_state(const FiniteGroup& g, std::size_t arity, std::size_t max_entries) {
  const TupleIndexer idx(g.order(), arity, max_entries);
  return SolverState{arity, std::vector<Element>(idx.count(), g.identity())};
}

void step_in_place(const FiniteGroup& g, SolverState& s, Token t) {
  check_token(g, s, t);
  const auto table = g.table();
  const std::size_t order = g.order();
  Element* v = s.values.data();
  const auto count = static_cast<std::ptrdiff_t>(s.values.size());

  if (t.is_generator()) {
    const Element a = g.letter_element(t.index);
#pragma omp parallel for schedule(static) if (count >= kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < count; ++i) v[i] = table[std::size_t{v[i]} * order + a];
    return;
  }
  const std::size_t stride = stride_of(g, s, t.index);
  const bool inverse = t.kind == Token::Kind::VarInv;
#pragma omp parallel for schedule(static) if (count >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    auto gj = static_cast<Element>((static_cast<std::size_t>(i) / stride) % order);
    if (inverse) gj = g.inv(gj);
    v[i] = table[std::size_t{v[i]} * order + gj];
  }
}

SolverState step(const FiniteGroup& g, const SolverState& s, Token t) {
  SolverState out = s;
  step_in_place(g, out, t);
  return out;
}

bool is_accepting(const FiniteGroup& g, const SolverState& s) {
  return std::ranges::find(s.values, g.identity()) != s.values.end();
}

bool membership(const FiniteGroup& g, std::size_t arity, const Polynomial& p, std::size_t max_entries) {
  if (p.arity > arity) throw InvalidArgument("polynomial arity exceeds solver arity");
  SolverState s = initial_state(g, arity, max_entries);
  for (const Token& t : p.tokens) step_in_place(g, s, t);
  return is_accepting(g, s);
}

namespace serial {

void step_in_place(const FiniteGroup& g, SolverState& s, Token t) {
  check_token(g, s, t);
  const TupleIndexer idx(g.order(), s.arity, s.values.size());
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    Element rhs;
    switch (t.kind) {
      case Token::Kind::Generator:
        rhs = g.letter_element(t.index);
        break;
      case Token::Kind::Var:
        rhs = idx.digit(i, t.index);
        break;
      default:
        rhs = g.inv(idx.digit(i, t.index));
        break;
    }
    s.values[i] = g.mul(s.values[i], rhs);
  }
}

bool membership(const FiniteGroup& g, std::size_t arity, const Polynomial& p, std::size_t max_entries) {
  if (p.arity > arity) throw InvalidArgument("polynomial arity exceeds solver arity");
  SolverState s = initial_state(g, arity, max_entries);
  for (const Token& t : p.tokens) serial::step_in_place(g, s, t);
  return is_accepting(g, s);
}

}  // namespace serial

std::size_t Dfa::accepting_count() const {
  return static_cast<std::size_t>(std::ranges::count(accepting, true));
}

bool Dfa::accepts(std::span<const std::size_t> word) const {
  std::size_t s = initial;
  for (std::size_t a : word) s = next(s, a);
  return accepting[s];
}

Dfa build_reachable_dfa(const FiniteGroup& g, std::size_t arity, std::size_t state_limit, std::size_t max_entries) {
  if (state_limit == 0) throw InvalidArgument("state limit must be at least 1");
  const auto tokens = canonical_tokens(g.alphabet(), arity);

  Dfa d;
  d.alphabet.reserve(tokens.size());
  for (Token t : tokens) d.alphabet.push_back(token_label(t, g.alphabet()));

  std::unordered_map<std::vector<Element>, std::size_t, ValuesHash> ids;
  SolverState start = initial_state(g, arity, max_entries);
  ids.emplace(start.values, 0);
  d.states.push_back(start.values);
  d.accepting.push_back(is_accepting(g, start));

  for (std::size_t cur = 0; cur < d.states.size(); ++cur) {
    for (Token t : tokens) {
      SolverState s{arity, d.states[cur]};
      step_in_place(g, s, t);
      auto [it, inserted] = ids.try_emplace(s.values, d.states.size());
      if (inserted) {
        if (d.states.size() >= state_limit) {
          throw LimitExceeded("state limit " + std::to_string(state_limit) + " exceeded after " +
                              std::to_string(d.states.size()) + " states");
        }
        d.accepting.push_back(is_accepting(g, s));
        d.states.push_back(std::move(s.values));
      }
      d.transitions.push_back(it->second);
    }
  }
  return d;
}

namespace {

// Refinable partition over states 0..n-1 (block boundaries in a permuted array).
class Partition {
 public:
  Partition(std::size_t n) : elems_(n), loc_(n), block_of_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) elems_[i] = loc_[i] = i;
    if (n > 0) {
      first_.push_back(0);
      end_.push_back(n);
      mid_.push_back(0);
    }
  }

  std::size_t blocks() const { return first_.size(); }
  std::size_t block_of(std::size_t s) const { return block_of_[s]; }
  std::size_t size(std::size_t b) const { return end_[b] - first_[b]; }
  std::span<const std::size_t> members(std::size_t b) const {
    return std::span(elems_).subspan(first_[b], size(b));
  }

  // Moves `s` into the marked prefix of its block; returns true on the first mark in the block.
  bool mark(std::size_t s) {
    const std::size_t b = block_of_[s];
    const std::size_t pos = loc_[s];
    if (pos < mid_[b]) return false;
    const bool first_mark = mid_[b] == first_[b];
    std::swap(elems_[pos], elems_[mid_[b]]);
    loc_[elems_[pos]] = pos;
    loc_[s] = mid_[b];
    ++mid_[b];
    return first_mark;
  }

  // Splits off the marked prefix; returns the new block id, or nullopt if nothing changed.
  std::optional<std::size_t> split(std::size_t b) {
    const std::size_t m = mid_[b];
    mid_[b] = first_[b];
    if (m == first_[b] || m == end_[b]) return std::nullopt;
    const std::size_t nb = first_.size();
    first_.push_back(first_[b]);
    end_.push_back(m);
    mid_.push_back(first_[b]);
    first_[b] = m;
    mid_[b] = m;
    for (std::size_t i = first_[nb]; i < end_[nb]; ++i) block_of_[elems_[i]] = nb;
    return nb;
  }

 private:
  std::vector<std::size_t> elems_;
  std::vector<std::size_t> loc_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> first_;
  std::vector<std::size_t> end_;
  std::vector<std::size_t> mid_;
};

}  // namespace

Dfa minimize_dfa(const Dfa& d) {
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet.size();

  // Predecessor lists per letter, CSR layout.
  std::vector<std::size_t> pred_start(n * k + 1, 0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < k; ++a) ++pred_start[d.next(s, a) * k + a + 1];
  }
  for (std::size_t i = 0; i < n * k; ++i) pred_start[i + 1] += pred_start[i];
  std::vector<std::size_t> pred(n * k);
  {
    auto fill = pred_start;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t a = 0; a < k; ++a) pred[fill[d.next(s, a) * k + a]++] = s;
    }
  }

  Partition part(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (d.accepting[s]) part.mark(s);
  }
  part.split(0);

  std::vector<std::vector<bool>> queued(part.blocks(), std::vector<bool>(k, false));
  std::deque<std::pair<std::size_t, std::size_t>> work;
  for (std::size_t b = 0; b < part.blocks(); ++b) {
    for (std::size_t a = 0; a < k; ++a) {
      work.emplace_back(b, a);
      queued[b][a] = true;
    }
  }

  std::vector<std::size_t> touched;
  std::vector<std::size_t> splitter;
  while (!work.empty()) {
    const auto [b, a] = work.front();
    work.pop_front();
    queued[b][a] = false;
    auto members = part.members(b);
    splitter.assign(members.begin(), members.end());
    touched.clear();
    for (std::size_t t : splitter) {
      for (std::size_t i = pred_start[t * k + a]; i < pred_start[t * k + a + 1]; ++i) {
        const std::size_t s = pred[i];
        const std::size_t sb = part.block_of(s);
        if (part.mark(s)) touched.push_back(sb);
      }
    }
    for (std::size_t y : touched) {
      auto nb = part.split(y);
      if (!nb) continue;
      queued.emplace_back(k, false);
      for (std::size_t c = 0; c < k; ++c) {
        if (queued[y][c]) {
          work.emplace_back(*nb, c);
          queued[*nb][c] = true;
        } else {
          const std::size_t smaller = part.size(*nb) <= part.size(y) ? *nb : y;
          work.emplace_back(smaller, c);
          queued[smaller][c] = true;
        }
      }
    }
  }

  // Renumber blocks in BFS order from the initial state.
  const std::size_t nblocks = part.blocks();
  std::vector<std::size_t> rank(nblocks, SIZE_MAX);
  std::vector<std::size_t> order;
  order.reserve(nblocks);
  rank[part.block_of(d.initial)] = 0;
  order.push_back(part.block_of(d.initial));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t rep = part.members(order[i]).front();
    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t tb = part.block_of(d.next(rep, a));
      if (rank[tb] == SIZE_MAX) {
        rank[tb] = order.size();
        order.push_back(tb);
      }
    }
  }

  Dfa out;
  out.alphabet = d.alphabet;
  out.initial = 0;
  out.accepting.resize(order.size());
  out.states.resize(order.size());
  out.transitions.resize(order.size() * k);
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto members = part.members(order[i]);
    const std::size_t rep = *std::ranges::min_element(members);
    out.accepting[i] = d.accepting[rep];
    if (!d.states.empty()) out.states[i] = d.states[rep];
    for (std::size_t a = 0; a < k; ++a) out.transitions[i * k + a] = rank[part.block_of(d.next(rep, a))];
  }
  return out;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "table") return ExportFormat::Table;
  throw ParseError("unknown export format '" + std::string(name) + "' (expected dot or table)");
}

std::string export_dfa(const Dfa& d, ExportFormat format) {
  std::ostringstream out;
  const std::size_t k = d.alphabet.size();
  if (format == ExportFormat::Table) {
    out << "state";
    for (const auto& label : d.alphabet) out << '\t' << label;
    out << "\taccepting\n";
    for (std::size_t s = 0; s < d.state_count(); ++s) {
      out << s;
      for (std::size_t a = 0; a < k; ++a) out << '\t' << d.next(s, a);
      out << '\t' << (d.accepting[s] ? 1 : 0) << '\n';
    }
    return out.str();
  }

  out << "digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n";
  for (std::size_t s = 0; s < d.state_count(); ++s) {
    out << "  " << s << " [shape=" << (d.accepting[s] ? "doublecircle" : "circle") << "];\n";
  }
  out << "  start -> " << d.initial << ";\n";
  for (std::size_t s = 0; s < d.state_count(); ++s) {
    // Parallel edges are merged; targets appear in order of their first letter.
    std::vector<std::pair<std::size_t, std::string>> edges;
    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t t = d.next(s, a);
      auto it = std::ranges::find(edges, t, &std::pair<std::size_t, std::string>::first);
      if (it == edges.end()) {
        edges.emplace_back(t, d.alphabet[a]);
      } else {
        it->second += ", " + d.alphabet[a];
      }
    }
    for (const auto& [t, label] : edges) out << "  " << s << " -> " << t << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace geq
