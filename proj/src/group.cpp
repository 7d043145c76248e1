#include "geq/group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "geq/error.hpp"

namespace geq {

std::optional<Letter> Alphabet::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

namespace {

bool looks_like_variable(std::string_view label) {
  static const std::regex var{R"(x[0-9]+(\^-1)?)"};
  return std::regex_match(label.begin(), label.end(), var);
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels, Element identity,
                         std::vector<Element> table, std::vector<Element> generators)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      identity_(identity),
      table_(std::move(table)),
      generators_(std::move(generators)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidGroup("group has no elements");
  if (n > kMaxGroupOrder) {
    throw InvalidGroup("group order " + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(kMaxGroupOrder));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (labels_[i].empty()) throw InvalidGroup("empty element label");
    if (looks_like_variable(labels_[i])) {
      throw InvalidGroup("element label '" + labels_[i] + "' collides with variable syntax");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) throw InvalidGroup("duplicate element label '" + labels_[i] + "'");
    }
  }
  if (identity_ >= n) throw InvalidGroup("identity index out of range");
  if (table_.size() != n * n) throw InvalidGroup("Cayley table must be |G| x |G|");
  for (Element v : table_) {
    if (v >= n) throw InvalidGroup("Cayley table entry out of range");
  }

  for (std::size_t g = 0; g < n; ++g) {
    const auto ge = static_cast<Element>(g);
    if (mul(identity_, ge) != ge || mul(ge, identity_) != ge) {
      throw InvalidGroup("identity axiom fails for '" + labels_[g] + "'");
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      const auto gh = mul(static_cast<Element>(g), static_cast<Element>(h));
      for (std::size_t k = 0; k < n; ++k) {
        const auto kk = static_cast<Element>(k);
        if (mul(gh, kk) != mul(static_cast<Element>(g), mul(static_cast<Element>(h), kk))) {
          throw InvalidGroup("associativity fails for (" + labels_[g] + ", " + labels_[h] + ", " +
                             labels_[k] + ")");
        }
      }
    }
  }

  inverses_.assign(n, identity_);
  for (std::size_t g = 0; g < n; ++g) {
    std::optional<Element> found;
    for (std::size_t h = 0; h < n; ++h) {
      const auto ge = static_cast<Element>(g);
      const auto he = static_cast<Element>(h);
      if (mul(ge, he) == identity_ && mul(he, ge) == identity_) {
        found = he;
        break;
      }
    }
    if (!found) throw InvalidGroup("element '" + labels_[g] + "' has no inverse");
    inverses_[g] = *found;
  }

  if (generators_.empty() && n > 1) throw InvalidGroup("empty generating set");
  std::vector<bool> in_a(n, false);
  for (Element a : generators_) {
    if (a >= n) throw InvalidGroup("generator index out of range");
    if (in_a[a]) throw InvalidGroup("duplicate generator '" + labels_[a] + "'");
    in_a[a] = true;
  }
  for (Element a : generators_) {
    if (!in_a[inverses_[a]]) {
      throw InvalidGroup("asymmetric generating set: inverse of '" + labels_[a] + "' is '" +
                         labels_[inverses_[a]] + "', which is not a generator");
    }
  }

  // Closure of A under right multiplication, starting from e.
  std::vector<bool> reached(n, false);
  std::vector<Element> frontier{identity_};
  reached[identity_] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const Element g = frontier.back();
    frontier.pop_back();
    for (Element a : generators_) {
      const Element h = mul(g, a);
      if (!reached[h]) {
        reached[h] = true;
        ++count;
        frontier.push_back(h);
      }
    }
  }
  if (count != n) {
    throw InvalidGroup("generating set does not generate the group (reaches " +
                       std::to_string(count) + " of " + std::to_string(n) + " elements)");
  }

  alphabet_.labels.reserve(generators_.size());
  for (Element a : generators_) alphabet_.labels.push_back(labels_[a]);
  alphabet_.inverse.resize(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Element target = inverses_[generators_[i]];
    const auto it = std::find(generators_.begin(), generators_.end(), target);
    alphabet_.inverse[i] = static_cast<Letter>(it - generators_.begin());
  }
}

std::optional<Element> FiniteGroup::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Element>(i);
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

FiniteGroup parse_group(std::string_view text) {
  std::optional<std::string> name;
  std::vector<std::string> labels;
  std::optional<std::string> identity;
  std::vector<std::string> generators;
  std::map<std::string, std::pair<std::size_t, std::vector<std::string>>> rows;
  bool have_elements = false;
  bool have_generators = false;
  bool in_table = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto words = split_words(raw);
    if (words.empty()) continue;
    const std::string& key = words.front();
    if (key == "group") {
      if (words.size() != 2) fail(line_no, "expected 'group <name>'");
      name = words[1];
      in_table = false;
    } else if (key == "elements") {
      if (words.size() < 2) fail(line_no, "expected at least one element label");
      labels.assign(words.begin() + 1, words.end());
      have_elements = true;
      in_table = false;
    } else if (key == "identity") {
      if (words.size() != 2) fail(line_no, "expected 'identity <label>'");
      identity = words[1];
      in_table = false;
    } else if (key == "table") {
      if (words.size() != 1) fail(line_no, "unexpected text after 'table'");
      in_table = true;
    } else if (key == "generators") {
      generators.assign(words.begin() + 1, words.end());
      have_generators = true;
      in_table = false;
    } else if (in_table && key.size() > 1 && key.back() == ':') {
      std::string row = key.substr(0, key.size() - 1);
      if (rows.contains(row)) fail(line_no, "duplicate table row '" + row + "'");
      rows.emplace(row, std::pair{line_no, std::vector<std::string>(words.begin() + 1, words.end())});
    } else {
      fail(line_no, "unrecognized line starting with '" + key + "'");
    }
  }

  if (!name) throw ParseError("missing 'group' line");
  if (!have_elements) throw ParseError("missing 'elements' line");
  if (!identity) throw ParseError("missing 'identity' line");
  if (!have_generators) throw ParseError("missing 'generators' line");
  if (labels.size() > kMaxGroupOrder) {
    throw InvalidGroup("group order " + std::to_string(labels.size()) + " exceeds the cap of " +
                       std::to_string(kMaxGroupOrder));
  }

  std::map<std::string, Element> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<Element>(i)).second) {
      throw ParseError("duplicate element label '" + labels[i] + "'");
    }
  }
  auto lookup = [&](const std::string& label, std::size_t line) {
    auto it = index.find(label);
    if (it == index.end()) {
      if (line == 0) throw ParseError("unknown element '" + label + "'");
      fail(line, "unknown element '" + label + "'");
    }
    return it->second;
  };

  const std::size_t n = labels.size();
  std::vector<Element> table(n * n);
  if (rows.size() != n) {
    throw ParseError("table has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
  }
  for (const auto& [row, entry] : rows) {
    const auto& [line, cells] = entry;
    const Element g = lookup(row, line);
    if (cells.size() != n) {
      fail(line, "row '" + row + "' has " + std::to_string(cells.size()) + " entries, expected " +
                     std::to_string(n));
    }
    for (std::size_t h = 0; h < n; ++h) table[std::size_t{g} * n + h] = lookup(cells[h], line);
  }

  std::vector<Element> gens;
  gens.reserve(generators.size());
  for (const auto& label : generators) gens.push_back(lookup(label, 0));

  return FiniteGroup(*name, std::move(labels), lookup(*identity, 0), std::move(table), std::move(gens));
}

FiniteGroup load_group(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group(buf.str());
}

FiniteGroup load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file '" + path.string() + "'");
  return load_group(in);
}

std::string format_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << "group " << g.name() << "\nelements";
  for (std::size_t i = 0; i < g.order(); ++i) out << ' ' << g.label(static_cast<Element>(i));
  out << "\nidentity " << g.label(g.identity()) << "\ntable\n";
  for (std::size_t i = 0; i < g.order(); ++i) {
    out << g.label(static_cast<Element>(i)) << ':';
    for (std::size_t j = 0; j < g.order(); ++j) {
      out << ' ' << g.label(g.mul(static_cast<Element>(i), static_cast<Element>(j)));
    }
    out << '\n';
  }
  out << "generators";
  for (Element a : g.generators()) out << ' ' << g.label(a);
  out << '\n';
  return out.str();
}

FiniteGroup cyclic_group(std::size_t k) {
  if (k == 0 || k > kMaxGroupOrder) throw InvalidArgument("cyclic group order out of range");
  std::vector<std::string> labels{"e"};
  if (k > 1) labels.emplace_back("a");
  for (std::size_t i = 2; i < k; ++i) labels.push_back("a" + std::to_string(i));
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = static_cast<Element>((i + j) % k);
  }
  std::vector<Element> gens;
  if (k > 1) {
    gens.push_back(1);
    if (k > 2) gens.push_back(static_cast<Element>(k - 1));
  }
  return FiniteGroup("Z" + std::to_string(k), std::move(labels), 0, std::move(table), std::move(gens));
}

FiniteGroup klein_four_group() {
  std::vector<std::string> labels{"e", "a", "b", "c"};
  std::vector<Element> table(16);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) table[i * 4 + j] = static_cast<Element>(i ^ j);
  }
  return FiniteGroup("Z2xZ2", std::move(labels), 0, std::move(table), {1, 2, 3});
}

FiniteGroup symmetric_group_3(bool all_nonidentity) {
  using Perm = std::array<int, 3>;
  // Listed so that r2 = r^-1 and s, t, u are the transpositions.
  const std::array<Perm, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  std::vector<std::string> labels{"e", "r", "r2", "s", "t", "u"};
  std::vector<Element> table(36);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      // (p*q)(x) = q(p(x)): apply left factor first.
      Perm prod{};
      for (int x = 0; x < 3; ++x) prod[x] = perms[j][perms[i][x]];
      const auto it = std::find(perms.begin(), perms.end(), prod);
      table[i * 6 + j] = static_cast<Element>(it - perms.begin());
    }
  }
  std::vector<Element> gens = all_nonidentity ? std::vector<Element>{1, 2, 3, 4, 5} : std::vector<Element>{3, 4};
  return FiniteGroup(all_nonidentity ? "S3" : "S3st", std::move(labels), 0, std::move(table), std::move(gens));
}

}  // namespace geq
