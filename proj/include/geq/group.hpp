#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geq {

/// Dense index of a group element, 0..|G|-1.
using Element = std::uint16_t;

/// Index into a symmetric alphabet of generator letters.
using Letter = std::uint32_t;

inline constexpr std::size_t kMaxGroupOrder = 256;

/// A finite alphabet closed under a letter involution (the inverse map).
struct Alphabet {
  std::vector<std::string> labels;
  std::vector<Letter> inverse;

  std::size_t size() const { return labels.size(); }
  std::optional<Letter> find(std::string_view label) const;
};

/// Finite group given by its Cayley table together with a symmetric
/// generating set. Immutable after construction.
class FiniteGroup {
 public:
  /// Validates every group axiom exhaustively; throws InvalidGroup.
  /// `table` is row-major: table[g * order + h] = g*h.
  FiniteGroup(std::string name, std::vector<std::string> labels, Element identity,
              std::vector<Element> table, std::vector<Element> generators);

  const std::string& name() const { return name_; }
  std::size_t order() const { return labels_.size(); }
  Element identity() const { return identity_; }

  Element mul(Element g, Element h) const { return table_[std::size_t{g} * order() + h]; }
  Element inv(Element g) const { return inverses_[g]; }

  const std::string& label(Element g) const { return labels_[g]; }
  std::optional<Element> find(std::string_view label) const;

  std::span<const Element> table() const { return table_; }
  std::span<const Element> generators() const { return generators_; }

  /// Generators as letters, in file order; inverse letters resolved through the table.
  const Alphabet& alphabet() const { return alphabet_; }
  Element letter_element(Letter a) const { return generators_[a]; }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  Element identity_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<Element> generators_;
  Alphabet alphabet_;
};

/// Parses the line-oriented group file format.
FiniteGroup parse_group(std::string_view text);
FiniteGroup load_group(std::istream& in);
FiniteGroup load_group_file(const std::filesystem::path& path);

/// Writes `g` in the group file format; parse_group(format_group(g)) == g.
std::string format_group(const FiniteGroup& g);

// Small stock groups, used by tests, benchmarks and the sample data files.

/// Z/k with elements e, a, a2, ... and A = {a, a^-1}.
FiniteGroup cyclic_group(std::size_t k);

/// Z/2 x Z/2 with A = all non-identity elements.
FiniteGroup klein_four_group();

/// S3 as permutations of {0,1,2}. With `all_nonidentity`, A = the five
/// non-identity elements; otherwise A = two transpositions {s, t}, each its
/// own inverse.
FiniteGroup symmetric_group_3(bool all_nonidentity);

}  // namespace geq
