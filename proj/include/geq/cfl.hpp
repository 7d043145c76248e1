#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geq {

/// Positive fraction kept in lowest terms.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// Reduces; throws InvalidArgument on a zero denominator.
  static Fraction make(std::uint64_t num, std::uint64_t den);

  bool operator==(const Fraction&) const = default;
  std::strong_ordering operator<=>(const Fraction& other) const;
  std::string str() const;
};

/// |x - y| as an exact fraction.
Fraction distance(const Fraction& x, const Fraction& y);

/// A finitely described set Q of positive rationals, read through the
/// language {a^m b^n : m/n in Q}.
class RationalSet {
 public:
  enum class Kind { ExplicitFractions, PositiveIntegers, DivisorPredicate, AllRationals };

  static RationalSet explicit_fractions(std::vector<Fraction> fractions);
  static RationalSet positive_integers() { return RationalSet(Kind::PositiveIntegers); }
  static RationalSet divisor_predicate() { return RationalSet(Kind::DivisorPredicate); }
  static RationalSet all_rationals() { return RationalSet(Kind::AllRationals); }

  /// `integers`, `divisor`, `all`, or `list:<m/n>,<m/n>,...`.
  static RationalSet parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// Sorted, deduplicated, lowest terms. Empty unless kind is ExplicitFractions.
  const std::vector<Fraction>& fractions() const { return fractions_; }
  std::string describe() const;

 private:
  explicit RationalSet(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<Fraction> fractions_;
};

/// a^m b^n in L_Q: requires m, n >= 1 and m/n in Q.
bool lang_member(const RationalSet& q, std::uint64_t m, std::uint64_t n);

/// s must be exactly a^m b^n and (m, n) a language member.
bool word_member(const RationalSet& q, std::string_view s);

struct IsolatedPoint {
  Fraction value;
  /// Distance to the nearest other member seen; nullopt means no other member (infinite).
  std::optional<Fraction> epsilon;
};

/// Isolation is certified only relative to the search window recorded here.
struct IsolationReport {
  std::vector<IsolatedPoint> points;
  std::uint64_t denom_bound = 0;
  std::uint64_t value_bound = 0;
  std::uint64_t window_denom_bound = 0;
};

inline constexpr std::uint64_t kDefaultWidening = 4;

/// Members m/n with n <= denom_bound and m/n <= value_bound whose nearest
/// neighbour gap does not shrink when the denominator window widens to
/// widen * denom_bound.
IsolationReport isolated_points(const RationalSet& q, std::uint64_t denom_bound, std::uint64_t value_bound,
                                std::uint64_t widen = kDefaultWidening);

inline constexpr std::uint64_t kMaxWitnessLength = 20'000;

struct PumpingWitness {
  std::uint64_t multiplier = 0;
  std::uint64_t a_count = 0;
  std::uint64_t b_count = 0;

  std::string word() const;
  std::uint64_t length() const { return a_count + b_count; }
};

/// n = ceil((M+N)^2 / (eps N^2)) + 1 and w = a^{nM} b^{nN}; an infinite eps
/// (nullopt) gives n = 1. Requires M/N reduced and M + N > p.
PumpingWitness pumping_witness_params(std::uint64_t numerator, std::uint64_t denominator,
                                      const std::optional<Fraction>& epsilon, std::uint64_t pumping_length);

/// One split s = u v x y z with u=[0,i) v=[i,j) x=[j,k) y=[k,l) z=[l,|s|).
struct Decomposition {
  std::size_t i = 0, j = 0, k = 0, l = 0;
  /// Exponent t with u v^t x y^t z outside L, if one was found.
  std::optional<unsigned> failing_t;

  bool refuted() const { return failing_t.has_value(); }
};

struct RefutationReport {
  std::size_t pumping_length = 0;
  std::string word;
  unsigned t_min = 1;
  unsigned t_max = 0;
  std::vector<Decomposition> decompositions;
  bool refuted = false;
};

inline constexpr unsigned kDefaultTMax = 3;
/// Pumping exponents range over the positive integers unless t = 0 is asked for.
inline constexpr unsigned kDefaultTMin = 1;

/// Tries every decomposition with |vxy| <= p and |vy| >= 1 against
/// exponents t = t_min..t_max (t_min is 0 or 1). Decompositions are listed in
/// (|u|, |v|, |x|, |y|) order. Throws InvalidArgument when s is not in L_Q or
/// |s| < p.
RefutationReport refute_pumping(const RationalSet& q, std::size_t pumping_length, std::string_view s,
                                unsigned t_max = kDefaultTMax, unsigned t_min = kDefaultTMin);

namespace serial {

/// Reference: materializes each pumped word and checks it with word_member.
RefutationReport refute_pumping(const RationalSet& q, std::size_t pumping_length, std::string_view s,
                                unsigned t_max = kDefaultTMax, unsigned t_min = kDefaultTMin);

}  // namespace serial

/// u v^t x y^t z for the given split of s.
std::string pumped_word(std::string_view s, const Decomposition& d, unsigned t);

/// Decomposition lines followed by `REFUTED p=<p>` or `NOT-REFUTED`.
std::string format_report(const RefutationReport& report);

/// The first windowed isolated point M/N with M + N >= p + 2, turned into a
/// witness. Throws InvalidArgument when the window holds none.
struct AutoWitness {
  IsolatedPoint point;
  PumpingWitness witness;
};
AutoWitness auto_witness(const RationalSet& q, std::uint64_t pumping_length);

/// Pairs (m, n), 1 <= m <= max_m, 1 <= n <= max_n, for which w^m x^n has a
/// solution over Z = <c>, i.e. b^n c^m = e is solvable; equivalently n | m.
std::vector<std::pair<std::uint64_t, std::uint64_t>> z_counterexample_language(std::uint64_t max_m,
                                                                                 std::uint64_t max_n);

/// Searches integers b in [-bound, bound] with m + n*b = 0.
bool z_solvable_by_search(std::uint64_t m, std::uint64_t n, std::int64_t bound);

}  // namespace geq
