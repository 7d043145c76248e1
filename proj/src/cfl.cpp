#include "geq/cfl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "geq/error.hpp"

namespace geq {

__extension__ using u128 = unsigned __int128;

Fraction Fraction::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvalidArgument("fraction with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

std::strong_ordering Fraction::operator<=>(const Fraction& other) const {
  const u128 lhs = static_cast<u128>(num) * other.den;
  const u128 rhs = static_cast<u128>(other.num) * den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Fraction::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Fraction distance(const Fraction& x, const Fraction& y) {
  const u128 a = static_cast<u128>(x.num) * y.den;
  const u128 b = static_cast<u128>(y.num) * x.den;
  u128 diff = a > b ? a - b : b - a;
  u128 den = static_cast<u128>(x.den) * y.den;
  // gcd on 128-bit values.
  u128 p = diff, q = den;
  while (q != 0) {
    const u128 r = p % q;
    p = q;
    q = r;
  }
  if (p > 1) {
    diff /= p;
    den /= p;
  }
  constexpr u128 kMax = ~std::uint64_t{0};
  if (diff > kMax || den > kMax) throw InvalidArgument("fraction distance overflows 64 bits");
  return Fraction{static_cast<std::uint64_t>(diff), static_cast<std::uint64_t>(den)};
}

RationalSet RationalSet::explicit_fractions(std::vector<Fraction> fractions) {
  RationalSet q(Kind::ExplicitFractions);
  for (auto& f : fractions) {
    if (f.num == 0) throw InvalidArgument("rational set members must be positive");
    f = Fraction::make(f.num, f.den);
  }
  std::ranges::sort(fractions);
  const auto [first, last] = std::ranges::unique(fractions);
  fractions.erase(first, last);
  q.fractions_ = std::move(fractions);
  return q;
}

RationalSet RationalSet::parse(std::string_view text) {
  if (text == "integers") return positive_integers();
  if (text == "divisor") return divisor_predicate();
  if (text == "all") return all_rationals();
  if (!text.starts_with("list:")) {
    throw ParseError("unknown rational set '" + std::string(text) + "' (expected integers, divisor, all, list:...)");
  }
  std::vector<Fraction> out;
  std::istringstream in{std::string(text.substr(5))};
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto slash = item.find('/');
    try {
      std::size_t used = 0;
      const auto num = std::stoull(item.substr(0, slash), &used);
      if (used != item.substr(0, slash).size()) throw std::invalid_argument(item);
      std::uint64_t den = 1;
      if (slash != std::string::npos) {
        const std::string den_text = item.substr(slash + 1);
        den = std::stoull(den_text, &used);
        if (used != den_text.size()) throw std::invalid_argument(item);
      }
      if (num == 0 || den == 0) throw std::invalid_argument(item);
      out.push_back(Fraction{num, den});
    } catch (const std::logic_error&) {
      throw ParseError("bad fraction '" + item + "' in rational set list");
    }
  }
  if (out.empty()) throw ParseError("empty rational set list");
  return explicit_fractions(std::move(out));
}

std::string RationalSet::describe() const {
  switch (kind_) {
    case Kind::PositiveIntegers:
      return "integers";
    case Kind::DivisorPredicate:
      return "divisor";
    case Kind::AllRationals:
      return "all";
    case Kind::ExplicitFractions: {
      std::string out = "list:";
      for (std::size_t i = 0; i < fractions_.size(); ++i) {
        if (i) out += ',';
        out += fractions_[i].str();
      }
      return out;
    }
  }
  return {};
}

bool lang_member(const RationalSet& q, std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) return false;
  switch (q.kind()) {
    case RationalSet::Kind::PositiveIntegers:
    case RationalSet::Kind::DivisorPredicate:
      return m % n == 0;
    case RationalSet::Kind::AllRationals:
      return true;
    case RationalSet::Kind::ExplicitFractions:
      return std::ranges::binary_search(q.fractions(), Fraction::make(m, n));
  }
  return false;
}

bool word_member(const RationalSet& q, std::string_view s) {
  std::size_t m = 0;
  while (m < s.size() && s[m] == 'a') ++m;
  std::size_t end = m;
  while (end < s.size() && s[end] == 'b') ++end;
  if (end != s.size()) return false;
  return lang_member(q, m, end - m);
}

namespace {

// Members of q with den <= denom_bound and value <= value_bound (explicit sets ignore value_bound < 0).
std::vector<Fraction> members_in_window(const RationalSet& q, std::uint64_t denom_bound, std::uint64_t value_bound) {
  std::vector<Fraction> out;
  switch (q.kind()) {
    case RationalSet::Kind::PositiveIntegers:
    case RationalSet::Kind::DivisorPredicate:
      for (std::uint64_t k = 1; k <= value_bound; ++k) out.push_back(Fraction{k, 1});
      break;
    case RationalSet::Kind::AllRationals:
      for (std::uint64_t den = 1; den <= denom_bound; ++den) {
        for (std::uint64_t num = 1; num <= value_bound * den; ++num) {
          if (std::gcd(num, den) == 1) out.push_back(Fraction{num, den});
        }
      }
      std::ranges::sort(out);
      break;
    case RationalSet::Kind::ExplicitFractions:
      for (const auto& f : q.fractions()) {
        if (f.den <= denom_bound && f <= Fraction{value_bound, 1}) out.push_back(f);
      }
      break;
  }
  return out;
}

// Nearest-neighbour gap of x among sorted `members` (excluding x itself).
std::optional<Fraction> nearest_gap(const Fraction& x, const std::vector<Fraction>& members) {
  std::optional<Fraction> best;
  auto it = std::ranges::lower_bound(members, x);
  auto consider = [&](const Fraction& y) {
    if (y == x) return;
    const Fraction d = distance(x, y);
    if (!best || d < *best) best = d;
  };
  auto hi = it;
  while (hi != members.end() && *hi == x) ++hi;
  if (hi != members.end()) consider(*hi);
  if (it != members.begin()) consider(*(it - 1));
  return best;
}

}  // namespace

IsolationReport isolated_points(const RationalSet& q, std::uint64_t denom_bound, std::uint64_t value_bound,
                                std::uint64_t widen) {
  if (denom_bound == 0 || value_bound == 0) throw InvalidArgument("isolation window bounds must be positive");
  if (widen < 2) throw InvalidArgument("widening factor must be at least 2");
  IsolationReport report;
  report.denom_bound = denom_bound;
  report.value_bound = value_bound;
  report.window_denom_bound = widen * denom_bound;

  const bool finite = q.kind() == RationalSet::Kind::ExplicitFractions;
  const std::uint64_t neighbour_values = finite ? ~std::uint64_t{0} : value_bound + 1;
  const auto near = finite ? q.fractions() : members_in_window(q, denom_bound, neighbour_values);
  const auto wide = finite ? q.fractions() : members_in_window(q, report.window_denom_bound, neighbour_values);

  for (const Fraction& x : members_in_window(q, denom_bound, value_bound)) {
    const auto gap = nearest_gap(x, near);
    if (gap == nearest_gap(x, wide)) report.points.push_back(IsolatedPoint{x, gap});
  }
  return report;
}

std::string PumpingWitness::word() const { return std::string(a_count, 'a') + std::string(b_count, 'b'); }

PumpingWitness pumping_witness_params(std::uint64_t numerator, std::uint64_t denominator,
                                      const std::optional<Fraction>& epsilon, std::uint64_t pumping_length) {
  if (numerator == 0 || denominator == 0) throw InvalidArgument("M and N must be positive");
  if (std::gcd(numerator, denominator) != 1) {
    throw InvalidArgument(std::to_string(numerator) + "/" + std::to_string(denominator) + " is not reduced");
  }
  if (numerator + denominator <= pumping_length) {
    throw InvalidArgument("M + N = " + std::to_string(numerator + denominator) +
                          " must exceed the pumping length " + std::to_string(pumping_length));
  }
  std::uint64_t n = 1;
  if (epsilon) {
    if (epsilon->num == 0) throw InvalidArgument("epsilon must be positive");
    // ceil((M+N)^2 * eps.den / (eps.num * N^2))
    const u128 s = numerator + denominator;
    const u128 top = s * s * epsilon->den;
    const u128 bottom = static_cast<u128>(epsilon->num) * denominator * denominator;
    const u128 q = (top + bottom - 1) / bottom;
    if (q > kMaxWitnessLength) throw LimitExceeded("witness multiplier exceeds the length cap");
    n = static_cast<std::uint64_t>(q) + 1;
  }
  PumpingWitness w{n, n * numerator, n * denominator};
  if (static_cast<u128>(n) * (numerator + denominator) > kMaxWitnessLength) {
    throw LimitExceeded("witness length " + std::to_string(w.length()) + " exceeds the cap of " +
                        std::to_string(kMaxWitnessLength));
  }
  return w;
}

namespace {

struct Counts {
  std::size_t a = 0;
  std::size_t b = 0;
};

// Letter counts of [from, to) inside a^m b^*.
Counts segment(std::size_t m, std::size_t from, std::size_t to) {
  const std::size_t a_end = std::min(to, m);
  const std::size_t a = a_end > from ? a_end - from : 0;
  return Counts{a, (to - from) - a};
}

// Membership of u v^t x y^t z without building it.
bool pumped_member(const RationalSet& q, std::size_t m, std::size_t len, const Decomposition& d, unsigned t) {
  const Counts u = segment(m, 0, d.i);
  const Counts v = segment(m, d.i, d.j);
  const Counts x = segment(m, d.j, d.k);
  const Counts y = segment(m, d.k, d.l);
  const Counts z = segment(m, d.l, len);

  // Two copies of a repeated piece are enough to expose a "ba" factor.
  const unsigned copies = std::min(t, 2u);
  bool seen_b = false;
  bool shaped = true;
  auto feed = [&](const Counts& c) {
    if (c.a > 0 && seen_b) shaped = false;
    if (c.b > 0) seen_b = true;
  };
  feed(u);
  for (unsigned c = 0; c < copies; ++c) feed(v);
  feed(x);
  for (unsigned c = 0; c < copies; ++c) feed(y);
  feed(z);
  if (!shaped) return false;
  const std::uint64_t a_total = u.a + std::uint64_t{t} * v.a + x.a + std::uint64_t{t} * y.a + z.a;
  const std::uint64_t b_total = u.b + std::uint64_t{t} * v.b + x.b + std::uint64_t{t} * y.b + z.b;
  return lang_member(q, a_total, b_total);
}

void check_refutation_input(const RationalSet& q, std::size_t p, std::string_view s, unsigned t_min,
                            unsigned t_max) {
  if (p == 0) throw InvalidArgument("pumping length must be at least 1");
  if (t_min > 1) throw InvalidArgument("smallest pumping exponent must be 0 or 1");
  if (t_max < t_min) throw InvalidArgument("largest pumping exponent is below the smallest");
  if (s.size() < p) {
    throw InvalidArgument("word length " + std::to_string(s.size()) + " is below the pumping length " +
                          std::to_string(p));
  }
  if (!word_member(q, s)) throw InvalidArgument("word is not in the language of " + q.describe());
}

template <typename Fn>
void for_each_split(std::size_t i, std::size_t len, std::size_t p, Fn&& fn) {
  const std::size_t window = std::min(p, len - i);
  for (std::size_t lv = 0; lv <= window; ++lv) {
    for (std::size_t lx = 0; lv + lx <= window; ++lx) {
      for (std::size_t ly = 0; lv + lx + ly <= window; ++ly) {
        if (lv + ly == 0) continue;
        fn(Decomposition{i, i + lv, i + lv + lx, i + lv + lx + ly, std::nullopt});
      }
    }
  }
}

RefutationReport finish(std::size_t p, std::string_view s, unsigned t_min, unsigned t_max,
                        std::vector<Decomposition> ds) {
  RefutationReport r;
  r.pumping_length = p;
  r.word = std::string(s);
  r.t_min = t_min;
  r.t_max = t_max;
  r.refuted = std::ranges::all_of(ds, &Decomposition::refuted);
  r.decompositions = std::move(ds);
  return r;
}

}  // namespace

RefutationReport refute_pumping(const RationalSet& q, std::size_t p, std::string_view s, unsigned t_max,
                                unsigned t_min) {
  check_refutation_input(q, p, s, t_min, t_max);
  const std::size_t len = s.size();
  const std::size_t m = static_cast<std::size_t>(std::ranges::count(s, 'a'));

  std::vector<std::vector<Decomposition>> buckets(len);
  const auto count = static_cast<std::ptrdiff_t>(len);
#pragma omp parallel for schedule(dynamic, 16) if (count >= 256)
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for_each_split(i, len, p, [&](Decomposition d) {
      for (unsigned t = t_min; t <= t_max; ++t) {
        if (!pumped_member(q, m, len, d, t)) {
          d.failing_t = t;
          break;
        }
      }
      buckets[i].push_back(d);
    });
  }

  std::vector<Decomposition> all;
  for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
  return finish(p, s, t_min, t_max, std::move(all));
}

std::string pumped_word(std::string_view s, const Decomposition& d, unsigned t) {
  std::string out(s.substr(0, d.i));
  for (unsigned c = 0; c < t; ++c) out += s.substr(d.i, d.j - d.i);
  out += s.substr(d.j, d.k - d.j);
  for (unsigned c = 0; c < t; ++c) out += s.substr(d.k, d.l - d.k);
  out += s.substr(d.l);
  return out;
}

namespace serial {

RefutationReport refute_pumping(const RationalSet& q, std::size_t p, std::string_view s, unsigned t_max,
                                unsigned t_min) {
  check_refutation_input(q, p, s, t_min, t_max);
  std::vector<Decomposition> all;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for_each_split(i, s.size(), p, [&](Decomposition d) {
      for (unsigned t = t_min; t <= t_max; ++t) {
        if (!word_member(q, pumped_word(s, d, t))) {
          d.failing_t = t;
          break;
        }
      }
      all.push_back(d);
    });
  }
  return finish(p, s, t_min, t_max, std::move(all));
}

}  // namespace serial

std::string format_report(const RefutationReport& report) {
  std::ostringstream out;
  const std::size_t len = report.word.size();
  for (const auto& d : report.decompositions) {
    out << "u=[0," << d.i << ") v=[" << d.i << ',' << d.j << ") x=[" << d.j << ',' << d.k << ") y=[" << d.k << ','
        << d.l << ") z=[" << d.l << ',' << len << ") t=" << (d.failing_t ? *d.failing_t : report.t_max)
        << " verdict=" << (d.refuted() ? "out" : "in") << '\n';
  }
  if (report.refuted) {
    out << "REFUTED p=" << report.pumping_length << '\n';
  } else {
    out << "NOT-REFUTED\n";
  }
  return out.str();
}

AutoWitness auto_witness(const RationalSet& q, std::uint64_t p) {
  std::uint64_t denom_bound = p + 2;
  std::uint64_t value_bound = p + 2;
  for (const auto& f : q.fractions()) {
    denom_bound = std::max(denom_bound, f.den);
    value_bound = std::max(value_bound, (f.num + f.den - 1) / f.den);
  }
  const auto report = isolated_points(q, denom_bound, value_bound);
  for (const auto& point : report.points) {
    if (point.value.num + point.value.den >= p + 2) {
      return AutoWitness{point, pumping_witness_params(point.value.num, point.value.den, point.epsilon, p)};
    }
  }
  throw InvalidArgument("no isolated point M/N with M + N >= " + std::to_string(p + 2) + " in " + q.describe());
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> z_counterexample_language(std::uint64_t max_m,
                                                                                 std::uint64_t max_n) {
  if (max_m == 0 || max_n == 0) throw InvalidArgument("bounds must be at least 1");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      if (m % n == 0) out.emplace_back(m, n);
    }
  }
  return out;
}

bool z_solvable_by_search(std::uint64_t m, std::uint64_t n, std::int64_t bound) {
  const auto mm = static_cast<std::int64_t>(m);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::int64_t b = -bound; b <= bound; ++b) {
    if (mm + nn * b == 0) return true;
  }
  return false;
}

}  // namespace geq
