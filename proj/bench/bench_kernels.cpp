// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "geq/brute.hpp"
#include "geq/cfl.hpp"
#include "geq/dfa.hpp"

namespace {

geq::Polynomial random_polynomial(const geq::FiniteGroup& g, std::size_t arity, std::size_t len,
                                  std::uint32_t seed) {
  const auto tokens = geq::canonical_tokens(g.alphabet(), arity);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1);
  geq::Polynomial p{arity, {}};
  for (std::size_t i = 0; i < len; ++i) p.tokens.push_back(tokens[pick(rng)]);
  return p;
}

void BM_MembershipParallel(benchmark::State& state) {
  const auto g = geq::symmetric_group_3(true);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_polynomial(g, n, 24, 1);
  for (auto _ : state) benchmark::DoNotOptimize(geq::membership(g, n, p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.size()));
}

void BM_MembershipSerial(benchmark::State& state) {
  const auto g = geq::symmetric_group_3(true);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_polynomial(g, n, 24, 1);
  for (auto _ : state) benchmark::DoNotOptimize(geq::serial::membership(g, n, p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.size()));
}

// x1 a x2 x2^-1 ... xn xn^-1: the least solution has x1 = a^-1, the last
// value of the most significant digit, so most tuples are visited.
geq::Polynomial late_witness(std::size_t n) {
  geq::Polynomial p{n, {geq::Token::var(1), geq::Token::generator(0)}};
  for (std::uint32_t k = 2; k <= n; ++k) {
    p.tokens.push_back(geq::Token::var(k));
    p.tokens.push_back(geq::Token::var_inv(k));
  }
  return p;
}

void BM_BruteParallel(benchmark::State& state) {
  const auto g = geq::cyclic_group(6);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_polynomial(g, n, 16, 2);
  for (auto _ : state) benchmark::DoNotOptimize(geq::solve_brute(g, n, p));
}

void BM_BruteSerial(benchmark::State& state) {
  const auto g = geq::cyclic_group(6);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_polynomial(g, n, 16, 2);
  for (auto _ : state) benchmark::DoNotOptimize(geq::serial::solve_brute(g, n, p));
}

void BM_BruteLateWitnessParallel(benchmark::State& state) {
  const auto g = geq::cyclic_group(6);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = late_witness(n);
  for (auto _ : state) benchmark::DoNotOptimize(geq::solve_brute(g, n, p));
}

void BM_BruteLateWitnessSerial(benchmark::State& state) {
  const auto g = geq::cyclic_group(6);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = late_witness(n);
  for (auto _ : state) benchmark::DoNotOptimize(geq::serial::solve_brute(g, n, p));
}

void BM_RefuteParallel(benchmark::State& state) {
  const auto q = geq::RationalSet::positive_integers();
  const auto p = static_cast<std::size_t>(state.range(0));
  const auto s = geq::auto_witness(q, p).witness.word();
  for (auto _ : state) benchmark::DoNotOptimize(geq::refute_pumping(q, p, s, 2));
}

void BM_RefuteSerial(benchmark::State& state) {
  const auto q = geq::RationalSet::positive_integers();
  const auto p = static_cast<std::size_t>(state.range(0));
  const auto s = geq::auto_witness(q, p).witness.word();
  for (auto _ : state) benchmark::DoNotOptimize(geq::serial::refute_pumping(q, p, s, 2));
}

}  // namespace

BENCHMARK(BM_MembershipParallel)->DenseRange(4, 7);
BENCHMARK(BM_MembershipSerial)->DenseRange(4, 7);
BENCHMARK(BM_BruteParallel)->DenseRange(5, 8);
BENCHMARK(BM_BruteSerial)->DenseRange(5, 8);
BENCHMARK(BM_BruteLateWitnessParallel)->DenseRange(5, 8);
BENCHMARK(BM_BruteLateWitnessSerial)->DenseRange(5, 8);
BENCHMARK(BM_RefuteParallel)->DenseRange(2, 6, 2);
BENCHMARK(BM_RefuteSerial)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
