#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "strsup/contraction.hpp"
#include "strsup/frontend.hpp"
#include "strsup/ordering.hpp"
#include "strsup/saturation.hpp"
#include "strsup/strmatch.hpp"
#include "strsup/wordproblem.hpp"

using namespace strsup;

namespace {

Str random_str(std::mt19937_64& rng, std::size_t len, std::uint8_t k) {
  std::string bytes(len, '\0');
  for (auto& b : bytes) b = static_cast<char>(rng() % k);
  return Str::from_ids(std::move(bytes));
}

// Worst case for the ordering: equal up to the last symbol.
void BM_CmpStr(benchmark::State& state) {
  auto prec = build_precedence("ab");
  std::mt19937_64 rng(1);
  Str s = random_str(rng, static_cast<std::size_t>(state.range(0)), 2);
  std::string last = s.ids();
  last.back() = last.back() == 0 ? 1 : 0;
  Str t = Str::from_ids(last);
  for (auto _ : state) benchmark::DoNotOptimize(cmp_str(s, t, prec));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CmpStr)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_Occurrences(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Str text = random_str(rng, static_cast<std::size_t>(state.range(0)), 2);
  Str pattern = random_str(rng, 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(occurrence_starts(pattern, text));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Occurrences)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

// a^n against itself has n overlaps.
void BM_Overlaps(benchmark::State& state) {
  Str s = Str::from_ids(std::string(static_cast<std::size_t>(state.range(0)), '\0'));
  for (auto _ : state) benchmark::DoNotOptimize(overlaps(s, s));
}
BENCHMARK(BM_Overlaps)->RangeMultiplier(4)->Range(16, 1024);

void BM_Normalize(benchmark::State& state) {
  auto pr = parse_problem("order a > b > c\nclause bb = eps\nclause a = b\nclause bc = cb\n");
  std::vector<const Clause*> units;
  for (const auto& c : pr.clauses) units.push_back(&c);
  Normalizer nf(units);
  std::mt19937_64 rng(3);
  Str s = random_str(rng, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(nf(s));
}
BENCHMARK(BM_Normalize)->RangeMultiplier(10)->Range(100, 100000);

const char* const kExample1 =
    "order a > b > c > d > e\nclause ad = b | ad = c\nclause b = c\nclause ad = e\nclause c != e\n";
const char* const kExample2 =
    "order a > b > c > d\nclause aa = a | bd != a\nclause cd = b\nclause ad = c\nclause bd = a\n"
    "clause dab != db\n";
const char* const kExample3 =
    "order a > b > c\nclause aa = eps\nclause bb = eps\nclause ab = eps\nclause ab != ba | ac = ca\n"
    "clause ab != ba | ac != ca | bc = cb\ngoal acbcba = bccaba\n";

void BM_Saturate(benchmark::State& state, const char* text) {
  auto pr = parse_problem(text);
  for (auto _ : state) benchmark::DoNotOptimize(saturate(pr.clauses, pr.precedence));
}
BENCHMARK_CAPTURE(BM_Saturate, example1, kExample1);
BENCHMARK_CAPTURE(BM_Saturate, example2, kExample2);
BENCHMARK_CAPTURE(BM_Saturate, example3, kExample3);

void BM_DecideExample3(benchmark::State& state) {
  auto pr = parse_problem(kExample3);
  auto sat = saturate_horn(pr.clauses, pr.precedence);
  for (auto _ : state) benchmark::DoNotOptimize(decide_word(sat.clauses, *pr.goal, pr.precedence));
}
BENCHMARK(BM_DecideExample3);

}  // namespace

BENCHMARK_MAIN();
