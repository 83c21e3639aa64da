#include <benchmark/benchmark.h>

#include <random>

#include "braid/simconj.hpp"
#include "braid/word.hpp"

namespace {

braid::BraidWord random_word(int n, int len, std::mt19937& rng) {
  braid::BraidWord u{n, {}};
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < len; ++i)
    u.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return u;
}

void BM_SummitTuple(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  braid::ConjTuple t{n, {random_word(n, 6, rng), random_word(n, 6, rng)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(braid::summit_tuple(t));
  }
}

void BM_SolveSimconjPlanted(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937 rng(8);
  braid::ConjTuple s{n, {random_word(n, 5, rng), random_word(n, 5, rng)}};
  braid::BraidWord x = random_word(n, 5, rng);
  braid::ConjTuple t{n, {}};
  for (const auto& c : s.components)
    t.components.push_back(
        braid::multiply(braid::multiply(braid::invert(x), c), x));
  for (auto _ : state) {
    benchmark::DoNotOptimize(braid::solve_simultaneous_conjugacy(s, t));
  }
}

}  // namespace

BENCHMARK(BM_SummitTuple)->Arg(3)->Arg(4);
BENCHMARK(BM_SolveSimconjPlanted)->Arg(3)->Arg(4);
