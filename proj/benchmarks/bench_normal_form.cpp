#include <benchmark/benchmark.h>

#include <random>

#include "braid/normal_form.hpp"
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

void BM_NormalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int len = static_cast<int>(state.range(1));
  std::mt19937 rng(42);
  std::vector<braid::BraidWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(n, len, rng));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(braid::normal_form(words[i++ % words.size()]));
  }
}

void BM_WordsEqual(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937 rng(43);
  braid::BraidWord u = random_word(n, 40, rng);
  braid::BraidWord v =
      braid::multiply(braid::multiply(u, random_word(n, 6, rng)),
                      braid::invert(random_word(n, 6, rng)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(braid::words_equal(u, v));
  }
}

}  // namespace

BENCHMARK(BM_NormalForm)->Args({4, 20})->Args({6, 40})->Args({8, 80});
BENCHMARK(BM_WordsEqual)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
