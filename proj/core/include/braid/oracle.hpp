#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "braid/dcp.hpp"
#include "braid/parabolic.hpp"
#include "braid/word.hpp"

namespace braid::oracle {

// Independent bounded brute-force deciders used as ground truth in tests.
// Nothing here shares machinery with the modules it checks beyond BraidWord
// and the word problem.

// All products of at most max_len factors from gens and their inverses,
// deduplicated by normal form, in deterministic BFS order (shortest and
// earliest witness first). Guarded: max_len <= 12.
std::vector<BraidWord> enumerate_words(int n, const std::vector<BraidWord>& gens,
                                       int max_len);

// Searches witnesses (a, b) over bounded products of the two subgroups'
// generators. A hit is conclusive; nullopt means "no witness within bound".
std::optional<std::pair<BraidWord, BraidWord>> brute_dcp(
    const DCPInstance& inst, int max_len);

// x with x^{-1} u x = v among all words of length <= max_len.
std::optional<BraidWord> brute_conjugator(const BraidWord& u,
                                          const BraidWord& v, int max_len);

// u in <gens> within the bound.
bool brute_membership(const BraidWord& u, const std::vector<BraidWord>& gens,
                      int max_len);

struct DoubleCentralizerReport {
  int samples = 0;
  int commuting = 0;
  // sampled words that commute with every centralizer generator yet fail
  // membership in <Delta^2> * block; expected empty
  std::vector<BraidWord> violations;
};

DoubleCentralizerReport brute_double_centralizer(int n, const Interval& iv,
                                                 int samples, int max_len,
                                                 std::uint32_t seed);

// Dehornoy handle reduction: a from-scratch word problem solution that never
// touches the Garside machinery. Throws if the step budget is exceeded.
bool handle_reduction_trivial(const BraidWord& u,
                              long long step_budget = 2'000'000);
bool words_equal_independent(const BraidWord& u, const BraidWord& v);

}  // namespace braid::oracle
