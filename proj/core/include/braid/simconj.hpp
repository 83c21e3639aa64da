#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braid/normal_form.hpp"
#include "braid/word.hpp"

namespace braid {

// A tuple of braids to be conjugated by one common element.
struct ConjTuple {
  int n = 2;
  std::vector<BraidWord> components;
};

void validate(const ConjTuple& t);

enum class SolveStatus { Solved, NoSolution, Inconclusive };

struct ConjResult {
  SolveStatus status = SolveStatus::NoSolution;
  BraidWord conjugator;  // meaningful only when status == Solved
};

struct SearchOptions {
  // Maximum number of summit-closure nodes visited per search before giving
  // up with Inconclusive.
  long long node_budget = 2'000'000;
  int threads = 1;
};

// Conjugate of u by its initial normal-form factor; never decreases inf,
// never increases sup. Fixed point on pure Delta powers.
BraidWord cycling(const BraidWord& u);
// Conjugate of u by the inverse of its final factor; never increases sup.
BraidWord decycling(const BraidWord& u);

// A tuple at minimal complexity (-sum inf, sum sup), lexicographic, among
// conjugates reachable by the closure procedure, plus the witness conjugator
// from the seed.
struct SummitNode {
  std::vector<Braid> tuple;
  Braid conjugator;
};

SummitNode summit_tuple(const ConjTuple& t, const SearchOptions& opts = {});

// x with x^{-1} u x = v, verified by the word problem before returning.
ConjResult solve_conjugacy(const BraidWord& u, const BraidWord& v,
                           const SearchOptions& opts = {});

// x with x^{-1} s_i x = t_i for all i, verified componentwise. NoSolution
// when the summit closures of s and t are disjoint; Inconclusive when the
// node budget runs out first.
ConjResult solve_simultaneous_conjugacy(const ConjTuple& s, const ConjTuple& t,
                                        const SearchOptions& opts = {});

}  // namespace braid
