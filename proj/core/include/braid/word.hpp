#pragma once

#include <string>
#include <vector>

#include "braid/permutation.hpp"

namespace braid {

// A word in the generators sigma_i^{+-1} of B_n. Letters are signed 1-based
// generator indices: +i means sigma_i, -i means sigma_i^{-1}. The empty word
// is the identity. Words multiply left to right.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;

  static BraidWord identity(int n) { return BraidWord{n, {}}; }

  bool operator==(const BraidWord&) const = default;
};

// Throws std::invalid_argument unless 1 <= |letter| <= n-1 for every letter.
void validate(const BraidWord& u);

// Whitespace-separated signed integers ("1 -2 3"). Also accepts "sK" and
// "sK^-1" token forms.
BraidWord parse_word(const std::string& text, int n);
std::string format_word(const BraidWord& u);

BraidWord multiply(const BraidWord& u, const BraidWord& v);
BraidWord invert(const BraidWord& u);

// Same letters, bigger ambient group. Throws if any letter is out of range
// for the target.
BraidWord embed(const BraidWord& u, int n);

// The permutation induced on strand positions; a right action on left
// end-point labels: position i's strand ends at permutation_of(u)(i).
// (0-based positions internally.)
Permutation permutation_of(const BraidWord& u);

// Delta_n as an explicit positive word: (s1)(s2 s1)...(s_{n-1}...s1).
BraidWord delta_word(int n);
// Delta_n^p.
BraidWord fundamental_power(int n, int p);

}  // namespace braid
