#pragma once

#include <vector>

#include "braid/permutation.hpp"

namespace braid {

// Simple elements (permutation braids) of B_n, encoded by their permutations.
// All lattice arithmetic runs on permutation tables; no enumeration of the n!
// simple elements is ever needed.

// True iff sigma_{i+1} (0-based i) left-divides the simple braid s,
// i.e. s has a descent at i.
bool has_descent(const Permutation& s, int i);

// s left-divides t in the simple-element lattice.
bool simple_left_divides(const Permutation& s, const Permutation& t);

// Left gcd of two simple elements.
Permutation simple_meet(const Permutation& a, const Permutation& b);

// The simple braid c with s * c = Delta_n.
Permutation right_complement(const Permutation& s);

// Conjugation by Delta: tau(s) = Delta^-1 s Delta (an involution; on
// generators sigma_i -> sigma_{n-i}).
Permutation tau_twist(const Permutation& s);

// A positive word (1-based generator indices) for the simple braid s,
// of length s.inversions().
std::vector<int> simple_letters(const Permutation& s);

}  // namespace braid
