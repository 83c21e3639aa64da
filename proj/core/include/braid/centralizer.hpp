#pragma once

#include <vector>

#include "braid/parabolic.hpp"
#include "braid/word.hpp"

namespace braid {

// A finite generating set for the centralizer of B_[k,l] in B_n.
struct CentralizerGens {
  int n = 2;
  Interval interval;
  std::vector<BraidWord> gens;
};

// Generators: the block full twist, the generators far from the block, loop
// elements of the two block-adjacent strands around the block, the exchange
// of the two block-adjacent strands around the block (when both exist), and
// sigma_k itself for an abelian block of size 2. Every generator is checked
// to commute with the block at construction time.
CentralizerGens centralizer_generators(int n, const Interval& iv);

// True iff every generator commutes with every block generator.
bool verify_centralizing(const CentralizerGens& gens);

}  // namespace braid
