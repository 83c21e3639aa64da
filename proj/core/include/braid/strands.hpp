#pragma once

#include <set>

#include "braid/word.hpp"

namespace braid {

// Signed number of crossings between the strands whose left end points are
// i and j (1-based, i != j). Computed by a single sweep tracking the two
// strands' positions.
int crossing_number(const BraidWord& u, int i, int j);

// Geometric strand deletion: strands are tracked by left end-point label,
// every crossing involving a removed strand is dropped, surviving positions
// are renumbered. The result lives in B_{n-|remove|}. Not a homomorphism in
// general, but well defined on braid group elements.
BraidWord delete_strands(const BraidWord& u, const std::set<int>& remove);

}  // namespace braid
