#include "braid/strands.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace braid {

int crossing_number(const BraidWord& u, int i, int j) {
  validate(u);
  if (i < 1 || i > u.n || j < 1 || j > u.n || i == j)
    throw std::invalid_argument("invalid strand pair");
  int pos_i = i - 1, pos_j = j - 1;  // current positions of the two strands
  int count = 0;
  for (int letter : u.letters) {
    int k = (letter < 0 ? -letter : letter) - 1;
    bool at_k = (pos_i == k || pos_j == k);
    bool at_k1 = (pos_i == k + 1 || pos_j == k + 1);
    if (at_k && at_k1) count += letter < 0 ? -1 : 1;
    if (pos_i == k) pos_i = k + 1;
    else if (pos_i == k + 1) pos_i = k;
    if (pos_j == k) pos_j = k + 1;
    else if (pos_j == k + 1) pos_j = k;
  }
  return count;
}

BraidWord delete_strands(const BraidWord& u, const std::set<int>& remove) {
  validate(u);
  if (static_cast<int>(remove.size()) >= u.n)
    throw std::invalid_argument("cannot remove every strand");
  for (int label : remove)
    if (label < 1 || label > u.n)
      throw std::invalid_argument("strand label out of range");

  std::vector<int> label_at(u.n);  // position -> original left end-point label
  std::iota(label_at.begin(), label_at.end(), 1);

  BraidWord result{u.n - static_cast<int>(remove.size()), {}};
  for (int letter : u.letters) {
    int k = (letter < 0 ? -letter : letter) - 1;
    bool keep_lo = !remove.count(label_at[k]);
    bool keep_hi = !remove.count(label_at[k + 1]);
    if (keep_lo && keep_hi) {
      // Index of the crossing among surviving strands: count survivors at
      // positions 0..k-1, plus one for position k itself (1-based output).
      int v = 0;
      for (int p = 0; p <= k; ++p)
        if (!remove.count(label_at[p])) ++v;
      result.letters.push_back(letter < 0 ? -v : v);
    }
    std::swap(label_at[k], label_at[k + 1]);
  }
  return result;
}

}  // namespace braid
