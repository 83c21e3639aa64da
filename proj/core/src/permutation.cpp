#include "braid/permutation.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace braid {

Permutation::Permutation(int n) : img_(n) {
  assert(n >= 1);
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= size() || seen[v])
      throw std::invalid_argument("not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::transposition(int n, int i) {
  assert(i >= 0 && i + 1 < n);
  Permutation p(n);
  std::swap(p.img_[i], p.img_[i + 1]);
  return p;
}

Permutation Permutation::reversal(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.img_[i] = n - 1 - i;
  return p;
}

Permutation Permutation::then(const Permutation& other) const {
  assert(size() == other.size());
  Permutation r;
  r.img_.resize(img_.size());
  for (int i = 0; i < size(); ++i) r.img_[i] = other.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (int i = 0; i < size(); ++i) r.img_[img_[i]] = i;
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::inversions() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (img_[i] > img_[j]) ++count;
  return count;
}

bool Permutation::fixes_outside(int lo, int hi) const {
  for (int i = 0; i < size(); ++i)
    if ((i < lo || i > hi) && img_[i] != i) return false;
  return true;
}

}  // namespace braid
