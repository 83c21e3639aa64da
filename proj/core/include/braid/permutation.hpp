#pragma once

#include <vector>

namespace braid {

// Bijection on {0,...,n-1}. Composition is diagrammatic: (a.then(b))(i) = b(a(i)),
// so the permutation induced by a braid word is the `then`-product of its
// letters' transpositions, read left to right.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);

  // Swaps positions i and i+1 (0-based); the permutation of sigma_{i+1}.
  static Permutation transposition(int n, int i);
  // i -> n-1-i; the permutation of the half twist Delta_n.
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Permutation then(const Permutation& other) const;
  Permutation inverse() const;

  bool is_identity() const;
  bool operator==(const Permutation&) const = default;

  // Number of pairs i<j with img(i)>img(j); equals the word length of the
  // simple braid this permutation encodes.
  int inversions() const;

  // True if every point outside [lo,hi] (0-based, inclusive) is fixed.
  bool fixes_outside(int lo, int hi) const;

private:
  std::vector<int> img_;
};

}  // namespace braid
