#pragma once

#include <string>
#include <vector>

#include "braid/permutation.hpp"
#include "braid/word.hpp"

namespace braid {

// An element of B_n in left-weighted (Thurston/Garside) normal form:
// Delta^p x_1 ... x_l with each x_i a simple element, none trivial or Delta,
// and meet(right_complement(x_i), x_{i+1}) trivial for every adjacent pair.
// Two braid words are equal in B_n iff their Braid values compare equal.
class Braid {
public:
  Braid() : n_(1), inf_(0) {}

  static Braid identity(int n);
  static Braid delta_power(int n, int p);
  static Braid from_word(const BraidWord& u);
  // A single simple factor (normalized, so id -> identity, Delta -> inf 1).
  static Braid from_simple(const Permutation& s);

  int strands() const { return n_; }
  int inf() const { return inf_; }
  int sup() const { return inf_ + static_cast<int>(factors_.size()); }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  const std::vector<Permutation>& factors() const { return factors_; }

  bool is_identity() const { return inf_ == 0 && factors_.empty(); }
  bool operator==(const Braid&) const = default;

  Braid operator*(const Braid& rhs) const;
  Braid inverse() const;

  Permutation permutation() const;
  BraidWord to_word() const;

  // Compact serialization usable as a hash key.
  std::string key() const;

private:
  friend class NormalFormBuilder;
  int n_;
  int inf_;
  std::vector<Permutation> factors_;
};

// Incremental construction: append simple factors and Delta powers on the
// right, then normalize once.
class NormalFormBuilder {
public:
  explicit NormalFormBuilder(int n);
  void append_simple(const Permutation& s);
  void append_delta_power(int p);
  void append(const Braid& b);
  Braid finalize();

private:
  int n_;
  int inf_;
  std::vector<Permutation> factors_;
};

// Word-level interface.
Braid normal_form(const BraidWord& u);
bool is_trivial(const BraidWord& u);
bool words_equal(const BraidWord& u, const BraidWord& v);
int word_inf(const BraidWord& u);
int word_sup(const BraidWord& u);
int canonical_length(const BraidWord& u);

// Conjugate of u by x: x^{-1} u x.
Braid conjugate(const Braid& u, const Braid& x);

}  // namespace braid
