#pragma once

#include <optional>
#include <utility>

#include "braid/normal_form.hpp"
#include "braid/word.hpp"

namespace braid {

// The standard parabolic subgroup B_[k,l] = <sigma_k,...,sigma_{l-1}> of B_n.
// k < l, so the associated Coxeter graph is connected.
struct Interval {
  int k = 1;
  int l = 2;

  int block_size() const { return l - k + 1; }
  bool operator==(const Interval&) const = default;
};

void validate(const Interval& iv, int n);

// A parabolic subgroup alpha * B_[k,l] * alpha^{-1}.
struct ParabolicSpec {
  int n = 2;
  BraidWord alpha;  // conjugator; identity for a standard block
  Interval interval;

  int block_size() const { return interval.block_size(); }
};

void validate(const ParabolicSpec& spec);

// A DCP instance rewritten so both subgroups are the initial blocks
// B_[1,m_A] and B_[1,m_B]. back_a/back_b transport witnesses: if (a1, b1)
// solves (g1, g1'), then (back_a a1 back_a^{-1}, back_b b1 back_b^{-1})
// solves the original instance.
struct StandardizedDCP {
  int n = 2;
  int m_a = 2;
  int m_b = 2;
  BraidWord g1;
  BraidWord g1_prime;
  BraidWord back_a;
  BraidWord back_b;
};

// delta_r = sigma_{r-1} ... sigma_2 sigma_1 (identity for r = 1), in B_r.
BraidWord small_delta(int r);

// Letterwise sigma_i -> sigma_{i+s}, reparented into B_{target_n}.
BraidWord shift(const BraidWord& u, int s, int target_n);

// tau_{p,q} = delta_{p+1} shift(delta_{p+1}) ... shift^{q-1}(delta_{p+1}):
// the braid in which strands p+1,...,p+q cross over strands 1,...,p.
// tau_{p,0} is the identity.
BraidWord tau(int p, int q, int n);

// True iff u lies in B_[k,l]. Uses the irreducible positive fraction
// u = x^{-1} y and checks the factor support of both halves.
bool parabolic_membership(const BraidWord& u, const Interval& iv);

// Decomposition u = Delta_n^{2q} h with h in B_[k,l], unique when it exists.
// Requires a proper block (block_size < n). Returns nullopt when u is not in
// <Delta^2> * B_[k,l].
std::optional<std::pair<int, BraidWord>> decompose_center_times_parabolic(
    const BraidWord& u, const Interval& iv);

bool membership_in_center_times_parabolic(const BraidWord& u,
                                          const Interval& iv);

StandardizedDCP standardize_instance(const ParabolicSpec& a_spec,
                                     const ParabolicSpec& b_spec,
                                     const BraidWord& g,
                                     const BraidWord& g_prime);

}  // namespace braid
