#include "braid/parabolic.hpp"

#include <cassert>
#include <stdexcept>

#include "braid/simple_braid.hpp"
#include "braid/strands.hpp"

namespace braid {

void validate(const Interval& iv, int n) {
  if (iv.k < 1 || iv.k >= iv.l || iv.l > n)
    throw std::invalid_argument("invalid interval [" + std::to_string(iv.k) +
                                "," + std::to_string(iv.l) + "] in B_" +
                                std::to_string(n));
}

void validate(const ParabolicSpec& spec) {
  validate(spec.interval, spec.n);
  if (spec.alpha.n != spec.n)
    throw std::invalid_argument("conjugator lives in the wrong braid group");
  validate(spec.alpha);
}

BraidWord small_delta(int r) {
  if (r < 1) throw std::invalid_argument("small_delta requires r >= 1");
  BraidWord u{r, {}};
  for (int i = r - 1; i >= 1; --i) u.letters.push_back(i);
  return u;
}

BraidWord shift(const BraidWord& u, int s, int target_n) {
  if (s < 0) throw std::invalid_argument("shift amount must be >= 0");
  BraidWord r{target_n, {}};
  r.letters.reserve(u.letters.size());
  for (int letter : u.letters)
    r.letters.push_back(letter < 0 ? letter - s : letter + s);
  validate(r);
  return r;
}

BraidWord tau(int p, int q, int n) {
  if (p < 1 || q < 0 || p + q > n)
    throw std::invalid_argument("tau requires p >= 1, q >= 0, p+q <= n");
  BraidWord r = BraidWord::identity(n);
  for (int t = 0; t < q; ++t)
    r = multiply(r, shift(embed(small_delta(p + 1), n), t, n));
  return r;
}

namespace {

// First normal-form factor of a positive braid (Delta if inf > 0).
Permutation initial_factor(const Braid& b) {
  assert(b.inf() >= 0);
  if (b.inf() > 0) return Permutation::reversal(b.strands());
  if (b.factors().empty()) return Permutation(b.strands());
  return b.factors().front();
}

// Cancels the common left divisor out of the fraction x^{-1} y
// (x, y positive). After this gcd(x, y) = 1.
void reduce_fraction(Braid& x, Braid& y) {
  while (true) {
    Permutation s = simple_meet(initial_factor(x), initial_factor(y));
    if (s.is_identity()) break;
    Braid s_inv = Braid::from_simple(s).inverse();
    x = s_inv * x;
    y = s_inv * y;
  }
}

// Every factor of the positive braid moves only positions inside the block.
bool positive_supported_in(const Braid& b, const Interval& iv) {
  assert(b.inf() >= 0);
  if (b.inf() > 0 && iv.block_size() < b.strands()) return false;
  for (const auto& f : b.factors())
    if (!f.fixes_outside(iv.k - 1, iv.l - 1)) return false;
  return true;
}

}  // namespace

bool parabolic_membership(const BraidWord& u, const Interval& iv) {
  validate(u);
  validate(iv, u.n);
  if (iv.block_size() == u.n) return true;

  Braid b = Braid::from_word(u);
  Braid x = Braid::identity(u.n);
  Braid y;
  if (b.inf() >= 0) {
    y = b;
  } else {
    x = Braid::delta_power(u.n, -b.inf());
    NormalFormBuilder builder(u.n);
    for (const auto& f : b.factors()) builder.append_simple(f);
    y = builder.finalize();
    reduce_fraction(x, y);
  }
  return positive_supported_in(x, iv) && positive_supported_in(y, iv);
}

std::optional<std::pair<int, BraidWord>> decompose_center_times_parabolic(
    const BraidWord& u, const Interval& iv) {
  validate(u);
  validate(iv, u.n);
  if (iv.block_size() >= u.n)
    throw std::invalid_argument("block must be proper");

  // Remove all block strands but the highest-labelled one; a block element
  // dies while Delta^2 powers survive as Delta^2 powers downstairs.
  std::set<int> rm;
  for (int s = iv.k; s < iv.l; ++s) rm.insert(s);
  Braid image = Braid::from_word(delete_strands(u, rm));
  if (image.canonical_length() != 0 || image.inf() % 2 != 0)
    return std::nullopt;
  int q = image.inf() / 2;

  BraidWord h = multiply(fundamental_power(u.n, -2 * q), u);
  if (!parabolic_membership(h, iv)) return std::nullopt;
  return std::make_pair(q, Braid::from_word(h).to_word());
}

bool membership_in_center_times_parabolic(const BraidWord& u,
                                          const Interval& iv) {
  validate(u);
  validate(iv, u.n);
  if (iv.block_size() >= u.n) return true;  // <Delta^2> * B_n = B_n
  return decompose_center_times_parabolic(u, iv).has_value();
}

StandardizedDCP standardize_instance(const ParabolicSpec& a_spec,
                                     const ParabolicSpec& b_spec,
                                     const BraidWord& g,
                                     const BraidWord& g_prime) {
  validate(a_spec);
  validate(b_spec);
  if (a_spec.n != b_spec.n || g.n != a_spec.n || g_prime.n != a_spec.n)
    throw std::invalid_argument("instance components disagree on n");
  validate(g);
  validate(g_prime);

  const int n = a_spec.n;
  StandardizedDCP out;
  out.n = n;
  out.m_a = a_spec.block_size();
  out.m_b = b_spec.block_size();

  BraidWord tau_a = tau(out.m_a, a_spec.interval.k - 1, n);
  BraidWord tau_b = tau(out.m_b, b_spec.interval.k - 1, n);

  auto conjugated = [&](const BraidWord& w) {
    BraidWord r = multiply(tau_a, invert(a_spec.alpha));
    r = multiply(r, w);
    r = multiply(r, b_spec.alpha);
    r = multiply(r, invert(tau_b));
    return Braid::from_word(r).to_word();
  };
  out.g1 = conjugated(g);
  out.g1_prime = conjugated(g_prime);
  out.back_a = Braid::from_word(multiply(a_spec.alpha, invert(tau_a))).to_word();
  out.back_b = Braid::from_word(multiply(b_spec.alpha, invert(tau_b))).to_word();
  return out;
}

}  // namespace braid
