#include "braid/centralizer.hpp"

#include <stdexcept>

#include "braid/normal_form.hpp"

namespace braid {

namespace {

bool commutes_with_block(const BraidWord& w, const Interval& iv) {
  for (int j = iv.k; j <= iv.l - 1; ++j) {
    BraidWord s{w.n, {j}};
    if (!words_equal(multiply(w, s), multiply(s, w))) return false;
  }
  return true;
}

}  // namespace

CentralizerGens centralizer_generators(int n, const Interval& iv) {
  validate(iv, n);
  CentralizerGens out{n, iv, {}};
  const int k = iv.k, l = iv.l, m = iv.block_size();

  if (m == n) {
    // the whole group: centralizer = center = <Delta_n^2>
    out.gens.push_back(fundamental_power(n, 2));
    return out;
  }

  // block full twist: (sigma_k ... sigma_{l-1})^m = Delta_block^2
  BraidWord twist = BraidWord::identity(n);
  for (int rep = 0; rep < m; ++rep)
    for (int i = k; i <= l - 1; ++i) twist.letters.push_back(i);
  out.gens.push_back(twist);

  if (m == 2) out.gens.push_back(BraidWord{n, {k}});

  // generators away from the block
  for (int i = 1; i <= k - 2; ++i) out.gens.push_back(BraidWord{n, {i}});
  for (int i = l + 1; i <= n - 1; ++i) out.gens.push_back(BraidWord{n, {i}});

  // loop of the strand right of the block around the block
  if (l <= n - 1) {
    BraidWord loop{n, {}};
    for (int i = l; i >= k; --i) loop.letters.push_back(i);
    for (int i = k; i <= l; ++i) loop.letters.push_back(i);
    out.gens.push_back(loop);
  }
  // mirror loop of the strand left of the block
  if (k >= 2) {
    BraidWord loop{n, {}};
    for (int i = k - 1; i <= l - 1; ++i) loop.letters.push_back(i);
    for (int i = l - 1; i >= k - 1; --i) loop.letters.push_back(i);
    out.gens.push_back(loop);
  }
  // exchange of the two block-adjacent strands around the block: one passes
  // in front, the other behind, the block itself stays put
  if (k >= 2 && l <= n - 1) {
    BraidWord swap{n, {}};
    for (int i = k - 1; i <= l; ++i) swap.letters.push_back(i);
    for (int i = l - 1; i >= k - 1; --i) swap.letters.push_back(-i);
    out.gens.push_back(swap);
  }

  for (const auto& g : out.gens)
    if (!commutes_with_block(g, iv))
      throw std::logic_error("centralizer generator fails to commute");
  return out;
}

bool verify_centralizing(const CentralizerGens& gens) {
  for (const auto& g : gens.gens) {
    if (g.n != gens.n) return false;
    if (!commutes_with_block(g, gens.interval)) return false;
  }
  return true;
}

}  // namespace braid
