#include "braid/simple_braid.hpp"

#include <cassert>

namespace braid {

bool has_descent(const Permutation& s, int i) {
  return s(i) > s(i + 1);
}

bool simple_left_divides(const Permutation& s, const Permutation& t) {
  assert(s.size() == t.size());
  Permutation rest = s.inverse().then(t);
  return s.inversions() + rest.inversions() == t.inversions();
}

Permutation simple_meet(const Permutation& a, const Permutation& b) {
  assert(a.size() == b.size());
  const int n = a.size();
  Permutation u = a, v = b;
  Permutation d(n);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (has_descent(u, i) && has_descent(v, i)) {
        Permutation t = Permutation::transposition(n, i);
        u = t.then(u);
        v = t.then(v);
        d = d.then(t);
        progress = true;
      }
    }
  }
  return d;
}

Permutation right_complement(const Permutation& s) {
  return s.inverse().then(Permutation::reversal(s.size()));
}

Permutation tau_twist(const Permutation& s) {
  Permutation rev = Permutation::reversal(s.size());
  return rev.then(s).then(rev);
}

std::vector<int> simple_letters(const Permutation& s) {
  const int n = s.size();
  std::vector<int> letters;
  Permutation p = s;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (has_descent(p, i)) {
        letters.push_back(i + 1);  // 1-based generator index
        p = Permutation::transposition(n, i).then(p);
        progress = true;
        break;
      }
    }
  }
  assert(p.is_identity());
  return letters;
}

}  // namespace braid
