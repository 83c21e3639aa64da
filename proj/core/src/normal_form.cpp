#include "braid/normal_form.hpp"

#include <cassert>
#include <stdexcept>

#include "braid/simple_braid.hpp"

namespace braid {

namespace {

// Left-weighted repair: remove trivial factors, absorb full Deltas into the
// power, and slide weight leftward until every adjacent pair is left-weighted.
void normalize(int n, int& inf, std::vector<Permutation>& fs) {
  if (n == 1) {  // B_1 is trivial
    inf = 0;
    fs.clear();
    return;
  }
  const Permutation rev = Permutation::reversal(n);
  bool changed = true;
  while (changed) {
    changed = false;

    // Sweep out identities and Deltas. A Delta moving to the front twists
    // everything to its left.
    std::vector<Permutation> kept;
    kept.reserve(fs.size());
    for (auto& f : fs) {
      if (f.is_identity()) {
        changed = true;
      } else if (f == rev) {
        for (auto& g : kept) g = tau_twist(g);
        ++inf;
        changed = true;
      } else {
        kept.push_back(std::move(f));
      }
    }
    fs = std::move(kept);

    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      Permutation d = simple_meet(right_complement(fs[i]), fs[i + 1]);
      if (!d.is_identity()) {
        fs[i + 1] = d.inverse().then(fs[i + 1]);
        fs[i] = fs[i].then(d);
        changed = true;
      }
    }
  }
}

}  // namespace

NormalFormBuilder::NormalFormBuilder(int n) : n_(n), inf_(0) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
}

void NormalFormBuilder::append_simple(const Permutation& s) {
  assert(s.size() == n_);
  if (!s.is_identity()) factors_.push_back(s);
}

void NormalFormBuilder::append_delta_power(int p) {
  if (p == 0 || n_ == 1) return;
  // Delta^p appended on the right moves left through all current factors.
  if (p % 2 != 0)
    for (auto& f : factors_) f = tau_twist(f);
  inf_ += p;
}

void NormalFormBuilder::append(const Braid& b) {
  assert(b.strands() == n_);
  if (b.inf() % 2 != 0)
    for (auto& f : factors_) f = tau_twist(f);
  inf_ += b.inf();
  factors_.insert(factors_.end(), b.factors().begin(), b.factors().end());
}

Braid NormalFormBuilder::finalize() {
  normalize(n_, inf_, factors_);
  Braid b;
  b.n_ = n_;
  b.inf_ = inf_;
  b.factors_ = std::move(factors_);
  factors_.clear();
  inf_ = 0;
  return b;
}

Braid Braid::identity(int n) {
  Braid b;
  b.n_ = n;
  b.inf_ = 0;
  return b;
}

Braid Braid::delta_power(int n, int p) {
  Braid b;
  b.n_ = n;
  b.inf_ = (n == 1) ? 0 : p;
  return b;
}

Braid Braid::from_simple(const Permutation& s) {
  NormalFormBuilder builder(s.size());
  builder.append_simple(s);
  return builder.finalize();
}

Braid Braid::from_word(const BraidWord& u) {
  validate(u);
  NormalFormBuilder builder(u.n);
  const Permutation rev = Permutation::reversal(u.n);
  for (int letter : u.letters) {
    int i = (letter < 0 ? -letter : letter) - 1;
    Permutation t = Permutation::transposition(u.n, i);
    if (letter > 0) {
      builder.append_simple(t);
    } else {
      // sigma_i^{-1} = (sigma_i^{-1} Delta) Delta^{-1}
      builder.append_simple(t.then(rev));
      builder.append_delta_power(-1);
    }
  }
  return builder.finalize();
}

Braid Braid::operator*(const Braid& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("mismatched strand counts");
  NormalFormBuilder builder(n_);
  builder.append(*this);
  builder.append(rhs);
  return builder.finalize();
}

Braid Braid::inverse() const {
  NormalFormBuilder builder(n_);
  // (Delta^p x_1...x_l)^{-1} = x_l^{-1} ... x_1^{-1} Delta^{-p},
  // with x^{-1} = right_complement(x) Delta^{-1}.
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    builder.append_simple(right_complement(*it));
    builder.append_delta_power(-1);
  }
  builder.append_delta_power(-inf_);
  return builder.finalize();
}

Permutation Braid::permutation() const {
  Permutation p(n_);
  if (inf_ % 2 != 0) p = Permutation::reversal(n_);
  for (const auto& f : factors_) p = p.then(f);
  return p;
}

BraidWord Braid::to_word() const {
  BraidWord w = fundamental_power(n_, inf_);
  for (const auto& f : factors_)
    for (int letter : simple_letters(f)) w.letters.push_back(letter);
  return w;
}

std::string Braid::key() const {
  std::string k = std::to_string(inf_);
  for (const auto& f : factors_) {
    k += '|';
    for (int v : f.images()) {
      k += std::to_string(v);
      k += ',';
    }
  }
  return k;
}

Braid normal_form(const BraidWord& u) { return Braid::from_word(u); }

bool is_trivial(const BraidWord& u) { return Braid::from_word(u).is_identity(); }

bool words_equal(const BraidWord& u, const BraidWord& v) {
  if (u.n != v.n) throw std::invalid_argument("mismatched strand counts");
  return Braid::from_word(u) == Braid::from_word(v);
}

int word_inf(const BraidWord& u) { return Braid::from_word(u).inf(); }
int word_sup(const BraidWord& u) { return Braid::from_word(u).sup(); }
int canonical_length(const BraidWord& u) {
  return Braid::from_word(u).canonical_length();
}

Braid conjugate(const Braid& u, const Braid& x) {
  return x.inverse() * u * x;
}

}  // namespace braid
