#include <random>
#include <stdexcept>

#include "braid/normal_form.hpp"
#include "braid/simple_braid.hpp"
#include "braid/strands.hpp"
#include "braid/word.hpp"
#include "doctest.h"

using namespace braid;

namespace {

BraidWord random_word(int n, int len, std::mt19937& rng) {
  BraidWord u{n, {}};
  if (n < 2) return u;
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < len; ++i)
    u.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return u;
}

}  // namespace

TEST_CASE("parse_word basics") {
  BraidWord u = parse_word("1 2 -1", 3);
  CHECK(u.letters == std::vector<int>{1, 2, -1});
  CHECK(parse_word("", 4).letters.empty());
  CHECK(parse_word("s1 s2^-1", 3).letters == std::vector<int>{1, -2});
  CHECK_THROWS_AS(parse_word("3", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x7", 3), std::invalid_argument);
}

TEST_CASE("multiply and invert") {
  BraidWord s1 = parse_word("1", 3);
  BraidWord s1i = parse_word("-1", 3);
  CHECK(is_trivial(multiply(s1, s1i)));
  CHECK(invert(parse_word("1 2", 3)).letters == std::vector<int>{-2, -1});
  BraidWord v = parse_word("2 -1", 3);
  CHECK(multiply(BraidWord::identity(3), v) == v);
  CHECK_THROWS_AS(multiply(s1, BraidWord::identity(4)), std::invalid_argument);
}

TEST_CASE("permutation_of") {
  CHECK(permutation_of(parse_word("1", 2)) == Permutation::transposition(2, 0));
  CHECK(permutation_of(BraidWord::identity(4)).is_identity());
  // delta_4 = s3 s2 s1 maps (0-based) 0->1->2->3->0.
  Permutation p = permutation_of(parse_word("3 2 1", 4));
  CHECK(p.images() == std::vector<int>{1, 2, 3, 0});
  // homomorphism to S_n under `then`
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    BraidWord u = random_word(4, 6, rng), v = random_word(4, 6, rng);
    CHECK(permutation_of(multiply(u, v)) ==
          permutation_of(u).then(permutation_of(v)));
  }
}

TEST_CASE("delta words") {
  CHECK(delta_word(2).letters == std::vector<int>{1});
  CHECK(delta_word(1).letters.empty());
  CHECK(permutation_of(delta_word(5)) == Permutation::reversal(5));
  // Delta^2 is central
  for (int i = 1; i <= 2; ++i) {
    BraidWord d2 = fundamental_power(3, 2);
    BraidWord g = parse_word(std::to_string(i), 3);
    CHECK(words_equal(multiply(d2, g), multiply(g, d2)));
  }
}

TEST_CASE("normal form on spec examples") {
  Braid b = normal_form(parse_word("1 2 1", 3));
  CHECK(b.inf() == 1);
  CHECK(b.factors().empty());

  Braid c = normal_form(parse_word("-1", 2));
  CHECK(c.inf() == -1);
  CHECK(c.factors().empty());

  Braid d = normal_form(parse_word("1 1", 3));
  CHECK(d.inf() == 0);
  CHECK(d.canonical_length() == 2);
  CHECK(d.factors()[0] == Permutation::transposition(3, 0));
  CHECK(d.factors()[1] == Permutation::transposition(3, 0));
}

TEST_CASE("word problem: braid relations") {
  for (int n = 3; n <= 7; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      BraidWord lhs{n, {i, i + 1, i}};
      BraidWord rhs{n, {i + 1, i, i + 1}};
      CHECK(words_equal(lhs, rhs));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        CHECK(words_equal(BraidWord{n, {i, j}}, BraidWord{n, {j, i}}));
  }
  CHECK_FALSE(words_equal(parse_word("1", 3), parse_word("2", 3)));
}

TEST_CASE("equal is a congruence") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    BraidWord u = random_word(4, 8, rng);
    BraidWord v = u;
    // make v a visibly different word for the same element
    v.letters.push_back(2);
    v.letters.push_back(-2);
    BraidWord w = random_word(4, 8, rng);
    CHECK(words_equal(u, v));
    CHECK(words_equal(multiply(w, u), multiply(w, v)));
    CHECK(words_equal(multiply(u, w), multiply(v, w)));
  }
}

TEST_CASE("normal form is sound and idempotent on random words") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + trial % 4;  // 2..5
    BraidWord u = random_word(n, 4 + trial % 17, rng);
    Braid nf = normal_form(u);
    // permutation and exponent sum survive
    CHECK(nf.permutation() == permutation_of(u));
    long sum = 0;
    for (int l : u.letters) sum += l < 0 ? -1 : 1;
    BraidWord w = nf.to_word();
    long sum2 = 0;
    for (int l : w.letters) sum2 += l < 0 ? -1 : 1;
    CHECK(sum == sum2);
    // reconstruction normalizes back to the same value
    CHECK(normal_form(w) == nf);
    CHECK(nf.inf() <= nf.sup());
    // left-weightedness of adjacent factors
    for (size_t i = 0; i + 1 < nf.factors().size(); ++i) {
      CHECK(simple_meet(right_complement(nf.factors()[i]), nf.factors()[i + 1])
                .is_identity());
    }
    // group arithmetic on normal forms
    CHECK((nf * nf.inverse()).is_identity());
  }
}

TEST_CASE("inf sup canonical length") {
  CHECK(word_inf(BraidWord::identity(3)) == 0);
  CHECK(word_sup(BraidWord::identity(3)) == 0);
  Braid d2 = normal_form(fundamental_power(3, 2));
  CHECK(d2.inf() == 2);
  CHECK(d2.sup() == 2);
  CHECK(d2.canonical_length() == 0);
  CHECK(word_inf(parse_word("1 1", 3)) == 0);
  CHECK(word_sup(parse_word("1 1", 3)) == 2);
}

TEST_CASE("crossing numbers") {
  CHECK(crossing_number(parse_word("1", 2), 1, 2) == 1);
  CHECK(crossing_number(parse_word("-1", 2), 1, 2) == -1);
  for (int n : {3, 4, 5})
    for (int k = -2; k <= 2; ++k) {
      BraidWord w = fundamental_power(n, 2 * k);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          CHECK(crossing_number(w, i, j) == 2 * k);
    }
}

TEST_CASE("crossing number conjugation covariance") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4;
    BraidWord u = random_word(n, 6, rng);
    BraidWord w = random_word(n, 6, rng);
    BraidWord c = multiply(multiply(w, u), invert(w));
    Permutation pw = permutation_of(w);
    Permutation pu = permutation_of(u);
    // cr(xy)(i,j) = cr(x)(i,j) + cr(y) at the relabeled entry points
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        int a = pw(i - 1) + 1, b = pw(j - 1) + 1;
        int a2 = pu(a - 1) + 1, b2 = pu(b - 1) + 1;
        CHECK(crossing_number(c, i, j) ==
              crossing_number(w, i, j) + crossing_number(u, a, b) +
                  crossing_number(invert(w), a2, b2));
      }
  }
}

TEST_CASE("delete_strands") {
  // delta_3^2 with strand 1 removed is delta_2^2 = s1^2
  BraidWord img = delete_strands(fundamental_power(3, 2), {1});
  CHECK(words_equal(img, parse_word("1 1", 2)));
  CHECK(delete_strands(parse_word("1", 2), {2}).letters.empty());
  CHECK(delete_strands(parse_word("1", 3), {3}) == parse_word("1", 2));

  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m < n; ++m)
      for (int q = -2; q <= 2; ++q) {
        std::set<int> rm;
        for (int s = 1; s < m; ++s) rm.insert(s);  // keep block strand m
        BraidWord img2 = delete_strands(fundamental_power(n, 2 * q), rm);
        CHECK(words_equal(img2, fundamental_power(n - m + 1, 2 * q)));
      }
}
