#include "braid/oracle.hpp"

#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "braid/centralizer.hpp"
#include "braid/normal_form.hpp"

namespace braid::oracle {

namespace {

struct Entry {
  BraidWord word;
  Braid value;
};

// BFS ball of <gens> up to max_len factors, deduplicated by normal form.
std::vector<Entry> ball(int n, const std::vector<BraidWord>& gens,
                        int max_len) {
  std::vector<std::pair<BraidWord, Braid>> steps;
  for (const auto& g : gens) {
    steps.emplace_back(g, Braid::from_word(g));
    steps.emplace_back(invert(g), Braid::from_word(invert(g)));
  }
  std::vector<Entry> out;
  std::unordered_set<std::string> seen;
  std::deque<std::pair<Entry, int>> frontier;
  Entry id{BraidWord::identity(n), Braid::identity(n)};
  seen.insert(id.value.key());
  out.push_back(id);
  frontier.push_back({id, 0});
  while (!frontier.empty()) {
    auto [entry, depth] = frontier.front();
    frontier.pop_front();
    if (depth == max_len) continue;
    for (const auto& [gw, gb] : steps) {
      Entry next{multiply(entry.word, gw), entry.value * gb};
      if (!seen.insert(next.value.key()).second) continue;
      out.push_back(next);
      frontier.push_back({next, depth + 1});
    }
  }
  return out;
}

std::vector<BraidWord> sigma_generators(int n) {
  std::vector<BraidWord> gens;
  for (int i = 1; i <= n - 1; ++i) gens.push_back(BraidWord{n, {i}});
  return gens;
}

std::vector<BraidWord> subgroup_generators(const ParabolicSpec& spec) {
  std::vector<BraidWord> gens;
  for (int i = spec.interval.k; i <= spec.interval.l - 1; ++i) {
    BraidWord g =
        multiply(multiply(spec.alpha, BraidWord{spec.n, {i}}),
                 invert(spec.alpha));
    gens.push_back(g);
  }
  return gens;
}

void check_budget(int max_len) {
  if (max_len < 0 || max_len > 12)
    throw std::invalid_argument("oracle budget exceeded (max_len > 12)");
}

}  // namespace

std::vector<BraidWord> enumerate_words(int n, const std::vector<BraidWord>& gens,
                                       int max_len) {
  check_budget(max_len);
  std::vector<BraidWord> out;
  for (const auto& e : ball(n, gens, max_len)) out.push_back(e.word);
  return out;
}

std::optional<std::pair<BraidWord, BraidWord>> brute_dcp(
    const DCPInstance& inst, int max_len) {
  check_budget(max_len);
  validate(inst);
  auto a_ball = ball(inst.n, subgroup_generators(inst.a_spec), max_len);
  auto b_ball = ball(inst.n, subgroup_generators(inst.b_spec), max_len);

  // a g b = g'  <=>  b = g^{-1} a^{-1} g'
  std::unordered_map<std::string, const BraidWord*> b_index;
  for (const auto& e : b_ball) b_index.try_emplace(e.value.key(), &e.word);

  Braid g = Braid::from_word(inst.g);
  Braid gp = Braid::from_word(inst.g_prime);
  Braid g_inv = g.inverse();
  for (const auto& a : a_ball) {
    Braid needed = g_inv * a.value.inverse() * gp;
    auto it = b_index.find(needed.key());
    if (it != b_index.end()) return std::make_pair(a.word, *it->second);
  }
  return std::nullopt;
}

std::optional<BraidWord> brute_conjugator(const BraidWord& u,
                                          const BraidWord& v, int max_len) {
  check_budget(max_len);
  Braid bu = Braid::from_word(u), bv = Braid::from_word(v);
  for (const auto& x : ball(u.n, sigma_generators(u.n), max_len)) {
    if (x.value.inverse() * bu * x.value == bv) return x.word;
  }
  return std::nullopt;
}

bool brute_membership(const BraidWord& u, const std::vector<BraidWord>& gens,
                      int max_len) {
  check_budget(max_len);
  Braid target = Braid::from_word(u);
  for (const auto& e : ball(u.n, gens, max_len))
    if (e.value == target) return true;
  return false;
}

DoubleCentralizerReport brute_double_centralizer(int n, const Interval& iv,
                                                 int samples, int max_len,
                                                 std::uint32_t seed) {
  DoubleCentralizerReport report;
  CentralizerGens cgens = centralizer_generators(n, iv);
  std::vector<Braid> gens;
  for (const auto& g : cgens.gens) gens.push_back(Braid::from_word(g));

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> len(0, max_len);
  for (int trial = 0; trial < samples; ++trial) {
    BraidWord w{n, {}};
    int l = len(rng);
    for (int i = 0; i < l; ++i)
      w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    ++report.samples;
    Braid bw = Braid::from_word(w);
    bool commutes = true;
    for (const auto& g : gens)
      if (!(bw * g == g * bw)) {
        commutes = false;
        break;
      }
    if (!commutes) continue;
    ++report.commuting;
    if (!membership_in_center_times_parabolic(w, iv))
      report.violations.push_back(w);
  }
  return report;
}

bool handle_reduction_trivial(const BraidWord& u, long long step_budget) {
  validate(u);
  std::vector<int> w = u.letters;
  long long steps = 0;
  while (true) {
    if (++steps > step_budget)
      throw std::runtime_error("handle reduction budget exceeded");

    // free reduction
    std::vector<int> reduced;
    for (int letter : w) {
      if (!reduced.empty() && reduced.back() == -letter)
        reduced.pop_back();
      else
        reduced.push_back(letter);
    }
    w = std::move(reduced);
    if (w.empty()) return true;

    // leftmost handle: sigma_i^e v sigma_i^{-e} with no sigma_i or
    // sigma_{i-1} inside v
    int handle_start = -1, handle_end = -1;
    std::vector<int> last(u.n + 1, -1);  // generator index -> last position
    for (int j = 0; j < static_cast<int>(w.size()) && handle_end < 0; ++j) {
      int i = w[j] < 0 ? -w[j] : w[j];
      int p = last[i];
      if (p >= 0 && w[p] == -w[j]) {
        bool blocked = false;
        for (int q = p + 1; q < j; ++q) {
          int iq = w[q] < 0 ? -w[q] : w[q];
          if (iq == i - 1) {
            blocked = true;
            break;
          }
        }
        if (!blocked) {
          handle_start = p;
          handle_end = j;
        }
      }
      last[i] = j;
    }

    if (handle_end < 0) {
      // handle-free and nonempty: the lowest generator occurs with a single
      // sign, so the word is sigma-positive or sigma-negative, hence != 1
      return false;
    }

    int e = w[handle_start] < 0 ? -1 : 1;
    int i = w[handle_start] < 0 ? -w[handle_start] : w[handle_start];
    std::vector<int> next(w.begin(), w.begin() + handle_start);
    for (int q = handle_start + 1; q < handle_end; ++q) {
      int iq = w[q] < 0 ? -w[q] : w[q];
      if (iq == i + 1) {
        // sigma_{i+1}^d -> sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^{e}
        next.push_back(-e * (i + 1));
        next.push_back(w[q] < 0 ? -i : i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(w[q]);
      }
    }
    next.insert(next.end(), w.begin() + handle_end + 1, w.end());
    w = std::move(next);
  }
}

bool words_equal_independent(const BraidWord& u, const BraidWord& v) {
  return handle_reduction_trivial(multiply(u, invert(v)));
}

}  // namespace braid::oracle
