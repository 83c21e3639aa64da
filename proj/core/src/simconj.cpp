#include "braid/simconj.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "braid/simple_braid.hpp"

namespace braid {

void validate(const ConjTuple& t) {
  if (t.components.empty())
    throw std::invalid_argument("tuple must be nonempty");
  for (const auto& c : t.components) {
    if (c.n != t.n)
      throw std::invalid_argument("tuple components disagree on n");
    validate(c);
  }
}

BraidWord cycling(const BraidWord& u) {
  Braid b = Braid::from_word(u);
  if (b.factors().empty()) return b.to_word();
  Permutation f = b.factors().front();
  if (b.inf() % 2 != 0) f = tau_twist(f);
  return conjugate(b, Braid::from_simple(f)).to_word();
}

BraidWord decycling(const BraidWord& u) {
  Braid b = Braid::from_word(u);
  if (b.factors().empty()) return b.to_word();
  Braid x = Braid::from_simple(b.factors().back()).inverse();
  return conjugate(b, x).to_word();
}

namespace {

using Tuple = std::vector<Braid>;
using Complexity = std::pair<long, long>;

Complexity complexity_of(const Tuple& t) {
  long neg_inf = 0, sup = 0;
  for (const auto& b : t) {
    neg_inf -= b.inf();
    sup += b.sup();
  }
  return {neg_inf, sup};
}

std::string key_of(const Tuple& t) {
  std::string k;
  for (const auto& b : t) {
    k += b.key();
    k += ';';
  }
  return k;
}

// All nontrivial simple elements of B_n with their inverses, Delta last so
// pure plateau moves are tried in a fixed deterministic order.
struct SimpleTable {
  std::vector<Braid> elems;
  std::vector<Braid> inverses;
};

SimpleTable all_simples(int n) {
  SimpleTable table;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    Permutation p{std::vector<int>(img)};
    if (p.is_identity()) continue;
    Braid b = Braid::from_simple(p);
    table.elems.push_back(b);
    table.inverses.push_back(b.inverse());
  } while (std::next_permutation(img.begin(), img.end()));
  return table;
}

Tuple conjugate_tuple(const Tuple& t, const Braid& x, const Braid& x_inv) {
  Tuple r;
  r.reserve(t.size());
  for (const auto& c : t) r.push_back(x_inv * c * x);
  return r;
}

struct ClosureResult {
  Complexity complexity{};
  // key -> conjugator c with c^{-1} seed c = node tuple
  std::unordered_map<std::string, Braid> nodes;
  bool exhausted = false;
  // set when a stop key was hit: (key, conjugator)
  std::optional<std::pair<std::string, Braid>> hit;
};

struct Node {
  Tuple tuple;
  Braid conjugator;
};

// Orbit closure at minimal complexity. Conjugates every node by every
// nontrivial simple element; restarts from any strictly better node found.
// The optional stop set triggers an early return on first intersection.
ClosureResult summit_closure(
    const Tuple& seed, const SearchOptions& opts,
    const std::unordered_map<std::string, Braid>* stop = nullptr) {
  const int n = seed.empty() ? 2 : seed.front().strands();
  SimpleTable simples = all_simples(n);
  const int num_simples = static_cast<int>(simples.elems.size());

  ClosureResult out;
  Node best{seed, Braid::identity(n)};
  long long visited = 0;

  bool restart = true;
  while (restart) {
    restart = false;
    out.nodes.clear();
    out.complexity = complexity_of(best.tuple);
    std::deque<Node> frontier;
    out.nodes.emplace(key_of(best.tuple), best.conjugator);
    if (stop) {
      std::string k = key_of(best.tuple);
      if (auto it = stop->find(k); it != stop->end()) {
        out.hit = {k, best.conjugator};
        return out;
      }
    }
    frontier.push_back(best);

    std::mutex lock;
    std::atomic<bool> found_better{false};
    std::atomic<bool> done{false};

    auto expand_one = [&](const Node& node) {
      for (int si = 0; si < num_simples && !done.load(); ++si) {
        Tuple cand =
            conjugate_tuple(node.tuple, simples.elems[si], simples.inverses[si]);
        Complexity cx = complexity_of(cand);
        if (cx < out.complexity) {
          std::lock_guard<std::mutex> g(lock);
          if (!found_better.load() || cx < complexity_of(best.tuple)) {
            best = Node{std::move(cand), node.conjugator * simples.elems[si]};
            found_better.store(true);
            done.store(true);
          }
          return;
        }
        if (cx == out.complexity) {
          std::string k = key_of(cand);
          std::lock_guard<std::mutex> g(lock);
          if (out.nodes.count(k)) continue;
          Braid conj = node.conjugator * simples.elems[si];
          if (stop) {
            if (auto it = stop->find(k); it != stop->end()) {
              out.hit = {k, conj};
              done.store(true);
              return;
            }
          }
          out.nodes.emplace(k, conj);
          frontier.push_back(Node{std::move(cand), std::move(conj)});
        }
      }
    };

    while (!frontier.empty() && !done.load()) {
      if (++visited > opts.node_budget) {
        out.exhausted = true;
        return out;
      }
      int batch = std::max(1, opts.threads);
      std::vector<Node> work;
      {
        std::lock_guard<std::mutex> g(lock);
        while (!frontier.empty() && static_cast<int>(work.size()) < batch) {
          work.push_back(std::move(frontier.front()));
          frontier.pop_front();
        }
      }
      visited += static_cast<long long>(work.size()) - 1;
      if (opts.threads > 1 && work.size() > 1) {
        std::vector<std::thread> pool;
        for (const auto& node : work)
          pool.emplace_back([&expand_one, &node] { expand_one(node); });
        for (auto& th : pool) th.join();
      } else {
        for (const auto& node : work) expand_one(node);
      }
    }

    if (out.hit) return out;
    if (found_better.load()) restart = true;
  }
  return out;
}

Tuple to_tuple(const ConjTuple& t) {
  Tuple r;
  r.reserve(t.components.size());
  for (const auto& c : t.components) r.push_back(Braid::from_word(c));
  return r;
}

}  // namespace

SummitNode summit_tuple(const ConjTuple& t, const SearchOptions& opts) {
  validate(t);
  Tuple seed = to_tuple(t);
  ClosureResult closure = summit_closure(seed, opts);
  // deterministic representative: lexicographically smallest key
  const std::pair<const std::string, Braid>* pick = nullptr;
  for (const auto& kv : closure.nodes)
    if (!pick || kv.first < pick->first) pick = &kv;
  assert(pick != nullptr);
  Braid conj = pick->second;
  SummitNode node;
  node.conjugator = conj;
  Braid conj_inv = conj.inverse();
  for (const auto& b : seed) node.tuple.push_back(conj_inv * b * conj);
  return node;
}

ConjResult solve_conjugacy(const BraidWord& u, const BraidWord& v,
                           const SearchOptions& opts) {
  if (u.n != v.n) throw std::invalid_argument("mismatched strand counts");
  ConjTuple s{u.n, {u}}, t{u.n, {v}};
  return solve_simultaneous_conjugacy(s, t, opts);
}

ConjResult solve_simultaneous_conjugacy(const ConjTuple& s, const ConjTuple& t,
                                        const SearchOptions& opts) {
  validate(s);
  validate(t);
  if (s.n != t.n) throw std::invalid_argument("mismatched strand counts");
  if (s.components.size() != t.components.size())
    throw std::invalid_argument("component-count mismatch");

  Tuple seed_s = to_tuple(s), seed_t = to_tuple(t);

  // cheap conjugacy invariants first: exponent sum and permutation cycle type
  for (size_t i = 0; i < seed_s.size(); ++i) {
    long es = 0, et = 0;
    for (int l : s.components[i].letters) es += l < 0 ? -1 : 1;
    for (int l : t.components[i].letters) et += l < 0 ? -1 : 1;
    if (es != et) return {SolveStatus::NoSolution, {}};
    auto cycle_type = [](const Permutation& p) {
      std::vector<int> lens;
      std::vector<bool> seen(p.size(), false);
      for (int i2 = 0; i2 < p.size(); ++i2) {
        if (seen[i2]) continue;
        int len = 0;
        for (int j = i2; !seen[j]; j = p(j)) {
          seen[j] = true;
          ++len;
        }
        lens.push_back(len);
      }
      std::sort(lens.begin(), lens.end());
      return lens;
    };
    if (cycle_type(seed_s[i].permutation()) !=
        cycle_type(seed_t[i].permutation()))
      return {SolveStatus::NoSolution, {}};
  }

  ClosureResult cs = summit_closure(seed_s, opts);
  if (cs.exhausted) return {SolveStatus::Inconclusive, {}};
  ClosureResult ct = summit_closure(seed_t, opts, &cs.nodes);

  if (!ct.hit) {
    if (ct.exhausted) return {SolveStatus::Inconclusive, {}};
    return {SolveStatus::NoSolution, {}};
  }

  // c_s^{-1} s c_s = node = c_t^{-1} t c_t  =>  x = c_s c_t^{-1}
  const Braid& c_t = ct.hit->second;
  const Braid& c_s = cs.nodes.at(ct.hit->first);
  Braid x = c_s * c_t.inverse();
  Braid x_inv = x.inverse();
  for (size_t i = 0; i < seed_s.size(); ++i) {
    if (!(x_inv * seed_s[i] * x == seed_t[i]))
      throw std::logic_error("simconj produced an unverified witness");
  }
  return {SolveStatus::Solved, x.to_word()};
}

}  // namespace braid
