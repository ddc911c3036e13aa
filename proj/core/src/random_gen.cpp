#include "orderscope/random_gen.hpp"

#include <algorithm>
#include <numeric>

#include "orderscope/build.hpp"

namespace osc {

uint64_t Rng::below(uint64_t n) {
  if (n == 0) fail(Errc::BadInput, "below(0)");
  uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
  for (;;) {
    uint64_t v = next();
    if (v < limit) return v % n;
  }
}

int64_t Rng::range(int64_t lo, int64_t hi) {
  return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
}

Rng Rng::fork(uint64_t id) const {
  Rng child(state_ ^ (0xd1342543de82ef95ULL * (id + 1)));
  child.next();
  return child;
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(static_cast<uint64_t>(i) + 1)]);
  return p;
}

std::vector<Rat> Rng::simplex_weights(int k, int den) {
  // positive integers summing over a common denominator
  std::vector<BigInt> parts(k);
  BigInt total = 0;
  for (int i = 0; i < k; ++i) {
    parts[i] = BigInt(1 + below(static_cast<uint64_t>(den)));
    total += parts[i];
  }
  std::vector<Rat> w(k);
  for (int i = 0; i < k; ++i) w[i] = Rat(parts[i], total);
  return w;
}

Poset random_poset(Rng& rng, int n, uint64_t edge_num, uint64_t edge_den) {
  return transitive_closure(random_preposet(rng, n, edge_num, edge_den));
}

Preposet random_preposet(Rng& rng, int n, uint64_t edge_num, uint64_t edge_den) {
  auto perm = rng.permutation(n);
  Preposet p;
  for (int i = 0; i < n; ++i) p.labels.push_back("e" + std::to_string(i + 1));
  p.adj.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (perm[i] >= perm[j]) continue;  // orient along the permutation
      if (rng.chance(edge_num, edge_den)) p.adj[static_cast<size_t>(i) * n + j] = 1;
    }
  return p;
}

std::vector<int> random_maximal_chain(Rng& rng, const Poset& p) {
  int cur = static_cast<int>(rng.below(static_cast<uint64_t>(p.n())));
  std::vector<int> chain{cur};
  // extend upward
  for (;;) {
    std::vector<int> ups;
    for (int j = 0; j < p.n(); ++j)
      if (p.lt(chain.back(), j)) {
        bool covering = true;
        for (int k = 0; k < p.n() && covering; ++k)
          if (p.lt(chain.back(), k) && p.lt(k, j)) covering = false;
        if (covering) ups.push_back(j);
      }
    if (ups.empty()) break;
    chain.push_back(ups[rng.below(ups.size())]);
  }
  // extend downward
  for (;;) {
    std::vector<int> downs;
    for (int j = 0; j < p.n(); ++j)
      if (p.lt(j, chain.front())) {
        bool covering = true;
        for (int k = 0; k < p.n() && covering; ++k)
          if (p.lt(j, k) && p.lt(k, chain.front())) covering = false;
        if (covering) downs.push_back(j);
      }
    if (downs.empty()) break;
    chain.insert(chain.begin(), downs[rng.below(downs.size())]);
  }
  return chain;
}

RPoint random_point(Rng& rng, BasePtr base, int weight_den) {
  auto maximal = random_maximal_chain(rng, base->closed);
  // preposet bases: restrict to a clique
  if (base->pre) {
    std::vector<int> clique;
    for (int e : maximal) {
      bool ok = true;
      for (int c : clique)
        if (!base->pre->related(c, e)) { ok = false; break; }
      if (ok) clique.push_back(e);
    }
    maximal = clique;
  }
  return random_point_on_chain(rng, std::move(base), maximal, weight_den);
}

RPoint random_point_on_chain(Rng& rng, BasePtr base, const std::vector<int>& chain,
                             int weight_den) {
  std::vector<int> sub;
  for (int e : chain)
    if (rng.chance(3, 4)) sub.push_back(e);
  if (sub.empty()) sub.push_back(chain[rng.below(chain.size())]);
  auto w = rng.simplex_weights(static_cast<int>(sub.size()), weight_den);
  return make_rpoint(std::move(base), std::move(sub), std::move(w));
}

Injection random_embedding(Rng& rng, const Poset& p) {
  // private labels force injectivity and order reflection; shared noise
  // labels are distributed along the order
  int extra = static_cast<int>(rng.below(4));
  Injection j(p.n());
  for (int e = 0; e < p.n(); ++e)
    for (int b : cone_of(p, e)) j[e].insert("s:" + p.labels[b]);
  for (int x = 0; x < extra; ++x) {
    // attach a noise label to a random element; inherited upward
    int at = static_cast<int>(rng.below(static_cast<uint64_t>(p.n())));
    std::string noise = "n" + std::to_string(x);
    for (int e = 0; e < p.n(); ++e)
      if (p.leq(at, e)) j[e].insert(noise);
  }
  return j;
}

MonotoneMap random_monotone_map(Rng& rng, const Poset& src, const Poset& tgt) {
  // pick images along a linear extension, repairing monotonicity greedily
  std::vector<int> order(src.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cone_of(src, a).size() < cone_of(src, b).size();
  });
  std::vector<int> assign(src.n(), -1);
  for (int e : order) {
    std::vector<int> candidates;
    for (int t = 0; t < tgt.n(); ++t) {
      bool ok = true;
      for (int prev : order) {
        if (assign[prev] < 0 || prev == e) continue;
        if (src.leq(prev, e) && !tgt.leq(assign[prev], t)) ok = false;
        if (src.leq(e, prev) && !tgt.leq(t, assign[prev])) ok = false;
        if (!ok) break;
      }
      if (ok) candidates.push_back(t);
    }
    if (candidates.empty()) {
      // fall back to a constant map, always monotone
      int c = static_cast<int>(rng.below(static_cast<uint64_t>(tgt.n())));
      for (int& a : assign) a = c;
      return make_monotone_map(src, tgt, std::move(assign));
    }
    assign[e] = candidates[rng.below(candidates.size())];
  }
  return make_monotone_map(src, tgt, std::move(assign));
}

FiniteMetric random_metric(Rng& rng, int n, int den) {
  std::vector<Rat> d(static_cast<size_t>(n) * n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat v(1 + static_cast<long>(rng.below(static_cast<uint64_t>(3 * den))), den);
      d[static_cast<size_t>(i) * n + j] = v;
      d[static_cast<size_t>(j) * n + i] = v;
    }
  // shortest-path closure restores the triangle inequality
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Rat via = d[static_cast<size_t>(i) * n + k] + d[static_cast<size_t>(k) * n + j];
        if ((i != k && j != k) && via < d[static_cast<size_t>(i) * n + j])
          d[static_cast<size_t>(i) * n + j] = via;
      }
  std::vector<std::string> points;
  for (int i = 0; i < n; ++i) points.push_back("x" + std::to_string(i + 1));
  return validate_metric(std::move(points), std::move(d));
}

Cover random_cover(Rng& rng, const FiniteMetric& m, int n_sets) {
  int n = m.n();
  std::vector<std::vector<uint8_t>> sets(n_sets, std::vector<uint8_t>(n, 0));
  for (int s = 0; s < n_sets; ++s) {
    int seed_pt = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    sets[s][seed_pt] = 1;
    for (int g = 0; g < n; ++g)
      if (rng.chance(1, 2)) sets[s][g] = 1;
  }
  // repair coverage
  for (int g = 0; g < n; ++g) {
    bool covered = false;
    for (int s = 0; s < n_sets && !covered; ++s) covered = sets[s][g] != 0;
    if (!covered) sets[rng.below(static_cast<uint64_t>(n_sets))][g] = 1;
  }
  std::vector<std::string> names;
  for (int s = 0; s < n_sets; ++s) names.push_back("U" + std::to_string(s + 1));
  return make_cover(m.points, std::move(names), std::move(sets), m);
}

void for_each_poset(int n, const std::function<void(const Poset&)>& fn) {
  if (n <= 0) return;
  if (n > 7) fail(Errc::SizeBound, "poset enumeration is exponential");
  // strict upper-triangular relation bits, kept only when transitive
  int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
    std::vector<uint8_t> lt(static_cast<size_t>(n) * n, 0);
    for (int b = 0; b < bits; ++b)
      if (mask & (uint64_t{1} << b)) lt[static_cast<size_t>(slots[b].first) * n + slots[b].second] = 1;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int k = 0; k < n && transitive; ++k) {
        if (!lt[static_cast<size_t>(i) * n + k]) continue;
        for (int j = 0; j < n; ++j)
          if (lt[static_cast<size_t>(k) * n + j] && !lt[static_cast<size_t>(i) * n + j]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;
    Poset p;
    p.labels = labels;
    p.le = lt;
    for (int i = 0; i < n; ++i) p.le[static_cast<size_t>(i) * n + i] = 1;
    fn(p);
  }
}

}  // namespace osc
