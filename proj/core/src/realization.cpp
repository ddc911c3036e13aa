#include "orderscope/realization.hpp"

#include <algorithm>
#include <map>

#include "hat_detail.hpp"

namespace osc {

BasePtr make_base(Poset p) {
  auto b = std::make_shared<Base>();
  b->closed = std::move(p);
  return b;
}

BasePtr make_base(Preposet p) {
  auto b = std::make_shared<Base>();
  b->closed = transitive_closure(p);
  b->pre = std::move(p);
  return b;
}

BasePtr make_base(const Subdivision& s) { return make_base(s.sub); }

RPoint make_rpoint(BasePtr base, std::vector<int> chain, std::vector<Rat> weights) {
  if (!base) fail(Errc::BadInput, "null base");
  if (chain.size() != weights.size() || chain.empty())
    fail(Errc::BadInput, "chain/weight size mismatch or empty chain");
  const Poset& cl = base->closed;
  std::vector<std::pair<int, Rat>> entries;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] < 0 || chain[i] >= cl.n()) fail(Errc::BadInput, "chain index out of range");
    if (weights[i] <= 0) fail(Errc::BadInput, "weights must be positive");
    entries.emplace_back(chain[i], weights[i]);
  }
  std::sort(entries.begin(), entries.end(),
            [&](const auto& a, const auto& b) { return cl.lt(a.first, b.first); });
  Rat total = 0;
  RPoint x;
  x.base = std::move(base);
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].first == entries[i - 1].first)
      fail(Errc::BadInput, "repeated chain element");
    if (i > 0 && !cl.lt(entries[i - 1].first, entries[i].first))
      fail(Errc::BadInput, "chain elements are not totally ordered");
    x.chain.push_back(entries[i].first);
    x.weights.push_back(entries[i].second);
    total += entries[i].second;
  }
  if (total != 1) fail(Errc::BadInput, "weights must sum to 1");
  if (x.base->pre && !is_clique_chain(*x.base->pre, x.chain))
    fail(Errc::BadInput, "chain is not a clique of the preposet");
  return x;
}

RPoint make_rpoint_labels(BasePtr base, const std::vector<std::string>& chain,
                          const std::vector<Rat>& weights) {
  std::vector<int> idx;
  for (const auto& l : chain) {
    int i = base->closed.index_of(l);
    if (i < 0) fail(Errc::BadInput, "unknown chain element '" + l + "'");
    idx.push_back(i);
  }
  return make_rpoint(std::move(base), std::move(idx), weights);
}

RPoint vertex_point(BasePtr base, int element) {
  return make_rpoint(std::move(base), {element}, {Rat(1)});
}

Injection standard_injection(const Base& b) { return standard_embedding(b.closed); }

Injection atomic_injection(const Poset& p) {
  if (!is_atomic(p)) fail(Errc::BadInput, "atomic injection of a non-atomic poset");
  auto at = atoms(p);
  Injection j(p.n());
  for (int e = 0; e < p.n(); ++e)
    for (int a : at)
      if (p.leq(a, e)) j[e].insert(p.labels[a]);
  return j;
}

Injection dual_injection(const Poset& p) {
  Injection j(p.n());
  for (int e = 0; e < p.n(); ++e)
    for (int q = 0; q < p.n(); ++q)
      if (!p.leq(e, q)) j[e].insert(p.labels[q]);
  return j;
}

std::vector<Rat> coords(const RPoint& x) {
  const Poset& cl = x.base->closed;
  std::vector<Rat> v(cl.n(), Rat(0));
  for (size_t i = 0; i < x.chain.size(); ++i)
    for (int s = 0; s < cl.n(); ++s)
      if (cl.leq(s, x.chain[i])) v[s] += x.weights[i];
  return v;
}

std::map<std::string, Rat> coords_j(const RPoint& x, const Injection& j) {
  if (static_cast<int>(j.size()) != x.base->closed.n())
    fail(Errc::BadInput, "injection size mismatch");
  std::map<std::string, Rat> v;
  for (size_t i = 0; i < x.chain.size(); ++i)
    for (const auto& s : j[x.chain[i]]) v[s] += x.weights[i];
  return v;
}

Rat dist(const RPoint& x, const RPoint& y) {
  if (!(*x.base == *y.base)) fail(Errc::BaseMismatch, "points live over different bases");
  auto vx = coords(x), vy = coords(y);
  Rat best = 0;
  for (size_t s = 0; s < vx.size(); ++s) {
    Rat d = rat_abs(vx[s] - vy[s]);
    if (d > best) best = d;
  }
  return best;
}

Rat dist_j(const RPoint& x, const RPoint& y, const Injection& j) {
  if (!(*x.base == *y.base)) fail(Errc::BaseMismatch, "points live over different bases");
  auto vx = coords_j(x, j), vy = coords_j(y, j);
  Rat best = 0;
  for (const auto& [s, val] : vx) {
    auto it = vy.find(s);
    Rat d = rat_abs(it == vy.end() ? val : val - it->second);
    if (d > best) best = d;
  }
  for (const auto& [s, val] : vy)
    if (!vx.count(s) && rat_abs(val) > best) best = rat_abs(val);
  return best;
}

// ---------------------------------------------------------------------------
// Hatted chain machinery
// ---------------------------------------------------------------------------

namespace detail {

namespace {

// u <= v in the hat poset (sentinels below/above everything).
bool hat_leq(const Poset& cl, int u, int v) {
  if (u == v) return true;
  if (u == kBot || v == kTop) return true;
  if (v == kBot || u == kTop) return false;
  return cl.leq(u, v);
}

}  // namespace

Hatted make_hatted(const RPoint& x, const RPoint& y) {
  return make_hatted_chains(x, y, x.chain, y.chain);
}

Hatted make_hatted_chains(const RPoint& x, const RPoint& y, const std::vector<int>& raw_a,
                          const std::vector<int>& raw_b) {
  const Poset& cl = x.base->closed;
  std::vector<int> chain_a = raw_a, chain_b = raw_b;
  std::sort(chain_a.begin(), chain_a.end());
  chain_a.erase(std::unique(chain_a.begin(), chain_a.end()), chain_a.end());
  std::sort(chain_b.begin(), chain_b.end());
  chain_b.erase(std::unique(chain_b.begin(), chain_b.end()), chain_b.end());
  std::sort(chain_a.begin(), chain_a.end(), [&](int u, int v) { return cl.lt(u, v); });
  std::sort(chain_b.begin(), chain_b.end(), [&](int u, int v) { return cl.lt(u, v); });
  for (int c : x.chain)
    if (std::find(chain_a.begin(), chain_a.end(), c) == chain_a.end())
      fail(Errc::BadInput, "witness chain misses a support element");
  for (int c : y.chain)
    if (std::find(chain_b.begin(), chain_b.end(), c) == chain_b.end())
      fail(Errc::BadInput, "witness chain misses a support element");
  if (!is_chain(cl, chain_a) || !is_chain(cl, chain_b))
    fail(Errc::BadInput, "witness set is not a chain");
  Hatted h;
  h.m = static_cast<int>(chain_a.size()) + 2;
  h.n = static_cast<int>(chain_b.size()) + 2;
  h.a.assign(h.m + 1, 0);
  h.b.assign(h.n + 1, 0);
  h.a[1] = kBot;
  h.a[h.m] = kTop;
  for (int k = 2; k < h.m; ++k) h.a[k] = chain_a[k - 2];
  h.b[1] = kBot;
  h.b[h.n] = kTop;
  for (int l = 2; l < h.n; ++l) h.b[l] = chain_b[l - 2];

  auto vx = coords(x);
  auto vy = coords(y);
  h.alpha.assign(h.m + 1, Rat(0));
  h.beta.assign(h.n + 1, Rat(0));
  for (int k = 2; k < h.m; ++k) h.alpha[k] = vx[h.a[k]];
  for (int l = 2; l < h.n; ++l) h.beta[l] = vy[h.b[l]];
  // alpha[m] = 0 (top block), and alpha[2] = 1 holds by construction.

  // W = Â ∪ B̂ as a set of element ids; covering relation inside W.
  std::vector<int> w = h.a;
  w.erase(w.begin());
  for (int l = 1; l <= h.n; ++l) w.push_back(h.b[l]);
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  auto covering = [&](int u, int v) {
    if (u == v || !hat_leq(cl, u, v)) return false;
    for (int z : w)
      if (z != u && z != v && hat_leq(cl, u, z) && hat_leq(cl, z, v)) return false;
    return true;
  };
  auto in_a = [&](int e) { return std::find(h.a.begin() + 1, h.a.end(), e) != h.a.end(); };
  auto in_b = [&](int e) { return std::find(h.b.begin() + 1, h.b.end(), e) != h.b.end(); };

  for (int k = 1; k <= h.m; ++k)
    for (int l = 1; l <= h.n; ++l) {
      int u = h.a[k], v = h.b[l];
      if (u == v) {
        h.pairs.emplace_back(k, l);
        h.z.push_back(static_cast<int>(h.pairs.size()) - 1);
        h.primed.emplace_back(k, l);
        h.zp.push_back(static_cast<int>(h.primed.size()) - 1);
      } else if (!in_b(u) && !in_a(v)) {
        if (covering(u, v)) h.pairs.emplace_back(k, l);
        if (covering(v, u)) h.primed.emplace_back(k, l);
      }
    }
  std::sort(h.pairs.begin(), h.pairs.end());
  std::sort(h.primed.begin(), h.primed.end());
  // recompute equality index sets after sorting
  h.z.clear();
  h.zp.clear();
  for (size_t i = 0; i < h.pairs.size(); ++i)
    if (h.a[h.pairs[i].first] == h.b[h.pairs[i].second]) h.z.push_back(static_cast<int>(i));
  for (size_t i = 0; i < h.primed.size(); ++i)
    if (h.a[h.primed[i].first] == h.b[h.primed[i].second]) h.zp.push_back(static_cast<int>(i));
  return h;
}

}  // namespace detail

std::pair<Rat, ChainPairWitness> dist_chain_formula(const RPoint& x, const RPoint& y) {
  if (!(*x.base == *y.base)) fail(Errc::BaseMismatch, "points live over different bases");
  detail::Hatted h = detail::make_hatted(x, y);
  ChainPairWitness w;
  w.pairs = h.pairs;
  w.primed_pairs = h.primed;
  w.z = h.z;
  w.z_primed = h.zp;
  Rat best = 0;
  for (size_t i = 0; i + 1 < h.pairs.size(); ++i) {
    int k = h.pairs[i].first + 1;
    int l = h.pairs[i + 1].second;
    w.delta.emplace_back(k, l);
    Rat d = rat_abs(h.alpha[k] - h.beta[l]);
    if (d > best) best = d;
  }
  for (size_t i = 0; i + 1 < h.primed.size(); ++i) {
    int k = h.primed[i + 1].first;
    int l = h.primed[i].second + 1;
    w.delta_primed.emplace_back(k, l);
    Rat d = rat_abs(h.alpha[k] - h.beta[l]);
    if (d > best) best = d;
  }
  return {best, w};
}

RPoint decompose(BasePtr base, const std::vector<Rat>& v) {
  auto r = try_decompose(base, v);
  if (!r) {
    // redo to surface the witness level
    const Poset& cl = base->closed;
    if (static_cast<int>(v.size()) != cl.n()) fail(Errc::BadInput, "vector size mismatch");
    std::vector<Rat> levels;
    for (const auto& val : v) {
      if (val < 0 || val > 1) fail(Errc::BadInput, "entries must lie in [0,1]");
      if (val > 0) levels.push_back(val);
    }
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.empty() || levels.front() != 1)
      fail(Errc::NotInRealization, "top level is not 1");
    for (const Rat& lam : levels) {
      std::vector<int> t;
      for (int s = 0; s < cl.n(); ++s)
        if (v[s] >= lam) t.push_back(s);
      auto lub = least_upper_bound(cl, t);
      bool cone_ok = false;
      if (lub && std::find(t.begin(), t.end(), *lub) != t.end()) {
        cone_ok = (cone_of(cl, *lub).size() == t.size());
      }
      if (!cone_ok)
        fail(Errc::NotInRealization,
             "superlevel set at " + rat_str(lam) + " is not the cone of an element");
    }
    fail(Errc::NotInRealization, "vector does not decompose");
  }
  return *r;
}

std::optional<RPoint> try_decompose(BasePtr base, const std::vector<Rat>& v) {
  const Poset& cl = base->closed;
  if (static_cast<int>(v.size()) != cl.n()) fail(Errc::BadInput, "vector size mismatch");
  std::vector<Rat> levels;
  for (const auto& val : v) {
    if (val < 0 || val > 1) fail(Errc::BadInput, "entries must lie in [0,1]");
    if (val > 0) levels.push_back(val);
  }
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (levels.empty() || levels.front() != 1) return std::nullopt;
  std::vector<int> chain;
  std::vector<Rat> weights;
  for (size_t i = 0; i < levels.size(); ++i) {
    std::vector<int> t;
    for (int s = 0; s < cl.n(); ++s)
      if (v[s] >= levels[i]) t.push_back(s);
    // t must be the cone of its maximum
    int top = -1;
    for (int cand : t) {
      bool is_top = true;
      for (int o : t)
        if (!cl.leq(o, cand)) { is_top = false; break; }
      if (is_top) { top = cand; break; }
    }
    if (top < 0) return std::nullopt;
    if (cone_of(cl, top).size() != t.size()) return std::nullopt;
    chain.push_back(top);
    weights.push_back(levels[i] - (i + 1 < levels.size() ? levels[i + 1] : Rat(0)));
  }
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!cl.lt(chain[i], chain[i + 1])) return std::nullopt;
  if (base->pre && !is_clique_chain(*base->pre, chain)) return std::nullopt;
  return make_rpoint(std::move(base), std::move(chain), std::move(weights));
}

RPoint map_point(const MonotoneMap& f, const RPoint& x) {
  if (!(x.base->closed == f.source))
    fail(Errc::BaseMismatch, "point does not live over the map's source");
  std::map<int, Rat> img;  // target element -> accumulated weight
  for (size_t i = 0; i < x.chain.size(); ++i) img[f.assign[x.chain[i]]] += x.weights[i];
  std::vector<int> chain;
  std::vector<Rat> weights;
  for (const auto& [e, w] : img) {
    chain.push_back(e);
    weights.push_back(w);
  }
  return make_rpoint(make_base(f.target), std::move(chain), std::move(weights));
}

RPoint dual_point(const RPoint& x, BasePtr dual_base) {
  const Poset& d = dual_base->closed;
  const Poset& p = x.base->closed;
  if (d.labels != p.labels) fail(Errc::BaseMismatch, "dual base labels differ");
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (p.leq(i, j) != d.leq(j, i)) fail(Errc::BaseMismatch, "base is not the dual");
  return make_rpoint(std::move(dual_base), x.chain, x.weights);
}

RPoint rebase_subposet(const RPoint& x, BasePtr bigger) {
  std::vector<int> chain;
  for (int c : x.chain) {
    int i = bigger->closed.index_of(x.base->closed.labels[c]);
    if (i < 0)
      fail(Errc::BadInput,
           "element '" + x.base->closed.labels[c] + "' missing from the bigger base");
    chain.push_back(i);
  }
  return make_rpoint(std::move(bigger), std::move(chain), x.weights);
}

// ---------------------------------------------------------------------------
// Subdivision homeomorphism
// ---------------------------------------------------------------------------

RPoint h_down(const Subdivision& sd, const RPoint& x) {
  if (!(x.base->closed == sd.sub))
    fail(Errc::BaseMismatch, "point does not live over the subdivision");
  const Poset& base = *sd.base;
  std::vector<Rat> v(base.n(), Rat(0));
  for (size_t i = 0; i < x.chain.size(); ++i) {
    const Interval& iv = sd.iv[x.chain[i]];
    Rat half = x.weights[i] / 2;
    for (int s = 0; s < base.n(); ++s) {
      if (iv.lo == iv.hi) {
        if (base.leq(s, iv.lo)) v[s] += x.weights[i];
      } else {
        if (base.leq(s, iv.lo)) v[s] += half;
        if (base.leq(s, iv.hi)) v[s] += half;
      }
    }
  }
  return decompose(make_base(base), v);
}

namespace {

// All maximal chains of the interval poset of a chain of length r, over
// positions 0..r-1: sequences [i,i] ⊂ ... ⊂ [0,r-1], each step extending one
// endpoint. Returned in a fixed canonical order.
std::vector<std::vector<Interval>> maximal_interval_chains(int r) {
  std::vector<std::vector<Interval>> out;
  std::vector<Interval> cur;
  auto rec = [&](auto&& self, int lo, int hi) -> void {
    cur.push_back(Interval{lo, hi});
    if (lo == 0 && hi == r - 1) {
      auto rev = cur;
      std::reverse(rev.begin(), rev.end());
      out.push_back(std::move(rev));
    } else {
      if (lo > 0) self(self, lo - 1, hi);
      if (hi < r - 1) self(self, lo, hi + 1);
    }
    cur.pop_back();
  };
  for (int i = 0; i < r; ++i) rec(rec, i, i);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].lo != b[i].lo) return a[i].lo < b[i].lo;
      if (a[i].hi != b[i].hi) return a[i].hi < b[i].hi;
    }
    return false;
  });
  return out;
}

// Solve the r x r rational system M u = rhs; nullopt when singular.
std::optional<std::vector<Rat>> solve_system(std::vector<std::vector<Rat>> m,
                                             std::vector<Rat> rhs) {
  int r = static_cast<int>(rhs.size());
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int row = col; row < r; ++row)
      if (m[row][col] != 0) { piv = row; break; }
    if (piv < 0) return std::nullopt;
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    Rat inv = Rat(1) / m[col][col];
    for (int c2 = col; c2 < r; ++c2) m[col][c2] *= inv;
    rhs[col] *= inv;
    for (int row = 0; row < r; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat factor = m[row][col];
      for (int c2 = col; c2 < r; ++c2) m[row][c2] -= factor * m[col][c2];
      rhs[row] -= factor * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

RPoint h_up(const Subdivision& sd, const RPoint& x) {
  if (!(x.base->closed == *sd.base))
    fail(Errc::BaseMismatch, "point does not live over the subdivision's base");
  int r = static_cast<int>(x.chain.size());
  auto vx = coords(x);
  std::vector<Rat> alpha(r);
  for (int k = 0; k < r; ++k) alpha[k] = vx[x.chain[k]];

  for (const auto& cell : maximal_interval_chains(r)) {
    // matrix: row k = coordinate at position k of each cell vertex
    std::vector<std::vector<Rat>> m(r, std::vector<Rat>(r, Rat(0)));
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        if (k <= cell[j].lo)
          m[k][j] = 1;
        else if (k <= cell[j].hi)
          m[k][j] = Rat(1, 2);
      }
    }
    auto u = solve_system(m, alpha);
    if (!u) continue;
    bool ok = true;
    for (const Rat& w : *u)
      if (w < 0) { ok = false; break; }
    if (!ok) continue;
    std::vector<int> chain;
    std::vector<Rat> weights;
    for (int j = 0; j < r; ++j) {
      if ((*u)[j] == 0) continue;
      int idx = sd.index_of_interval(x.chain[cell[j].lo], x.chain[cell[j].hi]);
      if (idx < 0) fail(Errc::BadInput, "interval missing from subdivision");
      chain.push_back(idx);
      weights.push_back((*u)[j]);
    }
    return make_rpoint(make_base(sd.sub), std::move(chain), std::move(weights));
  }
  fail(Errc::NotInRealization, "no subdivision cell contains the point");
}

RPoint ladder_down(const Ladder& ld, const RPoint& x_over_top) {
  RPoint cur = x_over_top;
  for (auto it = ld.steps.rbegin(); it != ld.steps.rend(); ++it) cur = h_down(*it, cur);
  return cur;
}

RPoint ladder_up(const Ladder& ld, const RPoint& x_over_bottom) {
  RPoint cur = x_over_bottom;
  for (const auto& step : ld.steps) cur = h_up(step, cur);
  return cur;
}

}  // namespace osc
