#include "orderscope/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace osc {

namespace {

void check_unique_labels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, int> seen;
  for (const auto& l : labels) {
    if (!seen.emplace(l, 1).second) fail(Errc::LabelClash, "duplicate label '" + l + "'");
  }
}

// Returns a directed cycle (as element indices) if one exists.
std::optional<std::vector<int>> find_cycle(int n, const std::vector<uint8_t>& adj) {
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<int> parent(n, -1);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    stack.push_back(root);
    while (!stack.empty()) {
      int u = stack.back();
      if (state[u] == 0) {
        state[u] = 1;
        for (int v = 0; v < n; ++v) {
          if (!adj[static_cast<size_t>(u) * n + v]) continue;
          if (state[v] == 1) {
            // walk parents from u back to v
            std::vector<int> cyc{v};
            for (int w = u; w != v; w = parent[w]) cyc.push_back(w);
            std::reverse(cyc.begin() + 1, cyc.end());
            cyc.push_back(v);
            return cyc;
          }
          if (state[v] == 0) {
            parent[v] = u;
            stack.push_back(v);
          }
        }
      } else {
        state[u] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

int Preposet::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

int Poset::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

Preposet validate_preposet(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& edges) {
  check_unique_labels(elements);
  Preposet p;
  p.labels = elements;
  int n = p.n();
  p.adj.assign(static_cast<size_t>(n) * n, 0);
  for (const auto& [a, b] : edges) {
    int i = p.index_of(a), j = p.index_of(b);
    if (i < 0) fail(Errc::BadInput, "unknown element '" + a + "'");
    if (j < 0) fail(Errc::BadInput, "unknown element '" + b + "'");
    if (i == j) fail(Errc::BadInput, "self-edge at '" + a + "'");
    p.adj[static_cast<size_t>(i) * n + j] = 1;
  }
  if (auto cyc = find_cycle(n, p.adj)) {
    std::string path;
    for (int v : *cyc) path += (path.empty() ? "" : " -> ") + p.labels[v];
    fail(Errc::DirectedCycle, "witness path " + path);
  }
  return p;
}

Poset transitive_closure(const Preposet& p) {
  int n = p.n();
  Poset q;
  q.labels = p.labels;
  q.le.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) q.le[static_cast<size_t>(i) * n + i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.edge(i, j)) q.le[static_cast<size_t>(i) * n + j] = 1;
  // Warshall
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!q.le[static_cast<size_t>(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (q.le[static_cast<size_t>(k) * n + j]) q.le[static_cast<size_t>(i) * n + j] = 1;
    }
  return q;
}

Poset validate_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& relations) {
  // Generating set; strip reflexive pairs before the acyclicity check.
  std::vector<std::pair<std::string, std::string>> strict;
  for (const auto& r : relations)
    if (r.first != r.second) strict.push_back(r);
  return transitive_closure(validate_preposet(elements, strict));
}

Preposet as_preposet(const Poset& p) {
  Preposet q;
  q.labels = p.labels;
  int n = p.n();
  q.adj.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.lt(i, j)) q.adj[static_cast<size_t>(i) * n + j] = 1;
  return q;
}

std::vector<std::pair<std::string, std::string>> edge_pairs(const Preposet& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (p.edge(i, j)) out.emplace_back(p.labels[i], p.labels[j]);
  return out;
}

std::vector<std::pair<std::string, std::string>> hasse_pairs(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> out;
  int n = p.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!p.lt(i, j)) continue;
      bool covering = true;
      for (int k = 0; k < n && covering; ++k)
        if (k != i && k != j && p.lt(i, k) && p.lt(k, j)) covering = false;
      if (covering) out.emplace_back(p.labels[i], p.labels[j]);
    }
  return out;
}

std::vector<int> minimal_elements(const Poset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.n(); ++i) {
    bool min = true;
    for (int j = 0; j < p.n() && min; ++j)
      if (p.lt(j, i)) min = false;
    if (min) out.push_back(i);
  }
  return out;
}

std::vector<int> maximal_elements(const Poset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.n(); ++i) {
    bool max = true;
    for (int j = 0; j < p.n() && max; ++j)
      if (p.lt(i, j)) max = false;
    if (max) out.push_back(i);
  }
  return out;
}

std::vector<int> atoms(const Poset& p) { return minimal_elements(p); }

std::vector<int> cone_of(const Poset& p, int e) {
  std::vector<int> out;
  for (int i = 0; i < p.n(); ++i)
    if (p.leq(i, e)) out.push_back(i);
  return out;
}

std::vector<int> dual_cone_of(const Poset& p, int e) {
  std::vector<int> out;
  for (int i = 0; i < p.n(); ++i)
    if (p.leq(e, i)) out.push_back(i);
  return out;
}

std::vector<int> star_of(const Poset& p, int e) {
  std::vector<uint8_t> in(p.n(), 0);
  for (int u : dual_cone_of(p, e))
    for (int i = 0; i < p.n(); ++i)
      if (p.leq(i, u)) in[i] = 1;
  std::vector<int> out;
  for (int i = 0; i < p.n(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::optional<int> least_upper_bound(const Poset& p, const std::vector<int>& subset) {
  if (subset.empty()) return std::nullopt;
  std::vector<int> ub;
  for (int u = 0; u < p.n(); ++u) {
    bool ok = true;
    for (int s : subset)
      if (!p.leq(s, u)) { ok = false; break; }
    if (ok) ub.push_back(u);
  }
  for (int m : ub) {
    bool least = true;
    for (int u : ub)
      if (!p.leq(m, u)) { least = false; break; }
    if (least) return m;
  }
  return std::nullopt;
}

std::optional<int> greatest_lower_bound(const Poset& p, const std::vector<int>& subset) {
  if (subset.empty()) return std::nullopt;
  std::vector<int> lb;
  for (int u = 0; u < p.n(); ++u) {
    bool ok = true;
    for (int s : subset)
      if (!p.leq(u, s)) { ok = false; break; }
    if (ok) lb.push_back(u);
  }
  for (int m : lb) {
    bool greatest = true;
    for (int u : lb)
      if (!p.leq(u, m)) { greatest = false; break; }
    if (greatest) return m;
  }
  return std::nullopt;
}

bool is_atomic(const Poset& p) {
  auto at = atoms(p);
  for (int e = 0; e < p.n(); ++e) {
    std::vector<int> below;
    for (int a : at)
      if (p.leq(a, e)) below.push_back(a);
    auto lub = least_upper_bound(p, below);
    if (!lub || *lub != e) return false;
  }
  return true;
}

bool is_conditionally_complete(const Poset& p) {
  // On a finite poset it suffices that every bounded pair has a least upper
  // bound; induction then covers every bounded subset.
  for (int i = 0; i < p.n(); ++i)
    for (int j = i + 1; j < p.n(); ++j) {
      bool bounded = false;
      for (int u = 0; u < p.n() && !bounded; ++u)
        if (p.leq(i, u) && p.leq(j, u)) bounded = true;
      if (!bounded) continue;
      if (!least_upper_bound(p, {i, j})) return false;
    }
  return true;
}

bool is_chain(const Poset& p, const std::vector<int>& subset) {
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b)
      if (!p.leq(subset[a], subset[b]) && !p.leq(subset[b], subset[a])) return false;
  return true;
}

bool is_clique_chain(const Preposet& p, const std::vector<int>& subset) {
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b)
      if (!p.related(subset[a], subset[b])) return false;
  return true;
}

namespace {

template <typename Related>
std::vector<std::vector<int>> enumerate_chains(int n, Related related, size_t bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // grow by ascending element index; comparability is symmetric here
  auto rec = [&](auto&& self, int start) -> void {
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!related(u, v)) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(v);
      out.push_back(cur);
      if (out.size() > bound) fail(Errc::SizeBound, "too many chains");
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<std::vector<int>> all_chains(const Preposet& p, size_t bound) {
  auto closed = transitive_closure(p);
  auto chains = enumerate_chains(
      p.n(), [&](int u, int v) { return p.related(u, v); }, bound);
  for (auto& c : chains)
    std::sort(c.begin(), c.end(), [&](int a, int b) { return closed.lt(a, b); });
  return chains;
}

std::vector<std::vector<int>> all_chains(const Poset& p, size_t bound) {
  auto chains = enumerate_chains(
      p.n(), [&](int u, int v) { return p.leq(u, v) || p.leq(v, u); }, bound);
  for (auto& c : chains)
    std::sort(c.begin(), c.end(), [&](int a, int b) { return p.lt(a, b); });
  return chains;
}

bool is_embedding(const Poset& p, const std::vector<std::set<std::string>>& j) {
  if (static_cast<int>(j.size()) != p.n()) fail(Errc::BadInput, "injection size mismatch");
  for (int a = 0; a < p.n(); ++a)
    for (int b = a + 1; b < p.n(); ++b)
      if (j[a] == j[b])
        fail(Errc::NotInjective,
             "elements '" + p.labels[a] + "' and '" + p.labels[b] + "' share an image");
  for (int a = 0; a < p.n(); ++a)
    for (int b = 0; b < p.n(); ++b) {
      bool le = p.leq(a, b);
      bool inc = std::includes(j[b].begin(), j[b].end(), j[a].begin(), j[a].end());
      if (le != inc) return false;
    }
  return true;
}

std::vector<std::set<std::string>> standard_embedding(const Poset& p) {
  std::vector<std::set<std::string>> j(p.n());
  for (int e = 0; e < p.n(); ++e)
    for (int i : cone_of(p, e)) j[e].insert(p.labels[i]);
  return j;
}

bool is_monotone(const Poset& src, const Poset& tgt, const std::vector<int>& assign) {
  for (int a = 0; a < src.n(); ++a)
    for (int b = 0; b < src.n(); ++b)
      if (src.leq(a, b) && !tgt.leq(assign[a], assign[b])) return false;
  return true;
}

MonotoneMap make_monotone_map(Poset src, Poset tgt, std::vector<int> assign) {
  if (static_cast<int>(assign.size()) != src.n())
    fail(Errc::BadInput, "assignment size mismatch");
  for (int v : assign)
    if (v < 0 || v >= tgt.n()) fail(Errc::BadInput, "assignment out of range");
  if (!is_monotone(src, tgt, assign)) fail(Errc::NotMonotone, "assignment is not monotone");
  return MonotoneMap{std::move(src), std::move(tgt), std::move(assign)};
}

MonotoneMap make_monotone_map(Poset src, Poset tgt,
                              const std::vector<std::pair<std::string, std::string>>& assign) {
  std::vector<int> a(src.n(), -1);
  for (const auto& [from, to] : assign) {
    int i = src.index_of(from), j = tgt.index_of(to);
    if (i < 0) fail(Errc::BadInput, "unknown source element '" + from + "'");
    if (j < 0) fail(Errc::BadInput, "unknown target element '" + to + "'");
    a[i] = j;
  }
  for (int i = 0; i < src.n(); ++i)
    if (a[i] < 0) fail(Errc::BadInput, "missing assignment for '" + src.labels[i] + "'");
  return make_monotone_map(std::move(src), std::move(tgt), std::move(a));
}

MonotoneMap identity_map(const Poset& p) {
  std::vector<int> a(p.n());
  std::iota(a.begin(), a.end(), 0);
  return MonotoneMap{p, p, std::move(a)};
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.target == g.source)) fail(Errc::BadInput, "compose: target/source mismatch");
  std::vector<int> a(f.assign.size());
  for (size_t i = 0; i < a.size(); ++i) a[i] = g.assign[f.assign[i]];
  return MonotoneMap{f.source, g.target, std::move(a)};
}

namespace {

bool iso_backtrack(const Poset& a, const Poset& b, std::vector<int>& img,
                   std::vector<uint8_t>& used, int next) {
  int n = a.n();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (a.leq(prev, next) != b.leq(img[prev], cand)) ok = false;
      if (a.leq(next, prev) != b.leq(cand, img[prev])) ok = false;
    }
    if (a.leq(next, next) != b.leq(cand, cand)) ok = false;
    if (!ok) continue;
    img[next] = cand;
    used[cand] = 1;
    if (iso_backtrack(a, b, img, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Poset& a, const Poset& b) {
  if (a.n() != b.n()) return false;
  // cheap invariants
  auto degs = [](const Poset& p) {
    std::vector<std::pair<int, int>> d(p.n());
    for (int i = 0; i < p.n(); ++i) {
      int up = 0, down = 0;
      for (int j = 0; j < p.n(); ++j) {
        if (p.lt(i, j)) ++up;
        if (p.lt(j, i)) ++down;
      }
      d[i] = {up, down};
    }
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;
  std::vector<int> img(a.n(), -1);
  std::vector<uint8_t> used(a.n(), 0);
  return iso_backtrack(a, b, img, used, 0);
}

}  // namespace osc
