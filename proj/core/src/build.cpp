#include "orderscope/build.hpp"

#include <algorithm>
#include <unordered_set>

namespace osc {

namespace {

void require_disjoint_labels(const std::vector<std::string>& a,
                             const std::vector<std::string>& b) {
  std::unordered_set<std::string> s(a.begin(), a.end());
  for (const auto& l : b)
    if (s.count(l)) fail(Errc::LabelClash, "label '" + l + "' on both sides");
}

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

void require_unique(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) fail(Errc::LabelClash, "constructed label '" + l + "' collides");
}

}  // namespace

Poset chain_poset(int k, const std::string& prefix) {
  Poset p;
  for (int i = 1; i <= k; ++i) p.labels.push_back(prefix + std::to_string(i));
  p.le.assign(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) p.le[static_cast<size_t>(i) * k + j] = 1;
  return p;
}

Poset antichain_poset(int k, const std::string& prefix) {
  Poset p;
  for (int i = 1; i <= k; ++i) p.labels.push_back(prefix + std::to_string(i));
  p.le.assign(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i) p.le[static_cast<size_t>(i) * k + i] = 1;
  return p;
}

Poset product(const Poset& p, const Poset& q) {
  Poset r;
  int np = p.n(), nq = q.n();
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) r.labels.push_back(pair_label(p.labels[i], q.labels[j]));
  require_unique(r.labels);
  int n = np * nq;
  r.le.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      for (int k = 0; k < np; ++k)
        for (int l = 0; l < nq; ++l)
          if (p.leq(i, k) && q.leq(j, l))
            r.le[static_cast<size_t>(i * nq + j) * n + (k * nq + l)] = 1;
  return r;
}

Preposet preposet_product(const Preposet& p, const Preposet& q) {
  Preposet r;
  int np = p.n(), nq = q.n();
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) r.labels.push_back(pair_label(p.labels[i], q.labels[j]));
  require_unique(r.labels);
  int n = np * nq;
  r.adj.assign(static_cast<size_t>(n) * n, 0);
  auto rel = [](const Preposet& x, int a, int b) {  // a ⪯ b (edge or equal)
    return a == b || x.edge(a, b);
  };
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      for (int k = 0; k < np; ++k)
        for (int l = 0; l < nq; ++l) {
          int u = i * nq + j, v = k * nq + l;
          if (u != v && rel(p, i, k) && rel(q, j, l))
            r.adj[static_cast<size_t>(u) * n + v] = 1;
        }
  return r;
}

Poset ordinal_sum(const Poset& p, const Poset& q) {
  require_disjoint_labels(p.labels, q.labels);
  Poset r;
  r.labels = p.labels;
  r.labels.insert(r.labels.end(), q.labels.begin(), q.labels.end());
  int np = p.n(), n = np + q.n();
  r.le.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      if (p.leq(i, j)) r.le[static_cast<size_t>(i) * n + j] = 1;
  for (int i = 0; i < q.n(); ++i)
    for (int j = 0; j < q.n(); ++j)
      if (q.leq(i, j)) r.le[static_cast<size_t>(np + i) * n + (np + j)] = 1;
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < q.n(); ++j) r.le[static_cast<size_t>(i) * n + (np + j)] = 1;
  return r;
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  require_disjoint_labels(p.labels, q.labels);
  Poset r;
  r.labels = p.labels;
  r.labels.insert(r.labels.end(), q.labels.begin(), q.labels.end());
  int np = p.n(), n = np + q.n();
  r.le.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      if (p.leq(i, j)) r.le[static_cast<size_t>(i) * n + j] = 1;
  for (int i = 0; i < q.n(); ++i)
    for (int j = 0; j < q.n(); ++j)
      if (q.leq(i, j)) r.le[static_cast<size_t>(np + i) * n + (np + j)] = 1;
  return r;
}

Poset cone(const Poset& p, const std::string& top_label) {
  if (p.index_of(top_label) >= 0) fail(Errc::LabelClash, "label '" + top_label + "' exists");
  Poset r;
  r.labels = p.labels;
  r.labels.push_back(top_label);
  int n = p.n() + 1;
  r.le.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (p.leq(i, j)) r.le[static_cast<size_t>(i) * n + j] = 1;
  for (int i = 0; i < n; ++i) r.le[static_cast<size_t>(i) * n + (n - 1)] = 1;
  return r;
}

Poset dual_cone(const Poset& p, const std::string& bottom_label) {
  if (p.index_of(bottom_label) >= 0)
    fail(Errc::LabelClash, "label '" + bottom_label + "' exists");
  Poset r;
  r.labels = p.labels;
  r.labels.push_back(bottom_label);
  int n = p.n() + 1;
  r.le.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (p.leq(i, j)) r.le[static_cast<size_t>(i) * n + j] = 1;
  for (int i = 0; i < n; ++i) r.le[static_cast<size_t>(n - 1) * n + i] = 1;
  return r;
}

Poset dual(const Poset& p) {
  Poset r;
  r.labels = p.labels;
  int n = p.n();
  r.le.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(j, i)) r.le[static_cast<size_t>(i) * n + j] = 1;
  return r;
}

Preposet dual(const Preposet& p) {
  Preposet r;
  r.labels = p.labels;
  int n = p.n();
  r.adj.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.edge(j, i)) r.adj[static_cast<size_t>(i) * n + j] = 1;
  return r;
}

Preposet join_preposet(const Preposet& p, const Preposet& q) {
  // sub-preposet of C*P x C*Q on all pairs except (bottom, bottom)
  auto with_bottom = [](const Preposet& x, const std::string& bot) {
    Preposet y;
    y.labels.push_back(bot);
    y.labels.insert(y.labels.end(), x.labels.begin(), x.labels.end());
    int n = x.n() + 1;
    y.adj.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < x.n(); ++i) {
      y.adj[static_cast<size_t>(0) * n + (i + 1)] = 1;
      for (int j = 0; j < x.n(); ++j)
        if (x.edge(i, j)) y.adj[static_cast<size_t>(i + 1) * n + (j + 1)] = 1;
    }
    return y;
  };
  Preposet cp = with_bottom(p, "<0>");
  Preposet cq = with_bottom(q, "<0>");
  Preposet full = preposet_product(cp, cq);
  // drop the (bottom,bottom) element, which is index 0
  Preposet r;
  int n = full.n() - 1;
  r.labels.assign(full.labels.begin() + 1, full.labels.end());
  r.adj.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (full.edge(i + 1, j + 1)) r.adj[static_cast<size_t>(i) * n + j] = 1;
  return r;
}

std::string codeleted_star_marker(const Preposet& p) {
  // one more star than the longest trailing run in the input, so that the
  // construction can be iterated without label collisions
  size_t longest = 0;
  for (const auto& l : p.labels) {
    size_t run = 0;
    while (run < l.size() && l[l.size() - 1 - run] == '*') ++run;
    longest = std::max(longest, run);
  }
  return std::string(longest + 1, '*');
}

Preposet codeleted_prejoin(const Preposet& p) {
  // The four rules read the preposet's own relation (edge or equal), not its
  // transitive closure: the flag structure of P must survive in P ⊞ P*, or
  // the vertex identification p, p* -> p stops being simplicial.
  int n = p.n();
  auto rel = [&](int a, int b) { return a == b || p.edge(a, b); };
  std::string marker = codeleted_star_marker(p);
  Preposet r;
  r.labels = p.labels;
  for (const auto& l : p.labels) {
    std::string starred = l + marker;
    if (p.index_of(starred) >= 0)
      fail(Errc::LabelClash, "label '" + starred + "' already present");
    r.labels.push_back(starred);
  }
  int m = 2 * n;
  r.adj.assign(static_cast<size_t>(m) * m, 0);
  auto set_edge = [&](int i, int j) {
    if (i != j) r.adj[static_cast<size_t>(i) * m + j] = 1;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (rel(a, b)) set_edge(a, b);                 // p ⪯ q iff p <= q
      if (rel(b, a)) set_edge(n + a, n + b);         // p* ⪯ q* iff p >= q
      if (rel(a, b) || rel(b, a)) set_edge(a, n + b);  // p ⪯ q*
      // p* ⪯ q never
    }
  return r;
}

Preposet mapping_cylinder(const MonotoneMap& f, CylinderVariant variant) {
  const Poset& src = f.source;
  const Poset& tgt = f.target;
  bool collide = false;
  {
    std::unordered_set<std::string> s(tgt.labels.begin(), tgt.labels.end());
    for (const auto& l : src.labels)
      if (s.count(l)) { collide = true; break; }
  }
  Preposet r;
  r.labels = tgt.labels;
  for (const auto& l : src.labels) r.labels.push_back(collide ? l + "'" : l);
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : r.labels)
      if (!seen.insert(l).second) fail(Errc::LabelClash, "cylinder label '" + l + "'");
  }
  int nt = tgt.n(), m = nt + src.n();
  r.adj.assign(static_cast<size_t>(m) * m, 0);
  auto set_edge = [&](int i, int j) {
    if (i != j) r.adj[static_cast<size_t>(i) * m + j] = 1;
  };
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < nt; ++j)
      if (tgt.lt(i, j)) set_edge(i, j);
  for (int i = 0; i < src.n(); ++i)
    for (int j = 0; j < src.n(); ++j)
      if (src.lt(i, j)) set_edge(nt + i, nt + j);
  for (int i = 0; i < src.n(); ++i) {
    if (variant == CylinderVariant::Lower)
      set_edge(f.assign[i], nt + i);  // f(p) ≺ p
    else
      set_edge(nt + i, f.assign[i]);  // p ≺ f(p)
  }
  return r;
}

Poset hmc(const MonotoneMap& f, size_t max_elements) {
  const Poset& src = f.source;
  const Poset& tgt = f.target;
  int np = src.n();
  if (np >= 30 || (static_cast<size_t>(np) + tgt.n()) << np > max_elements)
    fail(Errc::SizeBound, "huge mapping cylinder would exceed the element bound");
  size_t subsets = size_t{1} << np;

  auto set_label = [&](uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < np; ++i)
      if (mask & (1u << i)) {
        if (!first) s += ",";
        s += src.labels[i];
        first = false;
      }
    return s + "}";
  };

  // cones of src as masks
  std::vector<uint32_t> cone_mask(np, 0);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      if (src.leq(j, i)) cone_mask[i] |= 1u << j;

  // elements: source side (p, T) then target side (q, T)
  Preposet pre;
  size_t n_src = static_cast<size_t>(np) * subsets;
  size_t n_tgt = static_cast<size_t>(tgt.n()) * subsets;
  size_t n = n_src + n_tgt;
  auto src_id = [&](int p, uint32_t t) { return static_cast<size_t>(p) * subsets + t; };
  auto tgt_id = [&](int q, uint32_t t) { return n_src + static_cast<size_t>(q) * subsets + t; };
  pre.labels.resize(n);
  for (int p = 0; p < np; ++p)
    for (uint32_t t = 0; t < subsets; ++t)
      pre.labels[src_id(p, t)] = "(" + src.labels[p] + "|" + set_label(t) + ")";
  for (int q = 0; q < tgt.n(); ++q)
    for (uint32_t t = 0; t < subsets; ++t)
      pre.labels[tgt_id(q, t)] = "[" + tgt.labels[q] + "|" + set_label(t) + "]";
  pre.adj.assign(n * n, 0);
  auto set_edge = [&](size_t i, size_t j) {
    if (i != j) pre.adj[i * n + j] = 1;
  };
  for (int p = 0; p < np; ++p)
    for (uint32_t t = 0; t < subsets; ++t)
      for (int p2 = 0; p2 < np; ++p2)
        for (uint32_t t2 = 0; t2 < subsets; ++t2)
          if (src.leq(p, p2) && (t & ~t2) == 0 && !(p == p2 && t == t2))
            set_edge(src_id(p, t), src_id(p2, t2));
  for (int q = 0; q < tgt.n(); ++q)
    for (uint32_t t = 0; t < subsets; ++t)
      for (int q2 = 0; q2 < tgt.n(); ++q2)
        for (uint32_t t2 = 0; t2 < subsets; ++t2)
          if (tgt.leq(q, q2) && (t & ~t2) == 0 && !(q == q2 && t == t2))
            set_edge(tgt_id(q, t), tgt_id(q2, t2));
  // F(p,T) = (f(p), ⌊p⌋), placed below (p,T)
  for (int p = 0; p < np; ++p)
    for (uint32_t t = 0; t < subsets; ++t)
      set_edge(tgt_id(f.assign[p], cone_mask[p]), src_id(p, t));
  return transitive_closure(pre);
}

bool preserves_infima(const MonotoneMap& f) {
  const Poset& src = f.source;
  if (src.n() > 20) fail(Errc::SizeBound, "infima check is exhaustive over subsets");
  for (uint32_t mask = 1; mask < (1u << src.n()); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < src.n(); ++i)
      if (mask & (1u << i)) subset.push_back(i);
    auto inf = greatest_lower_bound(src, subset);
    if (!inf) continue;
    std::vector<int> image;
    for (int s : subset) image.push_back(f.assign[s]);
    auto img_inf = greatest_lower_bound(f.target, image);
    if (!img_inf || *img_inf != f.assign[*inf]) return false;
  }
  return true;
}

}  // namespace osc
