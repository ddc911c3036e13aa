#include "orderscope/subdivision.hpp"

#include <algorithm>

#include "orderscope/build.hpp"

namespace osc {

int Subdivision::index_of_interval(int lo, int hi) const {
  for (size_t i = 0; i < iv.size(); ++i)
    if (iv[i].lo == lo && iv[i].hi == hi) return static_cast<int>(i);
  return -1;
}

namespace {

std::string interval_label(const Poset& base, const Interval& i) {
  return "[" + base.labels[i.lo] + "," + base.labels[i.hi] + "]";
}

Subdivision canonical_impl(std::shared_ptr<const Poset> base) {
  const Poset& p = *base;
  Subdivision s;
  s.base = base;
  for (int lo = 0; lo < p.n(); ++lo)
    for (int hi = 0; hi < p.n(); ++hi)
      if (p.leq(lo, hi)) s.iv.push_back(Interval{lo, hi});
  int n = static_cast<int>(s.iv.size());
  s.sub.labels.reserve(n);
  for (const auto& i : s.iv) s.sub.labels.push_back(interval_label(p, i));
  s.sub.le.assign(static_cast<size_t>(n) * n, 0);
  // [s,t] <= [s',t'] iff s' <= s and t <= t'  (containment; [p,p] minimal)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.leq(s.iv[b].lo, s.iv[a].lo) && p.leq(s.iv[a].hi, s.iv[b].hi))
        s.sub.le[static_cast<size_t>(a) * n + b] = 1;
  return s;
}

}  // namespace

Subdivision canonical(const Poset& p) { return canonical_impl(std::make_shared<Poset>(p)); }
Subdivision canonical(std::shared_ptr<const Poset> p) { return canonical_impl(std::move(p)); }

Subdivision canonical_preposet(const Preposet& pre) {
  auto closed = std::make_shared<Poset>(transitive_closure(pre));
  Subdivision full = canonical_impl(closed);
  // keep intervals whose endpoints are related in the preposet itself
  std::vector<int> keep;
  for (size_t i = 0; i < full.iv.size(); ++i) {
    int lo = full.iv[i].lo, hi = full.iv[i].hi;
    if (lo == hi || pre.edge(lo, hi)) keep.push_back(static_cast<int>(i));
  }
  Subdivision s;
  s.base = full.base;
  int n = static_cast<int>(keep.size());
  s.sub.labels.reserve(n);
  for (int k : keep) {
    s.iv.push_back(full.iv[k]);
    s.sub.labels.push_back(full.sub.labels[k]);
  }
  s.sub.le.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (full.sub.leq(keep[a], keep[b])) s.sub.le[static_cast<size_t>(a) * n + b] = 1;
  return s;
}

Poset barycentric(const Preposet& p) {
  auto chains = all_chains(p);  // each sorted by the closure order
  int n = static_cast<int>(chains.size());
  Poset b;
  b.labels.reserve(n);
  for (const auto& c : chains) {
    std::string l = "{";
    for (size_t i = 0; i < c.size(); ++i) l += (i ? "," : "") + p.labels[c[i]];
    b.labels.push_back(l + "}");
  }
  // set inclusion needs index-sorted copies
  std::vector<std::vector<int>> sorted = chains;
  for (auto& c : sorted) std::sort(c.begin(), c.end());
  b.le.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (std::includes(sorted[c].begin(), sorted[c].end(), sorted[a].begin(),
                        sorted[a].end()))
        b.le[static_cast<size_t>(a) * n + c] = 1;
  return b;
}

Poset barycentric(const Poset& p) { return barycentric(as_preposet(p)); }

Poset h_dual(const Poset& p) { return dual(canonical(p).sub); }

const Poset& Ladder::top() const {
  return steps.empty() ? *bottom : steps.back().sub;
}

Ladder iterate_canonical(const Poset& p, int n, size_t max_elements) {
  Ladder ld;
  ld.bottom = std::make_shared<Poset>(p);
  std::shared_ptr<const Poset> cur = ld.bottom;
  for (int k = 0; k < n; ++k) {
    // each interval count is at most n^2 of the current stage
    size_t bound = static_cast<size_t>(cur->n()) * cur->n();
    if (bound > max_elements)
      fail(Errc::SizeBound, "canonical iterate would exceed the element bound");
    Subdivision s = canonical_impl(cur);
    if (s.sub.labels.size() > max_elements)
      fail(Errc::SizeBound, "canonical iterate would exceed the element bound");
    ld.steps.push_back(std::move(s));
    cur = std::make_shared<Poset>(ld.steps.back().sub);
  }
  return ld;
}

MonotoneMap subdiv_map(const MonotoneMap& f) {
  Subdivision src = canonical(f.source);
  Subdivision tgt = canonical(f.target);
  std::vector<int> assign(src.sub.n());
  for (int i = 0; i < src.sub.n(); ++i) {
    int lo = f.assign[src.iv[i].lo];
    int hi = f.assign[src.iv[i].hi];
    int img = tgt.index_of_interval(lo, hi);
    if (img < 0) fail(Errc::BadInput, "image interval missing (map not monotone?)");
    assign[i] = img;
  }
  return make_monotone_map(src.sub, tgt.sub, std::move(assign));
}

}  // namespace osc
