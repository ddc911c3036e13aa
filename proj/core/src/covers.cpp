#include "orderscope/covers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orderscope/subdivision.hpp"

namespace osc {

int FiniteMetric::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (points[i] == label) return i;
  return -1;
}

FiniteMetric validate_metric(std::vector<std::string> points, std::vector<Rat> d) {
  FiniteMetric m;
  m.points = std::move(points);
  m.d = std::move(d);
  int n = m.n();
  {
    std::set<std::string> seen(m.points.begin(), m.points.end());
    if (static_cast<int>(seen.size()) != n) fail(Errc::LabelClash, "duplicate point label");
  }
  if (m.d.size() != static_cast<size_t>(n) * n) fail(Errc::BadInput, "distance matrix size");
  for (int i = 0; i < n; ++i) {
    if (m.dist(i, i) != 0) fail(Errc::BadInput, "nonzero diagonal");
    for (int j = 0; j < n; ++j) {
      if (m.dist(i, j) != m.dist(j, i)) fail(Errc::BadInput, "asymmetric matrix");
      if (i != j && m.dist(i, j) <= 0) fail(Errc::BadInput, "non-positive off-diagonal");
      for (int k = 0; k < n; ++k)
        if (m.dist(i, j) > m.dist(i, k) + m.dist(k, j))
          fail(Errc::BadInput, "triangle inequality fails");
    }
  }
  return m;
}

bool Cover::subset_of(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) const {
  for (int i = 0; i < n_ground(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

Cover make_cover(std::vector<std::string> ground, std::vector<std::string> names,
                 std::vector<std::vector<uint8_t>> sets, std::optional<FiniteMetric> metric) {
  Cover c;
  c.ground = std::move(ground);
  c.names = std::move(names);
  c.sets = std::move(sets);
  c.metric = std::move(metric);
  {
    std::set<std::string> seen(c.names.begin(), c.names.end());
    if (seen.size() != c.names.size()) fail(Errc::LabelClash, "duplicate index label");
    std::set<std::string> gseen(c.ground.begin(), c.ground.end());
    if (gseen.size() != c.ground.size()) fail(Errc::LabelClash, "duplicate ground label");
  }
  if (c.sets.size() != c.names.size()) fail(Errc::BadInput, "set/name size mismatch");
  for (const auto& s : c.sets)
    if (s.size() != c.ground.size()) fail(Errc::BadInput, "member bitmap size mismatch");
  for (int g = 0; g < c.n_ground(); ++g) {
    bool covered = false;
    for (int s = 0; s < c.n_sets() && !covered; ++s) covered = c.contains(s, g);
    if (!covered) fail(Errc::NotCovered, "point '" + c.ground[g] + "' uncovered");
  }
  if (c.metric && c.metric->points != c.ground)
    fail(Errc::BadInput, "metric points differ from the cover's ground");
  return c;
}

Cover make_cover_labels(const std::vector<std::string>& ground,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& sets,
                        std::optional<FiniteMetric> metric) {
  std::vector<std::string> names;
  std::vector<std::vector<uint8_t>> bits;
  for (const auto& [name, members] : sets) {
    names.push_back(name);
    std::vector<uint8_t> row(ground.size(), 0);
    for (const auto& m : members) {
      auto it = std::find(ground.begin(), ground.end(), m);
      if (it == ground.end()) fail(Errc::BadInput, "unknown ground point '" + m + "'");
      row[it - ground.begin()] = 1;
    }
    bits.push_back(std::move(row));
  }
  return make_cover(ground, std::move(names), std::move(bits), std::move(metric));
}

Cover dual_cone_cover(const Poset& p) {
  std::vector<std::string> names;
  std::vector<std::vector<uint8_t>> sets;
  for (int a : atoms(p)) {
    names.push_back(p.labels[a]);
    std::vector<uint8_t> row(p.n(), 0);
    for (int e : dual_cone_of(p, a)) row[e] = 1;
    sets.push_back(std::move(row));
  }
  return make_cover(p.labels, std::move(names), std::move(sets));
}

int SubsetPoset::index_of_member(const std::vector<int>& m) const {
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i] == m) return static_cast<int>(i);
  return -1;
}

namespace {

std::string member_label(const Cover& c, const std::vector<int>& m) {
  std::string s = "{";
  for (size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + c.names[m[i]];
  return s + "}";
}

SubsetPoset family_poset(const Cover& c, std::vector<std::vector<int>> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubsetPoset sp;
  sp.members = std::move(members);
  int n = static_cast<int>(sp.members.size());
  sp.poset.labels.reserve(n);
  for (const auto& m : sp.members) sp.poset.labels.push_back(member_label(c, m));
  sp.poset.le.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (std::includes(sp.members[b].begin(), sp.members[b].end(), sp.members[a].begin(),
                        sp.members[a].end()))
        sp.poset.le[static_cast<size_t>(a) * n + b] = 1;
  return sp;
}

std::vector<uint8_t> intersect_members(const Cover& c, const std::vector<int>& m) {
  std::vector<uint8_t> out(c.n_ground(), 1);
  for (int idx : m)
    for (int g = 0; g < c.n_ground(); ++g)
      if (!c.contains(idx, g)) out[g] = 0;
  return out;
}

bool any_point(const std::vector<uint8_t>& b) {
  return std::any_of(b.begin(), b.end(), [](uint8_t x) { return x != 0; });
}

}  // namespace

SubsetPoset nerve(const Cover& c, size_t max_simplices) {
  // a subset has nonempty intersection iff it is contained in Delta(s) for
  // some point s, so only subsets of the per-point simplices are enumerated
  std::set<std::vector<int>> seen;
  for (int g = 0; g < c.n_ground(); ++g) {
    std::vector<int> d = delta_point(c, g);
    if (d.size() > 24) fail(Errc::SizeBound, "point multiplicity too large for the nerve");
    size_t subsets = size_t{1} << d.size();
    for (size_t mask = 1; mask < subsets; ++mask) {
      std::vector<int> member;
      for (size_t i = 0; i < d.size(); ++i)
        if (mask & (size_t{1} << i)) member.push_back(d[i]);
      seen.insert(std::move(member));
      if (seen.size() > max_simplices) fail(Errc::SizeBound, "nerve too large");
    }
  }
  return family_poset(c, {seen.begin(), seen.end()});
}

std::vector<int> delta(const Cover& c, const std::vector<int>& point_set) {
  if (point_set.empty()) fail(Errc::BadInput, "empty point set");
  std::vector<int> out;
  for (int s = 0; s < c.n_sets(); ++s) {
    bool all = true;
    for (int g : point_set)
      if (!c.contains(s, g)) { all = false; break; }
    if (all) out.push_back(s);
  }
  if (out.empty()) fail(Errc::NotCovered, "point set lies in no cover member");
  return out;
}

std::vector<int> delta_point(const Cover& c, int point) { return delta(c, {point}); }

std::vector<uint8_t> star_of_set(const Cover& c, int set_idx) {
  std::vector<uint8_t> out(c.n_ground(), 0);
  for (int s = 0; s < c.n_sets(); ++s) {
    bool meets = false;
    for (int g = 0; g < c.n_ground() && !meets; ++g)
      if (c.contains(s, g) && c.contains(set_idx, g)) meets = true;
    if (meets)
      for (int g = 0; g < c.n_ground(); ++g)
        if (c.contains(s, g)) out[g] = 1;
  }
  return out;
}

std::vector<uint8_t> star_of_point(const Cover& c, int point) {
  std::vector<uint8_t> out(c.n_ground(), 0);
  for (int s = 0; s < c.n_sets(); ++s)
    if (c.contains(s, point))
      for (int g = 0; g < c.n_ground(); ++g)
        if (c.contains(s, g)) out[g] = 1;
  return out;
}

namespace {

void require_same_ground(const Cover& c, const Cover& d) {
  if (c.ground != d.ground) fail(Errc::BadInput, "covers have different grounds");
}

// Star refinement of indexed families restricted to a subset `dom` of the
// ground: for every point of dom, its star in {sets_c ∩ dom} lies in some
// member of sets_d (compared within dom).
bool star_refines_on(const Cover& ground_holder, const std::vector<std::vector<uint8_t>>& sets_c,
                     const std::vector<std::vector<uint8_t>>& sets_d,
                     const std::vector<uint8_t>& dom) {
  int n = ground_holder.n_ground();
  for (int x = 0; x < n; ++x) {
    if (!dom[x]) continue;
    std::vector<uint8_t> star(n, 0);
    for (const auto& u : sets_c) {
      bool has_x = u[x] && dom[x];
      if (!has_x) continue;
      for (int g = 0; g < n; ++g)
        if (u[g] && dom[g]) star[g] = 1;
    }
    bool inside_some = false;
    for (const auto& v : sets_d) {
      bool ok = true;
      for (int g = 0; g < n && ok; ++g)
        if (star[g] && !(v[g] && dom[g])) ok = false;
      if (ok) { inside_some = true; break; }
    }
    if (!inside_some) return false;
  }
  return true;
}

}  // namespace

bool star_refines(const Cover& c, const Cover& d) {
  require_same_ground(c, d);
  std::vector<uint8_t> all(c.n_ground(), 1);
  return star_refines_on(c, c.sets, d.sets, all);
}

bool strongly_star_refines(const Cover& c, const Cover& d) {
  require_same_ground(c, d);
  for (int u = 0; u < c.n_sets(); ++u) {
    auto star = star_of_set(c, u);
    bool inside = false;
    for (int v = 0; v < d.n_sets() && !inside; ++v)
      if (c.subset_of(star, d.sets[v])) inside = true;
    if (!inside) return false;
  }
  return true;
}

bool hereditarily_star_refines(const Cover& c, const Cover& d) {
  require_same_ground(c, d);
  int nd = d.n_sets();
  if (nd > 20) fail(Errc::SizeBound, "hereditary check is exhaustive over subfamilies");
  for (uint32_t mask = 1; mask < (1u << nd); ++mask) {
    std::vector<std::vector<uint8_t>> e_sets;
    std::vector<uint8_t> dom(c.n_ground(), 0);
    for (int v = 0; v < nd; ++v)
      if (mask & (1u << v)) {
        e_sets.push_back(d.sets[v]);
        for (int g = 0; g < c.n_ground(); ++g)
          if (d.sets[v][g]) dom[g] = 1;
      }
    if (!star_refines_on(c, c.sets, e_sets, dom)) return false;
  }
  return true;
}

bool weakly_hereditarily_star_refines(const Cover& c, const Cover& d) {
  require_same_ground(c, d);
  int nd = d.n_sets();
  if (nd > 20) fail(Errc::SizeBound, "weak hereditary check is exhaustive over subfamilies");
  // F = empty set means dom = whole ground and D\F = D: plain star refinement.
  for (uint32_t mask = 0; mask < (1u << nd); ++mask) {
    std::vector<uint8_t> dom(c.n_ground(), 1);
    std::vector<std::vector<uint8_t>> rest;
    std::vector<uint8_t> rest_union(c.n_ground(), 0);
    for (int v = 0; v < nd; ++v) {
      if (mask & (1u << v)) {
        for (int g = 0; g < c.n_ground(); ++g)
          if (!d.sets[v][g]) dom[g] = 0;
      } else {
        rest.push_back(d.sets[v]);
        for (int g = 0; g < c.n_ground(); ++g)
          if (d.sets[v][g]) rest_union[g] = 1;
      }
    }
    bool applicable = true;  // ∩F ⊆ ∪(D\F)
    for (int g = 0; g < c.n_ground(); ++g)
      if (dom[g] && !rest_union[g]) { applicable = false; break; }
    if (!applicable) continue;
    if (!star_refines_on(c, c.sets, rest, dom)) return false;
  }
  return true;
}

Cover shrink(const Cover& c, const Cover& d) {
  require_same_ground(c, d);
  if (!star_refines(d, c)) fail(Errc::NotStarRefinement, "D does not star-refine C");
  Cover out;
  out.ground = c.ground;
  out.names = c.names;
  out.metric = c.metric;
  for (int u = 0; u < c.n_sets(); ++u) {
    // U_D = X \ st(X\U, D)
    std::vector<uint8_t> st(c.n_ground(), 0);
    for (int v = 0; v < d.n_sets(); ++v) {
      bool meets_complement = false;
      for (int g = 0; g < c.n_ground() && !meets_complement; ++g)
        if (d.contains(v, g) && !c.contains(u, g)) meets_complement = true;
      if (meets_complement)
        for (int g = 0; g < c.n_ground(); ++g)
          if (d.contains(v, g)) st[g] = 1;
    }
    std::vector<uint8_t> row(c.n_ground(), 0);
    for (int g = 0; g < c.n_ground(); ++g) row[g] = st[g] ? 0 : 1;
    out.sets.push_back(std::move(row));
  }
  // still a cover (star refinement guarantees it); validate via make_cover
  return make_cover(out.ground, out.names, out.sets, out.metric);
}

SubsetPoset ip(const Cover& c) {
  SubsetPoset nv = nerve(c);
  std::vector<std::vector<int>> keep;
  for (const auto& b : nv.members) {
    auto inter = intersect_members(c, b);
    if (!any_point(inter)) continue;
    bool ok = true;
    for (int v = 0; v < c.n_sets() && ok; ++v) {
      if (std::find(b.begin(), b.end(), v) != b.end()) continue;
      if (c.subset_of(inter, c.sets[v])) ok = false;
    }
    if (ok) keep.push_back(b);
  }
  return family_poset(c, std::move(keep));
}

SubsetPoset vd(const Cover& c) {
  SubsetPoset nv = nerve(c);
  std::vector<std::vector<int>> keep;
  for (const auto& b : nv.members) {
    auto inter = intersect_members(c, b);
    if (!any_point(inter)) continue;
    std::vector<uint8_t> rest_union(c.n_ground(), 0);
    for (int v = 0; v < c.n_sets(); ++v) {
      if (std::find(b.begin(), b.end(), v) != b.end()) continue;
      for (int g = 0; g < c.n_ground(); ++g)
        if (c.contains(v, g)) rest_union[g] = 1;
    }
    if (!c.subset_of(inter, rest_union)) keep.push_back(b);
  }
  return family_poset(c, std::move(keep));
}

Bonding bonding(const Cover& c, const Cover& d) {
  require_same_ground(c, d);
  if (!star_refines(c, d)) fail(Errc::NotStarRefinement, "C does not star-refine D");
  Bonding b;
  b.nerve_c = nerve(c);
  b.nerve_d = nerve(d);
  b.nerve_d_sub = canonical(b.nerve_d.poset);
  std::vector<int> assign;
  for (const auto& sigma : b.nerve_c.members) {
    std::vector<uint8_t> uni(c.n_ground(), 0);
    for (int u : sigma)
      for (int g = 0; g < c.n_ground(); ++g)
        if (c.contains(u, g)) uni[g] = 1;
    auto inter = intersect_members(c, sigma);
    auto delta_of = [&](const std::vector<uint8_t>& t) {
      std::vector<int> out;
      for (int v = 0; v < d.n_sets(); ++v)
        if (d.subset_of(t, d.sets[v])) out.push_back(v);
      return out;
    };
    std::vector<int> lo = delta_of(uni);    // Delta_D(∪sigma)
    std::vector<int> hi = delta_of(inter);  // Delta_D(∩sigma)
    if (lo.empty())
      fail(Errc::NotStarRefinement, "union of a simplex lies in no member of D");
    int lo_idx = b.nerve_d.index_of_member(lo);
    int hi_idx = b.nerve_d.index_of_member(hi);
    if (lo_idx < 0 || hi_idx < 0) fail(Errc::BadInput, "bonding endpoint missing from nerve");
    int img = b.nerve_d_sub.index_of_interval(lo_idx, hi_idx);
    if (img < 0) fail(Errc::BadInput, "bonding image interval missing");
    assign.push_back(img);
    b.endpoints.emplace_back(lo, hi);
  }
  b.map = make_monotone_map(b.nerve_c.poset, b.nerve_d_sub.sub, std::move(assign));
  return b;
}

bool bonding_lands_in(const Bonding& b, const SubsetPoset& family) {
  for (const auto& [lo, hi] : b.endpoints)
    if (family.index_of_member(lo) < 0 || family.index_of_member(hi) < 0) return false;
  return true;
}

std::optional<Rat> lebesgue(const Cover& c) {
  if (!c.metric) fail(Errc::BadInput, "cover has no metric");
  const FiniteMetric& m = *c.metric;
  std::optional<Rat> overall;
  for (int x = 0; x < m.n(); ++x) {
    std::optional<Rat> best;  // nullopt = unbounded (a member holds every ball)
    bool unbounded = false;
    for (int s = 0; s < c.n_sets(); ++s) {
      std::optional<Rat> radius;  // min distance from x to the complement
      bool whole = true;
      for (int g = 0; g < m.n(); ++g) {
        if (c.contains(s, g)) continue;
        whole = false;
        if (!radius || m.dist(x, g) < *radius) radius = m.dist(x, g);
      }
      if (whole) { unbounded = true; break; }
      if (!best || *radius > *best) best = radius;
    }
    if (unbounded) continue;
    if (!best || *best <= 0) fail(Errc::ZeroLebesgue, "no ball around '" + m.points[x] + "' fits");
    if (!overall || *best < *overall) overall = best;
  }
  // overall empty means every point had an unbounded member
  return overall;
}

NervePou nerve_pou(const Cover& c, const Cover& d) {
  require_same_ground(c, d);
  if (!c.metric) fail(Errc::BadInput, "cover has no metric");
  if (!star_refines(d, c)) fail(Errc::NotStarRefinement, "D does not star-refine C");
  const FiniteMetric& m = *c.metric;
  Rat lambda;
  {
    Cover dm = d;
    dm.metric = c.metric;
    auto l = lebesgue(dm);
    if (l) {
      lambda = *l;
    } else {
      Rat diam = 0;
      for (const Rat& v : m.d)
        if (v > diam) diam = v;
      lambda = diam + 1;
    }
    if (lambda <= 0) fail(Errc::ZeroLebesgue, "Lebesgue number is not positive");
  }
  NervePou out;
  out.nerve_c = nerve(c);
  out.nerve_base = make_base(out.nerve_c.poset);
  for (int x = 0; x < m.n(); ++x) {
    // f_U(x) = min(d(x, X\U)/lambda, 1)
    std::vector<Rat> f(c.n_sets(), Rat(0));
    for (int s = 0; s < c.n_sets(); ++s) {
      std::optional<Rat> dc;
      for (int g = 0; g < m.n(); ++g)
        if (!c.contains(s, g) && (!dc || m.dist(x, g) < *dc)) dc = m.dist(x, g);
      Rat val = dc ? std::min(Rat(*dc / lambda), Rat(1)) : Rat(1);
      f[s] = val;
    }
    // superlevel sets of f form the chain of the nerve point
    std::vector<Rat> levels;
    for (const Rat& v : f)
      if (v > 0) levels.push_back(v);
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.empty() || levels.front() != 1)
      fail(Errc::ZeroLebesgue, "partition of unity has no unit coordinate");
    std::vector<int> chain;
    std::vector<Rat> weights;
    for (size_t i = 0; i < levels.size(); ++i) {
      std::vector<int> member;
      for (int s = 0; s < c.n_sets(); ++s)
        if (f[s] >= levels[i]) member.push_back(s);
      int idx = out.nerve_c.index_of_member(member);
      if (idx < 0) fail(Errc::BadInput, "superlevel set is not a nerve simplex");
      chain.push_back(idx);
      weights.push_back(levels[i] - (i + 1 < levels.size() ? levels[i + 1] : Rat(0)));
    }
    out.points.push_back(make_rpoint(out.nerve_base, std::move(chain), std::move(weights)));
  }
  return out;
}

}  // namespace osc
