#include "orderscope/approx.hpp"

#include <algorithm>

#include "orderscope/build.hpp"

namespace osc {

SampledMap make_sampled_map(FiniteMetric domain, BasePtr codomain, std::vector<RPoint> values,
                            Rat gamma, Rat delta) {
  if (values.size() != domain.points.size()) fail(Errc::BadInput, "value table size mismatch");
  if (gamma <= 0 || delta <= 0) fail(Errc::BadInput, "moduli must be positive");
  for (const auto& v : values)
    if (!(*v.base == *codomain)) fail(Errc::BaseMismatch, "value over a different base");
  for (int i = 0; i < domain.n(); ++i)
    for (int j = i + 1; j < domain.n(); ++j)
      if (domain.dist(i, j) < gamma && dist(values[i], values[j]) >= delta)
        fail(Errc::PreconditionFailed,
             "sampled map is not (gamma,delta)-continuous at '" + domain.points[i] + "','" +
                 domain.points[j] + "'");
  return SampledMap{std::move(domain), std::move(codomain), std::move(values), std::move(gamma),
                    std::move(delta)};
}

namespace {

// Atoms of the poset touched by the point: atoms below the top of its chain.
std::vector<int> support_atoms(const Poset& p, const std::vector<int>& at, const RPoint& x) {
  int top = x.chain.back();
  std::vector<int> out;
  for (size_t i = 0; i < at.size(); ++i)
    if (p.leq(at[i], top)) out.push_back(static_cast<int>(i));
  return out;
}

// Ball cover of a finite metric: one open ball of the given radius per point.
Cover ball_cover(const FiniteMetric& m, const Rat& radius, const std::string& prefix) {
  std::vector<std::string> names;
  std::vector<std::vector<uint8_t>> sets;
  for (int x = 0; x < m.n(); ++x) {
    names.push_back(prefix + "(" + m.points[x] + ")");
    std::vector<uint8_t> row(m.n(), 0);
    for (int g = 0; g < m.n(); ++g)
      if (m.dist(x, g) < radius) row[g] = 1;
    sets.push_back(std::move(row));
  }
  return make_cover(m.points, std::move(names), std::move(sets), m);
}

// The isomorphism ip(dual-cone-of-atoms cover of P) -> P for a conditionally
// complete atomic poset: a member maps to the least element of the
// intersection of its atoms' dual cones.
MonotoneMap ip_to_poset_iso(const SubsetPoset& ipc, const Cover& cover, const Poset& p) {
  std::vector<int> at;  // cover index -> element of p
  for (const auto& name : cover.names) {
    int e = p.index_of(name);
    if (e < 0) fail(Errc::BadInput, "cover index is not an element label");
    at.push_back(e);
  }
  std::vector<int> assign;
  for (const auto& member : ipc.members) {
    std::vector<int> elems;
    for (int idx : member) elems.push_back(at[idx]);
    auto lub = least_upper_bound(p, elems);
    if (!lub)
      fail(Errc::PreconditionFailed, "intersection poset member without least upper bound");
    assign.push_back(*lub);
  }
  return make_monotone_map(ipc.poset, p, std::move(assign));
}

}  // namespace

HahnResult hahn_phi(const SampledMap& f, const Poset& q, int n) {
  if (n < 1) fail(Errc::PreconditionFailed, "n must be at least 1");
  if (!is_conditionally_complete(q))
    fail(Errc::PreconditionFailed, "target poset is not conditionally complete");
  if (!(f.codomain->closed == q)) fail(Errc::BaseMismatch, "sampled map does not land in |Q|");
  if (f.delta > pow2(-n - 1))
    fail(Errc::PreconditionFailed, "delta exceeds the certified Lebesgue bound 2^{-n-1}");

  HahnResult res;
  res.n = n;
  res.bound = pow2(1 - n);
  res.q_ladder = iterate_canonical(q, n);
  const Poset& qn = res.q_ladder.top();
  auto qn_atoms = atoms(qn);

  // D = f^{-1}(star cover of |Q^{#n}|), combinatorially: which atoms of Q^{#n}
  // support the lifted value of each sample point.
  std::vector<RPoint> lifted;
  std::vector<int> q_tops;
  for (const auto& v : f.values) {
    RPoint up = ladder_up(res.q_ladder, v);
    q_tops.push_back(up.chain.back());
    lifted.push_back(std::move(up));
  }
  std::vector<std::string> d_names;
  std::vector<std::vector<uint8_t>> d_sets(qn_atoms.size(),
                                           std::vector<uint8_t>(f.domain.n(), 0));
  for (size_t a = 0; a < qn_atoms.size(); ++a) d_names.push_back(qn.labels[qn_atoms[a]]);
  for (int x = 0; x < f.domain.n(); ++x)
    for (int a : support_atoms(qn, qn_atoms, lifted[x])) d_sets[a][x] = 1;
  Cover cover_d = make_cover(f.domain.points, d_names, d_sets, f.domain);

  // E = gamma/4-ball cover; must star-refine D.
  Cover cover_e = ball_cover(f.domain, f.gamma / 4, "B");
  if (!star_refines(cover_e, cover_d))
    fail(Errc::PreconditionFailed, "the gamma/4-ball cover does not star-refine f^{-1}(C)");

  // C = dual-cone-of-atoms cover of Q^{#n}; IP(C) = VD(C) ≅ Q^{#n}.
  Cover cover_c = dual_cone_cover(qn);
  SubsetPoset ip_c = ip(cover_c);
  Subdivision ip_c_sub = canonical(ip_c.poset);
  MonotoneMap iso = ip_to_poset_iso(ip_c, cover_c, qn);
  BasePtr ip_c_sub_base = make_base(ip_c_sub.sub);

  NervePou pou = nerve_pou(cover_e, ball_cover(f.domain, f.gamma / 8, "b"));
  Bonding bd = bonding(cover_e, cover_d);

  for (int x = 0; x < f.domain.n(); ++x) {
    RPoint in_nd_sub = map_point(bd.map, pou.points[x]);
    RPoint in_ip_sub = rebase_subposet(in_nd_sub, ip_c_sub_base);
    RPoint in_ip = h_down(ip_c_sub, in_ip_sub);
    RPoint in_qn = map_point(iso, in_ip);
    RPoint phi = ladder_down(res.q_ladder, in_qn);

    HahnCert cert;
    cert.sample = x;
    cert.q_top = q_tops[x];
    // both f(x) and phi must lie in h_n(|⌊q_top⌋|)
    cert.contained_f = true;
    for (int e : lifted[x].chain)
      if (!qn.leq(e, cert.q_top)) cert.contained_f = false;
    RPoint phi_up = ladder_up(res.q_ladder, phi);
    cert.contained_phi = true;
    for (int e : phi_up.chain)
      if (!qn.leq(e, cert.q_top)) cert.contained_phi = false;
    cert.closeness = dist(phi, f.values[x]);
    cert.phi = std::move(phi);
    res.certs.push_back(std::move(cert));
  }
  return res;
}

MonotoneApproxResult monotone_approx(const SampledMap& f, const std::vector<RPoint>& sample,
                                     const Poset& p, const Poset& q, int m, int n) {
  if (n < 1 || m < 1) fail(Errc::PreconditionFailed, "m and n must be at least 1");
  if (!is_conditionally_complete(q))
    fail(Errc::PreconditionFailed, "target poset is not conditionally complete");
  if (f.delta >= pow2(-n - 1))
    fail(Errc::PreconditionFailed, "moduli bookkeeping needs delta < 2^{-n-1}");
  if (pow2(-m + 1) >= f.gamma / 4)
    fail(Errc::PreconditionFailed, "moduli bookkeeping needs 2^{-m+1} < gamma/4");
  if (sample.size() != f.values.size()) fail(Errc::BadInput, "sample/value size mismatch");
  for (const auto& s : sample)
    if (!(s.base->closed == p)) fail(Errc::BaseMismatch, "sample point not over |P|");

  MonotoneApproxResult res;
  res.bound = pow2(1 - n);
  res.p_ladder = iterate_canonical(p, m);
  res.q_ladder = iterate_canonical(q, n + 1);
  const Poset& pm = res.p_ladder.top();
  const Poset& qn = res.q_ladder.steps[n - 1].sub;  // stage n

  // sample must contain every vertex of P^{#m}
  std::vector<int> vertex_sample(pm.n(), -1);
  {
    std::vector<std::vector<Rat>> sample_coords;
    for (const auto& s : sample) sample_coords.push_back(coords(s));
    for (int v = 0; v < pm.n(); ++v) {
      RPoint down = ladder_down(res.p_ladder, vertex_point(make_base(pm), v));
      auto vc = coords(down);
      for (size_t s = 0; s < sample.size(); ++s)
        if (sample_coords[s] == vc) { vertex_sample[v] = static_cast<int>(s); break; }
      if (vertex_sample[v] < 0)
        fail(Errc::PreconditionFailed,
             "sample misses the vertex at '" + pm.labels[v] + "' of the m-fold subdivision");
    }
  }

  auto pm_atoms = atoms(pm);
  auto qn_atoms = atoms(qn);

  // E: which atoms of P^{#m} support each lifted sample point.
  std::vector<std::string> e_names;
  for (int a : pm_atoms) e_names.push_back(pm.labels[a]);
  std::vector<std::vector<uint8_t>> e_sets(pm_atoms.size(),
                                           std::vector<uint8_t>(f.domain.n(), 0));
  std::vector<RPoint> lifted_p;
  for (const auto& s : sample) lifted_p.push_back(ladder_up(res.p_ladder, s));
  for (int x = 0; x < f.domain.n(); ++x)
    for (int a : support_atoms(pm, pm_atoms, lifted_p[x])) e_sets[a][x] = 1;
  Cover cover_e = make_cover(f.domain.points, e_names, e_sets, f.domain);

  // D: same over Q^{#n} for the values.
  std::vector<std::string> d_names;
  for (int a : qn_atoms) d_names.push_back(qn.labels[a]);
  std::vector<std::vector<uint8_t>> d_sets(qn_atoms.size(),
                                           std::vector<uint8_t>(f.domain.n(), 0));
  std::vector<RPoint> lifted_q;
  std::vector<int> q_tops;
  Ladder qn_ladder = iterate_canonical(q, n);
  for (const auto& v : f.values) {
    RPoint up = ladder_up(qn_ladder, v);
    q_tops.push_back(up.chain.back());
    lifted_q.push_back(std::move(up));
  }
  for (int x = 0; x < f.domain.n(); ++x)
    for (int a : support_atoms(qn, qn_atoms, lifted_q[x])) d_sets[a][x] = 1;
  Cover cover_d = make_cover(f.domain.points, d_names, d_sets, f.domain);

  if (!star_refines(cover_e, cover_d))
    fail(Errc::PreconditionFailed, "the pulled-back star cover does not star-refine f^{-1}(C)");

  Bonding bd = bonding(cover_e, cover_d);
  Cover cover_c = dual_cone_cover(qn);
  SubsetPoset ip_c = ip(cover_c);
  Subdivision ip_c_sub = canonical(ip_c.poset);
  MonotoneMap iso = ip_to_poset_iso(ip_c, cover_c, qn);
  MonotoneMap iso_sub = subdiv_map(iso);  // IP(C)^# -> (Q^{#n})^# = Q^{#(n+1)}

  // element map P^{#m} -> IP(C)^#: v -> bonding image of Delta_E(v)
  std::vector<int> assign;
  for (int v = 0; v < pm.n(); ++v) {
    std::vector<int> member;
    for (size_t a = 0; a < pm_atoms.size(); ++a)
      if (pm.leq(pm_atoms[a], v)) member.push_back(static_cast<int>(a));
    int sigma = bd.nerve_c.index_of_member(member);
    if (sigma < 0)
      fail(Errc::PreconditionFailed, "atom set of an element is not a nerve simplex");
    const auto& [lo, hi] = bd.endpoints[sigma];
    int lo_ip = ip_c.index_of_member(lo);
    int hi_ip = ip_c.index_of_member(hi);
    if (lo_ip < 0 || hi_ip < 0)
      fail(Errc::PreconditionFailed, "bonding endpoint left the intersection poset");
    int img = ip_c_sub.index_of_interval(lo_ip, hi_ip);
    if (img < 0) fail(Errc::BadInput, "image interval missing");
    assign.push_back(img);
  }
  MonotoneMap to_ip_sub = make_monotone_map(pm, ip_c_sub.sub, std::move(assign));
  res.g = compose(iso_sub, to_ip_sub);
  // align the target with the (n+1)-fold ladder top
  if (!(res.g.target == res.q_ladder.top()))
    fail(Errc::BadInput, "subdivision target mismatch");

  for (int x = 0; x < f.domain.n(); ++x) {
    RPoint gx = map_point(res.g, lifted_p[x]);
    RPoint realized = ladder_down(res.q_ladder, gx);
    HahnCert cert;
    cert.sample = x;
    cert.q_top = q_tops[x];
    cert.contained_f = true;
    for (int e : lifted_q[x].chain)
      if (!qn.leq(e, cert.q_top)) cert.contained_f = false;
    // pull the realized point back up n stages to check the containment
    RPoint up = ladder_up(qn_ladder, realized);
    cert.contained_phi = true;
    for (int e : up.chain)
      if (!qn.leq(e, cert.q_top)) cert.contained_phi = false;
    cert.closeness = dist(realized, f.values[x]);
    cert.phi = std::move(realized);
    res.certs.push_back(std::move(cert));
  }
  return res;
}

Tower nerve_tower(const FiniteMetric& x, const std::vector<Cover>& basis) {
  if (basis.empty()) fail(Errc::BadInput, "empty cover basis");
  Tower t;
  t.space = x;
  t.covers = basis;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].ground != x.points) fail(Errc::BadInput, "cover ground differs from the space");
    t.nerves.push_back(nerve(basis[i]));
    t.nerve_bases.push_back(make_base(t.nerves.back().poset));
  }
  for (size_t i = 0; i + 1 < basis.size(); ++i) {
    if (!star_refines(basis[i + 1], basis[i]))
      fail(Errc::NotStarRefinement, "level " + std::to_string(i + 1) +
                                        " does not star-refine level " + std::to_string(i));
    t.bondings.push_back(bonding(basis[i + 1], basis[i]));
  }
  int top = static_cast<int>(basis.size()) - 1;
  t.lambda.assign(basis.size(), {});
  for (int pt = 0; pt < x.n(); ++pt) {
    std::vector<int> member = delta_point(basis[top], pt);
    int idx = t.nerves[top].index_of_member(member);
    RPoint cur = vertex_point(t.nerve_bases[top], idx);
    t.lambda[top].push_back(cur);
    for (int level = top; level > 0; --level) {
      cur = tower_push(t, level, cur);
      t.lambda[level - 1].push_back(cur);
    }
  }
  return t;
}

RPoint tower_push(const Tower& t, int level, const RPoint& pt) {
  if (level <= 0 || level >= static_cast<int>(t.covers.size()))
    fail(Errc::BadInput, "bad tower level");
  const Bonding& bd = t.bondings[level - 1];
  return h_down(bd.nerve_d_sub, map_point(bd.map, pt));
}

Rat tower_simplex_image_diameter(const Tower& t, int i, int n, int point) {
  int from = i + n;
  if (from >= static_cast<int>(t.covers.size())) fail(Errc::BadInput, "depth out of range");
  std::vector<int> top_member = delta_point(t.covers[from], point);
  // all faces of the simplex: nerve members contained in it
  std::vector<RPoint> images;
  for (size_t e = 0; e < t.nerves[from].members.size(); ++e) {
    const auto& mem = t.nerves[from].members[e];
    if (!std::includes(top_member.begin(), top_member.end(), mem.begin(), mem.end())) continue;
    RPoint cur = vertex_point(t.nerve_bases[from], static_cast<int>(e));
    for (int level = from; level > i; --level) cur = tower_push(t, level, cur);
    images.push_back(std::move(cur));
  }
  Rat best = 0;
  for (size_t a = 0; a < images.size(); ++a)
    for (size_t b = a + 1; b < images.size(); ++b) {
      Rat d = dist(images[a], images[b]);
      if (d > best) best = d;
    }
  return best;
}

}  // namespace osc
