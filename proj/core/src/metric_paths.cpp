#include "orderscope/metric_paths.hpp"

#include <algorithm>

#include "hat_detail.hpp"
#include "orderscope/build.hpp"

namespace osc {

using detail::kBot;
using detail::kTop;

bool same_chain_hull(const RPoint& x, const RPoint& y) {
  if (!(*x.base == *y.base)) fail(Errc::BaseMismatch, "points live over different bases");
  std::vector<int> u = x.chain;
  u.insert(u.end(), y.chain.begin(), y.chain.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (x.base->pre) return is_clique_chain(*x.base->pre, u);
  return is_chain(x.base->closed, u);
}

namespace {

std::string fresh_label(const Poset& p, std::string candidate) {
  while (p.index_of(candidate) >= 0) candidate += "'";
  return candidate;
}

}  // namespace

D3Result d3_upper(const RPoint& x, const RPoint& y) {
  if (!(*x.base == *y.base)) fail(Errc::BaseMismatch, "points live over different bases");
  const Poset& p = x.base->closed;
  detail::Hatted h = detail::make_hatted(x, y);
  const int m = h.m, n = h.n;

  std::string top_label = fresh_label(p, "<1>");
  Poset with_top = cone(p, top_label);
  std::string bot_label = fresh_label(with_top, "<0>");
  BasePtr hat = make_base(dual_cone(with_top, bot_label));
  const int top_id = p.n(), bot_id = p.n() + 1;
  auto hat_id = [&](int e) { return e == kTop ? top_id : (e == kBot ? bot_id : e); };

  RPoint x_hat = make_rpoint(hat, x.chain, x.weights);
  RPoint y_hat = make_rpoint(hat, y.chain, y.weights);

  // Intermediary chain C, walked upward from the common bottom. At a shared
  // element the domain side is taken; switches between the chains happen
  // exactly at the non-equality interleaving pairs.
  auto b_position = [&](int e) {
    for (int l = 1; l <= n; ++l)
      if (h.b[l] == e) return l;
    return -1;
  };
  auto a_position = [&](int e) {
    for (int k = 1; k <= m; ++k)
      if (h.a[k] == e) return k;
    return -1;
  };
  auto pair_at_a = [&](int k) {  // non-equality pair leaving the a-chain at k
    for (const auto& pr : h.pairs)
      if (pr.first == k && h.a[pr.first] != h.b[pr.second]) return pr.second;
    return -1;
  };
  auto primed_at_b = [&](int l) {
    for (const auto& pr : h.primed)
      if (pr.second == l && h.a[pr.first] != h.b[pr.second]) return pr.first;
    return -1;
  };

  enum class Side { Both, OnA, OnB };
  Side side = Side::Both;
  int ka = 1, lb = 1;
  std::vector<int> chain_c{kBot};
  for (int guard = 0; guard <= m + n + 2; ++guard) {
    int cur = chain_c.back();
    if (cur == kTop) break;
    int next;
    if (side == Side::Both || side == Side::OnA) {
      int jump = (side == Side::OnA) ? pair_at_a(ka) : -1;
      if (jump >= 0) {
        next = h.b[jump];
        lb = jump;
        side = Side::OnB;
      } else {
        next = h.a[ka + 1];
        ++ka;
        int l2 = b_position(next);
        side = (l2 >= 0) ? Side::Both : Side::OnA;
        if (l2 >= 0) lb = l2;
      }
    } else {
      int jump = primed_at_b(lb);
      if (jump >= 0) {
        next = h.a[jump];
        ka = jump;
        side = Side::OnA;
        int l2 = b_position(next);
        if (l2 >= 0) { side = Side::Both; lb = l2; }
      } else {
        next = h.b[lb + 1];
        ++lb;
        int k2 = a_position(next);
        side = (k2 >= 0) ? Side::Both : Side::OnB;
        if (k2 >= 0) ka = k2;
      }
    }
    chain_c.push_back(next);
  }
  if (chain_c.back() != kTop) fail(Errc::BadInput, "intermediary chain failed to terminate");

  auto in_c = [&](int e) {
    return std::find(chain_c.begin(), chain_c.end(), e) != chain_c.end();
  };

  // x' over A' = Â ∩ C with block values alpha[h_i], h_i least admissible
  // except the final block which is pinned to the top value 0.
  auto stair_point = [&](const std::vector<int>& full, const std::vector<Rat>& prof,
                         int full_len) {
    std::vector<int> kept;  // positions into `full`
    for (int k = 1; k <= full_len; ++k)
      if (in_c(full[k])) kept.push_back(k);
    int mprime = static_cast<int>(kept.size());
    std::vector<Rat> val(mprime + 1, Rat(0));  // val[i] for blocks i = 2..m'
    for (int i = 2; i <= mprime; ++i) {
      int pick = (i == mprime) ? full_len : kept[i - 2] + 1;
      val[i] = prof[pick];
    }
    std::vector<int> chain;
    std::vector<Rat> weights;
    Rat bot_weight = 1 - (mprime >= 2 ? val[2] : Rat(0));
    if (bot_weight > 0) {
      chain.push_back(bot_id);
      weights.push_back(bot_weight);
    }
    for (int i = 2; i <= mprime; ++i) {
      Rat w = val[i] - (i < mprime ? val[i + 1] : Rat(0));
      if (w > 0) {
        chain.push_back(hat_id(full[kept[i - 1]]));
        weights.push_back(w);
      }
    }
    return make_rpoint(hat, std::move(chain), std::move(weights));
  };

  RPoint x_prime = stair_point(h.a, h.alpha, m);
  RPoint y_prime = stair_point(h.b, h.beta, n);

  D3Result res;
  res.hat_base = hat;
  res.x_hat = x_hat;
  res.y_hat = y_hat;
  res.x_prime = x_prime;
  res.y_prime = y_prime;
  res.value = dist(x_hat, x_prime) + dist(x_prime, y_prime) + dist(y_prime, y_hat);
  for (int e : chain_c) res.mid_chain.push_back(hat_id(e));
  return res;
}

LcuResult lcu_pair(const RPoint& x, const RPoint& y, const Rat& delta) {
  return lcu_pair_chains(x, y, delta, x.chain, y.chain);
}

LcuResult lcu_pair_chains(const RPoint& x, const RPoint& y, const Rat& delta,
                          const std::vector<int>& chain_a, const std::vector<int>& chain_b) {
  if (!(*x.base == *y.base)) fail(Errc::BaseMismatch, "points live over different bases");
  if (delta <= 0) fail(Errc::BadInput, "delta must be positive");
  Rat inv = Rat(1) / (4 * delta);
  if (denominator(inv) != 1) fail(Errc::DeltaNotGrid, "1/(4 delta) is not an integer");
  long n_steps = static_cast<long>(numerator(inv));
  if (dist(x, y) >= delta) fail(Errc::TooFar, "points are not delta-close");

  detail::Hatted h = detail::make_hatted_chains(x, y, chain_a, chain_b);
  const int m = h.m, n = h.n;

  // maximal positions with profile value above the staircase thresholds
  auto max_pos = [](const std::vector<Rat>& prof, int len, const Rat& threshold) {
    int best = -1;
    for (int k = 2; k <= len; ++k)
      if (prof[k] >= threshold) best = k;
    return best;
  };

  std::vector<int> u(n_steps + 1), u_p(n_steps + 1), v(n_steps + 1), v_p(n_steps + 1);
  for (long i = 0; i <= n_steps; ++i) {
    u[i] = max_pos(h.alpha, m, 1 - 4 * i * delta);
    u_p[i] = max_pos(h.alpha, m, 1 - (4 * i + 1) * delta);
    v[i] = max_pos(h.beta, n, 1 - (4 * i + 2) * delta);
    v_p[i] = max_pos(h.beta, n, 1 - (4 * i + 3) * delta);
  }

  // Block values over the full hatted chains: plateaus on [u'_{i-1}+1, u_i],
  // a 4x stretched ramp on [u_i+1, u'_i].
  auto stair_values = [&](const std::vector<Rat>& prof, int len, const std::vector<int>& flat,
                          const std::vector<int>& ramp, const Rat& ramp_anchor_shift) {
    std::vector<Rat> out(len + 1, Rat(0));
    int prev_ramp_end = 1;  // u'_{-1}
    for (long i = 0; i <= n_steps; ++i) {
      Rat level = 1 - 4 * i * delta;
      for (int j = prev_ramp_end + 1; j <= flat[i]; ++j)
        if (j >= 2) out[j] = level;
      for (int j = flat[i] + 1; j <= ramp[i]; ++j)
        out[j] = level - 4 * ((level - ramp_anchor_shift) - prof[j]);
      prev_ramp_end = ramp[i];
    }
    return out;
  };
  // x-side ramp anchor: alpha in [1-(4i+1)d, 1-4id); y-side: beta in
  // [1-(4i+3)d, 1-(4i+2)d), anchored 2 delta lower.
  std::vector<Rat> xv = stair_values(h.alpha, m, u, u_p, Rat(0));
  std::vector<Rat> yv = stair_values(h.beta, n, v, v_p, 2 * delta);

  auto build = [&](const RPoint& orig, const std::vector<int>& full,
                   const std::vector<Rat>& vals, int len) {
    std::vector<int> chain;
    std::vector<Rat> weights;
    for (int j = 2; j <= len - 1; ++j) {
      Rat w = vals[j] - vals[j + 1];
      if (w > 0) {
        chain.push_back(full[j]);
        weights.push_back(w);
      }
    }
    return make_rpoint(orig.base, std::move(chain), std::move(weights));
  };

  LcuResult res;
  res.x_prime = build(x, h.a, xv, m);
  res.y_prime = build(y, h.b, yv, n);
  return res;
}

}  // namespace osc
