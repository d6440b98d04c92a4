#include "orthogeo/arch.hpp"

#include <algorithm>
#include <deque>

#include "orthogeo/error.hpp"

namespace orthogeo {

namespace {

void check_blocks(const Arch& arch) {
  if (arch.xi.size() < 2) fail("EmptyBlock", "an arch needs at least two members");
  for (size_t i = 1; i < arch.xi.size(); ++i)
    if (sgn(arch.x_block_sq(i)) <= 0 || sgn(arch.y_block_sq(i)) <= 0)
      fail("EmptyBlock", "block " + std::to_string(i) + " of the arch is empty");
}

// Orientation of (a, b, c); positive for a strict left turn.
int turn(const XiPoint& a, const XiPoint& b, const XiPoint& c) {
  Rational cross = (b.first - a.first) * (c.second - b.second) - (b.second - a.second) * (c.first - b.first);
  return sgn(cross);
}

mpz_class lcm_of_denominators(const std::vector<Rational>& values) {
  mpz_class l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace

SqrtSum v_squared(const Arch& arch) {
  check_blocks(arch);
  SqrtSum total;
  for (size_t i = 1; i < arch.xi.size(); ++i) {
    Rational X = arch.x_block_sq(i), Y = arch.y_block_sq(i);
    total += SqrtSum(Rational(X + Y));
    total += SqrtSum::sqrt_of(Rational(X * Y)) * Rational(2);
  }
  return total;
}

double v_value(const Arch& arch) {
  double v2 = v_squared(arch).to_double();
  return v2 <= 0 ? 0.0 : std::sqrt(v2);
}

bool is_concave(const Arch& arch) {
  check_blocks(arch);
  for (size_t i = 1; i + 1 < arch.xi.size(); ++i)
    if (!(arch.x_block_sq(i) * arch.y_block_sq(i + 1) < arch.x_block_sq(i + 1) * arch.y_block_sq(i))) return false;
  return true;
}

Arch subarch(const Arch& arch, const std::vector<size_t>& keep) {
  Arch out;
  for (size_t k : keep) {
    out.labels.push_back(arch.labels[k]);
    out.xi.push_back(arch.xi[k]);
    if (!arch.sets.empty()) out.sets.push_back(arch.sets[k]);
    if (!arch.elements.empty()) out.elements.push_back(arch.elements[k]);
  }
  return out;
}

Arch concave_subarch(const Arch& arch) {
  std::vector<size_t> hull;
  for (size_t k = 0; k < arch.xi.size(); ++k) {
    while (hull.size() >= 2 && turn(arch.xi[hull[hull.size() - 2]], arch.xi[hull.back()], arch.xi[k]) <= 0)
      hull.pop_back();
    hull.push_back(k);
  }
  return subarch(arch, hull);
}

Bipartition bipartition(const Pip& pip, const BVec& x, const BVec& y) {
  const size_t n = pip.size();
  std::vector<int> colour(n, -1);
  auto spread = [&](size_t s, int c) {
    if (colour[s] >= 0) return;
    colour[s] = c;
    std::deque<size_t> dq{s};
    while (!dq.empty()) {
      size_t v = dq.front();
      dq.pop_front();
      const Bits& nb = pip.neighbors(v);
      for (size_t w = nb.find_first(); w != Bits::npos; w = nb.find_next(w)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          dq.push_back(w);
        } else if (colour[w] == colour[v]) {
          fail("NotBipartitePip", "odd cycle through '" + pip.vertex(v) + "'");
        }
      }
    }
  };
  for (size_t v = 0; v < n; ++v)
    if (sgn(x[v]) != 0) spread(v, 0);
  for (size_t v = 0; v < n; ++v)
    if (sgn(y[v]) != 0) spread(v, 1);
  for (size_t v = 0; v < n; ++v) spread(v, 0);
  Bipartition part{Bits(n), Bits(n)};
  for (size_t v = 0; v < n; ++v) (colour[v] == 0 ? part.B : part.C).set(v);
  for (size_t v = 0; v < n; ++v) {
    if (sgn(x[v]) != 0 && !part.B.test(v)) fail("NotBipartitePip", "supp x meets the y side at '" + pip.vertex(v) + "'");
    if (sgn(y[v]) != 0 && !part.C.test(v)) fail("NotBipartitePip", "supp y meets the x side at '" + pip.vertex(v) + "'");
  }
  for (size_t u = 0; u < n; ++u)
    for (size_t v = 0; v < n; ++v)
      if (u != v && pip.leq(u, v) && part.B.test(u) != part.B.test(v))
        fail("NotBipartitePip", "order pair " + pip.vertex(u) + " <= " + pip.vertex(v) + " crosses the sides");
  return part;
}

XiPoint xi(const BVec& x, const BVec& y, const Bits& ideal) {
  XiPoint p{0, 0};
  for (size_t v = ideal.find_first(); v != Bits::npos; v = ideal.find_next(v)) {
    p.first += x[v] * x[v];
    p.second += y[v] * y[v];
  }
  return p;
}

XiPoint xi(const GradedPoset& poset, size_t base, const Point& x, const Point& y, size_t u) {
  return {depth_sq(poset, meet_point(poset, u, x), base), depth_sq(poset, meet_point(poset, u, y), base)};
}

namespace {

// Arc layout shared by the plain and the tie-breaking networks.
FlowNetwork build_network(const Pip& pip, const Bipartition& part, const std::vector<Rational>& weight) {
  const size_t n = pip.size();
  FlowNetwork net;
  size_t s = net.add_node("s");
  for (size_t v = 0; v < n; ++v) net.add_node(pip.vertex(v));
  size_t t = net.add_node("t");
  net.set_terminals(s, t);
  auto node = [](size_t v) { return v + 1; };
  for (size_t v = 0; v < n; ++v) {
    const Rational& w = weight[v];
    if (sgn(w) == 0) continue;
    bool onB = part.B.test(v);
    if (onB == (sgn(w) > 0)) net.add_arc(s, node(v), Capacity::of(abs(w)));
    else net.add_arc(node(v), t, Capacity::of(abs(w)));
  }
  for (size_t b = part.B.find_first(); b != Bits::npos; b = part.B.find_next(b)) {
    const Bits& nb = pip.neighbors(b);
    for (size_t c = nb.find_first(); c != Bits::npos; c = nb.find_next(c)) net.add_arc(node(b), node(c), Capacity::inf());
  }
  for (size_t u = 0; u < n; ++u)
    for (size_t v = 0; v < n; ++v) {
      if (u == v || !pip.leq(u, v)) continue;
      if (part.B.test(u)) net.add_arc(node(v), node(u), Capacity::inf());
      else net.add_arc(node(u), node(v), Capacity::inf());
    }
  return net;
}

}  // namespace

FlowNetwork msip_network(const Pip& pip, const BVec& x, const BVec& y, const Rational& lambda) {
  auto part = bipartition(pip, x, y);
  std::vector<Rational> w(pip.size());
  for (size_t v = 0; v < pip.size(); ++v) w[v] = (1 - lambda) * x[v] * x[v] + lambda * y[v] * y[v];
  return build_network(pip, part, w);
}

MsipResult maximize_xi(const Pip& pip, const Bipartition& part, const BVec& x, const BVec& y, const Rational& w1,
                       const Rational& w2) {
  const size_t n = pip.size();
  std::vector<Rational> a(n), s(n);
  for (size_t v = 0; v < n; ++v) {
    a[v] = w1 * x[v] * x[v] + w2 * y[v] * y[v];
    s[v] = y[v] * y[v];
  }
  // Integer-scaled composite weight: objective, then y-part, then membership order.
  mpz_class D = lcm_of_denominators(a), D2 = lcm_of_denominators(s);
  mpz_class smax = 0;
  for (size_t v = 0; v < n; ++v) smax += mpz_class(s[v] * D2);
  mpz_class shift;
  mpz_ui_pow_ui(shift.get_mpz_t(), 2, n);
  std::vector<Rational> weight(n);
  for (size_t v = 0; v < n; ++v) {
    mpz_class order_bit;
    mpz_ui_pow_ui(order_bit.get_mpz_t(), 2, n - 1 - v);
    mpz_class av(a[v] * D), sv(s[v] * D2);
    weight[v] = Rational((av * (smax + 1) + sv) * shift - order_bit);
  }
  FlowNetwork net = build_network(pip, part, weight);
  FlowResult cut = max_flow(net);
  Bits T(n + 2);
  for (size_t v : cut.source_side) T.set(v);
  MsipResult out;
  out.ideal = Bits(n);
  for (size_t v = 0; v < n; ++v) {
    bool in_T = T.test(v + 1);
    if (part.B.test(v) ? in_T : !in_T) out.ideal.set(v);
  }
  out.objective = 0;
  for (size_t v = out.ideal.find_first(); v != Bits::npos; v = out.ideal.find_next(v)) out.objective += a[v];
  out.xi = xi(x, y, out.ideal);
  return out;
}

MsipResult solve_msip(const Pip& pip, const BVec& x, const BVec& y, const Rational& lambda) {
  if (sgn(lambda) < 0 || lambda > 1) fail("InvalidInput", "lambda must lie in [0,1]");
  validate_bvec(pip, x);
  validate_bvec(pip, y);
  auto part = bipartition(pip, x, y);
  return maximize_xi(pip, part, x, y, 1 - lambda, lambda);
}

std::vector<XiCandidate> hull_extremes(const XiOracle& oracle, const XiCandidate& first, const XiCandidate& last) {
  std::vector<XiCandidate> out{first};
  auto rec = [&](auto&& self, const XiCandidate& P, const XiCandidate& Q) -> void {
    Rational w1 = Q.xi.second - P.xi.second, w2 = P.xi.first - Q.xi.first;
    if (sgn(w1) <= 0 || sgn(w2) <= 0) return;
    XiCandidate R = oracle(w1, w2);
    Rational base = w1 * P.xi.first + w2 * P.xi.second;
    Rational got = w1 * R.xi.first + w2 * R.xi.second;
    if (!(got > base)) return;
    // A point level with either end would leave an empty block.
    if (!(R.xi.first < P.xi.first && R.xi.first > Q.xi.first && R.xi.second > P.xi.second && R.xi.second < Q.xi.second))
      return;
    self(self, P, R);
    out.push_back(R);
    self(self, R, Q);
  };
  rec(rec, first, last);
  if (last.xi != first.xi) out.push_back(last);
  return out;
}

Arch extreme_arch(const Pip& pip, const BVec& x, const BVec& y) {
  auto part = bipartition(pip, x, y);
  std::vector<Bits> found{support(x), support(y)};
  XiOracle oracle = [&](const Rational& w1, const Rational& w2) {
    MsipResult r = maximize_xi(pip, part, x, y, w1, w2);
    found.push_back(r.ideal);
    return XiCandidate{r.xi, found.size() - 1};
  };
  auto ext = hull_extremes(oracle, {xi(x, y, found[0]), 0}, {xi(x, y, found[1]), 1});
  Arch arch;
  for (const auto& c : ext) {
    arch.sets.push_back(found[c.key]);
    arch.labels.push_back(pip.label(found[c.key]));
    arch.xi.push_back(c.xi);
  }
  return arch;
}

Arch extreme_arch(const GradedPoset& poset, size_t base, const std::vector<size_t>& candidates, const Point& x,
                  const Point& y) {
  std::vector<XiPoint> values;
  for (size_t u : candidates) values.push_back(xi(poset, base, x, y, u));
  XiOracle oracle = [&](const Rational& w1, const Rational& w2) {
    size_t best = 0;
    Rational best_val;
    for (size_t k = 0; k < candidates.size(); ++k) {
      Rational val = w1 * values[k].first + w2 * values[k].second;
      bool better = k == 0 || val > best_val ||
                    (val == best_val && (values[k].second > values[best].second ||
                                         (values[k].second == values[best].second &&
                                          poset.id(candidates[k]) < poset.id(candidates[best]))));
      if (better) {
        best = k;
        best_val = val;
      }
    }
    return XiCandidate{values[best], best};
  };
  // Endpoints: largest x-part with the smallest y-part, and symmetrically.
  size_t first = 0, last = 0;
  for (size_t k = 1; k < candidates.size(); ++k) {
    const auto &v = values[k], &f = values[first], &l = values[last];
    if (v.first > f.first || (v.first == f.first && v.second < f.second)) first = k;
    if (v.second > l.second || (v.second == l.second && v.first < l.first)) last = k;
  }
  auto ext = hull_extremes(oracle, {values[first], first}, {values[last], last});
  Arch arch;
  for (const auto& c : ext) {
    arch.elements.push_back(candidates[c.key]);
    arch.labels.push_back(poset.id(candidates[c.key]));
    arch.xi.push_back(c.xi);
  }
  return arch;
}

}  // namespace orthogeo
