#include "orthogeo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <sstream>

#include "orthogeo/config.hpp"
#include "orthogeo/error.hpp"
#include "orthogeo/geodesic.hpp"

namespace orthogeo {

IdealComplex ideal_complex(const Pip& pip, size_t cap) {
  IdealComplex out;
  auto ideals = enumerate_stable_ideals(pip, cap);
  out.poset = stable_ideals(pip, cap);
  out.frame.pip = pip;
  out.frame.ideal_of = ideals;
  for (size_t i = 0; i < ideals.size(); ++i) out.frame.element_of.emplace(ideals[i], i);
  for (size_t v = 0; v < pip.size(); ++v) out.frame.vertex_element.push_back(out.frame.element_of.at(pip.below(v)));
  return out;
}

namespace {

std::vector<std::vector<size_t>> maximal_chains(const GradedPoset& L, size_t cap) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  auto rec = [&](auto&& self, size_t v) -> void {
    cur.push_back(v);
    if (L.upper_covers(v).empty()) {
      if (out.size() >= cap) fail("SizeCap", "more than " + std::to_string(cap) + " maximal chains");
      out.push_back(cur);
    }
    for (size_t w : L.upper_covers(v)) self(self, w);
    cur.pop_back();
  };
  for (size_t v = 0; v < L.size(); ++v)
    if (L.lower_covers(v).empty()) rec(rec, v);
  return out;
}

std::vector<double> chain_phi(const GradedPoset& L, const std::vector<size_t>& chain, const Point& p) {
  const int base = L.rank(chain.front());
  std::vector<double> phi(chain.size() - 1, 0.0);
  for (const auto& [e, c] : p.coeffs) {
    double w = c.get_d();
    for (int j = 0; j < L.rank(e) - base; ++j) phi[static_cast<size_t>(j)] += w;
  }
  return phi;
}

bool on_chain(const std::vector<size_t>& chain, const Point& p) {
  for (const auto& [e, c] : p.coeffs)
    if (std::find(chain.begin(), chain.end(), e) == chain.end()) return false;
  return true;
}

}  // namespace

double oracle_distance(const GradedPoset& L, const Point& x, const Point& y, int n, size_t cap) {
  if (n < 1) fail("InvalidInput", "refinement must be positive");
  validate_point(L, x);
  validate_point(L, y);
  const size_t limit = effective_cap(cap);
  auto chains = maximal_chains(L, limit);

  std::map<std::map<size_t, Rational>, size_t> node_of;
  std::vector<std::vector<std::pair<size_t, size_t>>> member;  // node -> (chain, slot)
  std::vector<std::vector<std::pair<size_t, std::vector<double>>>> slots(chains.size());
  auto node = [&](const std::map<size_t, Rational>& key) {
    auto [it, fresh] = node_of.emplace(key, member.size());
    if (fresh) {
      if (member.size() >= limit) fail("SizeCap", "grid exceeds " + std::to_string(limit) + " nodes");
      member.emplace_back();
    }
    return it->second;
  };
  auto attach = [&](size_t id, size_t c, std::vector<double> phi) {
    member[id].emplace_back(c, slots[c].size());
    slots[c].emplace_back(id, std::move(phi));
  };

  for (size_t c = 0; c < chains.size(); ++c) {
    const auto& ch = chains[c];
    const size_t k = ch.size() - 1;
    std::vector<int> m(k, 0);
    // Nonincreasing integer sequences n >= m_1 >= ... >= m_k >= 0.
    auto rec = [&](auto&& self, size_t j, int hi) -> void {
      if (j == k) {
        std::map<size_t, Rational> key;
        int prev = n;
        for (size_t i = 0; i <= k; ++i) {
          int cur = i < k ? m[i] : 0;
          if (prev - cur > 0) {
            key[ch[i]] = Rational(prev - cur, n);
            key[ch[i]].canonicalize();
          }
          prev = cur;
        }
        std::vector<double> phi(k);
        for (size_t i = 0; i < k; ++i) phi[i] = static_cast<double>(m[i]) / n;
        attach(node(key), c, std::move(phi));
        return;
      }
      for (int v = 0; v <= hi; ++v) {
        m[j] = v;
        self(self, j + 1, v);
      }
    };
    rec(rec, 0, n);
  }

  auto endpoint = [&](const Point& p) {
    bool fresh = !node_of.count(p.coeffs);
    size_t id = node(p.coeffs);
    if (fresh)
      for (size_t c = 0; c < chains.size(); ++c)
        if (on_chain(chains[c], p)) attach(id, c, chain_phi(L, chains[c], p));
    return id;
  };
  size_t s = endpoint(x), t = endpoint(y);

  std::vector<double> dist(member.size(), std::numeric_limits<double>::infinity());
  using Item = std::pair<double, size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = 0;
  pq.emplace(0.0, s);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    if (u == t) break;
    for (const auto& [c, slot] : member[u]) {
      const auto& pu = slots[c][slot].second;
      for (const auto& [w, pw] : slots[c]) {
        double acc = 0;
        for (size_t j = 0; j < pu.size(); ++j) acc += (pu[j] - pw[j]) * (pu[j] - pw[j]);
        double nd = d + std::sqrt(acc);
        if (nd < dist[w]) {
          dist[w] = nd;
          pq.emplace(nd, w);
        }
      }
    }
  }
  return dist[t];
}

double oracle_distance(const Pip& pip, const BVec& x, const BVec& y, int n, size_t cap) {
  auto ic = ideal_complex(pip);
  return oracle_distance(ic.poset, from_b_coordinates(ic.frame, x), from_b_coordinates(ic.frame, y), n, cap);
}

namespace {

SqrtSum raw_v_sq(const Arch& arch) {
  SqrtSum total;
  for (size_t i = 1; i < arch.xi.size(); ++i) {
    Rational X = arch.x_block_sq(i), Y = arch.y_block_sq(i);
    total += SqrtSum(Rational(X + Y));
    total += SqrtSum::sqrt_of(Rational(X * Y)) * Rational(2);
  }
  return total;
}

void sort_arches(std::vector<ArchValue>& out) {
  std::stable_sort(out.begin(), out.end(), [](const ArchValue& a, const ArchValue& b) {
    int c = compare(a.v_sq, b.v_sq);
    return c != 0 ? c < 0 : a.arch.labels < b.arch.labels;
  });
}

// Depth-first listing of index sequences first -> ... -> last along allowed steps.
template <class Step>
std::vector<std::vector<size_t>> arch_sequences(size_t count, size_t first, size_t last, Step step, size_t limit) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur{first};
  auto rec = [&](auto&& self, size_t u) -> void {
    for (size_t w = 0; w < count; ++w) {
      if (!step(u, w)) continue;
      cur.push_back(w);
      if (w == last) {
        if (out.size() >= limit) fail("SizeCap", "more than " + std::to_string(limit) + " arches");
        out.push_back(cur);
      } else {
        self(self, w);
      }
      cur.pop_back();
    }
  };
  rec(rec, first);
  return out;
}

}  // namespace

std::vector<ArchValue> enumerate_arches(const Pip& pip, const BVec& x, const BVec& y, size_t cap) {
  validate_bvec(pip, x);
  validate_bvec(pip, y);
  auto part = bipartition(pip, x, y);
  Bits B = support(x), C = support(y);
  if (B.none() || C.none()) fail("EmptyBlock", "both endpoints need nonempty support");
  Bits S = B | C;
  std::vector<size_t> global;
  for (size_t v = S.find_first(); v != Bits::npos; v = S.find_next(v)) global.push_back(v);
  const size_t limit = effective_cap(cap);
  auto local = enumerate_stable_ideals(pip.induced(S), limit);
  std::vector<Bits> ideals;
  for (const auto& L : local) {
    Bits g(pip.size());
    for (size_t v = L.find_first(); v != Bits::npos; v = L.find_next(v)) g.set(global[v]);
    ideals.push_back(g);
  }
  auto pos = [&](const Bits& s) { return size_t(std::find(ideals.begin(), ideals.end(), s) - ideals.begin()); };
  size_t first = pos(B), last = pos(C);
  auto proper = [](const Bits& a, const Bits& b) { return a.is_proper_subset_of(b); };
  auto step = [&](size_t u, size_t w) {
    return proper(ideals[w] & B, ideals[u] & B) && proper(ideals[u] & C, ideals[w] & C);
  };
  std::vector<ArchValue> out;
  for (const auto& seq : arch_sequences(ideals.size(), first, last, step, effective_cap(1000000))) {
    ArchValue av;
    for (size_t i : seq) {
      av.arch.sets.push_back(ideals[i]);
      av.arch.labels.push_back(pip.label(ideals[i]));
      av.arch.xi.push_back(xi(x, y, ideals[i]));
    }
    av.v_sq = raw_v_sq(av.arch);
    out.push_back(std::move(av));
  }
  sort_arches(out);
  return out;
}

std::vector<ArchValue> enumerate_arches(const GradedPoset& L, size_t base, size_t P, size_t Q,
                                        const std::vector<size_t>& candidates, const Point& x, const Point& y,
                                        size_t cap) {
  const size_t limit = effective_cap(cap);
  if (candidates.size() > limit) fail("SizeCap", "more than " + std::to_string(limit) + " candidate elements");
  auto at = [&](size_t e) {
    auto it = std::find(candidates.begin(), candidates.end(), e);
    if (it == candidates.end()) fail("InvalidInput", "'" + L.id(e) + "' is not a candidate");
    return size_t(it - candidates.begin());
  };
  std::vector<size_t> tp, tq;
  for (size_t u : candidates) {
    auto a = L.meet(u, P), b = L.meet(u, Q);
    if (!a || !b) fail("MeetUndefined", "candidate '" + L.id(u) + "' has no trace");
    tp.push_back(*a);
    tq.push_back(*b);
  }
  auto below = [&](size_t a, size_t b) { return a != b && L.leq(a, b); };
  auto step = [&](size_t u, size_t w) { return below(tp[w], tp[u]) && below(tq[u], tq[w]); };
  std::vector<ArchValue> out;
  for (const auto& seq : arch_sequences(candidates.size(), at(P), at(Q), step, effective_cap(1000000))) {
    ArchValue av;
    for (size_t i : seq) {
      av.arch.elements.push_back(candidates[i]);
      av.arch.labels.push_back(L.id(candidates[i]));
      av.arch.xi.push_back(xi(L, base, x, y, candidates[i]));
    }
    av.v_sq = raw_v_sq(av.arch);
    out.push_back(std::move(av));
  }
  sort_arches(out);
  return out;
}

BVec random_bvec(const Pip& pip, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const size_t n = pip.size();
  Bits in(n);
  std::vector<size_t> order;
  for (size_t v : pip.linear_extension()) {
    Bits strict = pip.below(v);
    strict.reset(v);
    if (strict.is_subset_of(in) && !(pip.neighbors(v) & in).any() && rng() % 2 == 0) {
      in.set(v);
      order.push_back(v);
    }
  }
  std::vector<int> levels;
  for (size_t i = 0; i < order.size(); ++i) levels.push_back(1 + static_cast<int>(rng() % 16));
  std::sort(levels.rbegin(), levels.rend());
  BVec x(n, Rational(0));
  for (size_t i = 0; i < order.size(); ++i) x[order[i]] = Rational(levels[i], 16);
  for (auto& v : x) v.canonicalize();
  return x;
}

Point random_point(const GradedPoset& L, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<size_t> minimal;
  for (size_t v = 0; v < L.size(); ++v)
    if (L.lower_covers(v).empty()) minimal.push_back(v);
  std::vector<size_t> chain{minimal[rng() % minimal.size()]};
  while (!L.upper_covers(chain.back()).empty()) {
    const auto& up = L.upper_covers(chain.back());
    chain.push_back(up[rng() % up.size()]);
  }
  std::map<size_t, Rational> coeffs;
  Rational total = 0;
  for (size_t e : chain)
    if (rng() % 2 == 0) {
      Rational w(1 + static_cast<long>(rng() % 8));
      coeffs[e] = w;
      total += w;
    }
  if (coeffs.empty()) {
    coeffs[chain[rng() % chain.size()]] = 1;
    total = 1;
  }
  Point p;
  for (auto& [e, w] : coeffs) p.coeffs[e] = w / total;
  return p;
}

namespace {

Rational to_rational(const Num& n) {
  if (n.exact()) return n.rational();
  Rational r(n.value());
  return r;
}

uint64_t sample_seed(uint64_t seed, size_t i, uint64_t salt) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(i),
                    static_cast<uint32_t>(salt)};
  std::mt19937_64 rng(seq);
  return rng();
}

std::string bvec_text(const Pip& pip, const BVec& x) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (size_t v = 0; v < x.size(); ++v) {
    if (sgn(x[v]) == 0) continue;
    os << (first ? "" : ",") << pip.vertex(v) << ':' << to_string(x[v]);
    first = false;
  }
  os << '}';
  return os.str();
}

std::string point_text(const GradedPoset& L, const Point& x) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [e, c] : x.coeffs) {
    os << (first ? "" : ",") << L.id(e) << ':' << to_string(c);
    first = false;
  }
  os << '}';
  return os.str();
}

// Shared driver: probe x, geodesic y->z, convexity of d(x,.)^2 at t = j/8.
template <class Sample, class Dist, class Geo, class At, class Text>
Cat0Report run_cat0(size_t samples, uint64_t seed, Sample sample, Dist dist, Geo geo, At at, Text text) {
  Cat0Report rep;
  rep.samples = samples;
  for (size_t i = 0; i < samples; ++i) {
    auto x = sample(sample_seed(seed, i, 1)), y = sample(sample_seed(seed, i, 2)), z = sample(sample_seed(seed, i, 3));
    auto g = geo(y, z);
    double dyz = g.length, dxy = dist(x, y), dxz = dist(x, z);
    for (int j = 1; j < 8; ++j) {
      Rational t(j, 8);
      t.canonicalize();
      auto pt = at(g, t);
      double dt = dist(x, pt), tt = t.get_d();
      double rhs = (1 - tt) * dxy * dxy + tt * dxz * dxz - tt * (1 - tt) * dyz * dyz;
      double violation = dt * dt - rhs;
      if (violation > rep.max_violation) {
        rep.max_violation = violation;
        rep.worst_sample = i;
        rep.worst_t = tt;
        rep.worst_detail = "x=" + text(x) + " y=" + text(y) + " z=" + text(z);
      }
    }
  }
  return rep;
}

}  // namespace

Cat0Report cat0_check(const Pip& host, size_t samples, uint64_t seed) {
  auto geo = [&](const BVec& a, const BVec& b) { return geodesic_median(host, a, b); };
  auto dist = [&](const BVec& a, const BVec& b) { return geodesic_median(host, a, b).length; };
  auto at = [&](const Geodesic& g, const Rational& t) {
    SparseNum p = path_at(g.path, Num(t));
    BVec out(host.size(), Rational(0));
    for (const auto& [v, c] : p) {
      Rational r = to_rational(c);
      out[v] = r < 0 ? Rational(0) : (r > 1 ? Rational(1) : r);
    }
    // Rounding may break monotonicity by an ulp; restore it.
    for (size_t v : host.linear_extension()) {
      const Bits& low = host.below(v);
      for (size_t u = low.find_first(); u != Bits::npos; u = low.find_next(u))
        if (out[u] < out[v]) out[v] = out[u];
    }
    return out;
  };
  auto sample = [&](uint64_t s) { return random_bvec(host, s); };
  auto text = [&](const BVec& x) { return bvec_text(host, x); };
  return run_cat0(samples, seed, sample, dist, geo, at, text);
}

Cat0Report cat0_check(const GradedPoset& host, size_t samples, uint64_t seed) {
  require_modular_semilattice(host);
  auto geo = [&](const Point& a, const Point& b) { return geodesic(host, a, b); };
  auto dist = [&](const Point& a, const Point& b) { return geodesic(host, a, b).length; };
  auto at = [&](const Geodesic& g, const Rational& t) {
    SparseNum p = path_at(g.path, Num(t));
    Point out;
    Rational total = 0;
    for (const auto& [e, c] : p) {
      Rational r = to_rational(c);
      if (sgn(r) > 0) {
        out.coeffs[e] = r;
        total += r;
      }
    }
    for (auto& [e, c] : out.coeffs) c /= total;
    return out;
  };
  auto sample = [&](uint64_t s) { return random_point(host, s); };
  auto text = [&](const Point& x) { return point_text(host, x); };
  return run_cat0(samples, seed, sample, dist, geo, at, text);
}

}  // namespace orthogeo
