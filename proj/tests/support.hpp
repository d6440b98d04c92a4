// Independent brute-force references and fixtures shared by the tests.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orthogeo/arch.hpp"
#include "orthogeo/geodesic.hpp"
#include "orthogeo/metric.hpp"
#include "orthogeo/oracle.hpp"
#include "orthogeo/pip.hpp"
#include "orthogeo/poset.hpp"

namespace support {

using namespace orthogeo;

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline GradedPoset poset(const std::vector<std::string>& ids, const std::vector<Pair>& covers) {
  return GradedPoset::load(ids, covers);
}

inline GradedPoset m3() {
  return poset({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}
inline GradedPoset square() { return poset({"0", "u", "v", "1"}, {{"0", "u"}, {"0", "v"}, {"u", "1"}, {"v", "1"}}); }
inline GradedPoset chain3() { return poset({"0", "a", "b"}, {{"0", "a"}, {"a", "b"}}); }
inline GradedPoset edge_bc_ideals() { return poset({"0", "b", "c"}, {{"0", "b"}, {"0", "c"}}); }

inline Pip edge_bc() { return Pip::make({"b", "c"}, {{"b", "c"}}, {}); }
inline Pip quadrant() { return Pip::make({"b1", "b2", "c1", "c2"}, {{"b1", "c2"}, {"b2", "c1"}}, {}); }
inline Pip bcz() { return Pip::make({"b", "c", "z"}, {{"b", "c"}}, {}); }
inline Pip empty_square() { return Pip::make({"u", "v"}, {}, {}); }

inline BVec bvec(const Pip& pip, const std::map<std::string, Rational>& m) {
  BVec x(pip.size(), Rational(0));
  for (const auto& [k, v] : m) x[pip.index(k)] = v;
  return x;
}

inline Point point(const GradedPoset& L, const std::map<std::string, Rational>& m) {
  std::map<size_t, Rational> c;
  for (const auto& [k, v] : m) c[L.index(k)] = v;
  return make_point(L, c);
}

inline Bits bits(const Pip& pip, const std::vector<std::string>& names) {
  Bits b(pip.size());
  for (const auto& n : names) b.set(pip.index(n));
  return b;
}

// Subset filter over all 2^n vertex sets.
inline std::vector<Bits> brute_stable_ideals(const Pip& pip) {
  const size_t n = pip.size();
  std::vector<Bits> out;
  for (unsigned long m = 0; m < (1ul << n); ++m) {
    Bits s(n, m);
    bool ok = true;
    for (size_t v = 0; v < n && ok; ++v) {
      if (!s.test(v)) continue;
      for (size_t u = 0; u < n && ok; ++u) {
        if (u != v && pip.leq(u, v) && !s.test(u)) ok = false;
        if (s.test(u) && pip.edge(u, v)) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

// True when a precedes b: absent at the first differing vertex.
inline bool lex_before(const Bits& a, const Bits& b) {
  for (size_t v = 0; v < a.size(); ++v)
    if (a.test(v) != b.test(v)) return !a.test(v);
  return false;
}

struct MsipBrute {
  Bits ideal;
  Rational objective;
};

inline MsipBrute brute_msip(const Pip& pip, const BVec& x, const BVec& y, const Rational& lambda) {
  MsipBrute best;
  Rational best_y = -1;
  bool have = false;
  for (const auto& U : brute_stable_ideals(pip)) {
    Rational obj = 0, ypart = 0;
    for (size_t v = U.find_first(); v != Bits::npos; v = U.find_next(v)) {
      obj += (1 - lambda) * x[v] * x[v] + lambda * y[v] * y[v];
      ypart += y[v] * y[v];
    }
    bool better = !have || obj > best.objective ||
                  (obj == best.objective && (ypart > best_y || (ypart == best_y && lex_before(U, best.ideal))));
    if (better) {
      best = {U, obj};
      best_y = ypart;
      have = true;
    }
  }
  return best;
}

struct Instance {
  Pip pip;
  BVec x, y;
};

// Bipartite PIP on at most max_vertices vertices with orders inside each
// side, PIP-closed edges, no isolated vertex, and points with supp x = B,
// supp y = C.
inline Instance random_bipartite(std::mt19937_64& rng, size_t max_vertices) {
  std::uniform_int_distribution<size_t> total(2, max_vertices);
  const size_t n = total(rng);
  std::uniform_int_distribution<size_t> split(1, n - 1);
  const size_t nb = split(rng);
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back(i < nb ? "b" + std::to_string(i + 1) : "c" + std::to_string(i - nb + 1));
  auto side = [&](size_t v) { return v < nb; };
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false)), adj(n, std::vector<bool>(n, false));
  std::bernoulli_distribution order_coin(0.2), edge_coin(0.35);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (side(i) == side(j) && order_coin(rng)) le[i][j] = true;
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = nb; j < n; ++j)
      if (edge_coin(rng)) adj[i][j] = adj[j][i] = true;
  auto close = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t u = 0; u < n; ++u)
        for (size_t w = 0; w < n; ++w)
          for (size_t v = 0; v < n; ++v)
            if (adj[u][v] && le[u][w] && !adj[w][v]) {
              adj[w][v] = adj[v][w] = true;
              changed = true;
            }
    }
  };
  close();
  for (size_t v = 0; v < n; ++v) {
    bool isolated = std::none_of(adj[v].begin(), adj[v].end(), [](bool b) { return b; });
    if (!isolated) continue;
    size_t lo = side(v) ? nb : 0, hi = side(v) ? n : nb;
    size_t w = lo + rng() % (hi - lo);
    adj[v][w] = adj[w][v] = true;
    close();
  }
  std::vector<Pair> edges, order;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i < j && adj[i][j]) edges.emplace_back(names[i], names[j]);
      if (i != j && le[i][j]) order.emplace_back(names[i], names[j]);
    }
  Instance inst{Pip::make(names, edges, order), {}, {}};
  // Values drop along the vertex order, which extends the partial order.
  auto values = [&](size_t lo, size_t hi) {
    std::vector<long> k;
    for (size_t i = lo; i < hi; ++i) k.push_back(1 + static_cast<long>(rng() % 10));
    std::sort(k.rbegin(), k.rend());
    return k;
  };
  inst.x.assign(n, Rational(0));
  inst.y.assign(n, Rational(0));
  auto kb = values(0, nb), kc = values(nb, n);
  for (size_t i = 0; i < nb; ++i) inst.x[i] = q(kb[i], 10);
  for (size_t i = nb; i < n; ++i) inst.y[i] = q(kc[i - nb], 10);
  return inst;
}

struct ArchCensus {
  size_t total = 0;
  SqrtSum min_all;
  size_t argmin_all = 0;
  SqrtSum min_concave;
  size_t argmin_concave = 0;
  std::vector<Bits> best_concave;
};

// Lists every arch B = U_0, ..., U_m = C by depth-first search over the
// brute-force stable ideals and scores them from the block norms.
inline ArchCensus arch_census(const Pip& pip, const BVec& x, const BVec& y) {
  Bits B(pip.size()), C(pip.size());
  for (size_t v = 0; v < pip.size(); ++v) {
    if (sgn(x[v]) > 0) B.set(v);
    if (sgn(y[v]) > 0) C.set(v);
  }
  std::vector<Bits> ideals;
  for (const auto& U : brute_stable_ideals(pip))
    if (U.is_subset_of(B | C)) ideals.push_back(U);
  auto sq = [&](const Bits& s, const BVec& z) {
    Rational r = 0;
    for (size_t v = s.find_first(); v != Bits::npos; v = s.find_next(v)) r += z[v] * z[v];
    return r;
  };
  ArchCensus out;
  bool have_all = false, have_concave = false;
  std::vector<Bits> seq{B};
  std::function<void()> rec = [&]() {
    const Bits cur = seq.back();
    for (const auto& U : ideals) {
      Bits ub = U & B, uc = U & C;
      if (!(ub.is_proper_subset_of(cur & B) && (cur & C).is_proper_subset_of(uc))) continue;
      seq.push_back(U);
      if (U == C) {
        ++out.total;
        SqrtSum v2;
        bool concave = true;
        Rational px = 0, py = 0;
        for (size_t i = 1; i < seq.size(); ++i) {
          Rational X = sq((seq[i - 1] & B) - (seq[i] & B), x), Y = sq((seq[i] & C) - (seq[i - 1] & C), y);
          v2 += SqrtSum(Rational(X + Y)) + SqrtSum::sqrt_of(Rational(4 * X * Y));
          if (i > 1 && !(px * Y < X * py)) concave = false;
          px = X;
          py = Y;
        }
        int c = have_all ? compare(v2, out.min_all) : -1;
        if (c < 0) {
          out.min_all = v2;
          out.argmin_all = 1;
          have_all = true;
        } else if (c == 0) {
          ++out.argmin_all;
        }
        if (concave) {
          int d = have_concave ? compare(v2, out.min_concave) : -1;
          if (d < 0) {
            out.min_concave = v2;
            out.argmin_concave = 1;
            out.best_concave = seq;
            have_concave = true;
          } else if (d == 0) {
            ++out.argmin_concave;
          }
        }
      } else {
        rec();
      }
      seq.pop_back();
    }
  };
  rec();
  return out;
}

// All graded lattices up to max_elements built level by level from a rank
// profile (1, n_1, ..., 1) and every bipartite cover pattern between levels,
// filtered to modular lattices.
inline std::vector<GradedPoset> modular_lattice_catalog(size_t max_elements) {
  std::vector<GradedPoset> out;
  std::vector<std::vector<size_t>> profiles;
  std::vector<size_t> cur{1};
  std::function<void(size_t)> grow = [&](size_t used) {
    if (used + 1 <= max_elements) {
      auto p = cur;
      p.push_back(1);
      profiles.push_back(p);
    }
    for (size_t k = 1; used + k + 1 <= max_elements; ++k) {
      cur.push_back(k);
      grow(used + k);
      cur.pop_back();
    }
  };
  grow(1);
  for (const auto& prof : profiles) {
    std::vector<std::string> ids;
    std::vector<std::vector<size_t>> level;
    for (size_t r = 0; r < prof.size(); ++r) {
      level.emplace_back();
      for (size_t i = 0; i < prof[r]; ++i) {
        level.back().push_back(ids.size());
        ids.push_back("r" + std::to_string(r) + "_" + std::to_string(i));
      }
    }
    std::vector<Pair> covers;
    std::function<void(size_t)> pick = [&](size_t r) {
      if (r + 1 == prof.size()) {
        auto L = GradedPoset::load(ids, covers);
        const auto& c = L.classification();
        if (c.lattice && c.modular) out.push_back(L);
        return;
      }
      const auto &lo = level[r], &hi = level[r + 1];
      const size_t bitsz = lo.size() * hi.size();
      for (unsigned long m = 0; m < (1ul << bitsz); ++m) {
        std::vector<bool> up(lo.size(), false), down(hi.size(), false);
        std::vector<Pair> add;
        for (size_t i = 0; i < lo.size(); ++i)
          for (size_t j = 0; j < hi.size(); ++j)
            if (m >> (i * hi.size() + j) & 1ul) {
              up[i] = down[j] = true;
              add.emplace_back(ids[lo[i]], ids[hi[j]]);
            }
        if (std::count(up.begin(), up.end(), false) || std::count(down.begin(), down.end(), false)) continue;
        covers.insert(covers.end(), add.begin(), add.end());
        pick(r + 1);
        covers.resize(covers.size() - add.size());
      }
    };
    pick(0);
  }
  return out;
}

// Random point on a random maximal chain with denominators up to 12.
inline Point random_chain_point(const GradedPoset& L, std::mt19937_64& rng, const std::vector<size_t>& chain) {
  std::map<size_t, Rational> c;
  long total = 0;
  std::vector<long> w;
  for (size_t i = 0; i < chain.size(); ++i) {
    long k = static_cast<long>(rng() % 4);
    w.push_back(k);
    total += k;
  }
  if (total == 0) {
    w[rng() % w.size()] = 1;
    total = 1;
  }
  for (size_t i = 0; i < chain.size(); ++i)
    if (w[i] > 0) c[chain[i]] = q(w[i], total);
  return make_point(L, c);
}

inline std::vector<size_t> random_maximal_chain(const GradedPoset& L, std::mt19937_64& rng) {
  std::vector<size_t> chain{*L.bottom()};
  while (!L.upper_covers(chain.back()).empty()) {
    const auto& up = L.upper_covers(chain.back());
    chain.push_back(up[rng() % up.size()]);
  }
  return chain;
}

}  // namespace support
