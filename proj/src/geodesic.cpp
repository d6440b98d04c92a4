#include "orthogeo/geodesic.hpp"

#include <algorithm>
#include <cmath>

#include "orthogeo/error.hpp"

namespace orthogeo {

namespace {

constexpr double kTol = 1e-12;

int num_sign(const Num& n) {
  if (n.exact()) return sgn(n.rational());
  if (std::abs(n.value()) <= kTol) return 0;
  return n.value() > 0 ? 1 : -1;
}

bool num_less(const Num& a, const Num& b) {
  if (a.exact() && b.exact()) return a.rational() < b.rational();
  return a.value() < b.value() - kTol;
}

SparseNum sparse(const BVec& x) {
  SparseNum out;
  for (size_t v = 0; v < x.size(); ++v)
    if (sgn(x[v]) != 0) out[v] = Num(x[v]);
  return out;
}

SparseNum sparse(const Point& x) {
  SparseNum out;
  for (const auto& [e, c] : x.coeffs) out[e] = Num(c);
  return out;
}

PolyPath two_point(PolyPath::Form form, SparseNum a, SparseNum b) {
  PolyPath path;
  path.form = form;
  path.times = {Num(0), Num(1)};
  path.points = {std::move(a), std::move(b)};
  return path;
}

Geodesic finish(PolyPath path, SqrtSum length_sq, std::string label) {
  Geodesic g;
  g.path = std::move(path);
  double d = length_sq.to_double();
  g.length = d <= 0 ? 0.0 : std::sqrt(d);
  g.length_sq = std::move(length_sq);
  g.case_label = std::move(label);
  return g;
}

GradedPoset sub_poset(const GradedPoset& L, const std::vector<size_t>& elems) {
  std::vector<std::string> ids;
  std::vector<Bits> down(elems.size(), Bits(elems.size()));
  for (size_t i = 0; i < elems.size(); ++i) {
    ids.push_back(L.id(elems[i]));
    for (size_t j = 0; j < elems.size(); ++j)
      if (L.leq(elems[j], elems[i])) down[i].set(j);
  }
  return GradedPoset::from_order(std::move(ids), std::move(down));
}

bool rank_preserving(const GradedPoset& L, const GradedPoset& sub, const std::vector<size_t>& elems) {
  for (const auto& [u, v] : sub.covers())
    if (L.rank(elems[v]) != L.rank(elems[u]) + 1) return false;
  return true;
}

std::vector<size_t> in_rank_order(const GradedPoset& L, const Bits& s) {
  std::vector<size_t> out;
  for (size_t v : L.by_rank())
    if (s.test(v)) out.push_back(v);
  return out;
}

// Smallest set containing seeds and closed under meet and join.
std::vector<size_t> closure(const GradedPoset& L, const std::vector<size_t>& seeds) {
  Bits in(L.size());
  std::vector<size_t> members;
  for (size_t s : seeds)
    if (!in.test(s)) {
      in.set(s);
      members.push_back(s);
    }
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      size_t u = members[i], v = members[j];
      auto m = L.meet(u, v);
      auto J = L.join(u, v);
      if (!m || !J) fail("NotModular", "'" + L.id(u) + "' and '" + L.id(v) + "' lack a meet or join");
      for (size_t w : {*m, *J})
        if (!in.test(w)) {
          in.set(w);
          members.push_back(w);
        }
    }
  return in_rank_order(L, in);
}

std::vector<Num> dense(const SparseNum& p, size_t n) {
  std::vector<Num> out(n, Num(0));
  for (const auto& [k, c] : p) out[k] = c;
  return out;
}

// Chain form of a b-coordinate vector: ideals at each distinct level.
SparseNum chain_form(const Birkhoff& fb, const std::vector<Num>& b) {
  const size_t n = b.size();
  std::vector<size_t> pos;
  for (size_t v = 0; v < n; ++v)
    if (num_sign(b[v]) > 0) pos.push_back(v);
  std::stable_sort(pos.begin(), pos.end(), [&](size_t u, size_t v) { return num_less(b[v], b[u]); });
  std::vector<std::pair<Num, Bits>> levels;
  Bits cur(n);
  for (size_t k = 0; k < pos.size(); ++k) {
    cur.set(pos[k]);
    bool last = k + 1 == pos.size();
    if (last || num_sign(b[pos[k]] - b[pos[k + 1]]) != 0) levels.emplace_back(b[pos[k]], cur);
  }
  auto element = [&](const Bits& I) {
    auto it = fb.element_of.find(I);
    if (it == fb.element_of.end()) fail("SupportOutsideFrame", "ideal " + fb.pip.label(I) + " has no element");
    return it->second;
  };
  SparseNum out;
  Num top = levels.empty() ? Num(0) : levels.front().first;
  if (num_sign(Num(1) - top) > 0) out[element(Bits(n))] = Num(1) - top;
  for (size_t k = 0; k < levels.size(); ++k) {
    Num next = k + 1 < levels.size() ? levels[k + 1].first : Num(0);
    Num c = levels[k].first - next;
    if (num_sign(c) > 0) out[element(levels[k].second)] = c;
  }
  return out;
}

// Re-express a b-coordinate path in chain form, splitting each segment where
// two coordinates cross so that consecutive points share a simplex.
PolyPath to_chain(const Birkhoff& fb, const PolyPath& bpath, const std::vector<size_t>& host) {
  const size_t n = fb.pip.size();
  PolyPath out;
  out.form = PolyPath::Form::Chain;
  auto emit = [&](const Num& t, const std::vector<Num>& b) {
    SparseNum local = chain_form(fb, b), mapped;
    for (const auto& [e, c] : local) mapped[host[e]] = c;
    out.times.push_back(t);
    out.points.push_back(std::move(mapped));
  };
  for (size_t i = 0; i + 1 < bpath.points.size(); ++i) {
    auto A = dense(bpath.points[i], n), B = dense(bpath.points[i + 1], n);
    const Num &t0 = bpath.times[i], &t1 = bpath.times[i + 1];
    if (i == 0) emit(t0, A);
    std::vector<Num> cuts;
    for (size_t u = 0; u < n; ++u)
      for (size_t v = u + 1; v < n; ++v) {
        Num d0 = A[u] - A[v], d1 = B[u] - B[v];
        if (num_sign(d0) * num_sign(d1) < 0) cuts.push_back(d0 / (d0 - d1));
      }
    std::sort(cuts.begin(), cuts.end(), num_less);
    cuts.erase(std::unique(cuts.begin(), cuts.end(), [](const Num& a, const Num& b) { return num_sign(a - b) == 0; }),
               cuts.end());
    for (const auto& s : cuts) {
      std::vector<Num> P(n);
      for (size_t v = 0; v < n; ++v) P[v] = A[v] + s * (B[v] - A[v]);
      emit(t0 + s * (t1 - t0), P);
    }
    emit(t1, B);
  }
  return out;
}

// Geodesic computed inside a median subsemilattice of the host.
Geodesic frame_geodesic(const GradedPoset& L, const std::vector<size_t>& elems, const Point& x, const Point& y) {
  GradedPoset sub = sub_poset(L, elems);
  if (!rank_preserving(L, sub, elems)) fail("FrameNotMedian", "frame covers skip ranks of the host");
  Birkhoff fb = birkhoff(sub);
  std::vector<size_t> local(L.size(), Bits::npos);
  for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = i;
  auto to_local = [&](const Point& p) {
    Point out;
    for (const auto& [e, c] : p.coeffs) {
      if (local[e] == Bits::npos) fail("SupportOutsideFrame", "'" + L.id(e) + "' is not in the frame");
      out.coeffs[local[e]] = c;
    }
    return out;
  };
  BVec bx = b_coordinates(fb, to_local(x)), by = b_coordinates(fb, to_local(y));
  Geodesic g = geodesic_median(fb.pip, bx, by);
  g.path = to_chain(fb, g.path, elems);
  return g;
}

bool chain_support(const GradedPoset& L, const Point& x, const Point& y) {
  std::vector<size_t> s;
  for (const auto& [e, c] : x.coeffs) s.push_back(e);
  for (const auto& [e, c] : y.coeffs) s.push_back(e);
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (!L.leq(s[i], s[j]) && !L.leq(s[j], s[i])) return false;
  return true;
}

std::vector<size_t> chain_through(const GradedPoset& L, const Point& x, size_t top) {
  std::vector<size_t> c{*L.bottom(), top};
  for (const auto& [e, w] : x.coeffs) c.push_back(e);
  return refine_chain(L, c);
}

Geodesic lattice_case(const GradedPoset& L, const Point& x, const Point& y, size_t top) {
  auto D = distributive_sublattice(L, {chain_through(L, x, top), chain_through(L, y, top)});
  Geodesic g = frame_geodesic(L, D, x, y);
  g.case_label = "P1";
  g.arch = Arch{};
  return g;
}

}  // namespace

PolyPath owen_path(const Pip& pip, const Arch& arch, const BVec& x, const BVec& y) {
  if (arch.sets.size() != arch.xi.size()) fail("SupportMismatch", "arch members carry no stable ideals");
  if (!is_concave(arch)) fail("NotConcave", "block ratios of the arch do not increase strictly");
  if (support(x) != arch.sets.front() || support(y) != arch.sets.back())
    fail("SupportMismatch", "arch must run from supp x to supp y");
  const size_t n = pip.size(), k = arch.blocks();
  std::vector<size_t> xblock(n, 0), yblock(n, 0);
  std::vector<Num> t(k + 1);
  for (size_t i = 1; i <= k; ++i) {
    Bits leaving = arch.sets[i - 1] - arch.sets[i], entering = arch.sets[i] - arch.sets[i - 1];
    for (size_t v = leaving.find_first(); v != Bits::npos; v = leaving.find_next(v))
      if (sgn(x[v]) != 0) xblock[v] = i;
    for (size_t v = entering.find_first(); v != Bits::npos; v = entering.find_next(v))
      if (sgn(y[v]) != 0) yblock[v] = i;
    Num X = Num::sqrt(Num(arch.x_block_sq(i))), Y = Num::sqrt(Num(arch.y_block_sq(i)));
    t[i] = X / (X + Y);
  }
  PolyPath path;
  path.form = PolyPath::Form::BCoords;
  path.times.push_back(Num(0));
  path.points.push_back(sparse(x));
  for (size_t j = 1; j <= k; ++j) {
    SparseNum p;
    for (size_t v = 0; v < n; ++v) {
      if (xblock[v] > j) p[v] = (Num(1) - t[j] / t[xblock[v]]) * Num(x[v]);
      if (yblock[v] != 0 && yblock[v] < j)
        p[v] = (t[j] - t[yblock[v]]) / (Num(1) - t[yblock[v]]) * Num(y[v]);
    }
    path.times.push_back(t[j]);
    path.points.push_back(std::move(p));
  }
  path.times.push_back(Num(1));
  path.points.push_back(sparse(y));
  return path;
}

Geodesic geodesic_median(const Pip& pip, const BVec& x, const BVec& y) {
  validate_bvec(pip, x);
  validate_bvec(pip, y);
  if (x == y) return finish(two_point(PolyPath::Form::BCoords, sparse(x), sparse(y)), SqrtSum(), "P1");
  const size_t n = pip.size();
  Bits sx = support(x), sy = support(y), S = sx | sy, Z(n);
  for (size_t v = S.find_first(); v != Bits::npos; v = S.find_next(v))
    if (!(pip.neighbors(v) & S).any()) Z.set(v);
  Bits keep = S - Z;
  if (keep.none()) return finish(two_point(PolyPath::Form::BCoords, sparse(x), sparse(y)), SqrtSum(dist_sq(x, y)), "P1");

  std::vector<size_t> global;
  for (size_t v = keep.find_first(); v != Bits::npos; v = keep.find_next(v)) global.push_back(v);
  Pip sub = pip.induced(keep);
  BVec xs(global.size()), ys(global.size());
  for (size_t i = 0; i < global.size(); ++i) {
    xs[i] = x[global[i]];
    ys[i] = y[global[i]];
  }
  Arch arch = extreme_arch(sub, xs, ys);
  PolyPath Q = owen_path(sub, arch, xs, ys);

  PolyPath path;
  path.form = PolyPath::Form::BCoords;
  path.times = Q.times;
  for (size_t j = 0; j < Q.points.size(); ++j) {
    if (j == 0 || j + 1 == Q.points.size()) {
      path.points.push_back(sparse(j == 0 ? x : y));
      continue;
    }
    SparseNum p;
    for (const auto& [v, c] : Q.points[j]) p[global[v]] = c;
    for (size_t z = Z.find_first(); z != Bits::npos; z = Z.find_next(z)) {
      Num c = Num(x[z]) + Q.times[j] * Num(y[z] - x[z]);
      if (num_sign(c) != 0) p[z] = c;
    }
    path.points.push_back(std::move(p));
  }
  SqrtSum len_sq = v_squared(arch) + SqrtSum(dist_sq(restrict_to(x, Z), restrict_to(y, Z)));
  for (auto& s : arch.sets) {
    Bits g(n);
    for (size_t v = s.find_first(); v != Bits::npos; v = s.find_next(v)) g.set(global[v]);
    s = g;
  }
  Geodesic g = finish(std::move(path), std::move(len_sq), Z.none() ? "P2" : "P4");
  g.arch = std::move(arch);
  return g;
}

std::vector<size_t> distributive_sublattice(const GradedPoset& M, const std::vector<std::vector<size_t>>& chains) {
  std::vector<size_t> seeds;
  for (const auto& c : chains) seeds.insert(seeds.end(), c.begin(), c.end());
  auto D = closure(M, seeds);
  GradedPoset sub = sub_poset(M, D);
  if (!sub.classification().distributive || !rank_preserving(M, sub, D))
    fail("NotModular", "generated sublattice is not distributive");
  return D;
}

std::vector<size_t> birkhoff_projection(const GradedPoset& M, const std::vector<size_t>& irreducibles, size_t p) {
  auto bot = M.bottom();
  if (!bot) fail("ChainNotMaximal", "lattice has no bottom");
  std::vector<size_t> out;
  size_t prev = *bot;
  for (size_t b : irreducibles) {
    auto cur = M.join(prev, b);
    if (!cur || M.rank(*cur) != M.rank(prev) + 1)
      fail("ChainNotMaximal", "prefix joins do not climb one rank at a time at '" + M.id(b) + "'");
    auto m0 = M.meet(p, prev), m1 = M.meet(p, *cur);
    if (!m0 || !m1) fail("MeetUndefined", "'" + M.id(p) + "' has no meet with a prefix join");
    if (M.rank(*m1) > M.rank(*m0)) out.push_back(b);
    prev = *cur;
  }
  if (M.top() != prev) fail("ChainNotMaximal", "prefix joins stop below the top");
  return out;
}

Geodesic geodesic_modular_lattice(const GradedPoset& M, const Point& x, const Point& y) {
  const auto& cls = M.classification();
  if (!cls.lattice || !cls.modular) fail("NotModular", "structure is not a modular lattice");
  validate_point(M, x);
  validate_point(M, y);
  if (x == y) return finish(two_point(PolyPath::Form::Chain, sparse(x), sparse(y)), SqrtSum(), "P1");
  return lattice_case(M, x, y, *M.join(tau(M, x), tau(M, y)));
}

std::vector<size_t> Frame::host_of(const std::vector<size_t>& local) const {
  std::vector<size_t> out;
  for (size_t i : local) out.push_back(elements[i]);
  return out;
}

Frame distributive_frame(const GradedPoset& L, size_t base, size_t P, size_t Q, const Arch& arch,
                         const std::vector<size_t>& chain_x, const std::vector<size_t>& chain_y) {
  Frame F;
  if (L.classification().median) {
    F.elements = L.by_rank();
    F.poset = sub_poset(L, F.elements);
    F.birkhoff = birkhoff(F.poset);
    return F;
  }
  auto meet = [&](size_t u, size_t v) {
    auto m = L.meet(u, v);
    if (!m) fail("MeetUndefined", "'" + L.id(u) + "' and '" + L.id(v) + "' have no meet");
    return *m;
  };
  std::vector<size_t> second_x{base, P}, second_y{base, Q};
  for (size_t u : arch.elements) {
    second_x.push_back(meet(u, P));
    second_y.push_back(meet(u, Q));
  }
  for (size_t s : chain_y) second_x.push_back(meet(base, s));
  for (size_t s : chain_x) second_y.push_back(meet(base, s));
  auto seeds_b = refine_chain(L, second_x), seeds_c = refine_chain(L, second_y);
  seeds_b.insert(seeds_b.end(), chain_x.begin(), chain_x.end());
  seeds_c.insert(seeds_c.end(), chain_y.begin(), chain_y.end());
  auto B = closure(L, seeds_b), C = closure(L, seeds_c);
  Bits in(L.size());
  for (size_t b : B)
    for (size_t c : C)
      if (auto j = L.join(b, c)) in.set(*j);
  for (size_t u : arch.elements)
    if (!in.test(u)) fail("FrameNotMedian", "frame misses arch member '" + L.id(u) + "'");
  F.elements = in_rank_order(L, in);
  F.poset = sub_poset(L, F.elements);
  if (!F.poset.classification().median || !rank_preserving(L, F.poset, F.elements))
    fail("FrameNotMedian", "joins of the two sublattices do not form a median semilattice");
  F.birkhoff = birkhoff(F.poset);
  return F;
}

Frame distributive_frame(const GradedPoset& L, size_t p, size_t q, const Arch& arch,
                         const std::vector<size_t>& chain_x, const std::vector<size_t>& chain_y) {
  auto m = L.meet(p, q);
  if (!m || m != L.bottom()) fail("NotOrthogonal", "'" + L.id(p) + "' and '" + L.id(q) + "' meet above the bottom");
  return distributive_frame(L, *m, p, q, arch, chain_x, chain_y);
}

Geodesic geodesic(const GradedPoset& L, const Point& x, const Point& y) {
  require_modular_semilattice(L);
  validate_point(L, x);
  validate_point(L, y);
  if (x == y) return finish(two_point(PolyPath::Form::Chain, sparse(x), sparse(y)), SqrtSum(), "P1");
  if (chain_support(L, x, y))
    return finish(two_point(PolyPath::Form::Chain, sparse(x), sparse(y)), SqrtSum(simplex_distance_sq(L, x, y)),
                  "P1");
  const size_t p = tau(L, x), q = tau(L, y);
  if (auto top = L.join(p, q)) return lattice_case(L, x, y, *top);

  auto a = L.join(omega(L, q, p), omega(L, p, q));
  if (!a) fail("NotModularSemilattice", "omega images of '" + L.id(p) + "' and '" + L.id(q) + "' have no join");
  auto P = L.join(p, *a), Q = L.join(q, *a);
  if (!P || !Q || L.meet(*P, *Q) != a) fail("NotOrthogonal", "lifted supports are not orthogonal over the base");
  Point xa = join_point(L, *a, x), ya = join_point(L, *a, y);
  auto candidates = metric_interval(L, *P, *Q).elements;
  Arch best = extreme_arch(L, *a, candidates, xa, ya);

  std::vector<size_t> elems;
  if (L.classification().median) {
    elems = L.by_rank();
  } else {
    Frame F = distributive_frame(L, *a, *P, *Q, best, chain_through(L, x, *P), chain_through(L, y, *Q));
    elems = F.elements;
  }
  Geodesic g = frame_geodesic(L, elems, x, y);
  g.case_label = *a == *L.bottom() ? "P2" : "P4";
  g.arch = std::move(best);
  return g;
}

}  // namespace orthogeo
