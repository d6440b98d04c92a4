#include "orthogeo/metric.hpp"

#include <algorithm>
#include <cmath>

#include "orthogeo/error.hpp"

namespace orthogeo {

namespace {

std::vector<size_t> sorted_chain(const GradedPoset& poset, std::vector<size_t> elems) {
  std::sort(elems.begin(), elems.end(), [&](size_t a, size_t b) {
    if (poset.rank(a) != poset.rank(b)) return poset.rank(a) < poset.rank(b);
    return a < b;
  });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (size_t i = 1; i < elems.size(); ++i)
    if (!poset.leq(elems[i - 1], elems[i]))
      fail("NotCommonSimplex", "'" + poset.id(elems[i - 1]) + "' and '" + poset.id(elems[i]) + "' are incomparable");
  return elems;
}

}  // namespace

Point vertex_point(size_t e) {
  Point p;
  p.coeffs.emplace(e, Rational(1));
  return p;
}

void validate_point(const GradedPoset& poset, const Point& x) {
  Rational total = 0;
  std::vector<size_t> elems;
  for (const auto& [e, c] : x.coeffs) {
    if (e >= poset.size()) fail("InvalidPoint", "coefficient on unknown element");
    if (sgn(c) <= 0) fail("InvalidPoint", "nonpositive coefficient on '" + poset.id(e) + "'");
    total += c;
    elems.push_back(e);
  }
  if (total != 1) fail("InvalidPoint", "coefficients sum to " + to_string(total) + ", not 1");
  try {
    sorted_chain(poset, elems);
  } catch (const Error&) {
    fail("InvalidPoint", "support is not a chain");
  }
}

Point make_point(const GradedPoset& poset, const std::map<size_t, Rational>& coeffs) {
  Point p;
  for (const auto& [e, c] : coeffs) {
    if (sgn(c) < 0) fail("InvalidPoint", "negative coefficient on '" + poset.id(e) + "'");
    if (sgn(c) > 0) p.coeffs.emplace(e, c);
  }
  validate_point(poset, p);
  return p;
}

void validate_bvec(const Pip& pip, const BVec& x) {
  if (x.size() != pip.size()) fail("InvalidPoint", "b-coordinate vector has wrong length");
  for (size_t v = 0; v < x.size(); ++v) {
    if (sgn(x[v]) < 0 || x[v] > 1) fail("InvalidPoint", "b-coordinate of '" + pip.vertex(v) + "' outside [0,1]");
    for (size_t w = 0; w < x.size(); ++w)
      if (v != w && pip.leq(v, w) && x[v] < x[w])
        fail("InvalidPoint", "b-coordinates decrease along " + pip.vertex(v) + " <= " + pip.vertex(w));
  }
  if (!pip.is_stable_ideal(support(x))) fail("InvalidPoint", "b-coordinate support is not a stable ideal");
}

std::vector<size_t> support_chain(const GradedPoset& poset, const Point& x) {
  std::vector<size_t> elems;
  for (const auto& [e, c] : x.coeffs) elems.push_back(e);
  return sorted_chain(poset, elems);
}

size_t tau(const GradedPoset& poset, const Point& x) {
  auto chain = support_chain(poset, x);
  if (chain.empty()) fail("InvalidPoint", "empty point");
  return chain.back();
}

Bits support(const BVec& x) {
  Bits s(x.size());
  for (size_t v = 0; v < x.size(); ++v)
    if (sgn(x[v]) != 0) s.set(v);
  return s;
}

std::vector<Rational> phi(const GradedPoset& poset, const std::vector<size_t>& chain, const Point& x) {
  if (chain.empty()) return {};
  const int base = poset.rank(chain.front());
  const int len = poset.rank(chain.back()) - base;
  std::vector<Rational> out(static_cast<size_t>(len), Rational(0));
  for (const auto& [e, c] : x.coeffs) {
    if (std::find(chain.begin(), chain.end(), e) == chain.end())
      fail("NotCommonSimplex", "'" + poset.id(e) + "' is off the chain");
    int off = poset.rank(e) - base;
    for (int j = 0; j < off; ++j) out[static_cast<size_t>(j)] += c;
  }
  return out;
}

Rational simplex_distance_sq(const GradedPoset& poset, const Point& x, const Point& y, bool prefer_last) {
  std::vector<size_t> elems;
  for (const auto& [e, c] : x.coeffs) elems.push_back(e);
  for (const auto& [e, c] : y.coeffs) elems.push_back(e);
  auto chain = refine_chain(poset, sorted_chain(poset, elems), prefer_last);
  auto fx = phi(poset, chain, x), fy = phi(poset, chain, y);
  Rational s = 0;
  for (size_t j = 0; j < fx.size(); ++j) {
    Rational d = fx[j] - fy[j];
    s += d * d;
  }
  return s;
}

double simplex_distance(const GradedPoset& poset, const Point& x, const Point& y) {
  return std::sqrt(simplex_distance_sq(poset, x, y).get_d());
}

double simplex_distance(const GradedPoset& poset, const SparseNum& x, const SparseNum& y) {
  std::vector<size_t> elems;
  for (const auto& [e, c] : x) elems.push_back(e);
  for (const auto& [e, c] : y) elems.push_back(e);
  auto chain = sorted_chain(poset, elems);
  if (chain.empty()) return 0.0;
  const int base = poset.rank(chain.front());
  const int len = poset.rank(chain.back()) - base;
  std::vector<Num> fx(static_cast<size_t>(len)), fy(static_cast<size_t>(len));
  auto fill = [&](const SparseNum& p, std::vector<Num>& f) {
    for (const auto& [e, c] : p)
      for (int j = 0; j < poset.rank(e) - base; ++j) f[static_cast<size_t>(j)] = f[static_cast<size_t>(j)] + c;
  };
  fill(x, fx);
  fill(y, fy);
  Num s = 0;
  for (size_t j = 0; j < fx.size(); ++j) {
    Num d = fx[j] - fy[j];
    s = s + d * d;
  }
  return Num::sqrt(s).value();
}

BVec b_coordinates(const Birkhoff& frame, const Point& x) {
  BVec out(frame.pip.size(), Rational(0));
  for (const auto& [e, c] : x.coeffs) {
    if (e >= frame.ideal_of.size()) fail("SupportOutsideFrame", "point support lies outside the frame");
    const Bits& I = frame.ideal_of[e];
    for (size_t v = I.find_first(); v != Bits::npos; v = I.find_next(v)) out[v] += c;
  }
  return out;
}

Point from_b_coordinates(const Birkhoff& frame, const BVec& x) {
  validate_bvec(frame.pip, x);
  std::vector<Rational> levels;
  for (const auto& v : x)
    if (sgn(v) > 0) levels.push_back(v);
  std::sort(levels.begin(), levels.end(), [](const Rational& a, const Rational& b) { return a > b; });
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  Point p;
  auto element = [&](const Bits& I) {
    auto it = frame.element_of.find(I);
    if (it == frame.element_of.end()) fail("SupportOutsideFrame", "ideal " + frame.pip.label(I) + " has no element");
    return it->second;
  };
  Bits empty(x.size());
  if (levels.empty() || levels.front() < 1) {
    Rational w = levels.empty() ? Rational(1) : Rational(1 - levels.front());
    p.coeffs[element(empty)] += w;
  }
  for (size_t k = 0; k < levels.size(); ++k) {
    Bits I(x.size());
    for (size_t v = 0; v < x.size(); ++v)
      if (x[v] >= levels[k]) I.set(v);
    Rational next = k + 1 < levels.size() ? levels[k + 1] : Rational(0);
    p.coeffs[element(I)] += levels[k] - next;
  }
  return p;
}

Rational norm_sq(const BVec& x) {
  Rational s = 0;
  for (const auto& v : x) s += v * v;
  return s;
}

Rational dist_sq(const BVec& x, const BVec& y) {
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    Rational d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

BVec restrict_to(const BVec& x, const Bits& keep) {
  BVec out(x.size(), Rational(0));
  for (size_t v = 0; v < x.size(); ++v)
    if (keep.test(v)) out[v] = x[v];
  return out;
}

Point meet_point(const GradedPoset& poset, size_t a, const Point& x) {
  Point out;
  for (const auto& [e, c] : x.coeffs) {
    auto m = poset.meet(a, e);
    if (!m) fail("MeetUndefined", "'" + poset.id(a) + "' and '" + poset.id(e) + "' have no meet");
    out.coeffs[*m] += c;
  }
  return out;
}

Point join_point(const GradedPoset& poset, size_t a, const Point& x) {
  Point out;
  for (const auto& [e, c] : x.coeffs) {
    auto j = poset.join(a, e);
    if (!j) fail("JoinUndefined", "'" + poset.id(a) + "' and '" + poset.id(e) + "' have no join");
    out.coeffs[*j] += c;
  }
  return out;
}

Point omega_point(const GradedPoset& poset, size_t a, const Point& x) {
  Point out;
  for (const auto& [e, c] : x.coeffs) out.coeffs[omega(poset, a, e)] += c;
  return out;
}

Point combine(const Point& x, const Point& y, const Rational& t) {
  Point out;
  for (const auto& [e, c] : x.coeffs) out.coeffs[e] += (1 - t) * c;
  for (const auto& [e, c] : y.coeffs) out.coeffs[e] += t * c;
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = sgn(it->second) == 0 ? out.coeffs.erase(it) : std::next(it);
  return out;
}

Rational depth_sq(const GradedPoset& poset, const Point& x, size_t base) {
  return simplex_distance_sq(poset, x, vertex_point(base));
}

double path_length(const Pip& pip, const PolyPath& path) {
  if (path.form != PolyPath::Form::BCoords) fail("InvalidPath", "expected a b-coordinate path");
  double total = 0;
  for (size_t i = 0; i + 1 < path.points.size(); ++i) {
    Bits s(pip.size());
    Num acc = 0;
    const auto& a = path.points[i];
    const auto& b = path.points[i + 1];
    for (const auto& [v, c] : a)
      if (c.value() != 0 || (c.exact() && sgn(c.rational()) != 0)) s.set(v);
    for (const auto& [v, c] : b)
      if (c.value() != 0 || (c.exact() && sgn(c.rational()) != 0)) s.set(v);
    if (!pip.is_stable_ideal(s)) fail("NotCommonSimplex", "consecutive breakpoints leave every stable ideal");
    for (size_t v = s.find_first(); v != Bits::npos; v = s.find_next(v)) {
      Num x = a.count(v) ? a.at(v) : Num(0), y = b.count(v) ? b.at(v) : Num(0);
      Num d = x - y;
      acc = acc + d * d;
    }
    total += Num::sqrt(acc).value();
  }
  return total;
}

double path_length(const GradedPoset& poset, const PolyPath& path) {
  if (path.form != PolyPath::Form::Chain) fail("InvalidPath", "expected a chain-form path");
  double total = 0;
  for (size_t i = 0; i + 1 < path.points.size(); ++i) total += simplex_distance(poset, path.points[i], path.points[i + 1]);
  return total;
}

SparseNum path_at(const PolyPath& path, const Num& t) {
  const auto& T = path.times;
  if (T.empty()) return {};
  if (!(T.front() < t)) return path.points.front();
  if (!(t < T.back())) return path.points.back();
  size_t i = 0;
  while (i + 1 < T.size() && !(t < T[i + 1])) ++i;
  if (t == T[i]) return path.points[i];
  Num s = (t - T[i]) / (T[i + 1] - T[i]);
  SparseNum out;
  const auto& a = path.points[i];
  const auto& b = path.points[i + 1];
  for (const auto& [k, c] : a) out[k] = out[k] + (Num(1) - s) * c;
  for (const auto& [k, c] : b) out[k] = out[k] + s * c;
  for (auto it = out.begin(); it != out.end();)
    it = (it->second.exact() ? sgn(it->second.rational()) == 0 : it->second.value() == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace orthogeo
