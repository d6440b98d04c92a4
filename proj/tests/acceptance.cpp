// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace orthogeo;
using namespace support;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Fails the outcome when cond is false, keeping the first message.
void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Outcome two_cube_cone() {
  Outcome o;
  Pip pip = edge_bc();
  BVec x = bvec(pip, {{"b", q(1, 2)}}), y = bvec(pip, {{"c", q(1, 2)}});
  auto t0 = Clock::now();
  Geodesic g = geodesic_median(pip, x, y);
  double ms = ms_since(t0);
  expect(o, std::abs(g.length - 1.0) <= 1e-9, "length " + fmt(g.length));
  bool bend = g.path.points.size() == 3 && g.path.points[1].empty() && g.path.times[1] == Num(q(1, 2));
  expect(o, bend, "no bend at the origin at t = 1/2");
  expect(o, ms < 10, "runtime " + fmt(ms) + " ms");
  if (o.ok) o.detail = "length " + fmt(g.length) + ", bend at origin t=1/2, " + fmt(ms) + " ms";
  return o;
}

Outcome euclidean_square() {
  Outcome o;
  Pip pip = empty_square();
  BVec x = bvec(pip, {{"u", q(1, 2)}}), y = bvec(pip, {{"v", q(1, 2)}});
  auto t0 = Clock::now();
  Geodesic g = geodesic_median(pip, x, y);
  double ms = ms_since(t0);
  expect(o, std::abs(g.length - std::sqrt(0.5)) <= 1e-9, "length " + fmt(g.length));
  expect(o, g.path.points.size() == 2, "straight segment expected, got " + std::to_string(g.path.points.size()) + " breakpoints");
  expect(o, ms < 10, "runtime " + fmt(ms) + " ms");
  if (o.ok) o.detail = "length " + fmt(g.length) + ", 2 breakpoints, " + fmt(ms) + " ms";
  return o;
}

Outcome quadrant_instance() {
  Outcome o;
  Pip pip = quadrant();
  BVec x = bvec(pip, {{"b1", q(1)}, {"b2", q(2, 5)}}), y = bvec(pip, {{"c1", q(1, 2)}, {"c2", q(1)}});
  auto t0 = Clock::now();
  Geodesic g = geodesic_median(pip, x, y);
  auto arches = enumerate_arches(pip, x, y);
  double oracle = oracle_distance(pip, x, y, 8);
  double ms = ms_since(t0);
  expect(o, std::abs(g.length - std::sqrt(4.81)) <= 1e-6, "length " + fmt(g.length));
  std::vector<std::string> want{"{b1,b2}", "{b1,c1}", "{c1,c2}"};
  expect(o, g.arch.labels == want, "unexpected engine arch");
  expect(o, !arches.empty() && arches.front().v_sq == g.length_sq, "engine v^2 differs from the enumerated minimum");
  auto census = arch_census(pip, x, y);
  expect(o, census.min_all == g.length_sq, "engine v^2 differs from the brute-force minimum");
  expect(o, oracle >= g.length - 1e-9 && oracle <= 1.03 * g.length, "oracle " + fmt(oracle));
  expect(o, ms < 1000, "runtime " + fmt(ms) + " ms");
  if (o.ok)
    o.detail = "length " + fmt(g.length) + ", v^2 = " + g.length_sq.str() + " = min over " + std::to_string(arches.size()) +
               " arches, oracle(n=8) +" + fmt(100 * (oracle / g.length - 1)) + "%, " + fmt(ms) + " ms";
  return o;
}

Outcome product_instance() {
  Outcome o;
  Pip pip = bcz();
  BVec x = bvec(pip, {{"b", q(1, 2)}, {"z", q(3, 10)}}), y = bvec(pip, {{"c", q(1, 2)}, {"z", q(4, 5)}});
  auto t0 = Clock::now();
  Geodesic g = geodesic_median(pip, x, y);
  double ms = ms_since(t0);
  // Components computed separately: cone part on {b,c}, straight part on z.
  Pip cone = edge_bc();
  double lq = geodesic_median(cone, bvec(cone, {{"b", q(1, 2)}}), bvec(cone, {{"c", q(1, 2)}})).length;
  double lr = 0.5;
  expect(o, std::abs(g.length - std::sqrt(1.25)) <= 1e-9, "length " + fmt(g.length));
  expect(o, std::abs(g.length - std::sqrt(lq * lq + lr * lr)) <= 1e-9, "product identity off");
  expect(o, g.length_sq == SqrtSum(q(5, 4)), "length^2 " + g.length_sq.str());
  expect(o, ms < 100, "runtime " + fmt(ms) + " ms");
  if (o.ok) o.detail = "length " + fmt(g.length) + " = sqrt(" + fmt(lq) + "^2 + " + fmt(lr) + "^2), " + fmt(ms) + " ms";
  return o;
}

Outcome m3_instance() {
  Outcome o;
  GradedPoset L = m3();
  Point x = point(L, {{"a", q(1)}}), y = point(L, {{"b", q(1)}});
  auto t0 = Clock::now();
  Geodesic g = geodesic(L, x, y);
  auto D = distributive_sublattice(L, {refine_chain(L, {L.index("0"), L.index("a"), L.index("1")}),
                                       refine_chain(L, {L.index("0"), L.index("b"), L.index("1")})});
  double oracle = oracle_distance(L, x, y, 8);
  double ms = ms_since(t0);
  expect(o, std::abs(g.length - std::sqrt(2.0)) <= 1e-9, "length " + fmt(g.length));
  expect(o, g.case_label == "P1", "case " + g.case_label);
  expect(o, D.size() == 4 && std::find(D.begin(), D.end(), L.index("c")) == D.end(), "frame is not {0,a,b,1}");
  expect(o, oracle >= g.length - 1e-9 && oracle <= 1.03 * g.length, "oracle " + fmt(oracle));
  expect(o, ms < 1000, "runtime " + fmt(ms) + " ms");
  if (o.ok) o.detail = "length " + fmt(g.length) + " via frame {0,a,b,1}, oracle(n=8) " + fmt(oracle) + ", " + fmt(ms) + " ms";
  return o;
}

Outcome arch_optimality() {
  Outcome o;
  std::mt19937_64 rng(6);
  size_t arches = 0, below = 0, tied = 0, concave_ok = 0;
  int first_below = -1;
  std::string concave_fault;
  auto t0 = Clock::now();
  for (int i = 0; i < 200; ++i) {
    Instance inst = random_bipartite(rng, 8);
    Geodesic g = geodesic_median(inst.pip, inst.x, inst.y);
    auto c = arch_census(inst.pip, inst.x, inst.y);
    arches += c.total;
    int cmp = compare(c.min_all, g.length_sq);
    if (cmp < 0) {
      ++below;
      if (first_below < 0) first_below = i;
    } else if (cmp == 0 && c.argmin_all > 1) {
      ++tied;
    }
    bool concave = c.min_concave == g.length_sq && c.argmin_concave == 1 && c.best_concave == g.arch.sets;
    if (concave) ++concave_ok;
    else if (concave_fault.empty()) concave_fault = "instance " + std::to_string(i) + " disagrees with the concave minimum";
  }
  double ms = ms_since(t0);
  expect(o, below == 0 && tied == 0,
         std::to_string(below) + "/200 instances have a non-concave arch with v^2 strictly below the engine (first: instance " +
             std::to_string(first_below) + "), " + std::to_string(tied) + " more tie; such arches bound their own path space from below only");
  expect(o, concave_ok == 200, concave_fault);
  expect(o, ms < 30000, "runtime " + fmt(ms) + " ms");
  o.detail += "; engine = unique minimiser over concave arches on " + std::to_string(concave_ok) + "/200, " +
              std::to_string(arches) + " arches scored, " + fmt(ms) + " ms";
  return o;
}

Outcome msip_correctness() {
  Outcome o;
  std::mt19937_64 rng(7);
  auto t0 = Clock::now();
  for (int i = 0; i < 200 && o.ok; ++i) {
    Instance inst = random_bipartite(rng, 8);
    Rational lambda = i % 20 == 0 ? q(0) : i % 20 == 1 ? q(1) : q(static_cast<long>(rng() % 21), 20);
    auto got = solve_msip(inst.pip, inst.x, inst.y, lambda);
    auto want = brute_msip(inst.pip, inst.x, inst.y, lambda);
    expect(o, got.objective == want.objective, "instance " + std::to_string(i) + ": objective differs");
    expect(o, got.ideal == want.ideal, "instance " + std::to_string(i) + ": tie-broken ideal differs");
  }
  double ms = ms_since(t0);
  expect(o, ms < 10000, "runtime " + fmt(ms) + " ms");
  if (o.ok) o.detail = "200 triples, exact objective and tie-broken ideal, " + fmt(ms) + " ms";
  return o;
}

bool is_modular_element(const GradedPoset& L, size_t a) {
  for (size_t x = 0; x < L.size(); ++x) {
    auto j = L.join(a, x);
    auto m = L.meet(a, x);
    if (!j || !m || L.rank(a) + L.rank(x) != L.rank(*j) + L.rank(*m)) return false;
  }
  return true;
}

std::vector<GradedPoset> nonexpansive_catalog() {
  std::vector<GradedPoset> hosts = modular_lattice_catalog(6);
  hosts.push_back(ideal_complex(edge_bc()).poset);
  hosts.push_back(ideal_complex(quadrant()).poset);
  hosts.push_back(ideal_complex(bcz()).poset);
  hosts.push_back(ideal_complex(Pip::make({"u", "v", "w"}, {{"u", "w"}, {"v", "w"}}, {{"u", "v"}})).poset);
  return hosts;
}

Outcome nonexpansive_suite() {
  Outcome o;
  std::mt19937_64 rng(8);
  auto hosts = nonexpansive_catalog();
  double worst_pyth = 0;
  size_t omega_checks = 0, modular_checks = 0;
  auto t0 = Clock::now();
  for (int i = 0; i < 1000 && o.ok; ++i) {
    const GradedPoset& L = hosts[rng() % hosts.size()];
    auto chain = random_maximal_chain(L, rng);
    Point x = random_chain_point(L, rng, chain), y = random_chain_point(L, rng, chain);
    Rational d = simplex_distance_sq(L, x, y);
    size_t a = rng() % L.size();
    Rational dw = simplex_distance_sq(L, omega_point(L, a, x), omega_point(L, a, y));
    expect(o, dw <= d, "omega_" + L.id(a) + " expands a pair");
    ++omega_checks;
    std::vector<size_t> modular;
    for (size_t e = 0; e < L.size(); ++e)
      if (is_modular_element(L, e)) modular.push_back(e);
    size_t m = modular[rng() % modular.size()];
    Rational dm = simplex_distance_sq(L, meet_point(L, m, x), meet_point(L, m, y));
    Rational dj = simplex_distance_sq(L, join_point(L, m, x), join_point(L, m, y));
    expect(o, dm <= d && dj <= d, "meet or join with modular '" + L.id(m) + "' expands a pair");
    worst_pyth = std::max(worst_pyth, std::abs(Rational(d - dm - dj).get_d()));
    expect(o, worst_pyth <= 1e-10, "Pythagorean identity off by " + fmt(worst_pyth));
    ++modular_checks;
  }
  double ms = ms_since(t0);
  if (o.ok)
    o.detail = std::to_string(hosts.size()) + " hosts, " + std::to_string(modular_checks) + " modular and " +
               std::to_string(omega_checks) + " omega pairs, max Pythagorean gap " + fmt(worst_pyth) + ", " +
               fmt(ms) + " ms";
  return o;
}

Outcome supermodular_suite() {
  Outcome o;
  std::mt19937_64 rng(9);
  auto t0 = Clock::now();
  auto catalog = modular_lattice_catalog(8);
  size_t triples = 0;
  for (const auto& L : catalog) {
    size_t top = *L.top(), bot = *L.bottom();
    for (int s = 0; s < 3 && o.ok; ++s) {
      auto chain = random_maximal_chain(L, rng);
      Point x = random_chain_point(L, rng, chain);
      // Force top into the support with positive weight.
      std::map<size_t, Rational> c;
      for (const auto& [e, w] : x.coeffs) c[e] += w / 2;
      c[top] += q(1, 2);
      x = make_point(L, c);
      auto f = [&](size_t a) { return depth_sq(L, meet_point(L, a, x), bot); };
      for (size_t a = 0; a < L.size(); ++a) {
        for (size_t b = 0; b < L.size(); ++b) {
          ++triples;
          expect(o, f(a) + f(b) <= f(*L.meet(a, b)) + f(*L.join(a, b)), "supermodularity fails");
        }
        for (size_t up : L.upper_covers(a)) expect(o, f(a) < f(up), "d(x ^ .)^2 not increasing along a cover");
      }
    }
  }
  double ms = ms_since(t0);
  if (o.ok)
    o.detail = std::to_string(catalog.size()) + " modular lattices (<= 8 elements), " + std::to_string(triples) +
               " pairs checked exactly, " + fmt(ms) + " ms";
  return o;
}

Outcome cat0_suite() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<std::pair<std::string, Pip>> hosts{{"edge-bc", edge_bc()}, {"quadrant", quadrant()}, {"bcz", bcz()}};
  std::string detail;
  for (const auto& [name, pip] : hosts) {
    auto rep = cat0_check(pip, 200, 1);
    expect(o, rep.max_violation <= 1e-6, name + " violation " + fmt(rep.max_violation));
    detail += name + " " + fmt(rep.max_violation) + "; ";
  }
  double ms = ms_since(t0);
  if (o.ok) o.detail = "max violations: " + detail + fmt(ms) + " ms";
  return o;
}

Outcome polygon_suite() {
  Outcome o;
  std::mt19937_64 rng(11);
  auto t0 = Clock::now();
  int done = 0, tries = 0;
  while (done < 100 && o.ok && tries < 10000) {
    ++tries;
    Rational kappa = q(1 + static_cast<long>(rng() % 8), 4), lam = q(1 + static_cast<long>(rng() % 8), 4);
    std::vector<long> xs(63), ys(63);
    for (long i = 0; i < 63; ++i) xs[i] = ys[i] = i + 1;
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    size_t n = 2 + rng() % 6;
    std::vector<XiPoint> pts;
    for (size_t i = 0; i < n; ++i) pts.emplace_back(kappa * q(xs[i], 64), lam * q(ys[i], 64));
    auto hull = [&](const std::vector<XiPoint>& inner) {
      std::vector<XiPoint> all{{kappa, 0}, {0, lam}};
      all.insert(all.end(), inner.begin(), inner.end());
      std::sort(all.begin(), all.end(), [](const XiPoint& a, const XiPoint& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
      });
      Arch arch;
      for (const auto& p : all) {
        arch.labels.push_back("");
        arch.xi.push_back(p);
      }
      return concave_subarch(arch);
    };
    std::vector<XiPoint> sub(pts.begin(), pts.begin() + static_cast<long>(rng() % n));
    Arch big = hull(pts), small = hull(sub);
    if (big.xi == small.xi) continue;
    ++done;
    int c = compare(v_squared(small), v_squared(big));
    expect(o, c > 0, "nested pair " + std::to_string(done) + ": v(Q) <= v(Q')");
  }
  expect(o, done == 100, "only " + std::to_string(done) + " nested pairs generated");
  double ms = ms_since(t0);
  if (o.ok) o.detail = "100 nested pairs, strict in exact arithmetic, " + fmt(ms) + " ms";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"two-cube cone", two_cube_cone},
      {"Euclidean square", euclidean_square},
      {"tree-space quadrant", quadrant_instance},
      {"semi-bipartite product", product_instance},
      {"M3 via Dedekind-Birkhoff frame", m3_instance},
      {"randomized arch optimality", arch_optimality},
      {"parametric-flow correctness", msip_correctness},
      {"nonexpansiveness", nonexpansive_suite},
      {"supermodularity", supermodular_suite},
      {"CAT(0) convexity", cat0_suite},
      {"polygon monotonicity", polygon_suite},
  };
  int failed = 0;
  auto t0 = Clock::now();
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu (%s): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("total %.0f ms, %d failed\n", ms_since(t0), failed);
  return failed == 0 ? 0 : 1;
}
