#include <doctest.h>

#include "orthogeo/error.hpp"
#include "orthogeo/flow.hpp"
#include "support.hpp"

using namespace orthogeo;
using support::q;

namespace {

FlowNetwork net(size_t n) {
  FlowNetwork g;
  for (size_t i = 0; i < n; ++i) g.add_node("n" + std::to_string(i));
  g.set_terminals(0, n - 1);
  return g;
}

// Minimum cut by trying every source side.
Rational brute_min_cut(const FlowNetwork& g) {
  const size_t n = g.size();
  Rational best = -1;
  for (unsigned long m = 0; m < (1ul << n); ++m) {
    if (!(m >> g.source() & 1) || (m >> g.sink() & 1)) continue;
    Rational cut = 0;
    bool infinite = false;
    for (const auto& a : g.arcs())
      if ((m >> a.from & 1) && !(m >> a.to & 1)) {
        if (a.cap.infinite) infinite = true;
        else cut += a.cap.value;
      }
    if (!infinite && (best < 0 || cut < best)) best = cut;
  }
  return best;
}

}  // namespace

TEST_CASE("max flow small networks") {
  auto a = net(2);
  a.add_arc(0, 1, Capacity::of(3));
  CHECK(max_flow(a).value == 3);

  auto b = net(3);
  b.add_arc(0, 1, Capacity::of(2));
  b.add_arc(1, 2, Capacity::of(1));
  auto rb = max_flow(b);
  CHECK(rb.value == 1);
  CHECK(rb.source_side == std::vector<size_t>{0, 1});

  auto c = net(2);
  auto rc = max_flow(c);
  CHECK(rc.value == 0);
  CHECK(rc.source_side == std::vector<size_t>{0});
}

TEST_CASE("all-infinite path is reported") {
  auto g = net(3);
  g.add_arc(0, 1, Capacity::inf());
  g.add_arc(1, 2, Capacity::inf());
  try {
    max_flow(g);
    FAIL("expected InfiniteFlow");
  } catch (const Error& e) {
    CHECK(e.code() == "InfiniteFlow");
  }
}

TEST_CASE("max flow equals brute-force min cut on random rational networks") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 150; ++it) {
    size_t n = 3 + rng() % 5;
    auto g = net(n);
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v)
        if (u != v && v != 0 && u != n - 1 && rng() % 3 == 0) {
          if (rng() % 6 == 0 && u != 0) g.add_arc(u, v, Capacity::inf());
          else g.add_arc(u, v, Capacity::of(q(static_cast<long>(rng() % 9 + 1), static_cast<long>(rng() % 4 + 1))));
        }
    Rational want = brute_min_cut(g);
    if (want < 0) continue;
    auto r = max_flow(g);
    CHECK(r.value == want);
    // The reported cut is a minimum cut.
    Rational cut = 0;
    std::vector<bool> side(n, false);
    for (size_t v : r.source_side) side[v] = true;
    for (const auto& a : g.arcs())
      if (side[a.from] && !side[a.to]) cut += a.cap.value;
    CHECK(cut == want);
  }
}

TEST_CASE("dimacs output") {
  auto g = net(2);
  g.add_arc(0, 1, Capacity::of(q(3, 2)));
  std::string d = g.dimacs();
  CHECK(d.find("p max 2 1") != std::string::npos);
  CHECK(d.find("a 1 2 3/2") != std::string::npos);
}
