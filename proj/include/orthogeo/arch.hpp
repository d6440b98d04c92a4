#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "orthogeo/flow.hpp"
#include "orthogeo/metric.hpp"

namespace orthogeo {

using XiPoint = std::pair<Rational, Rational>;

// Sequence from p to q with its xi values. sets (PIP domains) or elements
// (explicit posets) identify the members; labels are for output.
struct Arch {
  std::vector<std::string> labels;
  std::vector<XiPoint> xi;
  std::vector<Bits> sets;
  std::vector<size_t> elements;

  size_t blocks() const { return xi.empty() ? 0 : xi.size() - 1; }
  Rational x_block_sq(size_t i) const { return xi[i - 1].first - xi[i].first; }   // 1-based
  Rational y_block_sq(size_t i) const { return xi[i].second - xi[i - 1].second; }  // 1-based
};

SqrtSum v_squared(const Arch& arch);  // EmptyBlock
double v_value(const Arch& arch);
bool is_concave(const Arch& arch);    // EmptyBlock
Arch concave_subarch(const Arch& arch);
Arch subarch(const Arch& arch, const std::vector<size_t>& keep);

// Colour classes of a bipartite PIP: B holds supp x, C holds supp y.
struct Bipartition {
  Bits B, C;
};
Bipartition bipartition(const Pip& pip, const BVec& x, const BVec& y);  // NotBipartitePip

XiPoint xi(const BVec& x, const BVec& y, const Bits& ideal);
XiPoint xi(const GradedPoset& poset, size_t base, const Point& x, const Point& y, size_t u);

struct MsipResult {
  Bits ideal;
  Rational objective;
  XiPoint xi;
};

// Maximise w1 * sum_{U} x_v^2 + w2 * sum_{U} y_v^2 over stable ideals;
// ties go to larger y-part, then to the ideal that is smallest when
// membership is compared vertex by vertex in input order (absent first).
MsipResult maximize_xi(const Pip& pip, const Bipartition& part, const BVec& x, const BVec& y, const Rational& w1,
                       const Rational& w2);
MsipResult solve_msip(const Pip& pip, const BVec& x, const BVec& y, const Rational& lambda);
// Plain network s->b ((1-lambda) x_b^2), c->t (lambda y_c^2), infinite b->c and order arcs.
FlowNetwork msip_network(const Pip& pip, const BVec& x, const BVec& y, const Rational& lambda);

struct XiCandidate {
  XiPoint xi;
  size_t key = 0;
};
using XiOracle = std::function<XiCandidate(const Rational& w1, const Rational& w2)>;

// Recursive chord search for the nonzero extreme points of the xi hull
// between the two endpoint candidates, ordered from the x end to the y end.
std::vector<XiCandidate> hull_extremes(const XiOracle& oracle, const XiCandidate& first, const XiCandidate& last);

// Optimal concave arch for a bipartite PIP with supp x = B, supp y = C.
Arch extreme_arch(const Pip& pip, const BVec& x, const BVec& y);
// Optimal concave arch over explicit candidates (exhaustive xi oracle).
Arch extreme_arch(const GradedPoset& poset, size_t base, const std::vector<size_t>& candidates, const Point& x,
                  const Point& y);

}  // namespace orthogeo
