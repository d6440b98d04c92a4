#pragma once

#include <map>
#include <vector>

#include "orthogeo/pip.hpp"
#include "orthogeo/poset.hpp"
#include "orthogeo/rational.hpp"

namespace orthogeo {

// Formal convex combination over a chain of poset elements.
struct Point {
  std::map<size_t, Rational> coeffs;
  friend bool operator==(const Point& a, const Point& b) { return a.coeffs == b.coeffs; }
};

// b-coordinates indexed by PIP vertex.
using BVec = std::vector<Rational>;

using SparseNum = std::map<size_t, Num>;

// Breakpoints of a piecewise-linear path. Keys of each point are PIP
// vertices (b-coordinate form) or poset elements (chain form).
struct PolyPath {
  enum class Form { BCoords, Chain };
  Form form = Form::BCoords;
  std::vector<Num> times;
  std::vector<SparseNum> points;
};

Point vertex_point(size_t e);
Point make_point(const GradedPoset& poset, const std::map<size_t, Rational>& coeffs);  // InvalidPoint
void validate_point(const GradedPoset& poset, const Point& x);
void validate_bvec(const Pip& pip, const BVec& x);  // InvalidPoint
std::vector<size_t> support_chain(const GradedPoset& poset, const Point& x);
size_t tau(const GradedPoset& poset, const Point& x);
Bits support(const BVec& x);

// Coordinates along the covering refinement of supp x U supp y: entry j is
// the total weight sitting at rank offset > j from the chain bottom.
std::vector<Rational> phi(const GradedPoset& poset, const std::vector<size_t>& chain, const Point& x);
Rational simplex_distance_sq(const GradedPoset& poset, const Point& x, const Point& y, bool prefer_last = false);
double simplex_distance(const GradedPoset& poset, const Point& x, const Point& y);
double simplex_distance(const GradedPoset& poset, const SparseNum& x, const SparseNum& y);

BVec b_coordinates(const Birkhoff& frame, const Point& x);
Point from_b_coordinates(const Birkhoff& frame, const BVec& x);  // SupportOutsideFrame
Rational norm_sq(const BVec& x);
Rational dist_sq(const BVec& x, const BVec& y);
BVec restrict_to(const BVec& x, const Bits& keep);

Point meet_point(const GradedPoset& poset, size_t a, const Point& x);
Point join_point(const GradedPoset& poset, size_t a, const Point& x);  // JoinUndefined
Point omega_point(const GradedPoset& poset, size_t a, const Point& x);
Point combine(const Point& x, const Point& y, const Rational& t);  // (1-t)x + t y, same simplex

// Squared distance from x to the bottom element of its chain.
Rational depth_sq(const GradedPoset& poset, const Point& x, size_t base);

double path_length(const Pip& pip, const PolyPath& path);
double path_length(const GradedPoset& poset, const PolyPath& path);

// Point of a path at time t (linear interpolation between breakpoints).
SparseNum path_at(const PolyPath& path, const Num& t);

}  // namespace orthogeo
