#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthogeo/arch.hpp"
#include "orthogeo/metric.hpp"

namespace orthogeo {

// Stable ideals of a PIP as a graded poset, with the identity b-coordinate frame.
struct IdealComplex {
  GradedPoset poset;
  Birkhoff frame;
};
IdealComplex ideal_complex(const Pip& pip, size_t cap = 1000000);

// Shortest path through the grid of phi-lattice points at step 1/n inside
// every maximal simplex, plus x and y. An upper bound on the distance.
double oracle_distance(const GradedPoset& L, const Point& x, const Point& y, int n, size_t cap = 200000);  // SizeCap
double oracle_distance(const Pip& pip, const BVec& x, const BVec& y, int n, size_t cap = 200000);

struct ArchValue {
  Arch arch;
  SqrtSum v_sq;
};

// Every arch from supp x to supp y over the stable ideals of pip, sorted by v^2.
std::vector<ArchValue> enumerate_arches(const Pip& pip, const BVec& x, const BVec& y, size_t cap = 4096);
// Every arch from P to Q among the candidates, xi measured from base.
std::vector<ArchValue> enumerate_arches(const GradedPoset& L, size_t base, size_t P, size_t Q,
                                        const std::vector<size_t>& candidates, const Point& x, const Point& y,
                                        size_t cap = 4096);

struct Cat0Report {
  size_t samples = 0;
  double max_violation = 0;
  size_t worst_sample = 0;
  double worst_t = 0;
  std::string worst_detail;  // endpoints and probe of the worst sample
};

// Samples probe x and geodesic y->z, checks 1-strong convexity of d(x, .)^2
// at t = 1/8, ..., 7/8. Violations are reported, never thrown.
Cat0Report cat0_check(const Pip& host, size_t samples, uint64_t seed);
Cat0Report cat0_check(const GradedPoset& host, size_t samples, uint64_t seed);

// Random points used by the sampler; deterministic in the generator state.
BVec random_bvec(const Pip& pip, uint64_t seed);
Point random_point(const GradedPoset& L, uint64_t seed);

}  // namespace orthogeo
