#pragma once

#include <string>
#include <vector>

#include "orthogeo/arch.hpp"
#include "orthogeo/metric.hpp"

namespace orthogeo {

struct Geodesic {
  PolyPath path;
  double length = 0;
  SqrtSum length_sq;  // exact square of the length
  std::string case_label;
  Arch arch;          // optimal arch when the bipartite part is nonempty
};

// Owen's formula along a concave arch whose first and last members are
// supp x and supp y. Constant speed; breakpoints at ||X_i||/(||X_i||+||Y_i||).
PolyPath owen_path(const Pip& pip, const Arch& arch, const BVec& x, const BVec& y);  // NotConcave, SupportMismatch

// Unique geodesic in the orthoscheme complex of the stable ideals of pip,
// with both endpoints given in b-coordinates.
Geodesic geodesic_median(const Pip& pip, const BVec& x, const BVec& y);  // InvalidPoint

// Sublattice generated by the given chains, checked for distributivity.
std::vector<size_t> distributive_sublattice(const GradedPoset& M,
                                            const std::vector<std::vector<size_t>>& chains);  // NotModular

// Members b_i of the ordered join-irreducibles whose prefix join strictly
// raises the meet with p.
std::vector<size_t> birkhoff_projection(const GradedPoset& M, const std::vector<size_t>& irreducibles,
                                        size_t p);  // ChainNotMaximal

Geodesic geodesic_modular_lattice(const GradedPoset& M, const Point& x, const Point& y);  // NotModular

// Median subsemilattice of the host carrying the geodesic, with its PIP.
struct Frame {
  std::vector<size_t> elements;  // host elements, frame order
  GradedPoset poset;
  Birkhoff birkhoff;
  std::vector<size_t> host_of(const std::vector<size_t>& local) const;
};

// Frame over the filter of base for the orthogonal pair (P, Q) = (tau x, tau y) v base.
Frame distributive_frame(const GradedPoset& L, size_t base, size_t P, size_t Q, const Arch& arch,
                         const std::vector<size_t>& chain_x, const std::vector<size_t>& chain_y);
// Orthogonal case: p ^ q must be the bottom.
Frame distributive_frame(const GradedPoset& L, size_t p, size_t q, const Arch& arch,
                         const std::vector<size_t>& chain_x, const std::vector<size_t>& chain_y);  // NotOrthogonal

Geodesic geodesic(const GradedPoset& L, const Point& x, const Point& y);  // NotModularSemilattice, InvalidPoint

}  // namespace orthogeo
