#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "orthogeo/poset.hpp"

namespace orthogeo {

// Poset with inconsistent pairs: a graph plus a compatible partial order.
class Pip {
 public:
  Pip() = default;
  // order pairs (u, v) mean u <= v; the closure is taken transitively.
  static Pip make(std::vector<std::string> vertices, const std::vector<Pair>& edges, const std::vector<Pair>& order);

  size_t size() const { return vertices_.size(); }
  const std::string& vertex(size_t i) const { return vertices_[i]; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  size_t index(std::string_view id) const;
  std::optional<size_t> find(std::string_view id) const;

  bool edge(size_t u, size_t v) const { return adj_[u].test(v); }
  bool leq(size_t u, size_t v) const { return below_[v].test(u); }
  const Bits& neighbors(size_t v) const { return adj_[v]; }
  const Bits& below(size_t v) const { return below_[v]; }  // reflexive
  const Bits& above(size_t v) const { return above_[v]; }  // reflexive

  std::vector<Pair> edge_list() const;
  std::vector<Pair> order_covers() const;
  bool is_stable_ideal(const Bits& s) const;
  // Vertices in an order-compatible sequence (every vertex after all below it).
  const std::vector<size_t>& linear_extension() const { return linear_; }
  Pip induced(const Bits& keep) const;
  std::string label(const Bits& s) const;

 private:
  std::vector<std::string> vertices_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<Bits> adj_, below_, above_;
  std::vector<size_t> linear_;
};

std::vector<Bits> enumerate_stable_ideals(const Pip& pip, size_t cap = 1000000);
GradedPoset stable_ideals(const Pip& pip, size_t cap = 1000000);

struct Birkhoff {
  Pip pip;                              // vertices are the join-irreducibles
  std::vector<size_t> vertex_element;   // pip vertex -> poset element
  std::vector<Bits> ideal_of;           // poset element -> stable ideal
  std::map<Bits, size_t> element_of;    // stable ideal -> poset element
};
Birkhoff birkhoff(const GradedPoset& poset);

}  // namespace orthogeo
