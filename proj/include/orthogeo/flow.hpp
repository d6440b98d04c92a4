#pragma once

#include <string>
#include <vector>

#include "orthogeo/rational.hpp"

namespace orthogeo {

struct Capacity {
  bool infinite = false;
  Rational value = 0;
  static Capacity inf() { return {true, 0}; }
  static Capacity of(const Rational& v) { return {false, v}; }
};

class FlowNetwork {
 public:
  struct Arc {
    size_t from, to;
    Capacity cap;
  };

  FlowNetwork() = default;
  size_t add_node(std::string name);
  // Parallel arcs are merged by adding capacities.
  void add_arc(size_t from, size_t to, Capacity cap);
  void set_terminals(size_t s, size_t t) {
    source_ = s;
    sink_ = t;
  }

  size_t size() const { return names_.size(); }
  size_t source() const { return source_; }
  size_t sink() const { return sink_; }
  const std::string& name(size_t v) const { return names_[v]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // "p max N M", node lines, then "a u v cap" (1-based; "inf" for the sentinel).
  std::string dimacs() const;

 private:
  std::vector<std::string> names_;
  std::vector<Arc> arcs_;
  size_t source_ = 0, sink_ = 0;
};

struct FlowResult {
  Rational value;
  std::vector<size_t> source_side;  // minimal minimum cut, ascending
  std::vector<Rational> arc_flow;   // per arc, in insertion order
};

// Shortest augmenting paths over exact rationals. Throws InfiniteFlow when
// an s-t path uses only infinite arcs.
FlowResult max_flow(const FlowNetwork& net);

}  // namespace orthogeo
