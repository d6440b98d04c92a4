#pragma once

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace orthogeo {

using Bits = boost::dynamic_bitset<>;
using Pair = std::pair<std::string, std::string>;

struct Classification {
  bool meet_semilattice = false;
  bool lattice = false;
  bool modular = false;  // modular lattice
  bool modular_semilattice = false;
  bool distributive = false;
  bool median = false;
  bool boolean = false;
};

// Finite graded poset with opaque string ids. Order queries go through
// per-element reachability bitsets; meets and joins are tabulated lazily.
class GradedPoset {
 public:
  GradedPoset() = default;

  // Cover pairs are (lower, upper). Transitive pairs are tolerated and
  // dropped; the grade is fixed per connected component with minimum 0.
  static GradedPoset load(const std::vector<std::string>& elements, const std::vector<Pair>& covers);
  // down[i] must be the reflexive down-set of element i.
  static GradedPoset from_order(std::vector<std::string> ids, std::vector<Bits> down);

  size_t size() const { return ids_.size(); }
  const std::string& id(size_t i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  size_t index(std::string_view id) const;
  std::optional<size_t> find(std::string_view id) const;

  int rank(size_t i) const { return rank_[i]; }
  bool leq(size_t a, size_t b) const { return down_[b].test(a); }
  const Bits& down(size_t i) const { return down_[i]; }
  const Bits& up(size_t i) const { return up_[i]; }
  const std::vector<size_t>& upper_covers(size_t i) const { return upper_[i]; }
  const std::vector<size_t>& lower_covers(size_t i) const { return lower_[i]; }
  std::vector<std::pair<size_t, size_t>> covers() const;
  int height() const;

  std::optional<size_t> meet(size_t a, size_t b) const;
  std::optional<size_t> join(size_t a, size_t b) const;
  std::optional<size_t> bottom() const;
  std::optional<size_t> top() const;

  // Elements ordered by (rank, input position).
  const std::vector<size_t>& by_rank() const { return by_rank_; }

  const Classification& classification() const;

 private:
  struct Cache;
  void finish();
  std::optional<size_t> max_of(const Bits& s) const;
  std::optional<size_t> min_of(const Bits& s) const;
  const Cache& cache() const;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<Bits> down_, up_;
  std::vector<std::vector<size_t>> upper_, lower_;
  std::vector<int> rank_;
  std::vector<size_t> by_rank_;
  std::shared_ptr<Cache> cache_;
};

Classification classify(const GradedPoset& poset);

// Result of query(): element id, integer rank, boolean, or nothing.
struct QueryResult {
  enum class Kind { None, Element, Integer, Boolean } kind = Kind::None;
  std::string element;
  long integer = 0;
  bool boolean = false;
};
QueryResult query(const GradedPoset& poset, std::string_view op, std::string_view p, std::string_view q);

std::vector<size_t> join_irreducibles(const GradedPoset& poset);
std::vector<size_t> interval(const GradedPoset& poset, size_t lo, size_t hi);

// Largest u <= p whose join with a exists.
size_t omega(const GradedPoset& poset, size_t a, size_t p);

struct MetricInterval {
  std::vector<size_t> elements;  // sorted by (rank, position)
  size_t omega_q_p = 0;          // omega_q(p)
  size_t omega_p_q = 0;          // omega_p(q)
};
MetricInterval metric_interval(const GradedPoset& poset, size_t p, size_t q);
// Same set from covering-graph distances.
std::vector<size_t> metric_interval_bfs(const GradedPoset& poset, size_t p, size_t q);
bool in_join_set(const GradedPoset& poset, size_t a, size_t u);

void require_modular_semilattice(const GradedPoset& poset);

struct Graph {
  std::vector<std::string> vertices;
  std::vector<Pair> edges;
};
GradedPoset boolean_gated_sets(const Graph& graph, size_t cap = 20);

// Lexicographically smallest maximal-chain refinement between consecutive
// members of a chain; with prefer_last the largest ids are used instead.
std::vector<size_t> refine_chain(const GradedPoset& poset, std::vector<size_t> chain, bool prefer_last = false);

std::string set_label(const std::vector<std::string>& names);

}  // namespace orthogeo
