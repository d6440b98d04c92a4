#include "orthogeo/pip.hpp"

#include <algorithm>
#include <deque>

#include "orthogeo/config.hpp"
#include "orthogeo/error.hpp"

namespace orthogeo {

Pip Pip::make(std::vector<std::string> vertices, const std::vector<Pair>& edges, const std::vector<Pair>& order) {
  Pip G;
  G.vertices_ = std::move(vertices);
  const size_t n = G.vertices_.size();
  for (size_t i = 0; i < n; ++i)
    if (!G.index_.emplace(G.vertices_[i], i).second) fail("InvalidInput", "duplicate vertex '" + G.vertices_[i] + "'");
  G.adj_.assign(n, Bits(n));
  for (const auto& [u, v] : edges) {
    size_t a = G.index(u), b = G.index(v);
    if (a == b) fail("InvalidPip", "loop at '" + u + "'");
    G.adj_[a].set(b);
    G.adj_[b].set(a);
  }
  // Transitive closure of the order, vertex by vertex.
  G.below_.assign(n, Bits(n));
  for (size_t i = 0; i < n; ++i) G.below_[i].set(i);
  std::vector<std::vector<size_t>> succ(n);
  std::vector<size_t> indeg(n, 0);
  for (const auto& [u, v] : order) {
    size_t a = G.index(u), b = G.index(v);
    if (a == b) continue;
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::deque<size_t> ready;
  for (size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    size_t v = ready.front();
    ready.pop_front();
    G.linear_.push_back(v);
    for (size_t w : succ[v]) {
      G.below_[w] |= G.below_[v];
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (G.linear_.size() != n) fail("CycleError", "order relation contains a cycle");
  G.above_.assign(n, Bits(n));
  for (size_t v = 0; v < n; ++v)
    for (size_t u = G.below_[v].find_first(); u != Bits::npos; u = G.below_[v].find_next(u)) G.above_[u].set(v);
  for (size_t u = 0; u < n; ++u)
    for (size_t v = G.adj_[u].find_first(); v != Bits::npos; v = G.adj_[u].find_next(v)) {
      if (G.leq(u, v) || G.leq(v, u))
        fail("InvalidPip", "edge " + G.vertices_[u] + "-" + G.vertices_[v] + " joins comparable vertices");
      for (size_t w = G.above_[u].find_first(); w != Bits::npos; w = G.above_[u].find_next(w))
        if (!G.adj_[w].test(v))
          fail("InvalidPip", "edge " + G.vertices_[u] + "-" + G.vertices_[v] + " and " + G.vertices_[u] +
                                 " <= " + G.vertices_[w] + " require edge " + G.vertices_[w] + "-" + G.vertices_[v]);
    }
  return G;
}

size_t Pip::index(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) fail("UnknownElement", "no vertex '" + std::string(id) + "'");
  return it->second;
}

std::optional<size_t> Pip::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Pair> Pip::edge_list() const {
  std::vector<Pair> out;
  for (size_t u = 0; u < size(); ++u)
    for (size_t v = adj_[u].find_next(u); v != Bits::npos; v = adj_[u].find_next(v))
      out.emplace_back(vertices_[u], vertices_[v]);
  return out;
}

std::vector<Pair> Pip::order_covers() const {
  std::vector<Pair> out;
  for (size_t v = 0; v < size(); ++v) {
    Bits strict = below_[v];
    strict.reset(v);
    for (size_t u = strict.find_first(); u != Bits::npos; u = strict.find_next(u))
      if ((above_[u] & strict).count() == 1) out.emplace_back(vertices_[u], vertices_[v]);
  }
  return out;
}

bool Pip::is_stable_ideal(const Bits& s) const {
  for (size_t v = s.find_first(); v != Bits::npos; v = s.find_next(v)) {
    if (!below_[v].is_subset_of(s)) return false;
    if (adj_[v].intersects(s)) return false;
  }
  return true;
}

Pip Pip::induced(const Bits& keep) const {
  std::vector<std::string> names;
  for (size_t v = 0; v < size(); ++v)
    if (keep.test(v)) names.push_back(vertices_[v]);
  std::vector<Pair> edges, order;
  for (size_t u = 0; u < size(); ++u) {
    if (!keep.test(u)) continue;
    for (size_t v = 0; v < size(); ++v) {
      if (!keep.test(v) || u == v) continue;
      if (u < v && adj_[u].test(v)) edges.emplace_back(vertices_[u], vertices_[v]);
      if (leq(u, v)) order.emplace_back(vertices_[u], vertices_[v]);
    }
  }
  return make(std::move(names), edges, order);
}

std::string Pip::label(const Bits& s) const {
  std::vector<std::string> names;
  for (size_t v = s.find_first(); v != Bits::npos; v = s.find_next(v)) names.push_back(vertices_[v]);
  return set_label(names);
}

std::vector<Bits> enumerate_stable_ideals(const Pip& pip, size_t cap) {
  const size_t limit = effective_cap(cap);
  const auto& lin = pip.linear_extension();
  std::vector<Bits> out;
  Bits cur(pip.size());
  // Decide vertices in linear-extension order; a vertex may enter only when
  // everything below it is in and it has no neighbour inside.
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == lin.size()) {
      if (out.size() >= limit) fail("SizeCap", "more than " + std::to_string(limit) + " stable ideals");
      out.push_back(cur);
      return;
    }
    size_t v = lin[k];
    self(self, k + 1);
    Bits strict = pip.below(v);
    strict.reset(v);
    if (strict.is_subset_of(cur) && !pip.neighbors(v).intersects(cur)) {
      cur.set(v);
      self(self, k + 1);
      cur.reset(v);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
    size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (size_t i = 0; i < a.size(); ++i)
      if (a.test(i) != b.test(i)) return a.test(i) && !b.test(i);
    return false;
  });
  return out;
}

GradedPoset stable_ideals(const Pip& pip, size_t cap) {
  auto ideals = enumerate_stable_ideals(pip, cap);
  std::map<Bits, size_t> where;
  std::vector<std::string> ids;
  for (size_t i = 0; i < ideals.size(); ++i) {
    where.emplace(ideals[i], i);
    ids.push_back(pip.label(ideals[i]));
  }
  std::vector<Pair> covers;
  for (size_t i = 0; i < ideals.size(); ++i) {
    const Bits& I = ideals[i];
    for (size_t v = I.find_first(); v != Bits::npos; v = I.find_next(v)) {
      Bits J = I;
      J.reset(v);
      auto it = where.find(J);
      if (it != where.end()) covers.emplace_back(ids[it->second], ids[i]);
    }
  }
  return GradedPoset::load(ids, covers);
}

Birkhoff birkhoff(const GradedPoset& poset) {
  if (!poset.classification().median) fail("NotMedian", "structure is neither distributive nor median");
  Birkhoff B;
  B.vertex_element = join_irreducibles(poset);
  const size_t k = B.vertex_element.size();
  std::vector<std::string> names;
  for (size_t e : B.vertex_element) names.push_back(poset.id(e));
  std::vector<Pair> edges, order;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      size_t a = B.vertex_element[i], b = B.vertex_element[j];
      if (i < j && !poset.join(a, b)) edges.emplace_back(names[i], names[j]);
      if (poset.leq(a, b)) order.emplace_back(names[i], names[j]);
    }
  B.pip = Pip::make(names, edges, order);
  B.ideal_of.assign(poset.size(), Bits(k));
  for (size_t e = 0; e < poset.size(); ++e) {
    for (size_t i = 0; i < k; ++i)
      if (poset.leq(B.vertex_element[i], e)) B.ideal_of[e].set(i);
    B.element_of.emplace(B.ideal_of[e], e);
  }
  return B;
}

}  // namespace orthogeo
