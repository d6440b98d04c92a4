#include "orthogeo/poset.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

#include "orthogeo/config.hpp"
#include "orthogeo/error.hpp"

namespace orthogeo {

struct GradedPoset::Cache {
  std::once_flag tables_once;
  bool have_tables = false;
  std::vector<int> meet, join;
  std::once_flag class_once;
  Classification cls;
};

namespace {

constexpr size_t kTableLimit = 2048;

}  // namespace

GradedPoset GradedPoset::load(const std::vector<std::string>& elements, const std::vector<Pair>& covers) {
  GradedPoset P;
  P.ids_ = elements;
  for (size_t i = 0; i < elements.size(); ++i)
    if (!P.index_.emplace(elements[i], i).second) fail("InvalidInput", "duplicate element '" + elements[i] + "'");
  const size_t n = elements.size();
  std::vector<std::vector<size_t>> succ(n);
  std::vector<size_t> indeg(n, 0);
  for (const auto& [lo, hi] : covers) {
    size_t a = P.index(lo), b = P.index(hi);
    if (a == b) fail("CycleError", "cover (" + lo + "," + hi + ") is a loop");
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::vector<size_t> order;
  std::deque<size_t> ready;
  for (size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    size_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (size_t w : succ[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (order.size() != n) fail("CycleError", "cover relation contains a directed cycle");
  P.down_.assign(n, Bits(n));
  for (size_t i = 0; i < n; ++i) P.down_[i].set(i);
  for (size_t v : order)
    for (size_t w : succ[v]) P.down_[w] |= P.down_[v];
  P.finish();
  return P;
}

GradedPoset GradedPoset::from_order(std::vector<std::string> ids, std::vector<Bits> down) {
  GradedPoset P;
  P.ids_ = std::move(ids);
  for (size_t i = 0; i < P.ids_.size(); ++i)
    if (!P.index_.emplace(P.ids_[i], i).second) fail("InvalidInput", "duplicate element '" + P.ids_[i] + "'");
  P.down_ = std::move(down);
  P.finish();
  return P;
}

void GradedPoset::finish() {
  const size_t n = ids_.size();
  up_.assign(n, Bits(n));
  for (size_t b = 0; b < n; ++b)
    for (size_t a = down_[b].find_first(); a != Bits::npos; a = down_[b].find_next(a)) up_[a].set(b);
  upper_.assign(n, {});
  lower_.assign(n, {});
  for (size_t b = 0; b < n; ++b) {
    Bits strict = down_[b];
    strict.reset(b);
    for (size_t a = strict.find_first(); a != Bits::npos; a = strict.find_next(a)) {
      if ((up_[a] & strict).count() == 1) {
        lower_[b].push_back(a);
        upper_[a].push_back(b);
      }
    }
  }
  // Grade by propagation along covers, component by component.
  constexpr int kUnset = -1000000000;
  rank_.assign(n, kUnset);
  for (size_t s = 0; s < n; ++s) {
    if (rank_[s] != kUnset) continue;
    std::vector<size_t> comp{s};
    rank_[s] = 0;
    for (size_t k = 0; k < comp.size(); ++k) {
      size_t v = comp[k];
      for (size_t w : upper_[v]) {
        if (rank_[w] == kUnset) {
          rank_[w] = rank_[v] + 1;
          comp.push_back(w);
        } else if (rank_[w] != rank_[v] + 1) {
          fail("NotGraded", "no grade function: cover (" + ids_[v] + "," + ids_[w] + ") conflicts");
        }
      }
      for (size_t w : lower_[v]) {
        if (rank_[w] == kUnset) {
          rank_[w] = rank_[v] - 1;
          comp.push_back(w);
        } else if (rank_[w] != rank_[v] - 1) {
          fail("NotGraded", "no grade function: cover (" + ids_[w] + "," + ids_[v] + ") conflicts");
        }
      }
    }
    int lo = 0;
    for (size_t v : comp) lo = std::min(lo, rank_[v]);
    for (size_t v : comp) rank_[v] -= lo;
  }
  by_rank_.resize(n);
  for (size_t i = 0; i < n; ++i) by_rank_[i] = i;
  std::stable_sort(by_rank_.begin(), by_rank_.end(), [&](size_t a, size_t b) { return rank_[a] < rank_[b]; });
  cache_ = std::make_shared<Cache>();
}

size_t GradedPoset::index(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) fail("UnknownElement", "no element '" + std::string(id) + "'");
  return it->second;
}

std::optional<size_t> GradedPoset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<size_t, size_t>> GradedPoset::covers() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t a = 0; a < size(); ++a)
    for (size_t b : upper_[a]) out.emplace_back(a, b);
  return out;
}

int GradedPoset::height() const {
  int h = 0;
  for (int r : rank_) h = std::max(h, r);
  return h;
}

std::optional<size_t> GradedPoset::max_of(const Bits& s) const {
  size_t best = Bits::npos;
  for (size_t i = s.find_first(); i != Bits::npos; i = s.find_next(i))
    if (best == Bits::npos || rank_[i] > rank_[best]) best = i;
  if (best == Bits::npos || !s.is_subset_of(down_[best])) return std::nullopt;
  return best;
}

std::optional<size_t> GradedPoset::min_of(const Bits& s) const {
  size_t best = Bits::npos;
  for (size_t i = s.find_first(); i != Bits::npos; i = s.find_next(i))
    if (best == Bits::npos || rank_[i] < rank_[best]) best = i;
  if (best == Bits::npos || !s.is_subset_of(up_[best])) return std::nullopt;
  return best;
}

const GradedPoset::Cache& GradedPoset::cache() const {
  Cache& c = *cache_;
  std::call_once(c.tables_once, [&] {
    const size_t n = size();
    if (n > kTableLimit) return;
    c.meet.assign(n * n, -1);
    c.join.assign(n * n, -1);
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = a; b < n; ++b) {
        if (auto m = max_of(down_[a] & down_[b])) c.meet[a * n + b] = c.meet[b * n + a] = static_cast<int>(*m);
        if (auto j = min_of(up_[a] & up_[b])) c.join[a * n + b] = c.join[b * n + a] = static_cast<int>(*j);
      }
    }
    c.have_tables = true;
  });
  return c;
}

std::optional<size_t> GradedPoset::meet(size_t a, size_t b) const {
  const Cache& c = cache();
  if (c.have_tables) {
    int m = c.meet[a * size() + b];
    if (m < 0) return std::nullopt;
    return static_cast<size_t>(m);
  }
  return max_of(down_[a] & down_[b]);
}

std::optional<size_t> GradedPoset::join(size_t a, size_t b) const {
  const Cache& c = cache();
  if (c.have_tables) {
    int j = c.join[a * size() + b];
    if (j < 0) return std::nullopt;
    return static_cast<size_t>(j);
  }
  return min_of(up_[a] & up_[b]);
}

std::optional<size_t> GradedPoset::bottom() const {
  Bits all(size());
  all.set();
  return min_of(all);
}

std::optional<size_t> GradedPoset::top() const {
  Bits all(size());
  all.set();
  return max_of(all);
}

const Classification& GradedPoset::classification() const {
  Cache& c = *cache_;
  std::call_once(c.class_once, [&] {
    Classification& k = c.cls;
    const size_t n = size();
    if (n == 0) return;
    std::vector<int> M(n * n, -1), J(n * n, -1);
    k.meet_semilattice = true;
    k.lattice = true;
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        auto m = meet(a, b);
        auto j = join(a, b);
        if (m) M[a * n + b] = static_cast<int>(*m);
        else k.meet_semilattice = false;
        if (j) J[a * n + b] = static_cast<int>(*j);
        else k.lattice = false;
      }
    }
    if (!k.meet_semilattice) {
      k.lattice = false;
      return;
    }
    bool rank_identity = true;
    std::vector<Bits> compatible(n, Bits(n));
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        int j = J[a * n + b];
        if (j < 0) continue;
        compatible[a].set(b);
        if (rank_[a] + rank_[b] != rank_[j] + rank_[M[a * n + b]]) rank_identity = false;
      }
    }
    bool lfl = true;
    for (size_t a = 0; a < n && lfl; ++a) {
      for (size_t b = compatible[a].find_first(); b != Bits::npos; b = compatible[a].find_next(b)) {
        size_t j = static_cast<size_t>(J[a * n + b]);
        if (!(compatible[a] & compatible[b]).is_subset_of(compatible[j])) {
          lfl = false;
          break;
        }
      }
    }
    k.modular = k.lattice && rank_identity;
    k.modular_semilattice = rank_identity && lfl;
    bool law = true;
    for (size_t v = 0; v < n && law; ++v) {
      for (size_t w = compatible[v].find_first(); w != Bits::npos && law; w = compatible[v].find_next(w)) {
        size_t vw = static_cast<size_t>(J[v * n + w]);
        for (size_t u = 0; u < n; ++u) {
          int lhs = M[u * n + vw];
          int rhs = J[M[u * n + v] * n + M[u * n + w]];
          if (lhs != rhs) {
            law = false;
            break;
          }
        }
      }
    }
    k.distributive = k.lattice && law;
    k.median = lfl && law;
    if (k.median) {
      size_t bot = *bottom();
      k.boolean = true;
      for (size_t v = 0; v < n; ++v)
        if (lower_[v].size() == 1 && rank_[v] != rank_[bot] + 1) k.boolean = false;
    }
  });
  return c.cls;
}

Classification classify(const GradedPoset& poset) { return poset.classification(); }

QueryResult query(const GradedPoset& poset, std::string_view op, std::string_view p, std::string_view q) {
  size_t a = poset.index(p);
  size_t b = op == "rank" && q.empty() ? a : poset.index(q);
  QueryResult r;
  if (op == "meet" || op == "join") {
    auto v = op == "meet" ? poset.meet(a, b) : poset.join(a, b);
    if (v) {
      r.kind = QueryResult::Kind::Element;
      r.element = poset.id(*v);
    }
  } else if (op == "rank") {
    r.kind = QueryResult::Kind::Integer;
    r.integer = poset.rank(a);
  } else if (op == "leq") {
    r.kind = QueryResult::Kind::Boolean;
    r.boolean = poset.leq(a, b);
  } else {
    fail("UsageError", "unknown query '" + std::string(op) + "'");
  }
  return r;
}

std::vector<size_t> join_irreducibles(const GradedPoset& poset) {
  std::vector<size_t> out;
  for (size_t v : poset.by_rank())
    if (poset.lower_covers(v).size() == 1) out.push_back(v);
  return out;
}

std::vector<size_t> interval(const GradedPoset& poset, size_t lo, size_t hi) {
  std::vector<size_t> out;
  for (size_t v : poset.by_rank())
    if (poset.leq(lo, v) && poset.leq(v, hi)) out.push_back(v);
  return out;
}

void require_modular_semilattice(const GradedPoset& poset) {
  if (!poset.classification().modular_semilattice)
    fail("NotModularSemilattice", "structure is not a modular semilattice");
}

size_t omega(const GradedPoset& poset, size_t a, size_t p) {
  Bits cand(poset.size());
  const Bits& below = poset.down(p);
  for (size_t u = below.find_first(); u != Bits::npos; u = below.find_next(u))
    if (poset.join(u, a)) cand.set(u);
  size_t best = Bits::npos;
  for (size_t u = cand.find_first(); u != Bits::npos; u = cand.find_next(u))
    if (best == Bits::npos || poset.rank(u) > poset.rank(best)) best = u;
  if (best == Bits::npos || !cand.is_subset_of(poset.down(best)))
    fail("NotModularSemilattice", "omega of '" + poset.id(p) + "' toward '" + poset.id(a) + "' is not unique");
  return best;
}

bool in_join_set(const GradedPoset& poset, size_t a, size_t u) { return poset.join(a, u).has_value(); }

MetricInterval metric_interval(const GradedPoset& poset, size_t p, size_t q) {
  require_modular_semilattice(poset);
  MetricInterval out;
  size_t m = *poset.meet(p, q);
  Bits seen(poset.size());
  for (size_t b : interval(poset, m, p))
    for (size_t c : interval(poset, m, q))
      if (auto j = poset.join(b, c)) seen.set(*j);
  for (size_t v : poset.by_rank())
    if (seen.test(v)) out.elements.push_back(v);
  out.omega_q_p = omega(poset, q, p);
  out.omega_p_q = omega(poset, p, q);
  return out;
}

std::vector<size_t> metric_interval_bfs(const GradedPoset& poset, size_t p, size_t q) {
  auto bfs = [&](size_t s) {
    std::vector<long> d(poset.size(), -1);
    std::deque<size_t> dq{s};
    d[s] = 0;
    while (!dq.empty()) {
      size_t v = dq.front();
      dq.pop_front();
      auto visit = [&](size_t w) {
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          dq.push_back(w);
        }
      };
      for (size_t w : poset.upper_covers(v)) visit(w);
      for (size_t w : poset.lower_covers(v)) visit(w);
    }
    return d;
  };
  auto dp = bfs(p), dq = bfs(q);
  std::vector<size_t> out;
  if (dp[q] < 0) return out;
  for (size_t v : poset.by_rank())
    if (dp[v] >= 0 && dq[v] >= 0 && dp[v] + dq[v] == dp[q]) out.push_back(v);
  return out;
}

std::string set_label(const std::vector<std::string>& names) {
  std::string s = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) s += ",";
    s += names[i];
  }
  return s + "}";
}

GradedPoset boolean_gated_sets(const Graph& graph, size_t cap) {
  const size_t n = graph.vertices.size();
  if (n > effective_cap(cap)) fail("SizeCap", "graph has " + std::to_string(n) + " vertices");
  if (n == 0) fail("InvalidInput", "graph has no vertices");
  if (n > 62) fail("SizeCap", "graph too large for subset enumeration");
  std::unordered_map<std::string, size_t> idx;
  for (size_t i = 0; i < n; ++i)
    if (!idx.emplace(graph.vertices[i], i).second) fail("InvalidInput", "duplicate vertex '" + graph.vertices[i] + "'");
  std::vector<uint64_t> nb(n, 0);
  for (const auto& [u, v] : graph.edges) {
    auto iu = idx.find(u), iv = idx.find(v);
    if (iu == idx.end() || iv == idx.end()) fail("UnknownElement", "edge " + u + "-" + v);
    if (iu->second == iv->second) fail("InvalidInput", "loop at " + u);
    nb[iu->second] |= uint64_t{1} << iv->second;
    nb[iv->second] |= uint64_t{1} << iu->second;
  }
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (size_t s = 0; s < n; ++s) {
    std::deque<size_t> dq{s};
    dist[s][s] = 0;
    while (!dq.empty()) {
      size_t v = dq.front();
      dq.pop_front();
      for (size_t w = 0; w < n; ++w)
        if ((nb[v] >> w & 1) && dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          dq.push_back(w);
        }
    }
    for (size_t w = 0; w < n; ++w)
      if (dist[s][w] < 0) fail("InvalidInput", "graph is not connected");
  }
  // Pairs at distance two whose common neighbours contain no pair at distance two.
  std::vector<uint64_t> bad(n, 0);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      if (dist[x][y] != 2) continue;
      uint64_t cn = nb[x] & nb[y];
      bool ok = false;
      for (size_t u = 0; u < n && !ok; ++u)
        if (cn >> u & 1)
          for (size_t v = 0; v < n; ++v)
            if ((cn >> v & 1) && dist[u][v] == 2) {
              ok = true;
              break;
            }
      if (!ok) bad[x] |= uint64_t{1} << y;
    }
  std::vector<uint64_t> sets;
  const uint64_t limit = uint64_t{1} << n;
  for (uint64_t X = 1; X < limit; ++X) {
    bool good = true;
    for (size_t x = 0; x < n && good; ++x) {
      if (!(X >> x & 1)) continue;
      if (bad[x] & X) good = false;
      for (size_t y = x + 1; y < n && good; ++y)
        if ((X >> y & 1) && ((nb[x] & nb[y]) & ~X)) good = false;
    }
    if (good) sets.push_back(X);
  }
  const size_t m = sets.size();
  std::vector<std::string> ids(m);
  std::vector<Bits> down(m, Bits(m));
  for (size_t i = 0; i < m; ++i) {
    std::vector<std::string> names;
    for (size_t v = 0; v < n; ++v)
      if (sets[i] >> v & 1) names.push_back(graph.vertices[v]);
    ids[i] = set_label(names);
    for (size_t j = 0; j < m; ++j)  // j below i in reverse inclusion: sets[j] contains sets[i]
      if ((sets[j] & sets[i]) == sets[i]) down[i].set(j);
  }
  return GradedPoset::from_order(std::move(ids), std::move(down));
}

std::vector<size_t> refine_chain(const GradedPoset& poset, std::vector<size_t> chain, bool prefer_last) {
  std::sort(chain.begin(), chain.end(), [&](size_t a, size_t b) { return poset.rank(a) < poset.rank(b); });
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
  std::vector<size_t> out;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (i == 0) {
      out.push_back(chain[0]);
      continue;
    }
    size_t cur = chain[i - 1], target = chain[i];
    if (!poset.leq(cur, target))
      fail("NotCommonSimplex", "'" + poset.id(cur) + "' and '" + poset.id(target) + "' are incomparable");
    while (cur != target) {
      size_t pick = Bits::npos;
      for (size_t u : poset.upper_covers(cur)) {
        if (!poset.leq(u, target)) continue;
        if (pick == Bits::npos || (prefer_last ? poset.id(u) > poset.id(pick) : poset.id(u) < poset.id(pick))) pick = u;
      }
      cur = pick;
      out.push_back(cur);
    }
  }
  return out;
}

}  // namespace orthogeo
