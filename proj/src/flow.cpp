#include "orthogeo/flow.hpp"

#include <deque>
#include <sstream>

#include "orthogeo/error.hpp"

namespace orthogeo {

size_t FlowNetwork::add_node(std::string name) {
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

void FlowNetwork::add_arc(size_t from, size_t to, Capacity cap) {
  if (from >= size() || to >= size()) fail("InvalidInput", "arc endpoint out of range");
  if (!cap.infinite && sgn(cap.value) < 0) fail("InvalidInput", "negative capacity");
  for (auto& a : arcs_) {
    if (a.from == from && a.to == to) {
      if (cap.infinite || a.cap.infinite) a.cap = Capacity::inf();
      else a.cap.value += cap.value;
      return;
    }
  }
  arcs_.push_back({from, to, cap});
}

std::string FlowNetwork::dimacs() const {
  std::ostringstream os;
  os << "p max " << size() << " " << arcs_.size() << "\n";
  os << "n " << source_ + 1 << " s\n";
  os << "n " << sink_ + 1 << " t\n";
  for (size_t v = 0; v < size(); ++v) os << "c node " << v + 1 << " " << names_[v] << "\n";
  for (const auto& a : arcs_)
    os << "a " << a.from + 1 << " " << a.to + 1 << " " << (a.cap.infinite ? std::string("inf") : to_string(a.cap.value))
       << "\n";
  return os.str();
}

namespace {

struct Residual {
  size_t to;
  size_t rev;
  bool infinite;
  Rational cap;  // finite residual capacity (ignored when infinite)
  long arc;      // original arc index for forward entries, -1 otherwise
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  const size_t n = net.size();
  const size_t s = net.source(), t = net.sink();
  if (s == t) fail("InvalidInput", "source equals sink");
  std::vector<std::vector<Residual>> g(n);
  for (size_t i = 0; i < net.arcs().size(); ++i) {
    const auto& a = net.arcs()[i];
    g[a.from].push_back({a.to, g[a.to].size(), a.cap.infinite, a.cap.value, static_cast<long>(i)});
    g[a.to].push_back({a.from, g[a.from].size() - 1, false, Rational(0), -1});
  }
  {
    std::vector<bool> seen(n, false);
    std::deque<size_t> dq{s};
    seen[s] = true;
    while (!dq.empty()) {
      size_t v = dq.front();
      dq.pop_front();
      for (const auto& e : g[v])
        if (e.infinite && !seen[e.to]) {
          seen[e.to] = true;
          dq.push_back(e.to);
        }
    }
    if (seen[t]) fail("InfiniteFlow", "source reaches sink through infinite arcs only");
  }
  auto open = [](const Residual& e) { return e.infinite || sgn(e.cap) > 0; };
  Rational value = 0;
  for (;;) {
    std::vector<long> via(n, -1);  // index into g[parent]
    std::vector<size_t> parent(n, n);
    std::deque<size_t> dq{s};
    parent[s] = s;
    while (!dq.empty() && parent[t] == n) {
      size_t v = dq.front();
      dq.pop_front();
      for (size_t k = 0; k < g[v].size(); ++k) {
        const auto& e = g[v][k];
        if (parent[e.to] != n || !open(e)) continue;
        parent[e.to] = v;
        via[e.to] = static_cast<long>(k);
        dq.push_back(e.to);
      }
    }
    if (parent[t] == n) break;
    bool have = false;
    Rational push;
    for (size_t v = t; v != s; v = parent[v]) {
      const auto& e = g[parent[v]][static_cast<size_t>(via[v])];
      if (e.infinite) continue;
      if (!have || e.cap < push) push = e.cap;
      have = true;
    }
    for (size_t v = t; v != s; v = parent[v]) {
      auto& e = g[parent[v]][static_cast<size_t>(via[v])];
      if (!e.infinite) e.cap -= push;
      auto& r = g[v][e.rev];
      r.cap += push;
    }
    value += push;
  }
  FlowResult out;
  out.value = value;
  std::vector<bool> seen(n, false);
  std::deque<size_t> dq{s};
  seen[s] = true;
  while (!dq.empty()) {
    size_t v = dq.front();
    dq.pop_front();
    for (const auto& e : g[v])
      if (open(e) && !seen[e.to]) {
        seen[e.to] = true;
        dq.push_back(e.to);
      }
  }
  for (size_t v = 0; v < n; ++v)
    if (seen[v]) out.source_side.push_back(v);
  out.arc_flow.assign(net.arcs().size(), Rational(0));
  for (size_t v = 0; v < n; ++v)
    for (const auto& e : g[v])
      if (e.arc >= 0) out.arc_flow[static_cast<size_t>(e.arc)] = g[e.to][e.rev].cap;
  return out;
}

}  // namespace orthogeo
