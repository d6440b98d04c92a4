#include "orthogeo/api.hpp"

#include <cmath>

#include "orthogeo/error.hpp"

namespace orthogeo::api {

namespace {

Structure host(const Request& r) { return load_structure(r.structure, r.as); }

Geodesic run_geodesic(const Structure& s, const Request& r, std::vector<std::string>& names) {
  if (s.kind == Structure::Kind::Pip) {
    names = s.pip.vertices();
    return geodesic_median(s.pip, parse_bvec(s.pip, r.x), parse_bvec(s.pip, r.y));
  }
  names = s.poset.ids();
  return orthogeo::geodesic(s.poset, parse_point(s.poset, r.x), parse_point(s.poset, r.y));
}

Json arch_list(const std::vector<ArchValue>& arches) {
  Json list = Json::array();
  for (const auto& av : arches)
    list.push_back(Json{{"arch", av.arch.labels}, {"v", rounded(std::sqrt(av.v_sq.to_double()))}, {"v_sq", av.v_sq.str()}});
  return Json{{"arches", list}};
}

}  // namespace

Json validate(const Request& r) {
  Structure s = host(r);
  Json j;
  j["valid"] = true;
  j["kind"] = s.declared;
  if (s.kind == Structure::Kind::Poset) {
    j["elements"] = s.poset.size();
    j["height"] = s.poset.height();
  } else {
    j["vertices"] = s.pip.size();
    j["stable_ideals"] = enumerate_stable_ideals(s.pip).size();
  }
  return j;
}

Json classify(const Request& r, bool gated) {
  Structure s = host(r);
  if (gated) {
    if (s.declared != "graph") fail("InvalidInput", "--gated needs a graph");
    return classification_json(orthogeo::classify(boolean_gated_sets(s.graph)));
  }
  return classification_json(orthogeo::classify(s.kind == Structure::Kind::Poset ? s.poset : stable_ideals(s.pip)));
}

Json distance(const Request& r) {
  std::vector<std::string> names;
  Geodesic g = run_geodesic(host(r), r, names);
  return Json{{"length", rounded(g.length)}};
}

Json geodesic(const Request& r) {
  std::vector<std::string> names;
  Geodesic g = run_geodesic(host(r), r, names);
  return geodesic_json(g, names);
}

std::string geodesic_csv(const Request& r, size_t samples) {
  std::vector<std::string> names;
  Geodesic g = run_geodesic(host(r), r, names);
  return path_csv(g.path, names, samples);
}

Json arch(const Request& r, bool all) {
  Structure s = host(r);
  if (s.kind == Structure::Kind::Pip) {
    BVec x = parse_bvec(s.pip, r.x), y = parse_bvec(s.pip, r.y);
    return all ? arch_list(enumerate_arches(s.pip, x, y)) : arch_json(extreme_arch(s.pip, x, y));
  }
  const GradedPoset& L = s.poset;
  require_modular_semilattice(L);
  Point x = parse_point(L, r.x), y = parse_point(L, r.y);
  size_t p = tau(L, x), q = tau(L, y);
  if (L.join(p, q)) fail("NotOrthogonal", "tau(x) and tau(y) have a join; the geodesic needs no arch");
  auto a = L.join(omega(L, q, p), omega(L, p, q));
  if (!a) fail("NotModularSemilattice", "omega images have no join");
  size_t P = *L.join(p, *a), Q = *L.join(q, *a);
  Point xa = join_point(L, *a, x), ya = join_point(L, *a, y);
  auto candidates = metric_interval(L, P, Q).elements;
  return all ? arch_list(enumerate_arches(L, *a, P, Q, candidates, xa, ya))
             : arch_json(extreme_arch(L, *a, candidates, xa, ya));
}

Json msip(const Request& r, const std::string& lambda) {
  Structure s = host(r);
  if (s.kind != Structure::Kind::Pip) fail("InvalidInput", "msip needs a pip or graph");
  MsipResult m = solve_msip(s.pip, parse_bvec(s.pip, r.x), parse_bvec(s.pip, r.y), parse_rational(lambda));
  return Json{{"ideal", s.pip.label(m.ideal)},
              {"objective", to_string(m.objective)},
              {"xi", Json::array({to_string(m.xi.first), to_string(m.xi.second)})}};
}

std::string msip_dimacs(const Request& r, const std::string& lambda) {
  Structure s = host(r);
  if (s.kind != Structure::Kind::Pip) fail("InvalidInput", "msip needs a pip or graph");
  return msip_network(s.pip, parse_bvec(s.pip, r.x), parse_bvec(s.pip, r.y), parse_rational(lambda)).dimacs();
}

Json oracle(const Request& r, int n) {
  Structure s = host(r);
  std::vector<std::string> names;
  Geodesic g = run_geodesic(s, r, names);
  double d = s.kind == Structure::Kind::Pip
                 ? oracle_distance(s.pip, parse_bvec(s.pip, r.x), parse_bvec(s.pip, r.y), n)
                 : oracle_distance(s.poset, parse_point(s.poset, r.x), parse_point(s.poset, r.y), n);
  Json j;
  j["n"] = n;
  j["oracle"] = rounded(d);
  j["engine"] = rounded(g.length);
  j["excess"] = rounded(g.length > 0 ? d / g.length - 1 : d);
  return j;
}

Json cat0(const Request& r, size_t samples, uint64_t seed) {
  Structure s = host(r);
  Cat0Report rep = s.kind == Structure::Kind::Pip ? cat0_check(s.pip, samples, seed) : cat0_check(s.poset, samples, seed);
  Json j;
  j["samples"] = rep.samples;
  j["max_violation"] = rounded(rep.max_violation);
  j["worst_case"] = rep.worst_detail.empty()
                        ? Json::object()
                        : Json{{"sample", rep.worst_sample}, {"t", rounded(rep.worst_t)}, {"points", rep.worst_detail}};
  return j;
}

}  // namespace orthogeo::api
