#include "orthogeo/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "orthogeo/error.hpp"

namespace orthogeo {

namespace {

std::string id_of(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

Rational rational_of(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.dump());
  if (v.is_number_float()) return parse_rational(v.dump());
  fail("ParseError", "expected a rational, got " + v.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail("InvalidInput", std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> id_list(const Json& j) {
  if (!j.is_array()) fail("InvalidInput", "expected an array of ids");
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(id_of(v));
  return out;
}

std::vector<Pair> pair_list(const Json& j) {
  if (!j.is_array()) fail("InvalidInput", "expected an array of pairs");
  std::vector<Pair> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) fail("InvalidInput", "pair " + p.dump() + " must have two entries");
    out.emplace_back(id_of(p[0]), id_of(p[1]));
  }
  return out;
}

std::vector<Pair> optional_pairs(const Json& j, const char* key) {
  return j.contains(key) ? pair_list(j.at(key)) : std::vector<Pair>{};
}

}  // namespace

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail("InvalidInput", "cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    fail("ParseError", path + ": " + e.what());
  }
}

Structure load_structure(const Json& j, const std::optional<std::string>& as) {
  Structure s;
  s.declared = as ? *as : id_of(field(j, "kind"));
  if (s.declared == "poset") {
    s.kind = Structure::Kind::Poset;
    s.poset = GradedPoset::load(id_list(field(j, "elements")), optional_pairs(j, "covers"));
  } else if (s.declared == "graph" || s.declared == "pip") {
    s.kind = Structure::Kind::Pip;
    s.graph = Graph{id_list(field(j, "vertices")), optional_pairs(j, "edges")};
    auto order = s.declared == "pip" ? optional_pairs(j, "order") : std::vector<Pair>{};
    s.pip = Pip::make(s.graph.vertices, s.graph.edges, order);
  } else {
    fail("InvalidInput", "unknown structure kind '" + s.declared + "'");
  }
  return s;
}

Point parse_point(const GradedPoset& host, const Json& j) {
  if (j.contains("coeffs")) {
    std::map<size_t, Rational> coeffs;
    for (const auto& [k, v] : field(j, "coeffs").items()) coeffs[host.index(k)] += rational_of(v);
    return make_point(host, coeffs);
  }
  if (j.contains("b_coords")) {
    Birkhoff fb = birkhoff(host);
    BVec b(fb.pip.size(), Rational(0));
    for (const auto& [k, v] : field(j, "b_coords").items()) {
      auto at = fb.pip.find(k);
      if (!at) fail("SupportOutsideFrame", "'" + k + "' is not a join-irreducible of the host");
      b[*at] = rational_of(v);
    }
    return from_b_coordinates(fb, b);
  }
  fail("InvalidInput", "point needs \"coeffs\" or \"b_coords\"");
}

BVec parse_bvec(const Pip& host, const Json& j) {
  if (j.contains("b_coords")) {
    BVec b(host.size(), Rational(0));
    for (const auto& [k, v] : field(j, "b_coords").items()) b[host.index(k)] = rational_of(v);
    validate_bvec(host, b);
    return b;
  }
  if (j.contains("coeffs")) {
    auto ic = ideal_complex(host);
    return b_coordinates(ic.frame, parse_point(ic.poset, j));
  }
  fail("InvalidInput", "point needs \"coeffs\" or \"b_coords\"");
}

double rounded(double v) { return std::stod(format_double(v)); }

Json num_json(const Num& n) {
  if (n.exact()) return to_string(n.rational());
  return rounded(n.value());
}

Json classification_json(const Classification& c) {
  Json j;
  j["meet_semilattice"] = c.meet_semilattice;
  j["lattice"] = c.lattice;
  j["modular"] = c.modular;
  j["modular_semilattice"] = c.modular_semilattice;
  j["distributive"] = c.distributive;
  j["median"] = c.median;
  j["boolean"] = c.boolean;
  return j;
}

Json arch_json(const Arch& arch) {
  Json j;
  j["arch"] = arch.labels;
  Json xi = Json::array();
  for (const auto& [a, b] : arch.xi) xi.push_back(Json::array({to_string(a), to_string(b)}));
  j["xi"] = xi;
  SqrtSum v2 = v_squared(arch);
  j["v"] = rounded(v_value(arch));
  j["v_sq"] = v2.str();
  j["concave"] = is_concave(arch);
  return j;
}

Json geodesic_json(const Geodesic& g, const std::vector<std::string>& names) {
  Json j;
  j["length"] = rounded(g.length);
  j["length_sq"] = g.length_sq.str();
  Json bps = Json::array();
  for (size_t i = 0; i < g.path.times.size(); ++i) {
    Json point = Json::object();
    for (const auto& [k, c] : g.path.points[i]) point[names[k]] = num_json(c);
    bps.push_back(Json{{"t", num_json(g.path.times[i])}, {"point", point}});
  }
  j["breakpoints"] = bps;
  j["arch"] = g.arch.labels;
  j["case"] = g.case_label;
  return j;
}

std::string path_csv(const PolyPath& path, const std::vector<std::string>& names, size_t samples) {
  std::ostringstream os;
  os << 't';
  for (const auto& n : names) os << ',' << n;
  os << '\n';
  for (size_t i = 0; i < samples; ++i) {
    Rational t = samples == 1 ? Rational(0) : Rational(static_cast<long>(i), static_cast<long>(samples - 1));
    t.canonicalize();
    SparseNum p = path_at(path, Num(t));
    os << format_double(t.get_d());
    for (size_t k = 0; k < names.size(); ++k) os << ',' << format_double(p.count(k) ? p.at(k).value() : 0.0);
    os << '\n';
  }
  return os.str();
}

PolyPath parse_path(const Json& j, PolyPath::Form form, const std::vector<std::string>& names) {
  std::unordered_map<std::string, size_t> at;
  for (size_t i = 0; i < names.size(); ++i) at.emplace(names[i], i);
  auto num = [](const Json& v) { return v.is_number_float() ? Num::real(v.get<double>()) : Num(rational_of(v)); };
  PolyPath path;
  path.form = form;
  for (const auto& bp : field(j, "breakpoints")) {
    path.times.push_back(num(field(bp, "t")));
    SparseNum p;
    for (const auto& [k, v] : field(bp, "point").items()) {
      auto it = at.find(k);
      if (it == at.end()) fail("UnknownElement", "'" + k + "' in path point");
      p[it->second] = num(v);
    }
    path.points.push_back(std::move(p));
  }
  return path;
}

}  // namespace orthogeo
