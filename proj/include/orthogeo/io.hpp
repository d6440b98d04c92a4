#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "orthogeo/geodesic.hpp"
#include "orthogeo/oracle.hpp"

namespace orthogeo {

using Json = nlohmann::ordered_json;

// A host structure read from JSON. Graphs are read as PIPs with an empty
// order; the raw graph is kept for the Boolean-gated-set construction.
struct Structure {
  enum class Kind { Poset, Pip };
  Kind kind = Kind::Poset;
  std::string declared;  // "poset", "graph" or "pip"
  GradedPoset poset;
  Pip pip;
  Graph graph;
};

Json read_json(const std::string& path);  // "-" reads stdin
Structure load_structure(const Json& j, const std::optional<std::string>& as = std::nullopt);

// Points accept {"coeffs": {...}} or {"b_coords": {...}}.
Point parse_point(const GradedPoset& host, const Json& j);
BVec parse_bvec(const Pip& host, const Json& j);

// Exact values as "num/den" strings, inexact ones as 12-digit numbers.
Json num_json(const Num& n);
double rounded(double v);

Json classification_json(const Classification& c);
Json geodesic_json(const Geodesic& g, const std::vector<std::string>& names);
Json arch_json(const Arch& arch);
std::string path_csv(const PolyPath& path, const std::vector<std::string>& names, size_t samples);

// Inverse of geodesic_json's breakpoints.
PolyPath parse_path(const Json& j, PolyPath::Form form, const std::vector<std::string>& names);

}  // namespace orthogeo
