#pragma once

#include <optional>
#include <string>

#include "orthogeo/io.hpp"

namespace orthogeo::api {

// JSON documents as read from files: a structure and, where needed, two points.
struct Request {
  Json structure;
  std::optional<std::string> as;
  Json x, y;
};

Json validate(const Request& r);
Json classify(const Request& r, bool gated);
Json distance(const Request& r);
Json geodesic(const Request& r);
std::string geodesic_csv(const Request& r, size_t samples);
Json arch(const Request& r, bool all);
Json msip(const Request& r, const std::string& lambda);
std::string msip_dimacs(const Request& r, const std::string& lambda);
Json oracle(const Request& r, int n);
Json cat0(const Request& r, size_t samples, uint64_t seed);

}  // namespace orthogeo::api
