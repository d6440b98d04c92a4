// orthogeo: geodesics in orthoscheme complexes of modular semilattices.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "orthogeo/api.hpp"
#include "orthogeo/error.hpp"

using namespace orthogeo;

namespace {

struct Options {
  std::string structure, x, y;
  std::optional<std::string> as;
  bool gated = false;
  bool all = false;
  bool dimacs = false;
  size_t samples = 0;
  int n = 8;
  uint64_t seed = 1;
  std::string lambda = "1/2";
};

void print(const Json& j) { std::cout << j.dump() << '\n'; }

api::Request request(const Options& o, bool points) {
  api::Request r{read_json(o.structure), o.as, nullptr, nullptr};
  if (points) {
    r.x = read_json(o.x);
    r.y = read_json(o.y);
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesics in orthoscheme complexes of modular semilattices"};
  app.require_subcommand(1);
  Options o;
  auto add_structure = [&](CLI::App* c) {
    c->add_option("structure", o.structure, "structure JSON (poset, graph or pip); - for stdin")->required();
    c->add_option("--as", o.as, "override the structure kind")->check(CLI::IsMember({"poset", "graph", "pip"}));
  };
  auto add_points = [&](CLI::App* c) {
    c->add_option("x", o.x, "first point JSON")->required();
    c->add_option("y", o.y, "second point JSON")->required();
  };

  auto* validate = app.add_subcommand("validate", "load and check a structure");
  add_structure(validate);
  auto* classify_cmd = app.add_subcommand("classify", "lattice-theoretic flags");
  add_structure(classify_cmd);
  classify_cmd->add_flag("--gated", o.gated, "classify the Boolean-gated sets of a graph");
  auto* dist = app.add_subcommand("dist", "geodesic distance");
  add_structure(dist);
  add_points(dist);
  auto* geo = app.add_subcommand("geodesic", "geodesic breakpoints (JSON) or samples (CSV)");
  add_structure(geo);
  add_points(geo);
  geo->add_option("--samples", o.samples, "emit CSV with this many evenly spaced points")->check(CLI::Range(1, 1000000));
  auto* arch = app.add_subcommand("arch", "optimal arch, or every arch with --all");
  add_structure(arch);
  add_points(arch);
  arch->add_flag("--all", o.all, "enumerate all arches with exact v^2");
  auto* msip = app.add_subcommand("msip", "maximum-weight stable ideal for one lambda");
  add_structure(msip);
  add_points(msip);
  msip->add_option("--lambda", o.lambda, "weight on the y side, rational in [0,1]");
  msip->add_flag("--dimacs", o.dimacs, "print the flow network instead");
  auto* oracle = app.add_subcommand("oracle", "grid shortest-path upper bound");
  add_structure(oracle);
  add_points(oracle);
  oracle->add_option("--n", o.n, "grid refinement")->check(CLI::Range(1, 64));
  auto* cat0 = app.add_subcommand("cat0-check", "sampled convexity of squared distance");
  add_structure(cat0);
  cat0->add_option("--samples", o.samples, "number of samples")->check(CLI::Range(0, 1000000));
  cat0->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) print(api::validate(request(o, false)));
    else if (*classify_cmd) print(api::classify(request(o, false), o.gated));
    else if (*dist) print(api::distance(request(o, true)));
    else if (*geo) {
      if (o.samples > 0) std::cout << api::geodesic_csv(request(o, true), o.samples);
      else print(api::geodesic(request(o, true)));
    } else if (*arch) print(api::arch(request(o, true), o.all));
    else if (*msip) {
      if (o.dimacs) std::cout << api::msip_dimacs(request(o, true), o.lambda);
      else print(api::msip(request(o, true), o.lambda));
    } else if (*oracle) print(api::oracle(request(o, true), o.n));
    else if (*cat0) print(api::cat0(request(o, false), o.samples, o.seed));
  } catch (const Error& e) {
    std::cerr << Json{{"error", e.code()}, {"detail", e.what()}}.dump() << '\n';
    return e.code() == "ParseError" ? 2 : 1;
  }
  return 0;
}
