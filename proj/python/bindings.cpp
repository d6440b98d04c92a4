// Python module: JSON text in, JSON text out, over the shared entry points.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "orthogeo/api.hpp"
#include "orthogeo/error.hpp"

namespace py = pybind11;
using namespace orthogeo;

namespace {

api::Request request(const std::string& structure, const std::optional<std::string>& as, const std::string& x,
                     const std::string& y) {
  auto parse = [](const std::string& text) -> Json {
    if (text.empty()) return nullptr;
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      fail("ParseError", e.what());
    }
  };
  return {parse(structure), as, parse(x), parse(y)};
}

}  // namespace

PYBIND11_MODULE(_orthogeo, m) {
  m.doc() = "Geodesics in orthoscheme complexes of modular semilattices";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "validate", [](const std::string& s, std::optional<std::string> as) { return api::validate(request(s, as, "", "")).dump(); },
      py::arg("structure"), py::arg("as_") = py::none());
  m.def(
      "classify",
      [](const std::string& s, std::optional<std::string> as, bool gated) {
        return api::classify(request(s, as, "", ""), gated).dump();
      },
      py::arg("structure"), py::arg("as_") = py::none(), py::arg("gated") = false);
  m.def(
      "distance",
      [](const std::string& s, const std::string& x, const std::string& y, std::optional<std::string> as) {
        return api::distance(request(s, as, x, y)).dump();
      },
      py::arg("structure"), py::arg("x"), py::arg("y"), py::arg("as_") = py::none());
  m.def(
      "geodesic",
      [](const std::string& s, const std::string& x, const std::string& y, std::optional<std::string> as) {
        return api::geodesic(request(s, as, x, y)).dump();
      },
      py::arg("structure"), py::arg("x"), py::arg("y"), py::arg("as_") = py::none());
  m.def(
      "geodesic_csv",
      [](const std::string& s, const std::string& x, const std::string& y, size_t samples,
         std::optional<std::string> as) { return api::geodesic_csv(request(s, as, x, y), samples); },
      py::arg("structure"), py::arg("x"), py::arg("y"), py::arg("samples"), py::arg("as_") = py::none());
  m.def(
      "arch",
      [](const std::string& s, const std::string& x, const std::string& y, bool all, std::optional<std::string> as) {
        return api::arch(request(s, as, x, y), all).dump();
      },
      py::arg("structure"), py::arg("x"), py::arg("y"), py::arg("all") = false, py::arg("as_") = py::none());
  m.def(
      "msip",
      [](const std::string& s, const std::string& x, const std::string& y, const std::string& lambda,
         std::optional<std::string> as) { return api::msip(request(s, as, x, y), lambda).dump(); },
      py::arg("structure"), py::arg("x"), py::arg("y"), py::arg("lam"), py::arg("as_") = py::none());
  m.def(
      "oracle",
      [](const std::string& s, const std::string& x, const std::string& y, int n, std::optional<std::string> as) {
        return api::oracle(request(s, as, x, y), n).dump();
      },
      py::arg("structure"), py::arg("x"), py::arg("y"), py::arg("n") = 8, py::arg("as_") = py::none());
  m.def(
      "cat0_check",
      [](const std::string& s, size_t samples, uint64_t seed, std::optional<std::string> as) {
        return api::cat0(request(s, as, "", ""), samples, seed).dump();
      },
      py::arg("structure"), py::arg("samples"), py::arg("seed") = 1, py::arg("as_") = py::none());
}
