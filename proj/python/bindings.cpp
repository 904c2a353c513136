#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "resloc/cli.hpp"
#include "resloc/reconstruction.hpp"
#include "resloc/schubert.hpp"
#include "resloc/tau.hpp"

namespace py = pybind11;
using namespace resloc;

namespace {

JFunction target_j(const std::string& target, int n, int l, const std::vector<int>& factors, int order) {
  if (target == "Pn") return j_projective(n, order);
  if (target == "hypersurface") return pull_to_hypersurface(mirror_normalize(i_function(n, l, order)).normalized, l);
  if (target == "product") {
    if (factors.size() < 2) throw Error(Errc::InvalidArgument, "product needs at least two factors");
    JFunction j = j_projective(factors[0], order);
    for (std::size_t i = 1; i < factors.size(); ++i) j = j_product(j, j_projective(factors[i], order));
    return j;
  }
  throw Error(Errc::InvalidArgument, "unknown target '" + target + "'");
}

std::vector<std::string> rats(const std::vector<Rat>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_resloc, m) {
  static py::exception<Error> error(m, "ResLocError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(e.name());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("grassmann_integral", [](int n, const std::string& tau) {
    return to_string(grassmann_integral_residue(n, parse_tau(tau, 2)));
  });
  m.def("schur_integral", [](int m_, int n, const std::string& tau) {
    return to_string(schur_integral_oracle(m_, n, parse_tau(tau, m_)));
  });
  m.def("flag_pushforwards", [](int m_, int n) {
    ZetaTable t = flag_pushforward_extract(m_, n, default_weight_samples(m_, default_sample_count(m_, n)));
    std::vector<std::pair<std::vector<int>, std::vector<std::pair<int, std::string>>>> out;
    for (const auto& [a, c] : t.entries) {
      std::vector<std::pair<int, std::string>> terms;
      for (const auto& [e, v] : c.terms()) terms.emplace_back(e[0], to_string(v));
      out.emplace_back(std::vector<int>(a.begin(), a.end()), terms);
    }
    return out;
  });
  m.def("j_function_json", [](int n, int order) { return j_projective(n, order).to_json().dump(); });
  m.def("mirror_json", [](int n, int l, int order) { return mirror_normalize(i_function(n, l, order)).to_json().dump(); });
  m.def("mirror_corrections", [](int n, int l, int order) {
    MirrorData d = mirror_normalize(i_function(n, l, order));
    return py::make_tuple(rats(d.a), rats(d.b), rats(d.c));
  });
  m.def(
      "invariants_json",
      [](const std::string& target, int n, int l, const std::vector<int>& factors, int order) {
        return invariants_to_json(reconstruct_two_point(target_j(target, n, l, factors, order))).dump();
      },
      py::arg("target"), py::arg("n") = 0, py::arg("l") = 0, py::arg("factors") = std::vector<int>{},
      py::arg("order") = 5);
  m.def(
      "qh_relations",
      [](const std::string& target, int n, int l, const std::vector<int>& factors, int order) {
        TwoPointTable t = reconstruct_two_point(target_j(target, n, l, factors, order));
        std::vector<std::string> out;
        for (std::size_t i = 0; i < t.spec.generators(); ++i)
          out.push_back(qh_relation(quantum_mult_matrix(t, i)).to_string());
        return out;
      },
      py::arg("target"), py::arg("n") = 0, py::arg("l") = 0, py::arg("factors") = std::vector<int>{},
      py::arg("order") = 5);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  });
}
