#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liouville/cli.hpp"
#include "liouville/formfam.hpp"
#include "liouville/json_io.hpp"
#include "liouville/liealg.hpp"
#include "liouville/numfield.hpp"
#include "liouville/symplin.hpp"

namespace py = pybind11;
using namespace liouville;

namespace {

// integers leave as decimal strings; the Python side turns them into int
Json element_json(const OrderElement& x) {
  Json j = Json::array();
  for (const auto& c : x) j.push_back(c.get_str());
  return j;
}

Json int_matrix_json(const IntMatrix& M) {
  Json j = Json::array();
  for (const auto& row : M) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    j.push_back(r);
  }
  return j;
}

std::string units_json(const std::vector<long>& coeffs, long box) {
  auto k = field_from_poly(coeffs);
  if (box <= 0) box = default_box_bound(k.degree());
  auto g = find_units(k, box);
  auto pu = positive_units(g, k);
  auto L = gamma_lattice(k, pu);
  Json j;
  j["signature"] = {k.r, k.s};
  j["torsion"] = Json::array();
  for (const auto& u : g.torsion) j["torsion"].push_back(element_json(u));
  j["torsion_order"] = g.torsion_order;
  j["rank"] = g.rank;
  j["free"] = Json::array();
  for (const auto& u : g.free) j["free"].push_back(element_json(u));
  j["positive_free"] = Json::array();
  for (const auto& u : pu.free) j["positive_free"].push_back(element_json(u));
  j["gamma"] = Json::array();
  for (const auto& v : L.basis) j["gamma"].push_back(flatten(v));
  j["monodromy"] = Json::array();
  for (const auto& M : L.monodromy) j["monodromy"].push_back(int_matrix_json(M));
  return j.dump();
}

std::string reduce_json(const Matrix& A0, const Matrix& A1, double eps) {
  auto pb = simultaneous_reduce(A0, A1, eps);
  Json j;
  j["blocks"] = Json::array();
  for (const auto& b : pb.blocks) {
    Json jb{{"kind", b.kind == PencilBlock::Kind::real ? "real" : "complex"}, {"chain", b.chain}};
    if (b.kind == PencilBlock::Kind::real) jb["lambda"] = b.lambda;
    else {
      jb["mu"] = b.mu;
      jb["nu"] = b.nu;
    }
    j["blocks"].push_back(jb);
  }
  j["residual0"] = pb.residual0;
  j["residual1"] = pb.residual1;
  j["experimental"] = pb.experimental;
  return j.dump();
}

std::string pair_json(const std::string& id) {
  Preset p = preset_from_id(id);
  if (!p.has_pair) throw InputError("preset has no pair");
  Json j = to_json(liouville_pair_check(p.algebra, p.alpha_plus, p.alpha_minus));
  j["dim"] = p.algebra.dim();
  j["contact_plus"] = verdict_name(contact_check(p.algebra, p.alpha_plus).verdict);
  j["contact_minus"] = verdict_name(contact_check(p.algebra, p.alpha_minus).verdict);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_liouville_lab, m) {
  m.doc() = "Contact pairs, cotaming and unit lattices";
  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<NumericalError> numerical_error(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const NumericalError& e) {
      py::set_error(numerical_error, e.what());
    }
  });

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run a liouville-lab command; returns (exit code, stdout, stderr).");

  m.def("pfaffian", [](const Matrix& A) { return pfaffian(A); }, py::arg("A"));
  m.def("segment_nondegenerate", &segment_nondegenerate, py::arg("A0"), py::arg("A1"));
  m.def("ray_nondegenerate", &ray_nondegenerate, py::arg("A0"), py::arg("A1"));
  m.def("cotamed_exists", &cotamed_exists, py::arg("A0"), py::arg("A1"));
  m.def("construct_cotamed", [](const Matrix& A0, const Matrix& A1) { return construct_cotamed(A0, A1).J; },
        py::arg("A0"), py::arg("A1"));
  m.def("tames", [](const Matrix& A, const Matrix& J) { return tames(A, J); }, py::arg("A"), py::arg("J"));
  m.def("cayley_map", &cayley_map, py::arg("J0"), py::arg("J"));
  m.def("cayley_inverse", &cayley_inverse, py::arg("J0"), py::arg("A"));
  m.def("standard_omega", &standard_omega, py::arg("n2"));
  m.def("_pencil_reduce", &reduce_json, py::arg("A0"), py::arg("A1"), py::arg("eps") = 1e-3);
  m.def("_units", &units_json, py::arg("coeffs"), py::arg("box") = 0);
  m.def("_pair_certificate", &pair_json, py::arg("preset"));
  m.def("set_threads", &set_worker_threads, py::arg("n"));
}
