#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bps/pipeline.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const bps::Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return py::int_(v.convert_to<long long>());
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

bps::ExponentTuple make_tuple(const std::vector<long long>& exps) {
  return bps::ExponentTuple(exps);
}

bps::LatticeVector make_vector(const std::vector<long long>& coords) {
  return bps::LatticeVector(std::vector<bps::Int>(coords.begin(), coords.end()));
}

bps::Arrangement make_arrangement(long long dim, const std::vector<std::string>& coeffs) {
  bps::Arrangement arr;
  arr.projective_dim = dim;
  for (const std::string& c : coeffs) arr.coefficients.push_back(bps::Rational::parse(c));
  return arr;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Brieskorn-Pham singularity toolkit";

  m.def("newton_value",
        [](const std::vector<long long>& p, const std::vector<long long>& a) {
          return to_py(bps::newton_value(make_vector(p), make_tuple(a)));
        },
        py::arg("p"), py::arg("exponents"), "min_i p_i * a_i");

  m.def("discrepancy",
        [](const std::vector<long long>& p, const std::vector<long long>& a) {
          return to_py(bps::discrepancy(make_vector(p), make_tuple(a)));
        },
        py::arg("p"), py::arg("exponents"), "a_p = <p,1> - p(f) - 1");

  m.def("h",
        [](long long d, const std::vector<long long>& a) {
          return to_py(bps::h_lower_bound(bps::Int(d), make_tuple(a)));
        },
        py::arg("d"), py::arg("exponents"),
        "h(d) = sum ceil(d/a_i) - d - 1, a lower bound for a_p at d = p(f)");

  m.def("is_terminal",
        [](const std::vector<long long>& a, const std::string& bound) {
          bps::ScanOptions opt;
          auto mode = bps::parse_bound_mode(bound);
          if (!mode) throw std::invalid_argument("bound must be 'lcm' or 'product'");
          opt.mode = *mode;
          return bps::is_terminal(make_tuple(a), opt).terminal;
        },
        py::arg("exponents"), py::arg("bound") = "lcm");

  m.def("blowup_weights",
        [](const std::vector<long long>& a) {
          py::list out;
          for (const bps::Int& w : bps::blowup_weights(make_tuple(a)).weights)
            out.append(to_py(w));
          return out;
        },
        py::arg("exponents"));

  m.def("diff_coefficients",
        [](const std::vector<long long>& a) {
          std::vector<std::string> out;
          for (const bps::Rational& c : bps::diff_boundary(make_tuple(a)).coefficients)
            out.push_back(c.str());
          return out;
        },
        py::arg("exponents"), "boundary coefficients (a_i - 1)/a_i as 'num/den'");

  m.def("lc_status",
        [](long long dim, const std::vector<std::string>& coeffs) {
          return to_string(bps::lc_status(make_arrangement(dim, coeffs)).status);
        },
        py::arg("dim"), py::arg("coefficients"));

  m.def("lct",
        [](long long dim, const std::vector<std::string>& coeffs) -> py::object {
          auto t = bps::lct(make_arrangement(dim, coeffs));
          if (!t) return py::none();
          return py::str(t->str());
        },
        py::arg("dim"), py::arg("coefficients"),
        "log canonical threshold as 'num/den'; None means +infinity");

  m.def("minimal_complement_index",
        [](const std::vector<long long>& a, long long n_max) -> py::object {
          auto mc = bps::minimal_complement_index(bps::diff_boundary(make_tuple(a)), n_max);
          if (!mc) return py::none();
          return py::int_(mc->index);
        },
        py::arg("exponents"), py::arg("n_max") = 100);

  m.def("analyze_json",
        [](const std::vector<long long>& a, const std::string& bound, long long n_max) {
          bps::AnalyzeOptions opt;
          auto mode = bps::parse_bound_mode(bound);
          if (!mode) throw std::invalid_argument("bound must be 'lcm' or 'product'");
          opt.scan.mode = *mode;
          opt.n_max = n_max;
          opt.with_timings = false;
          return bps::report_to_json(bps::analyze(make_tuple(a), opt)).dump();
        },
        py::arg("exponents"), py::arg("bound") = "lcm", py::arg("n_max") = 100,
        "full per-tuple report as a JSON string");
}
