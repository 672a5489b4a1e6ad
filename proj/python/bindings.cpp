#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hedgehog/curve_spec.hpp"
#include "hedgehog/dynamics.hpp"
#include "hedgehog/geometry.hpp"
#include "hedgehog/gutkin.hpp"
#include "hedgehog/parametric.hpp"
#include "hedgehog/transforms.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace hedgehog;

namespace {

std::pair<double, double> as_pair(Point p) { return {p.x, p.y}; }

}  // namespace

PYBIND11_MODULE(hedgehog, m) {
  m.doc() = "Spectral toolkit for skew evolutes and involutes of hedgehog curves";

  py::class_<Harmonic>(m, "Harmonic")
      .def(py::init<int, double, double>(), "k"_a, "c"_a, "s"_a)
      .def_readonly("k", &Harmonic::k)
      .def_readonly("c", &Harmonic::c)
      .def_readonly("s", &Harmonic::s)
      .def("amplitude", &Harmonic::amplitude);

  py::class_<FourierSupport>(m, "FourierSupport")
      .def(py::init<double, std::vector<Harmonic>>(), "a0"_a,
           "harmonics"_a = std::vector<Harmonic>{})
      .def_property_readonly("a0", &FourierSupport::a0)
      .def_property_readonly("harmonics", &FourierSupport::harmonics)
      .def("degree", &FourierSupport::degree)
      .def("evaluate", &FourierSupport::evaluate, "phi"_a, "order"_a = 0)
      .def("coefficient", &FourierSupport::coefficient, "k"_a)
      .def("amplitude", &FourierSupport::amplitude, "k"_a);

  m.def("curve_point",
        [](const FourierSupport& p, double phi) { return as_pair(curve_point(p, phi)); },
        "p"_a, "phi"_a);
  m.def("curvature_radius", &curvature_radius, "p"_a, "phi"_a);
  m.def("signed_length", &signed_length, "p"_a);
  m.def("signed_area", &signed_area, "p"_a);
  m.def("radius_energy", &radius_energy, "p"_a);
  m.def("steiner_point",
        [](const FourierSupport& p) { return as_pair(steiner_point(p)); }, "p"_a);
  m.def("cusp_count", &cusp_count, "p"_a);
  m.def("cusp_locations", &cusp_locations, "p"_a);
  m.def("amplitudes", [](const FourierSupport& p) {
    std::vector<std::pair<int, double>> out;
    for (const AmplitudeEntry& e : amplitudes(p)) out.emplace_back(e.k, e.amplitude);
    return out;
  });

  m.def("d_multiplier",
        [](int k, double alpha) { return d_multiplier(k, Angle(alpha)).factor; },
        "k"_a, "alpha"_a);
  m.def("m_multiplier",
        [](int k, double alpha) { return m_multiplier(k, Angle(alpha)).factor; },
        "k"_a, "alpha"_a);
  m.def("skew_evolute",
        [](const FourierSupport& p, double alpha) { return skew_evolute(p, Angle(alpha)); },
        "p"_a, "alpha"_a);
  m.def("skew_involute",
        [](const FourierSupport& q, double alpha) {
          InvoluteResult r = skew_involute(q, Angle(alpha));
          return std::make_pair(r.support, r.one_parameter_family);
        },
        "q"_a, "alpha"_a,
        "Returns (support, one_parameter_family)");
  m.def("m_map",
        [](const FourierSupport& p, double alpha) { return m_map(p, Angle(alpha)); },
        "p"_a, "alpha"_a);

  m.def("m_rotation_report",
        [](int k, double alpha) {
          MRotationReport r = m_rotation_report(k, Angle(alpha));
          return std::make_tuple(r.beta_k, r.composed, r.shifted_frame,
                                 r.unshifted_frame);
        },
        "k"_a, "alpha"_a,
        "Returns (beta_k, composed, shifted_frame, unshifted_frame)");

  m.def("gutkin_roots", [](int k) {
    std::vector<std::tuple<double, double, bool>> out;
    for (const GutkinRoot& r : gutkin_roots(k))
      out.emplace_back(r.alpha.radians(), r.residual, r.degenerate);
    return out;
  }, "k"_a, "Returns a list of (alpha, residual, degenerate)");
  m.def("fattened_hypocycloid", &fattened_hypocycloid, "k"_a, "c"_a);
  m.def("verify_invariant",
        [](const FourierSupport& p, double alpha) { return verify_invariant(p, Angle(alpha)); },
        "p"_a, "alpha"_a);

  m.def("shape_distance", &shape_distance, "p"_a, "d"_a);
  m.def("cusp_growth",
        [](const FourierSupport& p, double alpha, int n) {
          return cusp_growth(p, Angle(alpha), n);
        },
        "p"_a, "alpha"_a, "n"_a);
  m.def("oracle_deviation",
        [](const FourierSupport& p, double alpha, int n) {
          return oracle_deviation(p, Angle(alpha), n);
        },
        "p"_a, "alpha"_a, "n"_a = 1024);
  m.def("fourier_truncation",
        [](const std::function<double(double)>& f, int degree, int nodes, double cutoff) {
          return fourier_truncation(f, degree, nodes, cutoff);
        },
        "f"_a, "max_degree"_a, "nodes"_a = 4096, "cutoff"_a = 0.0);
}
