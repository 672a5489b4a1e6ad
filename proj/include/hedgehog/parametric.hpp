#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hedgehog/angle.hpp"
#include "hedgehog/fourier_support.hpp"
#include "hedgehog/geometry.hpp"

namespace hedgehog {

// Oriented line in point-direction form; |direction| = 1.
struct OrientedLine {
  Point base;
  Point direction;
};

// Twice-differentiable parametric curve on [t0, t1] given by closed-form
// evaluators for position, velocity and acceleration. Construction checks
// the acceleration against finite differences of the velocity on a grid
// and records whether the velocity vanishes anywhere (hedgehogs with cusps
// are admitted, but they are flagged non-regular and per-sample envelope
// evaluations may degenerate near the cusps).
class ParametricCurve {
 public:
  using Map = std::function<Point(double)>;
  using Map1d = std::function<double(double)>;

  ParametricCurve(double t0, double t1, Map position, Map velocity,
                  Map acceleration, bool closed = false);

  double t0() const { return t0_; }
  double t1() const { return t1_; }
  bool closed() const { return closed_; }
  bool regular() const { return regular_; }

  Point position(double t) const;
  Point velocity(double t) const;
  Point acceleration(double t) const;

  // Signed curvature radius as a function of the normal direction and its
  // derivative; attached when the curve is built from a support function,
  // where the parametric radius formula would lose the sign across cusps.
  // The cusp diagnostics use these when present and fall back to the
  // parametric formulas otherwise.
  const Map1d& signed_radius() const { return radius_; }
  const Map1d& signed_radius_deriv() const { return radius_deriv_; }
  void set_signed_radius(Map1d radius, Map1d radius_deriv);

  void check_domain(double t) const;

 private:
  double t0_;
  double t1_;
  Map position_;
  Map velocity_;
  Map acceleration_;
  bool closed_;
  bool regular_ = true;
  Map1d radius_;
  Map1d radius_deriv_;
};

// Open-curve support evaluator on an interval. The first two derivatives
// are required; the third is optional and only needed to build a
// ParametricCurve with closed-form acceleration.
struct OpenSupport {
  double t0 = 0.0;
  double t1 = 0.0;
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<double(double)> deriv2;
  std::function<double(double)> deriv3;  // optional
};

// The hedgehog of a Fourier support function as a parametric curve on
// [0, 2pi].
ParametricCurve from_support(const FourierSupport& p);

// Curve traced by an open support function (needs deriv3 for the
// acceleration).
ParametricCurve curve_from_open_support(const OpenSupport& s);

// Named example curves.
OpenSupport cycloid_support(double t0, double t1);            // -phi cos phi
OpenSupport logspiral_support(double c, double t0, double t1);  // e^{c phi}
ParametricCurve parabola_curve(double t0, double t1);         // (t, t^2/2)

// Tangent line at gamma(t) turned by alpha about the tangency point.
OrientedLine rotated_tangent(const ParametricCurve& curve, double t,
                             Angle alpha);

// Characteristic point of the rotated-tangent line family:
//   gamma(t) + s u(t),  s = -det(gamma', u) / det(u', u),
// with u the rotated unit tangent. Throws std::domain_error when the line
// family is stationary at t (|det(u', u)| < 1e-12).
Point envelope_point(const ParametricCurve& curve, double t, Angle alpha);

// Signed curvature radius |gamma'|^3 / det(gamma', gamma'') and the
// turning rate dphi/dt = det(gamma', gamma'') / |gamma'|^2.
double curvature_radius_param(const ParametricCurve& curve, double t);
double turning_rate(const ParametricCurve& curve, double t);

// Cusp criterion of the skew evolute, r cos alpha + (dr/dphi) sin alpha,
// rescaled by the positive turning rate; dr/dt is taken by central
// differences of the closed-form radius.
double image_cusp_function(const ParametricCurve& curve, double t,
                           Angle alpha);

// Parameters in [t0, t1] where image_cusp_function changes sign, refined
// by bisection.
std::vector<double> image_cusp_parameters(const ParametricCurve& curve,
                                          Angle alpha, int grid = 2048);

// Parameters where the curvature radius of the curve itself changes sign.
std::vector<double> curve_cusp_parameters(const ParametricCurve& curve,
                                          int grid = 2048);

// Envelope samples of the rotated tangent lines over n uniform parameters;
// degenerate samples are skipped (gaps), and cusp flags follow the sign of
// image_cusp_function between kept samples.
PlaneCurveSamples skew_evolute_numeric(const ParametricCurve& curve,
                                       Angle alpha, int n);

// phi -> p(phi - alpha) cos alpha + p'(phi - alpha) sin alpha on the
// shifted interval.
OpenSupport open_support_evolute(const OpenSupport& p, Angle alpha);

// For the support c1 e^{b1 phi} + c2 e^{b2 phi}: when
// (cos a + b1 sin a)^{b2} = (cos a + b2 sin a)^{b1}, the skew evolute is a
// rotation of the source and the common parameter shift psi is returned;
// otherwise empty. Requires cos a + b_i sin a > 0 and b1 != b2.
std::optional<double> spiral_pair_congruence(double b1, double b2,
                                             Angle alpha);

// Maximum distance between the envelope of the rotated tangents of the
// hedgehog of p and the spectral skew evolute, both evaluated at matched
// parameters (source phi versus image normal direction phi + alpha).
// Samples within parameter distance 0.01 of a source or image cusp are
// excluded; nearest-point matching is ill-conditioned there and the cusp
// positions are tested separately.
double oracle_deviation(const FourierSupport& p, Angle alpha, int n);

}  // namespace hedgehog
