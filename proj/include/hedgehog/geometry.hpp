#pragma once

#include <span>
#include <vector>

#include "hedgehog/fourier_support.hpp"

namespace hedgehog {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Ordered point samples of a plane curve. cusp_flags[i] marks a sign change
// of the curvature radius between samples i and i+1; for closed curves the
// flags wrap, so their count equals the point count, otherwise it is one
// less.
struct PlaneCurveSamples {
  std::vector<Point> points;
  std::vector<double> params;
  std::vector<bool> cusp_flags;
  bool closed = false;
};

// Hedgehog point with outward normal direction phi:
//   ( p cos phi - p' sin phi,  p sin phi + p' cos phi ).
Point curve_point(const FourierSupport& p, double phi);

// Curvature radius p(phi) + p''(phi); may vanish or go negative.
double curvature_radius(const FourierSupport& p, double phi);

// Signed length 2 pi a0 (closed form) and the quadrature route used as an
// independent check.
double signed_length(const FourierSupport& p);
double signed_length_quadrature(const FourierSupport& p, int nodes = 1024);

// Signed area (1/2) Int [p^2 - p'^2]. The quadrature value is canonical;
// the coefficient form pi (a0^2 + (1/2) sum (1-k^2)(c_k^2+s_k^2)) is
// evaluated alongside and the two must agree.
double signed_area(const FourierSupport& p);
double signed_area_coefficients(const FourierSupport& p);
double signed_area_quadrature(const FourierSupport& p, int nodes = 1024);

// Int (p + p'')^2, quadrature canonical with coefficient cross-check
// 2 pi a0^2 + pi sum (1-k^2)^2 (c_k^2+s_k^2).
double radius_energy(const FourierSupport& p);
double radius_energy_coefficients(const FourierSupport& p);
double radius_energy_quadrature(const FourierSupport& p, int nodes = 1024);

// Steiner point (curvature centroid): the first-harmonic pair (c_1, s_1).
Point steiner_point(const FourierSupport& p);
Point steiner_point_quadrature(const FourierSupport& p, int nodes = 1024);

// Number of sign changes between consecutive entries, wrapping when
// circular. Entries with |value| < 1e-9 * max|value| are treated as zero
// and skipped. Throws std::domain_error when all entries are zero.
int sign_changes(std::span<const double> values, bool circular);

// Zeros of the curvature radius over one period, located by a 720-point
// sign scan plus bisection refinement. Throws std::domain_error when the
// radius vanishes identically (point curve).
std::vector<double> cusp_locations(const FourierSupport& p);
int cusp_count(const FourierSupport& p);

// n >= 8 uniform samples on [0, 2pi) with cusp flags.
PlaneCurveSamples sample_curve(const FourierSupport& p, int n);

}  // namespace hedgehog
