#include "hedgehog/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hedgehog {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSignDeadbandRel = 1e-9;
constexpr int kCuspGrid = 720;

template <class F>
double periodic_integral(F&& f, int nodes) {
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) acc += f(kTwoPi * j / nodes);
  return acc * kTwoPi / nodes;
}

double cross_check(double canonical, double coefficients, const char* what) {
  double tol = std::max(1e-10, 1e-12 * std::abs(canonical));
  if (std::abs(canonical - coefficients) > tol)
    throw std::runtime_error(std::string(what) +
                             ": quadrature and coefficient routes disagree");
  return canonical;
}

}  // namespace

Point curve_point(const FourierSupport& p, double phi) {
  double v = p.evaluate(phi, 0);
  double d = p.evaluate(phi, 1);
  return {v * std::cos(phi) - d * std::sin(phi),
          v * std::sin(phi) + d * std::cos(phi)};
}

double curvature_radius(const FourierSupport& p, double phi) {
  return p.evaluate(phi, 0) + p.evaluate(phi, 2);
}

double signed_length(const FourierSupport& p) { return kTwoPi * p.a0(); }

double signed_length_quadrature(const FourierSupport& p, int nodes) {
  return periodic_integral([&](double phi) { return p.evaluate(phi); }, nodes);
}

double signed_area_coefficients(const FourierSupport& p) {
  double sum = p.a0() * p.a0();
  for (const Harmonic& h : p.harmonics())
    sum += 0.5 * (1.0 - static_cast<double>(h.k) * h.k) * (h.c * h.c + h.s * h.s);
  return std::numbers::pi * sum;
}

double signed_area_quadrature(const FourierSupport& p, int nodes) {
  return 0.5 * periodic_integral(
                   [&](double phi) {
                     double v = p.evaluate(phi, 0);
                     double d = p.evaluate(phi, 1);
                     return v * v - d * d;
                   },
                   nodes);
}

double signed_area(const FourierSupport& p) {
  return cross_check(signed_area_quadrature(p), signed_area_coefficients(p),
                     "signed_area");
}

double radius_energy_coefficients(const FourierSupport& p) {
  double sum = 2.0 * p.a0() * p.a0();
  for (const Harmonic& h : p.harmonics()) {
    double w = 1.0 - static_cast<double>(h.k) * h.k;
    sum += w * w * (h.c * h.c + h.s * h.s);
  }
  return std::numbers::pi * sum;
}

double radius_energy_quadrature(const FourierSupport& p, int nodes) {
  return periodic_integral(
      [&](double phi) {
        double r = curvature_radius(p, phi);
        return r * r;
      },
      nodes);
}

double radius_energy(const FourierSupport& p) {
  return cross_check(radius_energy_quadrature(p), radius_energy_coefficients(p),
                     "radius_energy");
}

Point steiner_point(const FourierSupport& p) {
  const Harmonic* h = p.find(1);
  if (h == nullptr) return {0.0, 0.0};
  return {h->c, h->s};
}

Point steiner_point_quadrature(const FourierSupport& p, int nodes) {
  double x = periodic_integral(
      [&](double phi) { return p.evaluate(phi) * std::cos(phi); }, nodes);
  double y = periodic_integral(
      [&](double phi) { return p.evaluate(phi) * std::sin(phi); }, nodes);
  return {x / std::numbers::pi, y / std::numbers::pi};
}

int sign_changes(std::span<const double> values, bool circular) {
  if (values.size() < 2)
    throw std::invalid_argument("sign_changes: need at least two samples");
  double mx = 0.0;
  for (double v : values) mx = std::max(mx, std::abs(v));
  if (mx == 0.0)
    throw std::domain_error("sign_changes: all samples are zero");
  const double tau = kSignDeadbandRel * mx;

  int count = 0;
  int first = 0;
  int prev = 0;
  for (double v : values) {
    int s = (v > tau) ? 1 : (v < -tau ? -1 : 0);
    if (s == 0) continue;
    if (first == 0) {
      first = s;
    } else if (s != prev) {
      ++count;
    }
    prev = s;
  }
  if (circular && first != 0 && prev != first) ++count;
  return count;
}

namespace {

// Bisection of the curvature radius on a bracket with strictly opposite
// end signs; returns the midpoint of the final interval.
double refine_radius_zero(const FourierSupport& p, double lo, double hi) {
  double flo = curvature_radius(p, lo);
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    double fmid = curvature_radius(p, mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> cusp_locations(const FourierSupport& p) {
  // The radius is identically zero exactly when the spectrum holds nothing
  // beyond first harmonics.
  if (p.degree() <= 1 && p.a0() == 0.0)
    throw std::domain_error("cusp_locations: curvature radius vanishes identically (point curve)");

  std::vector<double> r(kCuspGrid);
  double mx = 0.0;
  for (int j = 0; j < kCuspGrid; ++j) {
    r[j] = curvature_radius(p, kTwoPi * j / kCuspGrid);
    mx = std::max(mx, std::abs(r[j]));
  }
  if (mx == 0.0)
    throw std::domain_error("cusp_locations: curvature radius vanishes on the whole grid");
  const double tau = kSignDeadbandRel * mx;

  // Indices of samples with a definite sign, in circular order.
  std::vector<int> idx;
  for (int j = 0; j < kCuspGrid; ++j)
    if (std::abs(r[j]) > tau) idx.push_back(j);

  std::vector<double> zeros;
  for (size_t m = 0; m < idx.size(); ++m) {
    int i = idx[m];
    int j = idx[(m + 1) % idx.size()];
    if ((r[i] > 0.0) == (r[j] > 0.0)) continue;
    double lo = kTwoPi * i / kCuspGrid;
    double hi = kTwoPi * j / kCuspGrid;
    if (j <= i) hi += kTwoPi;
    double z = refine_radius_zero(p, lo, hi);
    if (z >= kTwoPi) z -= kTwoPi;
    zeros.push_back(z);
  }
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

int cusp_count(const FourierSupport& p) {
  return static_cast<int>(cusp_locations(p).size());
}

PlaneCurveSamples sample_curve(const FourierSupport& p, int n) {
  if (n < 8) throw std::invalid_argument("sample_curve: n must be >= 8");
  PlaneCurveSamples out;
  out.closed = true;
  out.points.reserve(n);
  out.params.reserve(n);
  std::vector<double> r(n);
  for (int i = 0; i < n; ++i) {
    double phi = kTwoPi * i / n;
    out.params.push_back(phi);
    out.points.push_back(curve_point(p, phi));
    r[i] = curvature_radius(p, phi);
  }
  out.cusp_flags.resize(n);
  for (int i = 0; i < n; ++i) out.cusp_flags[i] = r[i] * r[(i + 1) % n] < 0.0;
  return out;
}

}  // namespace hedgehog
