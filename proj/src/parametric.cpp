#include "hedgehog/parametric.hpp"

#include "hedgehog/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace hedgehog {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kStationaryDet = 1e-12;
constexpr double kCuspExclusionRadius = 0.01;

double det(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double norm(Point a) { return std::hypot(a.x, a.y); }

Point rotate(Point v, double ca, double sa) {
  return {v.x * ca - v.y * sa, v.x * sa + v.y * ca};
}

template <class F>
double bisect(F&& f, double lo, double hi, double width) {
  double flo = f(lo);
  while (hi - lo > width) {
    double mid = 0.5 * (lo + hi);
    double fmid = f(mid);
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

ParametricCurve::ParametricCurve(double t0, double t1, Map position,
                                 Map velocity, Map acceleration, bool closed)
    : t0_(t0),
      t1_(t1),
      position_(std::move(position)),
      velocity_(std::move(velocity)),
      acceleration_(std::move(acceleration)),
      closed_(closed) {
  if (!(t1_ > t0_))
    throw std::invalid_argument("ParametricCurve: empty parameter interval");
  if (!position_ || !velocity_ || !acceleration_)
    throw std::invalid_argument("ParametricCurve: missing evaluator");

  const int grid = 1024;
  const double span = t1_ - t0_;
  const double h = 1e-5 * span;
  double min_speed = 0.0;
  double max_speed = 0.0;
  double max_acc = 0.0;
  double worst_fd = 0.0;
  for (int j = 0; j < grid; ++j) {
    double t = t0_ + (j + 0.5) * span / grid;
    double speed = norm(velocity_(t));
    if (j == 0) min_speed = speed;
    min_speed = std::min(min_speed, speed);
    max_speed = std::max(max_speed, speed);
    Point a = acceleration_(t);
    max_acc = std::max(max_acc, norm(a));
    Point vp = velocity_(t + h);
    Point vm = velocity_(t - h);
    Point fd{(vp.x - vm.x) / (2.0 * h), (vp.y - vm.y) / (2.0 * h)};
    worst_fd = std::max(worst_fd, std::hypot(fd.x - a.x, fd.y - a.y));
  }
  if (worst_fd > 1e-6 * std::max(1.0, max_acc))
    throw std::invalid_argument(
        "ParametricCurve: acceleration inconsistent with the velocity");
  regular_ = max_speed > 0.0 && min_speed > 1e-9 * max_speed;
}

void ParametricCurve::set_signed_radius(Map1d radius, Map1d radius_deriv) {
  radius_ = std::move(radius);
  radius_deriv_ = std::move(radius_deriv);
  // With the signed radius available, regularity is decidable: the speed
  // is |r|, so the curve is regular exactly when r keeps one sign.
  const int grid = 1024;
  double mx = 0.0;
  double mn = 1e300;
  bool sign_change = false;
  double prev = 0.0;
  for (int j = 0; j <= grid; ++j) {
    double r = radius_(t0_ + (t1_ - t0_) * j / grid);
    mx = std::max(mx, std::abs(r));
    mn = std::min(mn, std::abs(r));
    if (j > 0 && r * prev < 0.0) sign_change = true;
    prev = r;
  }
  regular_ = !sign_change && mx > 0.0 && mn > 1e-12 * mx;
}

void ParametricCurve::check_domain(double t) const {
  if (closed_) return;
  double slack = 1e-9 * (t1_ - t0_);
  if (t < t0_ - slack || t > t1_ + slack)
    throw std::invalid_argument("ParametricCurve: parameter outside domain");
}

Point ParametricCurve::position(double t) const {
  check_domain(t);
  return position_(t);
}

Point ParametricCurve::velocity(double t) const {
  check_domain(t);
  return velocity_(t);
}

Point ParametricCurve::acceleration(double t) const {
  check_domain(t);
  return acceleration_(t);
}

ParametricCurve from_support(const FourierSupport& p) {
  // Series of the curvature radius: r = p + p'' termwise.
  std::vector<Harmonic> rh;
  for (const Harmonic& h : p.harmonics()) {
    double w = 1.0 - static_cast<double>(h.k) * h.k;
    if (w == 0.0) continue;
    rh.push_back({h.k, w * h.c, w * h.s});
  }
  FourierSupport radius(p.a0(), std::move(rh));

  auto pos = [p](double phi) { return curve_point(p, phi); };
  auto vel = [radius](double phi) {
    double r = radius.evaluate(phi);
    return Point{-r * std::sin(phi), r * std::cos(phi)};
  };
  auto acc = [radius](double phi) {
    double r = radius.evaluate(phi);
    double dr = radius.evaluate(phi, 1);
    return Point{-dr * std::sin(phi) - r * std::cos(phi),
                 dr * std::cos(phi) - r * std::sin(phi)};
  };
  ParametricCurve curve(0.0, kTwoPi, pos, vel, acc, /*closed=*/true);
  curve.set_signed_radius(
      [radius](double phi) { return radius.evaluate(phi); },
      [radius](double phi) { return radius.evaluate(phi, 1); });
  return curve;
}

ParametricCurve curve_from_open_support(const OpenSupport& s) {
  if (!s.value || !s.deriv || !s.deriv2)
    throw std::invalid_argument("curve_from_open_support: need p, p' and p''");
  if (!s.deriv3)
    throw std::invalid_argument(
        "curve_from_open_support: need p''' for the closed-form acceleration");
  auto pos = [s](double t) {
    double v = s.value(t);
    double d = s.deriv(t);
    return Point{v * std::cos(t) - d * std::sin(t),
                 v * std::sin(t) + d * std::cos(t)};
  };
  auto vel = [s](double t) {
    double r = s.value(t) + s.deriv2(t);
    return Point{-r * std::sin(t), r * std::cos(t)};
  };
  auto acc = [s](double t) {
    double r = s.value(t) + s.deriv2(t);
    double dr = s.deriv(t) + s.deriv3(t);
    return Point{-dr * std::sin(t) - r * std::cos(t),
                 dr * std::cos(t) - r * std::sin(t)};
  };
  ParametricCurve curve(s.t0, s.t1, pos, vel, acc, /*closed=*/false);
  curve.set_signed_radius(
      [s](double t) { return s.value(t) + s.deriv2(t); },
      [s](double t) { return s.deriv(t) + s.deriv3(t); });
  return curve;
}

OpenSupport cycloid_support(double t0, double t1) {
  OpenSupport s;
  s.t0 = t0;
  s.t1 = t1;
  s.value = [](double t) { return -t * std::cos(t); };
  s.deriv = [](double t) { return -std::cos(t) + t * std::sin(t); };
  s.deriv2 = [](double t) { return 2.0 * std::sin(t) + t * std::cos(t); };
  s.deriv3 = [](double t) { return 3.0 * std::cos(t) - t * std::sin(t); };
  return s;
}

OpenSupport logspiral_support(double c, double t0, double t1) {
  OpenSupport s;
  s.t0 = t0;
  s.t1 = t1;
  s.value = [c](double t) { return std::exp(c * t); };
  s.deriv = [c](double t) { return c * std::exp(c * t); };
  s.deriv2 = [c](double t) { return c * c * std::exp(c * t); };
  s.deriv3 = [c](double t) { return c * c * c * std::exp(c * t); };
  return s;
}

ParametricCurve parabola_curve(double t0, double t1) {
  return ParametricCurve(
      t0, t1, [](double t) { return Point{t, 0.5 * t * t}; },
      [](double t) { return Point{1.0, t}; },
      [](double) { return Point{0.0, 1.0}; });
}

OrientedLine rotated_tangent(const ParametricCurve& curve, double t,
                             Angle alpha) {
  curve.check_domain(t);
  Point v = curve.velocity(t);
  double speed = norm(v);
  if (speed == 0.0)
    throw std::domain_error("rotated_tangent: stationary point, tangent undefined");
  Point tau{v.x / speed, v.y / speed};
  return {curve.position(t), rotate(tau, alpha.cos(), alpha.sin())};
}

Point envelope_point(const ParametricCurve& curve, double t, Angle alpha) {
  curve.check_domain(t);
  Point v = curve.velocity(t);
  double speed = norm(v);
  if (speed == 0.0)
    throw std::domain_error("envelope_point: stationary point");
  Point tau{v.x / speed, v.y / speed};
  Point a = curve.acceleration(t);
  double an = dot(a, tau);
  Point tau_dot{(a.x - an * tau.x) / speed, (a.y - an * tau.y) / speed};

  double ca = alpha.cos();
  double sa = alpha.sin();
  Point u = rotate(tau, ca, sa);
  Point u_dot = rotate(tau_dot, ca, sa);

  double denom = det(u_dot, u);
  if (std::abs(denom) < kStationaryDet)
    throw std::domain_error("envelope_point: stationary tangent line family");
  double s = -det(v, u) / denom;
  Point base = curve.position(t);
  return {base.x + s * u.x, base.y + s * u.y};
}

double curvature_radius_param(const ParametricCurve& curve, double t) {
  if (curve.signed_radius()) return curve.signed_radius()(t);
  Point v = curve.velocity(t);
  Point a = curve.acceleration(t);
  double d = det(v, a);
  if (d == 0.0)
    throw std::domain_error("curvature_radius_param: vanishing curvature");
  double speed = norm(v);
  return speed * speed * speed / d;
}

double turning_rate(const ParametricCurve& curve, double t) {
  Point v = curve.velocity(t);
  Point a = curve.acceleration(t);
  double speed = norm(v);
  if (speed == 0.0)
    throw std::domain_error("turning_rate: stationary point");
  return det(v, a) / (speed * speed);
}

double image_cusp_function(const ParametricCurve& curve, double t,
                           Angle alpha) {
  if (curve.signed_radius() && curve.signed_radius_deriv())
    return curve.signed_radius()(t) * alpha.cos() +
           curve.signed_radius_deriv()(t) * alpha.sin();
  // Generic route: r cos(alpha) dphi/dt + (dr/dt) sin(alpha), a positive
  // multiple of the criterion as long as the curve turns monotonically.
  double span = curve.t1() - curve.t0();
  double dt = 1e-6 * span;
  double lo = std::max(curve.t0(), t - dt);
  double hi = std::min(curve.t1(), t + dt);
  double drdt = (curvature_radius_param(curve, hi) -
                 curvature_radius_param(curve, lo)) /
                (hi - lo);
  return curvature_radius_param(curve, t) * alpha.cos() * turning_rate(curve, t) +
         drdt * alpha.sin();
}

namespace {

std::vector<double> sign_change_parameters(
    const ParametricCurve& curve, const std::function<double(double)>& f,
    int grid) {
  if (grid < 16) throw std::invalid_argument("sign scan: grid too small");
  const double span = curve.t1() - curve.t0();
  const int count = curve.closed() ? grid : grid - 1;
  std::vector<double> zeros;
  double prev_t = curve.t0();
  double prev_v = f(prev_t);
  for (int j = 1; j <= count; ++j) {
    double t = curve.t0() + span * j / (curve.closed() ? grid : grid - 1);
    double v = f(t);
    if (prev_v == 0.0) {
      zeros.push_back(prev_t);
    } else if (v != 0.0 && (v > 0.0) != (prev_v > 0.0)) {
      zeros.push_back(bisect(f, prev_t, t, 1e-9 * span));
    }
    prev_t = t;
    prev_v = v;
  }
  return zeros;
}

}  // namespace

std::vector<double> image_cusp_parameters(const ParametricCurve& curve,
                                          Angle alpha, int grid) {
  return sign_change_parameters(
      curve, [&](double t) { return image_cusp_function(curve, t, alpha); },
      grid);
}

std::vector<double> curve_cusp_parameters(const ParametricCurve& curve,
                                          int grid) {
  if (!curve.signed_radius()) return {};  // regular curves have no cusps
  return sign_change_parameters(
      curve, [&](double t) { return curve.signed_radius()(t); }, grid);
}

PlaneCurveSamples skew_evolute_numeric(const ParametricCurve& curve,
                                       Angle alpha, int n) {
  if (n < 16)
    throw std::invalid_argument("skew_evolute_numeric: n must be >= 16");
  const double span = curve.t1() - curve.t0();
  PlaneCurveSamples out;
  for (int i = 0; i < n; ++i) {
    double t = curve.closed() ? curve.t0() + span * i / n
                              : curve.t0() + span * i / (n - 1);
    try {
      Point e = envelope_point(curve, t, alpha);
      out.points.push_back(e);
      out.params.push_back(t);
    } catch (const std::domain_error&) {
      // Degenerate sample: leave a gap.
    }
  }
  out.closed = curve.closed() && out.points.size() == static_cast<size_t>(n);

  size_t kept = out.points.size();
  if (kept >= 2) {
    size_t flags = out.closed ? kept : kept - 1;
    out.cusp_flags.resize(flags);
    for (size_t i = 0; i < flags; ++i) {
      double a = image_cusp_function(curve, out.params[i], alpha);
      double b = image_cusp_function(curve, out.params[(i + 1) % kept], alpha);
      out.cusp_flags[i] = a * b < 0.0;
    }
  }
  return out;
}

OpenSupport open_support_evolute(const OpenSupport& p, Angle alpha) {
  if (!p.value || !p.deriv)
    throw std::invalid_argument("open_support_evolute: need p and p'");
  const double a = alpha.radians();
  const double ca = alpha.cos();
  const double sa = alpha.sin();
  const double lo = p.t0;
  const double hi = p.t1;
  auto shifted = [a, lo, hi](double phi) {
    double t = phi - a;
    double slack = 1e-9 * (hi - lo);
    if (t < lo - slack || t > hi + slack)
      throw std::domain_error("open_support_evolute: outside the shifted domain");
    return t;
  };

  OpenSupport q;
  q.t0 = p.t0 + a;
  q.t1 = p.t1 + a;
  q.value = [p, shifted, ca, sa](double phi) {
    double t = shifted(phi);
    return p.value(t) * ca + p.deriv(t) * sa;
  };
  if (p.deriv2)
    q.deriv = [p, shifted, ca, sa](double phi) {
      double t = shifted(phi);
      return p.deriv(t) * ca + p.deriv2(t) * sa;
    };
  if (p.deriv2 && p.deriv3)
    q.deriv2 = [p, shifted, ca, sa](double phi) {
      double t = shifted(phi);
      return p.deriv2(t) * ca + p.deriv3(t) * sa;
    };
  return q;
}

std::optional<double> spiral_pair_congruence(double b1, double b2,
                                             Angle alpha) {
  if (b1 == b2)
    throw std::invalid_argument("spiral_pair_congruence: exponents must differ");
  const double a = alpha.radians();
  const double u1 = alpha.cos() + b1 * alpha.sin();
  const double u2 = alpha.cos() + b2 * alpha.sin();
  if (u1 <= 0.0 || u2 <= 0.0)
    throw std::domain_error("spiral_pair_congruence: nonpositive base");

  double residual = b2 * std::log(u1) - b1 * std::log(u2);
  if (std::abs(residual) > 1e-10) return std::nullopt;

  double psi;
  if (b1 != 0.0)
    psi = a - std::log(u1) / b1;
  else
    psi = a - std::log(u2) / b2;

  // Both exponentials must be shifted consistently.
  for (double b : {b1, b2}) {
    double base = alpha.cos() + b * alpha.sin();
    if (std::abs(std::exp(-b * a) * base - std::exp(-b * psi)) > 1e-10)
      return std::nullopt;
  }
  return psi;
}

namespace {

double circular_distance(double x, double y) {
  return std::abs(std::remainder(x - y, kTwoPi));
}

}  // namespace

double oracle_deviation(const FourierSupport& p, Angle alpha, int n) {
  if (n < 64) throw std::invalid_argument("oracle_deviation: n must be >= 64");
  if (p.is_zero())
    throw std::invalid_argument("oracle_deviation: degenerate support");

  FourierSupport q = skew_evolute(p, alpha);
  ParametricCurve curve = from_support(p);

  std::vector<double> excluded;
  if (!(p.degree() <= 1 && p.a0() == 0.0))
    excluded = cusp_locations(p);
  if (!(q.degree() <= 1 && q.a0() == 0.0)) {
    for (double psi : cusp_locations(q)) {
      double t = std::fmod(psi - alpha.radians(), kTwoPi);
      if (t < 0.0) t += kTwoPi;
      excluded.push_back(t);
    }
  }

  double worst = 0.0;
  int used = 0;
  for (int i = 0; i < n; ++i) {
    double t = kTwoPi * i / n;
    bool skip = false;
    for (double c : excluded)
      if (circular_distance(t, c) < kCuspExclusionRadius) {
        skip = true;
        break;
      }
    if (skip) continue;
    Point e;
    try {
      e = envelope_point(curve, t, alpha);
    } catch (const std::domain_error&) {
      continue;
    }
    Point target = curve_point(q, t + alpha.radians());
    worst = std::max(worst, std::hypot(e.x - target.x, e.y - target.y));
    ++used;
  }
  if (used == 0)
    throw std::domain_error("oracle_deviation: every sample was degenerate or excluded");
  return worst;
}

}  // namespace hedgehog
