#include "hedgehog/gutkin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hedgehog {

namespace {

constexpr int kScanPoints = 10000;
constexpr double kRootSeparation = 1e-6;

double gutkin_form(int k, double a) {
  return std::sin(k * a) * std::cos(a) - k * std::cos(k * a) * std::sin(a);
}

// Bisects down to the last representable double; the residual of the
// pole-free form grows like k^2 times the abscissa error, so anything
// coarser leaves large-k roots above the 1e-12 residual bound.
double bisect_root(int k, double lo, double hi) {
  double flo = gutkin_form(k, lo);
  for (;;) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    double fmid = gutkin_form(k, mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return std::abs(gutkin_form(k, lo)) <= std::abs(gutkin_form(k, hi)) ? lo : hi;
}

}  // namespace

std::vector<GutkinRoot> gutkin_roots(int k) {
  if (k < 2 || k > 64)
    throw std::invalid_argument("gutkin_roots: k must be in [2, 64]");

  std::vector<double> found;
  auto push = [&found](double a) {
    if (found.empty() || std::abs(a - found.back()) > kRootSeparation)
      found.push_back(a);
  };

  double prev_a = 0.0;
  double prev_g = 0.0;
  bool have_prev = false;
  for (int j = 1; j <= kScanPoints; ++j) {
    double a = std::numbers::pi * j / (kScanPoints + 1);
    double g = gutkin_form(k, a);
    if (g == 0.0) {
      push(a);
      continue;
    }
    if (have_prev && (g > 0.0) != (prev_g > 0.0))
      push(bisect_root(k, prev_a, a));
    prev_a = a;
    prev_g = g;
    have_prev = true;
  }

  std::vector<GutkinRoot> roots;
  roots.reserve(found.size());
  for (double a : found) {
    GutkinRoot r;
    r.k = k;
    r.alpha = Angle(a);
    r.residual = std::abs(gutkin_form(k, a));
    r.degenerate = std::abs(a - 0.5 * std::numbers::pi) < 1e-9;
    roots.push_back(r);
  }
  return roots;
}

FourierSupport fattened_hypocycloid(int k, double c) {
  if (k < 2)
    throw std::invalid_argument("fattened_hypocycloid: k must be >= 2");
  if (!(c > static_cast<double>(k) * k - 1.0))
    throw std::domain_error(
        "fattened_hypocycloid: constant too small, curve would not be convex");
  return FourierSupport(c, {{k, 1.0, 0.0}});
}

double verify_invariant(const FourierSupport& p, Angle alpha) {
  const int n = 2048;
  FourierSupport q = m_map(p, alpha);
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    double phi = 2.0 * std::numbers::pi * j / n;
    worst = std::max(worst, std::abs(p.evaluate(phi) - q.evaluate(phi)));
  }
  return worst;
}

}  // namespace hedgehog
