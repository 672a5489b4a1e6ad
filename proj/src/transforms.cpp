#include "hedgehog/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hedgehog {

namespace {

// Amplitude threshold below which a transformed harmonic of order >= 2 is
// dropped, keeping the degree honest under iteration.
constexpr double kPruneThreshold = 1e-15;

template <class FactorFn>
FourierSupport apply_diagonal(const FourierSupport& p, FactorFn&& factor_of) {
  std::complex<double> f0 = factor_of(0);
  double a0 = p.a0() * f0.real();

  std::vector<Harmonic> hs;
  hs.reserve(p.harmonics().size());
  for (const Harmonic& h : p.harmonics()) {
    std::complex<double> f = factor_of(h.k);
    double c;
    double s;
    if (f.real() == 1.0 && f.imag() == 0.0) {
      c = h.c;
      s = h.s;
    } else {
      std::complex<double> b = f * std::complex<double>(0.5 * h.c, -0.5 * h.s);
      c = 2.0 * b.real();
      s = -2.0 * b.imag();
    }
    if (h.k >= 2 && 0.5 * std::hypot(c, s) < kPruneThreshold) continue;
    hs.push_back({h.k, c, s});
  }
  return FourierSupport(a0, std::move(hs));
}

}  // namespace

HarmonicMultiplier d_multiplier(int k, Angle alpha) {
  if (k < 0) throw std::invalid_argument("d_multiplier: k must be >= 0");
  if (k == 0) return {0, {alpha.cos(), 0.0}};
  if (k == 1) return {1, {1.0, 0.0}};
  double a = alpha.radians();
  std::complex<double> shift{std::cos(k * a), -std::sin(k * a)};
  std::complex<double> core{alpha.cos(), k * alpha.sin()};
  return {k, shift * core};
}

HarmonicMultiplier m_multiplier(int k, Angle alpha) {
  if (k < 0) throw std::invalid_argument("m_multiplier: k must be >= 0");
  if (alpha.is_right_angle())
    throw std::domain_error("m_multiplier: involute leg undefined at alpha = pi/2");
  if (k <= 1) return {k, {1.0, 0.0}};
  return {k, d_multiplier(k, -alpha).factor / d_multiplier(k, alpha).factor};
}

FourierSupport skew_evolute(const FourierSupport& p, Angle alpha) {
  return apply_diagonal(
      p, [alpha](int k) { return d_multiplier(k, alpha).factor; });
}

InvoluteResult skew_involute(const FourierSupport& q, Angle alpha) {
  if (alpha.is_right_angle()) {
    if (q.a0() != 0.0)
      throw std::domain_error(
          "skew_involute: no closed involute at alpha = pi/2, signed length is nonzero");
    FourierSupport p = apply_diagonal(q, [alpha](int k) {
      if (k == 0) return std::complex<double>{1.0, 0.0};
      return 1.0 / d_multiplier(k, alpha).factor;
    });
    return {std::move(p), true};
  }
  FourierSupport p = apply_diagonal(
      q, [alpha](int k) { return 1.0 / d_multiplier(k, alpha).factor; });
  return {std::move(p), false};
}

FourierSupport m_map(const FourierSupport& p, Angle alpha) {
  if (alpha.is_right_angle())
    throw std::domain_error("m_map: involute leg undefined at alpha = pi/2");
  return apply_diagonal(
      p, [alpha](int k) { return m_multiplier(k, alpha).factor; });
}

MRotationReport m_rotation_report(int k, Angle alpha) {
  double a = alpha.radians();
  double beta = std::atan2(k * std::sin(a), std::cos(a));
  auto wrap = [](double x) {
    double r = std::remainder(x, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    return r;
  };
  MRotationReport rep;
  rep.k = k;
  rep.beta_k = beta;
  rep.composed = std::arg(m_multiplier(k, alpha).factor);
  rep.shifted_frame = wrap(-2.0 * (beta - k * a));
  rep.unshifted_frame = wrap(2.0 * (beta - a));
  return rep;
}

}  // namespace hedgehog
