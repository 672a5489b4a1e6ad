#pragma once

#include <complex>

#include "hedgehog/angle.hpp"
#include "hedgehog/fourier_support.hpp"

namespace hedgehog {

// Complex factor acting on the k-th harmonic plane: the new complex
// coefficient is factor * a_k.
struct HarmonicMultiplier {
  int k = 0;
  std::complex<double> factor{1.0, 0.0};
};

// Skew-evolute factor e^{-i k alpha} (cos alpha + i k sin alpha), the
// harmonic form of q(phi) = p(phi - alpha) cos alpha + p'(phi - alpha)
// sin alpha. Its modulus is sqrt(1 + (k^2 - 1) sin^2 alpha); k = 0 scales
// by cos alpha and k = 1 is fixed exactly.
HarmonicMultiplier d_multiplier(int k, Angle alpha);

// Integrable-map factor d(k, -alpha) / d(k, alpha). Unit modulus for every
// k, exactly 1 for k <= 1. Throws std::domain_error at alpha = pi/2 where
// the involute leg is not unique.
HarmonicMultiplier m_multiplier(int k, Angle alpha);

// Harmonic-wise skew evolute. Scales signed length by cos alpha and keeps
// the Steiner point bit-identical. Harmonics of order >= 2 whose amplitude
// falls below 1e-15 after the transform are pruned.
FourierSupport skew_evolute(const FourierSupport& p, Angle alpha);

struct InvoluteResult {
  FourierSupport support;
  // Set on the alpha = pi/2 branch, where the constant term is a free
  // parameter; the returned representative has a0 = 0.
  bool one_parameter_family = false;
};

// Harmonic-wise inverse of skew_evolute. Unique for alpha != pi/2. At
// alpha = pi/2 a closed involute exists only when a0(q) = 0 (vanishing
// signed length), in which case the whole one-parameter family is reported
// through the flag; otherwise throws std::domain_error.
InvoluteResult skew_involute(const FourierSupport& q, Angle alpha);

// The integrable map: skew evolute with -alpha of the skew involute with
// alpha, composed per harmonic. Preserves all amplitudes, signed length,
// signed area, radius energy and the Steiner point.
FourierSupport m_map(const FourierSupport& p, Angle alpha);

// Diagnostic for the rotation angle of m_map on the k-th harmonic plane.
// composed is the arg of the composed multiplier (canonical). The two
// closed-form candidates differ by the frame convention:
//   shifted_frame   = -2 (beta_k - k alpha)   (fixed basis; matches composed)
//   unshifted_frame =  2 (beta_k - alpha)     (parameter shift absorbed;
//                      matches only for k <= 1 or tan(k alpha) = k tan alpha)
// with beta_k = atan2(k sin alpha, cos alpha). All angles are wrapped to
// (-pi, pi].
struct MRotationReport {
  int k = 0;
  double beta_k = 0.0;
  double composed = 0.0;
  double shifted_frame = 0.0;
  double unshifted_frame = 0.0;
};
MRotationReport m_rotation_report(int k, Angle alpha);

}  // namespace hedgehog
