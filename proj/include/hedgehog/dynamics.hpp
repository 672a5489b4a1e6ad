#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hedgehog/angle.hpp"
#include "hedgehog/fourier_support.hpp"
#include "hedgehog/geometry.hpp"
#include "hedgehog/transforms.hpp"

namespace hedgehog {

enum class IterMode { evolute, involute, m_map };

struct IterationStep {
  FourierSupport support;  // renormalized
  // Factor that was multiplied into the raw transform result; divide the
  // stored coefficients by it to recover the unnormalized step.
  double scale = 1.0;
  AmplitudeVector amplitudes;
  // Empty when the step is a point curve (radius identically zero).
  std::optional<int> cusps;
};

struct IterationTrace {
  Angle alpha;
  IterMode mode = IterMode::evolute;
  std::vector<IterationStep> steps;  // steps[0] is the initial state
};

// Applies the chosen transform n times, renormalizing each step by the
// dominant amplitude: the dilation coefficients grow like k per step and
// overflow within ~60 iterations at moderate degree, and shape is
// scale-invariant. Involute and m_map modes reject alpha = pi/2.
IterationTrace iterate(const FourierSupport& p, Angle alpha, int n,
                       IterMode mode);

// Relative non-d spectral energy sqrt(sum_{k != d} |a_k|^2) / |a_d|;
// zero exactly for a pure hypocycloid of order d.
double shape_distance(const FourierSupport& p, int d);

// Cusp count of each evolute iterate (n entries, initial state excluded).
std::vector<int> cusp_growth(const FourierSupport& p, Angle alpha, int n);

struct TorusPhase {
  int k = 1;
  double theta = 0.0;  // in [0, 2pi)
};

// A point of the torus of hedgehogs with fixed harmonic amplitudes.
struct TorusState {
  std::vector<TorusPhase> phases;
  AmplitudeVector amplitudes;
};

// Phases and amplitudes of the harmonics (k >= 1) present in p.
TorusState torus_state(const FourierSupport& p);

// n steps of the torus rotation induced by m_map: phase k advances by
// arg(m_multiplier(k, alpha)) per step. Returns n+1 states including the
// initial one.
std::vector<TorusState> torus_orbit(const TorusState& state, Angle alpha,
                                    int n);

// Maximum Weyl-sum modulus (1/N) |sum_n e^{i m . theta(n)}| over nonzero
// integer frequency vectors with |m|_inf <= max_freq. Values near zero
// indicate equidistribution. The enumeration is exponential in the number
// of torus factors; at most 6 factors are accepted.
double equidistribution_stat(std::span<const TorusState> orbit,
                             int max_freq = 3);

}  // namespace hedgehog
