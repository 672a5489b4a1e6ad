#pragma once

#include <vector>

#include "hedgehog/angle.hpp"
#include "hedgehog/fourier_support.hpp"
#include "hedgehog/transforms.hpp"

namespace hedgehog {

// A solution of tan(k alpha) = k tan(alpha) in (0, pi), found on the
// pole-free form sin(k a) cos a - k cos(k a) sin a. Roots at alpha = pi/2
// are flagged degenerate: the involute leg of the integrable map is not
// unique there.
struct GutkinRoot {
  int k = 2;
  Angle alpha;
  double residual = 0.0;  // |sin(k a) cos a - k cos(k a) sin a| at the root
  bool degenerate = false;
};

// All roots in (0, pi), trivial endpoints excluded; 2 <= k <= 64.
std::vector<GutkinRoot> gutkin_roots(int k);

// p = c + cos(k phi); requires c > k^2 - 1 so the curvature radius stays
// positive (strictly convex curve).
FourierSupport fattened_hypocycloid(int k, double c);

// Sup-norm distance between p and m_map(p, alpha) on 2048 samples.
double verify_invariant(const FourierSupport& p, Angle alpha);

}  // namespace hedgehog
