#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hedgehog {

// One real harmonic c*cos(k*phi) + s*sin(k*phi).
struct Harmonic {
  int k = 1;
  double c = 0.0;
  double s = 0.0;

  // |a_k| = sqrt(c^2 + s^2) / 2 in the complex coefficient convention.
  double amplitude() const;
};

struct AmplitudeEntry {
  int k = 0;
  double amplitude = 0.0;
};
using AmplitudeVector = std::vector<AmplitudeEntry>;

// Truncated real Fourier series of a support function:
//
//   p(phi) = a0 + sum_k [ c_k cos(k phi) + s_k sin(k phi) ],  k >= 1.
//
// The complex view is a_k = (c_k - i s_k)/2 with a_{-k} = conj(a_k) and
// a_0 = a0, so p(phi) = sum_{k in Z} a_k e^{i k phi} is real by
// construction. Values are immutable after construction; harmonics are
// stored sorted by k with distinct orders, and exactly-zero harmonics are
// dropped.
class FourierSupport {
 public:
  FourierSupport() = default;
  explicit FourierSupport(double a0, std::vector<Harmonic> harmonics = {});

  double a0() const { return a0_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }

  // Largest harmonic order present; 0 for a circle or the zero function.
  int degree() const { return harmonics_.empty() ? 0 : harmonics_.back().k; }
  bool is_zero() const { return a0_ == 0.0 && harmonics_.empty(); }

  // p(phi), p'(phi) or p''(phi) by exact termwise differentiation.
  double evaluate(double phi, int order = 0) const;

  // Complex coefficient a_k for k >= 0.
  std::complex<double> coefficient(int k) const;

  // |a_k|; zero for absent harmonics.
  double amplitude(int k) const;

  const Harmonic* find(int k) const;

 private:
  double a0_ = 0.0;
  std::vector<Harmonic> harmonics_;
};

// All nonzero amplitudes, k = 0 entry first when a0 != 0.
AmplitudeVector amplitudes(const FourierSupport& p);

FourierSupport scaled(const FourierSupport& p, double factor);

// Fourier truncation of a 2pi-periodic function through an n-node discrete
// quadrature of the coefficient integrals. Harmonics above max_degree are
// discarded, as are harmonics with amplitude below cutoff.
FourierSupport fourier_truncation(const std::function<double(double)>& f,
                                  int max_degree, int nodes = 4096,
                                  double cutoff = 0.0);

}  // namespace hedgehog
