#include "hedgehog/fourier_support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hedgehog {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double Harmonic::amplitude() const { return 0.5 * std::hypot(c, s); }

FourierSupport::FourierSupport(double a0, std::vector<Harmonic> harmonics)
    : a0_(a0), harmonics_(std::move(harmonics)) {
  if (!std::isfinite(a0_))
    throw std::invalid_argument("FourierSupport: a0 must be finite");
  std::erase_if(harmonics_,
                [](const Harmonic& h) { return h.c == 0.0 && h.s == 0.0; });
  for (const Harmonic& h : harmonics_) {
    if (h.k < 1)
      throw std::invalid_argument("FourierSupport: harmonic order must be >= 1");
    if (!std::isfinite(h.c) || !std::isfinite(h.s))
      throw std::invalid_argument("FourierSupport: coefficients must be finite");
  }
  std::sort(harmonics_.begin(), harmonics_.end(),
            [](const Harmonic& a, const Harmonic& b) { return a.k < b.k; });
  auto dup = std::adjacent_find(
      harmonics_.begin(), harmonics_.end(),
      [](const Harmonic& a, const Harmonic& b) { return a.k == b.k; });
  if (dup != harmonics_.end())
    throw std::invalid_argument("FourierSupport: duplicate harmonic order");
}

double FourierSupport::evaluate(double phi, int order) const {
  switch (order) {
    case 0: {
      double v = a0_;
      for (const Harmonic& h : harmonics_)
        v += h.c * std::cos(h.k * phi) + h.s * std::sin(h.k * phi);
      return v;
    }
    case 1: {
      double v = 0.0;
      for (const Harmonic& h : harmonics_)
        v += h.k * (h.s * std::cos(h.k * phi) - h.c * std::sin(h.k * phi));
      return v;
    }
    case 2: {
      double v = 0.0;
      for (const Harmonic& h : harmonics_)
        v -= static_cast<double>(h.k) * h.k *
             (h.c * std::cos(h.k * phi) + h.s * std::sin(h.k * phi));
      return v;
    }
    default:
      throw std::invalid_argument("FourierSupport::evaluate: order must be 0, 1 or 2");
  }
}

std::complex<double> FourierSupport::coefficient(int k) const {
  if (k < 0)
    throw std::invalid_argument("FourierSupport::coefficient: k must be >= 0");
  if (k == 0) return {a0_, 0.0};
  const Harmonic* h = find(k);
  if (h == nullptr) return {0.0, 0.0};
  return {0.5 * h->c, -0.5 * h->s};
}

double FourierSupport::amplitude(int k) const {
  if (k == 0) return std::abs(a0_);
  const Harmonic* h = find(k);
  return h == nullptr ? 0.0 : h->amplitude();
}

const Harmonic* FourierSupport::find(int k) const {
  auto it = std::lower_bound(
      harmonics_.begin(), harmonics_.end(), k,
      [](const Harmonic& h, int order) { return h.k < order; });
  if (it == harmonics_.end() || it->k != k) return nullptr;
  return &*it;
}

AmplitudeVector amplitudes(const FourierSupport& p) {
  AmplitudeVector out;
  if (p.a0() != 0.0) out.push_back({0, std::abs(p.a0())});
  for (const Harmonic& h : p.harmonics()) {
    double a = h.amplitude();
    if (a > 0.0) out.push_back({h.k, a});
  }
  return out;
}

FourierSupport scaled(const FourierSupport& p, double factor) {
  std::vector<Harmonic> hs = p.harmonics();
  for (Harmonic& h : hs) {
    h.c *= factor;
    h.s *= factor;
  }
  return FourierSupport(p.a0() * factor, std::move(hs));
}

FourierSupport fourier_truncation(const std::function<double(double)>& f,
                                  int max_degree, int nodes, double cutoff) {
  if (max_degree < 0)
    throw std::invalid_argument("fourier_truncation: max_degree must be >= 0");
  if (nodes <= 2 * max_degree)
    throw std::invalid_argument("fourier_truncation: too few quadrature nodes");

  std::vector<double> samples(nodes);
  for (int j = 0; j < nodes; ++j) samples[j] = f(kTwoPi * j / nodes);

  double a0 = 0.0;
  for (double v : samples) a0 += v;
  a0 /= nodes;

  std::vector<Harmonic> hs;
  for (int k = 1; k <= max_degree; ++k) {
    double c = 0.0;
    double s = 0.0;
    for (int j = 0; j < nodes; ++j) {
      double phi = kTwoPi * j / nodes;
      c += samples[j] * std::cos(k * phi);
      s += samples[j] * std::sin(k * phi);
    }
    c *= 2.0 / nodes;
    s *= 2.0 / nodes;
    Harmonic h{k, c, s};
    if (h.amplitude() > cutoff) hs.push_back(h);
  }
  return FourierSupport(a0, std::move(hs));
}

}  // namespace hedgehog
