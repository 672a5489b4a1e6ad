#include "hedgehog/dynamics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace hedgehog {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double dominant_amplitude(const FourierSupport& p) {
  double m = std::abs(p.a0());
  for (const Harmonic& h : p.harmonics()) m = std::max(m, h.amplitude());
  return m;
}

std::optional<int> cusps_or_empty(const FourierSupport& p) {
  if (p.degree() <= 1 && p.a0() == 0.0) return std::nullopt;
  return cusp_count(p);
}

double wrap_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

}  // namespace

IterationTrace iterate(const FourierSupport& p, Angle alpha, int n,
                       IterMode mode) {
  if (n < 1) throw std::invalid_argument("iterate: n must be >= 1");
  if (dominant_amplitude(p) == 0.0)
    throw std::invalid_argument("iterate: degenerate support, all amplitudes zero");
  if ((mode == IterMode::involute || mode == IterMode::m_map) &&
      alpha.is_right_angle())
    throw std::domain_error("iterate: mode requires alpha != pi/2");

  IterationTrace trace;
  trace.alpha = alpha;
  trace.mode = mode;
  trace.steps.push_back({p, 1.0, amplitudes(p), cusps_or_empty(p)});

  for (int i = 0; i < n; ++i) {
    const FourierSupport& cur = trace.steps.back().support;
    FourierSupport next = mode == IterMode::evolute ? skew_evolute(cur, alpha)
                          : mode == IterMode::involute
                              ? skew_involute(cur, alpha).support
                              : m_map(cur, alpha);
    double dom = dominant_amplitude(next);
    if (dom == 0.0)
      throw std::domain_error("iterate: support collapsed to zero");
    double scale = 1.0 / dom;
    next = scaled(next, scale);
    trace.steps.push_back(
        {next, scale, amplitudes(next), cusps_or_empty(next)});
  }
  return trace;
}

double shape_distance(const FourierSupport& p, int d) {
  double ad = p.amplitude(d);
  if (ad == 0.0)
    throw std::domain_error("shape_distance: no amplitude at the reference order");
  double acc = 0.0;
  if (d != 0) acc += p.a0() * p.a0();
  for (const Harmonic& h : p.harmonics()) {
    if (h.k == d) continue;
    double a = h.amplitude();
    acc += a * a;
  }
  return std::sqrt(acc) / ad;
}

std::vector<int> cusp_growth(const FourierSupport& p, Angle alpha, int n) {
  IterationTrace trace = iterate(p, alpha, n, IterMode::evolute);
  std::vector<int> counts;
  counts.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const std::optional<int>& c = trace.steps[i].cusps;
    if (!c)
      throw std::domain_error("cusp_growth: iterate degenerated to a point curve");
    counts.push_back(*c);
  }
  return counts;
}

TorusState torus_state(const FourierSupport& p) {
  TorusState st;
  st.amplitudes = amplitudes(p);
  for (const Harmonic& h : p.harmonics()) {
    if (h.amplitude() == 0.0) continue;
    st.phases.push_back({h.k, wrap_2pi(std::arg(p.coefficient(h.k)))});
  }
  return st;
}

std::vector<TorusState> torus_orbit(const TorusState& state, Angle alpha,
                                    int n) {
  if (n < 1) throw std::invalid_argument("torus_orbit: n must be >= 1");
  std::vector<double> omega;
  omega.reserve(state.phases.size());
  for (const TorusPhase& ph : state.phases)
    omega.push_back(std::arg(m_multiplier(ph.k, alpha).factor));

  std::vector<TorusState> orbit;
  orbit.reserve(n + 1);
  orbit.push_back(state);
  for (int step = 1; step <= n; ++step) {
    TorusState next = orbit.back();
    for (size_t i = 0; i < next.phases.size(); ++i)
      next.phases[i].theta = wrap_2pi(next.phases[i].theta + omega[i]);
    orbit.push_back(std::move(next));
  }
  return orbit;
}

double equidistribution_stat(std::span<const TorusState> orbit, int max_freq) {
  if (orbit.size() < 16)
    throw std::invalid_argument("equidistribution_stat: need at least 16 orbit points");
  if (max_freq < 1)
    throw std::invalid_argument("equidistribution_stat: max_freq must be >= 1");
  const size_t d = orbit.front().phases.size();
  if (d == 0)
    throw std::invalid_argument("equidistribution_stat: empty torus state");
  if (d > 6)
    throw std::invalid_argument(
        "equidistribution_stat: enumeration is exponential in the factor count, at most 6 supported");
  for (const TorusState& st : orbit)
    if (st.phases.size() != d)
      throw std::invalid_argument("equidistribution_stat: inconsistent orbit states");

  const size_t n = orbit.size();
  const int base = 2 * max_freq + 1;
  size_t total = 1;
  for (size_t i = 0; i < d; ++i) total *= base;

  double worst = 0.0;
  std::vector<int> m(d);
  for (size_t code = 0; code < total; ++code) {
    size_t rem = code;
    bool zero = true;
    bool canonical_sign = false;  // first nonzero component positive
    for (size_t i = 0; i < d; ++i) {
      m[i] = static_cast<int>(rem % base) - max_freq;
      rem /= base;
      if (zero && m[i] != 0) {
        zero = false;
        canonical_sign = m[i] > 0;
      }
    }
    // Antipodal vectors give conjugate sums; enumerate one of each pair.
    if (zero || !canonical_sign) continue;

    std::complex<double> sum{0.0, 0.0};
    for (const TorusState& st : orbit) {
      double phase = 0.0;
      for (size_t i = 0; i < d; ++i) phase += m[i] * st.phases[i].theta;
      sum += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    worst = std::max(worst, std::abs(sum) / static_cast<double>(n));
  }
  return worst;
}

}  // namespace hedgehog
