#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hedgehog/geometry.hpp"
#include "hedgehog/transforms.hpp"
#include "test_util.hpp"

using namespace hedgehog;
using namespace hhtest;

namespace {

// Real 2x2 action of skew_evolute on the (cos k phi, sin k phi) plane,
// measured by transforming the basis supports.
struct Action2x2 {
  double m00, m01, m10, m11;
};

Action2x2 measure_action(int k, Angle alpha) {
  FourierSupport from_cos(0.0, {{k, 1.0, 0.0}});
  FourierSupport from_sin(0.0, {{k, 0.0, 1.0}});
  FourierSupport img_c = skew_evolute(from_cos, alpha);
  FourierSupport img_s = skew_evolute(from_sin, alpha);
  const Harmonic* hc = img_c.find(k);
  const Harmonic* hs = img_s.find(k);
  REQUIRE(hc != nullptr);
  REQUIRE(hs != nullptr);
  return {hc->c, hs->c, hc->s, hs->s};
}

double max_coeff_difference(const FourierSupport& a, const FourierSupport& b) {
  double worst = std::abs(a.a0() - b.a0());
  int top = std::max(a.degree(), b.degree());
  for (int k = 1; k <= top; ++k)
    worst = std::max(worst, std::abs(a.coefficient(k) - b.coefficient(k)));
  return worst;
}

}  // namespace

TEST_SUITE_BEGIN("transforms");

TEST_CASE("d_multiplier closed forms") {
  CHECK(d_multiplier(0, Angle(kPi / 3.0)).factor.real() ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d_multiplier(0, Angle(kPi / 3.0)).factor.imag() == 0.0);

  for (double a : {0.0, 0.3, 1.1, kPi / 2.0, 2.8}) {
    std::complex<double> f = d_multiplier(1, Angle(a)).factor;
    CHECK(f.real() == 1.0);  // exact: first harmonics are fixed
    CHECK(f.imag() == 0.0);
  }

  std::complex<double> f2 = d_multiplier(2, Angle(kPi / 4.0)).factor;
  CHECK(std::abs(f2) == doctest::Approx(std::sqrt(2.5)).epsilon(1e-14));
  CHECK(std::abs(f2) == doctest::Approx(1.581139).epsilon(1e-6));

  CHECK_THROWS_AS(d_multiplier(-1, Angle(0.3)), std::invalid_argument);
}

TEST_CASE("dilation modulus sqrt(1 + (k^2-1) sin^2 a) up to k = 64") {
  for (int k = 0; k <= 64; ++k) {
    for (int j = 0; j < 50; ++j) {
      double a = 0.05 + (kPi - 0.1) * j / 49.0;
      double expected = std::sqrt(1.0 + (static_cast<double>(k) * k - 1.0) *
                                            std::sin(a) * std::sin(a));
      CHECK(std::abs(std::abs(d_multiplier(k, Angle(a)).factor) - expected) <
            1e-12);
    }
  }
}

TEST_CASE("real 2x2 action: similarity structure and frame-rotated entries") {
  for (int k = 2; k <= 16; ++k) {
    for (double a : {0.2, 0.7, 1.2, 2.1}) {
      Angle alpha(a);
      Action2x2 m = measure_action(k, alpha);
      std::complex<double> f = d_multiplier(k, alpha).factor;

      // The action on (c, s) pairs is the similarity [x y; -y x] of the
      // complex factor x + iy.
      CHECK(std::abs(m.m00 - f.real()) < 1e-12);
      CHECK(std::abs(m.m11 - f.real()) < 1e-12);
      CHECK(std::abs(m.m01 - f.imag()) < 1e-12);
      CHECK(std::abs(m.m10 + f.imag()) < 1e-12);

      // Undoing the parameter-shift rotation e^{-i(k-1)a} leaves the
      // similarity with entries (cos^2 a + k sin^2 a, (k-1) cos a sin a).
      std::complex<double> rotated =
          f * std::complex<double>(std::cos((k - 1) * a), std::sin((k - 1) * a));
      CHECK(std::abs(rotated.real() - (std::cos(a) * std::cos(a) +
                                       k * std::sin(a) * std::sin(a))) < 1e-12);
      CHECK(std::abs(rotated.imag() - (k - 1) * std::cos(a) * std::sin(a)) <
            1e-12);
    }
  }
  // k = 1 is the exact identity.
  Action2x2 id = measure_action(1, Angle(0.9));
  CHECK(id.m00 == 1.0);
  CHECK(id.m11 == 1.0);
  CHECK(id.m01 == 0.0);
  CHECK(id.m10 == 0.0);
}

TEST_CASE("skew_evolute examples") {
  FourierSupport circle(1.0);
  FourierSupport half = skew_evolute(circle, Angle(kPi / 3.0));
  CHECK(half.a0() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(half.harmonics().empty());

  FourierSupport point = skew_evolute(circle, Angle(kPi / 2.0));
  CHECK(std::abs(point.a0()) < 1e-12);  // evolute of a circle is its center

  FourierSupport p(1.0, {{2, 0.2, 0.0}});
  FourierSupport q = skew_evolute(p, Angle(0.4));
  CHECK(q.a0() == doctest::Approx(std::cos(0.4)).epsilon(1e-15));
  double expected_amp =
      0.1 * std::sqrt(1.0 + 3.0 * std::sin(0.4) * std::sin(0.4));
  CHECK(q.amplitude(2) == doctest::Approx(expected_amp).epsilon(1e-13));
}

TEST_CASE("length scales by cos alpha") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> ang(0.05, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    FourierSupport p = random_support(rng, 8);
    Angle alpha(ang(rng));
    double lhs = signed_length(skew_evolute(p, alpha));
    double rhs = alpha.cos() * signed_length(p);
    CHECK(std::abs(lhs - rhs) <= 1e-14 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("skew_involute inverts the evolute") {
  FourierSupport half(0.5);
  InvoluteResult circle = skew_involute(half, Angle(kPi / 3.0));
  CHECK_FALSE(circle.one_parameter_family);
  CHECK(circle.support.a0() == doctest::Approx(1.0).epsilon(1e-14));

  std::mt19937 rng(41);
  FourierSupport p = random_support(rng, 8);
  Angle alpha(0.7);
  FourierSupport back = skew_involute(skew_evolute(p, alpha), alpha).support;
  CHECK(max_coeff_difference(p, back) < 1e-12);
}

TEST_CASE("skew_involute at the right angle") {
  FourierSupport q(0.0, {{2, 1.0, 0.0}});
  InvoluteResult res = skew_involute(q, Angle(kPi / 2.0));
  CHECK(res.one_parameter_family);
  CHECK(res.support.a0() == 0.0);
  // The evolute of the representative must reproduce q.
  FourierSupport round = skew_evolute(res.support, Angle(kPi / 2.0));
  for (int j = 0; j < 64; ++j) {
    double phi = kTwoPi * j / 64;
    CHECK(std::abs(round.evaluate(phi) - q.evaluate(phi)) < 1e-12);
  }
  // Closed form: dividing by e^{-i pi} (2i) sends cos(2 phi) to -sin(2 phi)/2.
  CHECK(res.support.amplitude(2) == doctest::Approx(0.25).epsilon(1e-12));
  const Harmonic* h = res.support.find(2);
  REQUIRE(h != nullptr);
  CHECK(std::abs(h->c) < 1e-12);
  CHECK(h->s == doctest::Approx(-0.5).epsilon(1e-12));

  FourierSupport bad(0.3, {{2, 1.0, 0.0}});
  CHECK_THROWS_AS(skew_involute(bad, Angle(kPi / 2.0)), std::domain_error);
}

TEST_CASE("m_multiplier fixed factors and the Gutkin angle") {
  CHECK(m_multiplier(1, Angle(0.6)).factor == std::complex<double>(1.0, 0.0));
  CHECK(m_multiplier(0, Angle(0.6)).factor == std::complex<double>(1.0, 0.0));

  Angle gutkin(std::atan(std::sqrt(5.0)));
  CHECK(std::abs(m_multiplier(4, gutkin).factor -
                 std::complex<double>(1.0, 0.0)) < 1e-12);

  CHECK_THROWS_AS(m_multiplier(3, Angle(kPi / 2.0)), std::domain_error);

  std::mt19937 rng(51);
  std::uniform_real_distribution<double> ang(0.05, 1.4);
  for (int k = 0; k <= 64; ++k) {
    double a = ang(rng);
    CHECK(std::abs(std::abs(m_multiplier(k, Angle(a)).factor) - 1.0) < 1e-12);
  }
}

TEST_CASE("m_map examples") {
  FourierSupport circle(1.0);
  FourierSupport still = m_map(circle, Angle(0.8));
  CHECK(still.a0() == 1.0);
  CHECK(still.harmonics().empty());

  FourierSupport fat(16.0, {{4, 1.0, 0.0}});
  Angle gutkin(std::atan(std::sqrt(5.0)));
  FourierSupport fixed = m_map(fat, gutkin);
  double worst = 0.0;
  for (int j = 0; j < 256; ++j) {
    double phi = kTwoPi * j / 256;
    worst = std::max(worst, std::abs(fixed.evaluate(phi) - fat.evaluate(phi)));
  }
  CHECK(worst <= 1e-9);

  FourierSupport p(1.0, {{2, 0.1, 0.0}});
  Angle alpha(0.5);
  FourierSupport q = m_map(p, alpha);
  CHECK(q.a0() == p.a0());
  CHECK(q.amplitude(2) == doctest::Approx(p.amplitude(2)).epsilon(1e-14));
  double got = std::arg(q.coefficient(2) / p.coefficient(2));
  double want = std::arg(m_multiplier(2, alpha).factor);
  CHECK(std::abs(std::remainder(got - want, kTwoPi)) < 1e-12);
}

TEST_CASE("m_map satisfies the first-order relation between p1 and p2") {
  std::mt19937 rng(61);
  FourierSupport p1 = random_support(rng, 6);
  double a = 0.62;
  double cot = std::cos(a) / std::sin(a);

  // Composition with +a: p2' + cot(a) p2 = -p1'(phi+2a) + cot(a) p1(phi+2a).
  FourierSupport p2 = m_map(p1, Angle(a));
  for (int j = 0; j < 128; ++j) {
    double phi = kTwoPi * j / 128;
    double lhs = p2.evaluate(phi, 1) + cot * p2.evaluate(phi);
    double rhs = -p1.evaluate(phi + 2 * a, 1) + cot * p1.evaluate(phi + 2 * a);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }

  // Composition with -a satisfies the (phi - 2a) form with the opposite
  // sign of cot(a): the same relation in the reversed orientation.
  FourierSupport p2r = m_map(p1, Angle(-a));
  for (int j = 0; j < 128; ++j) {
    double phi = kTwoPi * j / 128;
    double lhs = p2r.evaluate(phi, 1) - cot * p2r.evaluate(phi);
    double rhs = -p1.evaluate(phi - 2 * a, 1) - cot * p1.evaluate(phi - 2 * a);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }

  // Harmonic collocation of that first-order relation reproduces the same
  // per-harmonic factors.
  for (const Harmonic& h : p1.harmonics()) {
    std::complex<double> ik(0.0, h.k);
    std::complex<double> shift(std::cos(2.0 * h.k * a),
                               -std::sin(2.0 * h.k * a));
    std::complex<double> predicted = -(ik + cot) * shift / (ik - cot);
    std::complex<double> got = p2r.coefficient(h.k) / p1.coefficient(h.k);
    CHECK(std::abs(predicted - got) < 1e-12);
  }
}

TEST_CASE("commutation of evolutes, involutes and maps") {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> ang(0.1, 1.4);
  for (int trial = 0; trial < 10; ++trial) {
    FourierSupport p = random_support(rng, 8);
    Angle a(ang(rng));
    Angle b(ang(rng));

    CHECK(max_coeff_difference(skew_evolute(skew_evolute(p, a), b),
                               skew_evolute(skew_evolute(p, b), a)) < 1e-11);
    CHECK(max_coeff_difference(
              skew_involute(skew_involute(p, a).support, b).support,
              skew_involute(skew_involute(p, b).support, a).support) < 1e-11);
    CHECK(max_coeff_difference(m_map(m_map(p, a), b), m_map(m_map(p, b), a)) <
          1e-11);
  }
}

TEST_CASE("Steiner point is bit-identical under all three maps") {
  FourierSupport p(1.2, {{1, 0.3, -0.4}, {3, 0.2, 0.1}, {5, -0.05, 0.02}});
  Angle alpha(0.9);
  Point st = steiner_point(p);

  for (const FourierSupport& image :
       {skew_evolute(p, alpha), skew_involute(p, alpha).support,
        m_map(p, alpha)}) {
    Point st2 = steiner_point(image);
    CHECK(st2.x == st.x);
    CHECK(st2.y == st.y);
  }
}

TEST_CASE("integrals of the integrable map") {
  std::mt19937 rng(81);
  FourierSupport p = random_support(rng, 8);
  Angle alpha(0.77);
  FourierSupport q = m_map(p, alpha);

  CHECK(std::abs(signed_length(q) - signed_length(p)) < 1e-10);
  CHECK(std::abs(signed_area(q) - signed_area(p)) < 1e-10);
  CHECK(std::abs(radius_energy(q) - radius_energy(p)) < 1e-10);
  for (int k = 0; k <= p.degree(); ++k)
    CHECK(std::abs(q.amplitude(k) - p.amplitude(k)) < 1e-10);

  FourierSupport back = m_map(q, -alpha);
  CHECK(max_coeff_difference(p, back) < 1e-11);
}

TEST_CASE("tiny transformed harmonics are pruned, first harmonics kept") {
  FourierSupport p(1.0, {{1, 1e-20, 0.0}, {5, 1e-20, 0.0}});
  FourierSupport q = skew_evolute(p, Angle(0.5));
  CHECK(q.find(5) == nullptr);
  REQUIRE(q.find(1) != nullptr);
  CHECK(q.find(1)->c == 1e-20);
}

TEST_CASE("rotation-angle diagnostic") {
  for (int k = 0; k <= 16; ++k) {
    for (double a : {0.2, 0.5, 0.9, 1.3}) {
      MRotationReport rep = m_rotation_report(k, Angle(a));
      CHECK(std::abs(std::remainder(rep.composed - rep.shifted_frame, kTwoPi)) <
            1e-12);
      if (k == 1)
        CHECK(std::abs(std::remainder(rep.composed - rep.unshifted_frame,
                                      kTwoPi)) < 1e-12);
    }
  }
  // Away from k <= 1 the unshifted form disagrees.
  MRotationReport rep = m_rotation_report(2, Angle(0.5));
  CHECK(std::abs(std::remainder(rep.composed - rep.unshifted_frame, kTwoPi)) >
        0.1);
  // At a Gutkin angle the composed rotation vanishes mod 2 pi.
  MRotationReport gut = m_rotation_report(4, Angle(std::atan(std::sqrt(5.0))));
  CHECK(std::abs(std::remainder(gut.composed, kTwoPi)) < 1e-12);
}

TEST_SUITE_END();
