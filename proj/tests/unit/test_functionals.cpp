#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bohr/errors.hpp"
#include "bohr/functionals.hpp"
#include "oracles.hpp"

using namespace bohr;

namespace {

// Derivative in a of gap(t, ., r, w) at x, from an exact polynomial fit on
// `deg + 1` equispaced nodes of [0, 1] (the gaps are polynomials in a).
double gap_derivative(Theorem t, double r, WeightPair w, int deg, int order, double x) {
  std::vector<long double> xs, ys;
  for (int i = 0; i <= deg; ++i) {
    const double a = static_cast<double>(i) / deg;
    xs.push_back(a);
    ys.push_back(gap(t, a, r, w));
  }
  return static_cast<double>(oracle::poly_derivative(oracle::poly_fit(xs, ys), order, x));
}

WeightPair random_pair(Theorem t, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    WeightPair w{0.05 + 0.95 * u(rng), 0.01 + 2.5 * u(rng)};
    if (t == Theorem::T34) w = {0.8 + 0.2 * u(rng), 0.0};
    if (t == Theorem::T34) w.beta = w.alpha * (0.01 + 0.98 * u(rng));
    if (is_admissible(t, w)) return w;
  }
}

double radius_cap(Theorem t, WeightPair w) {
  if (t == Theorem::T33 || t == Theorem::T34) return std::min(0.45, r1_root(w).value);
  return 0.45;
}

}  // namespace

TEST(BohrLhs, ConstantFunction) {
  const auto f = AnalyticFunction::polynomial({0.5});
  const auto b = bohr_lhs(Theorem::T31, f, 0.3, {0.7, 0.9});
  EXPECT_NEAR(b.total, 0.5, 1e-16);
  EXPECT_NEAR(b.modulus_term, 0.35, 1e-16);
  EXPECT_NEAR(b.constant_term, 0.15, 1e-16);
  EXPECT_EQ(b.series_term, 0.0);
}

TEST(BohrLhs, MoebiusAtNegativeRadius) {
  const WeightPair w{0.9, 0.6};
  const double a = 0.4, r = 0.3;
  const auto b = bohr_lhs(Theorem::T31, AnalyticFunction::moebius(a), -r, w);
  long double series = 0.0L;
  for (int k = 1; k < 400; ++k) series += std::fabs(oracle::moebius_coeff(a, k)) * std::pow(0.3L, k);
  const double ref = w.alpha * (a + r) / (1 + a * r) + (1 - w.alpha) * a + w.beta * static_cast<double>(series);
  EXPECT_NEAR(b.total, ref, 1e-14);
  EXPECT_NEAR(b.total, b.modulus_term + b.constant_term + b.series_term + b.area_term, 1e-15);
}

TEST(BohrLhs, AreaFunctionalsOnIdentity) {
  const auto f = AnalyticFunction::moebius(0.0);  // -z
  const WeightPair w{0.6, 0.8};
  const double r = 0.4;
  EXPECT_NEAR(bohr_lhs(Theorem::T35, f, r, w).total, w.alpha * r + w.beta * r * r, 1e-15);
  EXPECT_NEAR(bohr_lhs(Theorem::T36, f, r, w).total, w.alpha * r + w.beta * r * r, 1e-15);
  const WeightPair w33{0.6, 0.8};
  EXPECT_NEAR(bohr_lhs(Theorem::T33, f, complex(0.0, r), w33).total, (w33.alpha + w33.beta) * r, 1e-15);
}

TEST(BohrLhs, T36AddsConstantTerm) {
  const auto f = AnalyticFunction::moebius(0.5);
  const WeightPair w{0.6, 0.8};
  const auto b5 = bohr_lhs(Theorem::T35, f, 0.2, w);
  const auto b6 = bohr_lhs(Theorem::T36, f, 0.2, w);
  EXPECT_NEAR(b6.total - b5.total, (1 - w.alpha) * 0.5, 1e-15);
}

TEST(BohrLhs, Rejections) {
  const auto f = AnalyticFunction::moebius(0.2);
  EXPECT_THROW(bohr_lhs(Theorem::T31, AnalyticFunction::polynomial({0.0, 2.0}), 0.1, {1, 1}), DomainError);
  EXPECT_THROW(bohr_lhs(Theorem::T31, f, 0.1, {0.5, 0.5}), DomainError);
  EXPECT_THROW(bohr_lhs(Theorem::T33, f, 0.5, {1, 1}), DomainError);
  EXPECT_THROW(bohr_lhs(Theorem::T32, f, 1.0, {1, 1}), DomainError);
}

TEST(Majorant, EndpointValues) {
  const WeightPair w{1.0, 1.0};
  for (Theorem t : kAllTheorems) {
    if (t == Theorem::T34) continue;
    EXPECT_NEAR(majorant(t, 1.0, 0.3, w), 1.0, 1e-15) << to_string(t);
  }
  // a = 0 is the identity map's worst case
  EXPECT_NEAR(majorant(Theorem::T32, 0.0, 0.2, {0.5, 0.7}), 0.5 * 0.2 + 0.7 * 0.2 / 0.8, 1e-15);
  EXPECT_THROW(majorant(Theorem::T31, 1.1, 0.3, w), DomainError);
  EXPECT_THROW(majorant(Theorem::T31, 0.5, 1.0, w), DomainError);
  EXPECT_THROW(majorant(Theorem::T33, 0.5, 0.5, w), DomainError);
}

TEST(Gap, EndpointIdentities) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const WeightPair w{0.05 + 0.95 * u(rng), 0.01 + 2.0 * u(rng)};
    const double r = 0.49 * u(rng);
    const double a = u(rng);
    const double al = w.alpha;
    if (is_admissible(Theorem::T31, w)) {
      EXPECT_NEAR(gap(Theorem::T31, a, r, w), (1 - a) * t31_g(a, r, w), 1e-12);
      EXPECT_NEAR(sharpness_rho(1.0, r, w), t31_g(1.0, r, w), 1e-12);
    }
    EXPECT_NEAR(gap(Theorem::T32, 1.0, r, w), (al - 1) * (1 - r * r), 1e-12);
    EXPECT_NEAR(gap(Theorem::T33, 1.0, r, w), (al - 1) * (1 + r) * (1 + r) * (1 - 2 * r), 1e-12);
    const double m = (1 - r * r) * (1 - r * r);
    EXPECT_NEAR(gap(Theorem::T35, 1.0, r, w), (al - 1) * m, 1e-12);
    EXPECT_NEAR(gap(Theorem::T35, 1.0, r, {1.0, w.beta}), 0.0, 1e-12);
    EXPECT_NEAR(gap(Theorem::T36, 1.0, r, w), 0.0, 1e-12);
  }
}

TEST(Gap, DerivativeFactors) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const WeightPair w{0.05 + 0.95 * u(rng), 0.01 + 2.0 * u(rng)};
    const double r = 0.01 + 0.45 * u(rng);
    EXPECT_NEAR(gap_derivative(Theorem::T32, r, w, 3, 1, 1.0), t32_u(r, w), 1e-10);
    EXPECT_NEAR(gap_derivative(Theorem::T33, r, w, 2, 1, 1.0), t33_p(r, w), 1e-10);
    EXPECT_NEAR(gap_derivative(Theorem::T33, r, w, 2, 2, 0.5), 2 * r * t33_s(r, w), 1e-10);
    EXPECT_NEAR(gap_derivative(Theorem::T33, r, w, 2, 1, 0.0), (1 - 2 * r) * t34_q(r, w), 1e-10);
    EXPECT_NEAR(gap_derivative(Theorem::T35, r, w, 4, 2, 1.0), 2 * r * area_phi(r, w), 1e-10);
  }
}

TEST(Gap, SignMatchesMajorant) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Theorem t : kAllTheorems) {
    for (int i = 0; i < 300; ++i) {
      const WeightPair w = random_pair(t, rng);
      const double r = 0.49 * u(rng), a = u(rng);
      const double m = majorant(t, a, r, w);
      if (std::abs(m - 1.0) < 1e-12) continue;
      EXPECT_EQ(gap(t, a, r, w) <= 0.0, m <= 1.0);
    }
  }
}

TEST(Lemma24G, PositiveOnAdmissibleSquare) {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double a = 0.8 + 0.01 * i;
      EXPECT_GT(lemma24_g({a, a * j / 20.0}), 0.0);
    }
  }
  EXPECT_NEAR(lemma24_g({1.0, 0.0}), 2.0, 1e-15);
}

TEST(Sharpness, MatchesMoebiusFunctional) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const WeightPair w = random_pair(Theorem::T31, rng);
    const double a = 0.99 * u(rng), r = 0.9 * u(rng);
    const auto b = bohr_lhs(Theorem::T31, AnalyticFunction::moebius(a), -r, w);
    EXPECT_NEAR(sharpness_fn(a, r, w), b.total, 1e-12);
    EXPECT_NEAR(sharpness_h(a, r, w), (1 - a) * sharpness_rho(a, r, w), 1e-12);
  }
  EXPECT_NEAR(sharpness_fn(0.0, 0.3, {1.0, 1.0}), 0.3 + 0.3, 1e-15);
}

TEST(Envelope, DominatesDenseGrid) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Theorem t : kAllTheorems) {
    for (int i = 0; i < 10; ++i) {
      const WeightPair w = random_pair(t, rng);
      const double r = 0.49 * u(rng);
      const auto e = envelope_sup(t, r, w);
      double grid_max = 0.0;
      for (int k = 0; k <= 20000; ++k) grid_max = std::max(grid_max, majorant(t, kEnvelopeAMax * k / 20000.0, r, w));
      EXPECT_GE(e.sup, grid_max - 1e-12) << to_string(t);
      EXPECT_NEAR(majorant(t, e.argmax_a, r, w), e.sup, 1e-15);
    }
  }
}

TEST(Envelope, MonotoneInRadius) {
  std::mt19937_64 rng(14);
  for (Theorem t : kAllTheorems) {
    const WeightPair w = random_pair(t, rng);
    double prev = -1.0;
    for (int i = 0; i < 20; ++i) {
      const double r = 0.49 * i / 19.0;
      const double s = envelope_sup(t, r, w).sup;
      EXPECT_GE(s, prev - 1e-12) << to_string(t) << " r=" << r;
      prev = s;
    }
  }
}

TEST(Envelope, AtAndBelowRadius) {
  const WeightPair w{1.0, 1.0};
  const double r1 = radius_t31(w).value;
  EXPECT_NEAR(envelope_sup(Theorem::T31, r1, w).sup, 1.0, 1e-8);
  EXPECT_LE(envelope_sup(Theorem::T31, r1 - 1e-3, w).sup, 1.0 + 1e-9);
  EXPECT_LE(envelope_sup(Theorem::T35, 1.0 / 3.0, {1.0, 0.5}).sup, 1.0 + 1e-10);
  EXPECT_NEAR(envelope_sup(Theorem::T32, 0.0, {0.7, 1.0}).sup, 0.7 * kEnvelopeAMax, 1e-15);
}

TEST(Properties, MajorantDominatesFunctional) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto f = random_test_function(seed, 1 + static_cast<int>(seed % 6));
    const double c0 = std::abs(eval(f, 0.0));
    for (Theorem t : kAllTheorems) {
      const WeightPair w = random_pair(t, rng);
      const double r = radius_cap(t, w) * (0.02 + 0.98 * u(rng));
      const double bound = majorant(t, c0, r, w);
      for (int j = 0; j < 8; ++j) {
        const complex z = std::polar(r, 2 * M_PI * j / 8.0);
        const auto b = bohr_lhs(t, f, z, w);
        EXPECT_LE(b.total - b.truncation_slack, bound + 1e-12) << to_string(t) << " seed " << seed;
      }
    }
  }
}
