#pragma once

#include "bohr/analytic.hpp"
#include "bohr/radii.hpp"

namespace bohr {

/// A Bohr-type left-hand side split into its named pieces.
///
///   T31: alpha|f(z)| + (1-alpha)|c0| + beta sum_{k>=1} |c_k| r^k
///   T32: alpha|f(z)|                 + beta sum_{k>=1} |c_k| r^k
///   T33, T34: alpha|f(z)| + beta sum_{k>=1} |f^{(k)}(z)/k!| r^k
///   T35: alpha sum_{k>=0} |c_k| r^k + beta S_r/pi
///   T36: T35 + (1-alpha)|c0|
///
/// Absent pieces are zero. For T35/T36 `series_term` carries the alpha-weighted
/// coefficient sum and `modulus_term` is zero.
struct FunctionalBreakdown {
  Theorem theorem = Theorem::T31;
  double total = 0.0;
  double modulus_term = 0.0;
  double constant_term = 0.0;
  double series_term = 0.0;
  double area_term = 0.0;
  double truncation_slack = 0.0;
};

/// Evaluates the functional at z (|z| = r). Rejects functions that fail
/// certify_bounded and inadmissible weights with DomainError.
FunctionalBreakdown bohr_lhs(Theorem t, const AnalyticFunction& f, complex z, WeightPair w);

/// Worst case of the functional over all f with |c0| = a at |z| = r.
/// T34 shares the T33 majorant; T36 is the T35 majorant plus (1-alpha) a.
double majorant(Theorem t, double a, double r, WeightPair w);

/// Numerator minus denominator of the majorant; <= 0 iff majorant <= 1.
double gap(Theorem t, double a, double r, WeightPair w);

/// Factor of the T31 gap: B1(a) = (1 - a) g(a).
double t31_g(double a, double r, WeightPair w);
/// u(r) = B2'(1).
double t32_u(double r, WeightPair w);
/// s(r) with B3''(a) = 2 r s(r).
double t33_s(double r, WeightPair w);
/// p(r) = B3'(1).
double t33_p(double r, WeightPair w);
/// q(r) = alpha r^2 - 2 r + alpha, with B3'(0) = (1 - 2r) q(r).
double t34_q(double r, WeightPair w);
/// phi(r) with B5''(1) = 2 r phi(r).
double area_phi(double r, WeightPair w);
/// Positivity certificate for r*1 > r*2: (4-2a) b^2 + 4 a^2 b + a(-a^2 + a + 2).
double lemma24_g(WeightPair w);

/// H(a, r): the T31 functional of the Moebius map with parameter a at z = -r.
double sharpness_fn(double a, double r, WeightPair w);
/// h(a) = numerator of H minus (1 - a^2 r^2) = (1 - a) rho(a).
double sharpness_h(double a, double r, WeightPair w);
double sharpness_rho(double a, double r, WeightPair w);

struct EnvelopeResult {
  double sup = 0.0;
  double argmax_a = 0.0;
};

inline constexpr double kEnvelopeAMax = 1.0 - 1e-9;
inline constexpr int kEnvelopeGrid = 512;

/// max over a in [0, 1 - 1e-9] of the majorant: 512-point scan, then
/// golden-section refinement around the best cell.
EnvelopeResult envelope_sup(Theorem t, double r, WeightPair w);

}  // namespace bohr
