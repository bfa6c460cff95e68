#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohr/rootfind.hpp"

namespace bohr {

enum class Theorem { T31, T32, T33, T34, T35, T36 };

inline constexpr std::array<Theorem, 6> kAllTheorems = {Theorem::T31, Theorem::T32, Theorem::T33,
                                                        Theorem::T34, Theorem::T35, Theorem::T36};

std::string_view to_string(Theorem t);
/// Accepts "t31".."t36" (case-insensitive, optional dot: "T3.1").
std::optional<Theorem> parse_theorem(std::string_view text);

/// The (alpha, beta) weights of a two-parameter functional.
struct WeightPair {
  double alpha = 1.0;
  double beta = 1.0;
};

/// Empty string when admissible, otherwise the violated constraint.
std::string admissibility_violation(Theorem t, WeightPair w);
bool is_admissible(Theorem t, WeightPair w);
/// Throws DomainError naming the violated constraint.
void require_admissible(Theorem t, WeightPair w);

enum class Regime { Linear, Quadratic, MinR1, MinR3, ClosedForm, Constant, Cubic };
std::string_view to_string(Regime r);

struct RadiusCertificate {
  Theorem theorem = Theorem::T31;
  double value = 0.0;
  Regime regime = Regime::Quadratic;
  double residual = 0.0;
  std::optional<Bracket> bracket;  // empty for closed-form / constant branches
  std::vector<CertifiedRoot> components;  // every sub-root certified on the way
};

// Defining polynomials, all in the radius variable r.

/// 2 alpha r^2 + (2 beta + alpha) r - alpha
RealPolynomial r1_quadratic(WeightPair w);
/// 2 r^2 + (beta - 2 alpha - 1) r + alpha - beta
RealPolynomial r2_quadratic(WeightPair w);
/// (1 + 2 beta - 2 alpha) r^2 + (2 alpha + 2 beta) r - 1
RealPolynomial t31_polynomial(WeightPair w);
/// (1 - 2 beta) r^2 - (alpha + 2 beta + 1) r + alpha
RealPolynomial t32_polynomial(WeightPair w);
/// (4 - 2 alpha) r^3 + (2 + 2 beta - 3 alpha) r^2 - (2 beta + 2) r + alpha
RealPolynomial t33_cubic(WeightPair w);
/// alpha r^3 + alpha r^2 + (4 beta - alpha) r - alpha  (shared by T35 and T36)
RealPolynomial area_cubic(WeightPair w);

// Regime thresholds on beta.
inline double t31_branch_beta(double alpha) { return alpha - 0.5; }
inline double t32_branch_beta(double /*alpha*/) { return 0.5; }
inline double t35_branch_beta(double alpha) { return 8.0 * alpha / 9.0; }
inline double t36_branch_beta(double alpha) {
  const double s = 2.0 * alpha + 1.0;
  return 2.0 * alpha * alpha * (alpha + 1.0) * (alpha + 1.0) / (s * s);
}

inline constexpr double kRegimeTolerance = 1e-14;

struct Lemma24Roots {
  CertifiedRoot r1star;
  CertifiedRoot r2star;
};

/// Roots of both lemma quadratics in (0, 1/2); alpha in [4/5, 1], beta in (0, alpha).
Lemma24Roots lemma24_roots(WeightPair w);
/// Root of the first lemma quadratic on (0, 1/2); valid for any alpha, beta > 0.
CertifiedRoot r1_root(WeightPair w);

RadiusCertificate radius_t31(WeightPair w);
RadiusCertificate radius_t32(WeightPair w);
RadiusCertificate radius_t33(WeightPair w);
RadiusCertificate radius_t34(WeightPair w);
RadiusCertificate radius_t35(WeightPair w);
RadiusCertificate radius_t36(WeightPair w);
RadiusCertificate radius(Theorem t, WeightPair w);

/// Residual of a certificate's value against the defining equation of the
/// branch it reports, recomputed from scratch.
double defining_residual(const RadiusCertificate& c, WeightPair w);

/// Printed closed-form radicals versus the certified root.
struct CrosscheckReport {
  double closed = 0.0;   // the printed radical expression, evaluated verbatim
  double numeric = 0.0;  // certified bisection root
  double gap = 0.0;      // |closed - numeric|, NaN when closed is NaN
  double cardano = 0.0;  // generic trigonometric/Cardano engine on the same cubic
  double cardano_gap = 0.0;
};

/// T33 (r*3) or T35 (cubic branch only). Never throws on mismatch; throws
/// NotApplicable for other theorems or an inactive branch.
CrosscheckReport closed_form_crosscheck(Theorem t, WeightPair w);

}  // namespace bohr
