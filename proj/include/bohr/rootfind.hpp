#pragma once

#include <initializer_list>
#include <vector>

namespace bohr {

/// Closed interval [lo, hi] isolating a single real root.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Real polynomial with ascending coefficients c0 + c1 x + c2 x^2 + ...
class RealPolynomial {
public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> ascending);
  RealPolynomial(std::initializer_list<double> ascending);

  /// Builds c3 x^3 + c2 x^2 + c1 x + c0 (highest degree first, as written on paper).
  static RealPolynomial cubic(double c3, double c2, double c1, double c0);
  static RealPolynomial quadratic(double c2, double c1, double c0);

  double operator()(double x) const;
  RealPolynomial derivative() const;

  const std::vector<double>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Magnitude scale sum_i |c_i| max(1,|x|)^i used for zero tolerances at x.
  double magnitude(double x) const;

private:
  std::vector<double> coeffs_;
};

/// A root located by bisection and polished by Newton, with its residual.
struct CertifiedRoot {
  double value = 0.0;
  double residual = 0.0;  // |P(value)|
  Bracket bracket;        // final isolating interval
  int iterations = 0;
};

inline constexpr double kBracketWidth = 1e-13;
inline constexpr double kBisectionResidualGate = 1e-10;
inline constexpr double kCardanoResidualGate = 1e-9;
inline constexpr int kUniquenessScanPoints = 64;

/// All real roots of c2 x^2 + c1 x + c0, ascending. Double roots appear twice.
/// Throws InvalidInput if every coefficient is zero.
std::vector<double> solve_quadratic(double c2, double c1, double c0);

/// Unique root of p on the bracket. Requires a sign change (an endpoint whose
/// value is zero up to roundoff counts as a root) and at most one sign change
/// over a 64-interval scan.
CertifiedRoot bisect_unique_root(const RealPolynomial& p, Bracket bracket);

/// Real roots of c3 x^3 + c2 x^2 + c1 x + c0 by the depressed-cubic closed
/// form (trigonometric branch for three real roots), ascending.
std::vector<double> cardano_cubic(double c3, double c2, double c1, double c0);

}  // namespace bohr
