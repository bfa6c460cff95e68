#include "bohr/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Sign with values indistinguishable from zero (relative to the evaluation's
// rounding scale) mapped to 0.
int tolerant_sign(const RealPolynomial& p, double x) {
  const double v = p(x);
  if (std::abs(v) <= 64.0 * kEps * p.magnitude(x)) return 0;
  return sign_of(v);
}

double polish_once(const RealPolynomial& p, const RealPolynomial& dp, double x) {
  const double d = dp(x);
  if (d == 0.0 || !std::isfinite(d)) return x;
  return x - p(x) / d;
}

}  // namespace

RealPolynomial::RealPolynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

RealPolynomial::RealPolynomial(std::initializer_list<double> ascending)
    : RealPolynomial(std::vector<double>(ascending)) {}

RealPolynomial RealPolynomial::cubic(double c3, double c2, double c1, double c0) {
  return RealPolynomial({c0, c1, c2, c3});
}

RealPolynomial RealPolynomial::quadratic(double c2, double c1, double c0) {
  return RealPolynomial({c0, c1, c2});
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RealPolynomial({0.0});
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return RealPolynomial(std::move(d));
}

double RealPolynomial::magnitude(double x) const {
  const double ax = std::max(1.0, std::abs(x));
  double scale = 0.0;
  double pw = 1.0;
  for (double c : coeffs_) {
    scale += std::abs(c) * pw;
    pw *= ax;
  }
  return scale;
}

std::vector<double> solve_quadratic(double c2, double c1, double c0) {
  if (c2 == 0.0 && c1 == 0.0 && c0 == 0.0) {
    throw InvalidInput("solve_quadratic: all coefficients are zero");
  }
  if (c2 == 0.0) {
    if (c1 == 0.0) return {};
    return {-c0 / c1};
  }
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc < 0.0) return {};
  // Larger-magnitude root first; the other follows from the product c0/c2.
  const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
  if (q == 0.0) return {0.0, 0.0};
  double r1 = q / c2;
  double r2 = c0 / q;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

CertifiedRoot bisect_unique_root(const RealPolynomial& p, Bracket bracket) {
  if (!(bracket.lo < bracket.hi) || !std::isfinite(bracket.lo) || !std::isfinite(bracket.hi)) {
    throw InvalidInput("bisect_unique_root: bracket requires lo < hi");
  }
  int s_lo = tolerant_sign(p, bracket.lo);
  int s_hi = tolerant_sign(p, bracket.hi);
  if (s_lo == 0 && s_hi == 0) {
    throw BracketError("bisect_unique_root: polynomial vanishes at both bracket ends");
  }
  if (s_lo * s_hi > 0) {
    throw BracketError("bisect_unique_root: no sign change on [" + std::to_string(bracket.lo) +
                       ", " + std::to_string(bracket.hi) + "]");
  }

  int changes = 0;
  int last = 0;
  for (int i = 0; i <= kUniquenessScanPoints; ++i) {
    const double x = bracket.lo + bracket.width() * i / kUniquenessScanPoints;
    const int s = tolerant_sign(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  if (changes > 1) {
    throw NonUniqueRoot("bisect_unique_root: " + std::to_string(changes) +
                        " sign changes detected on the bracket");
  }

  // A zero endpoint takes the sign opposite to the other end so the root is
  // approached from inside the bracket.
  if (s_lo == 0) s_lo = -s_hi;
  if (s_hi == 0) s_hi = -s_lo;

  double lo = bracket.lo;
  double hi = bracket.hi;
  int iterations = 0;
  while (hi - lo > kBracketWidth && iterations < 400) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++iterations;
    const int s_mid = sign_of(p(mid));
    if (s_mid == 0) {
      lo = hi = mid;
      break;
    }
    if (s_mid == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  const RealPolynomial dp = p.derivative();
  double x = 0.5 * (lo + hi);
  double best = std::abs(p(x));
  for (int k = 0; k < 3 && best > 0.0; ++k) {
    const double next = polish_once(p, dp, x);
    if (!(next >= lo && next <= hi)) break;
    const double r = std::abs(p(next));
    if (r >= best) break;
    x = next;
    best = r;
  }

  if (best > kBisectionResidualGate) {
    throw CertificationError("bisect_unique_root: residual " + std::to_string(best) +
                             " exceeds gate");
  }
  if (lo == hi) {
    // Exact zero hit: report a minimal interval around it.
    lo = std::max(bracket.lo, x - 0.25 * kBracketWidth);
    hi = std::min(bracket.hi, x + 0.25 * kBracketWidth);
  }
  return CertifiedRoot{x, best, Bracket{lo, hi}, iterations};
}

std::vector<double> cardano_cubic(double c3, double c2, double c1, double c0) {
  if (c3 == 0.0) throw InvalidInput("cardano_cubic: leading coefficient is zero");
  const double b = c2 / c3;
  const double c = c1 / c3;
  const double d = c0 / c3;
  const double shift = b / 3.0;
  const double q = (b * b - 3.0 * c) / 9.0;
  const double r = (2.0 * b * b * b - 9.0 * b * c + 27.0 * d) / 54.0;
  const double q3 = q * q * q;
  const double disc = r * r - q3;

  std::vector<double> roots;
  if (disc < 0.0) {
    const double theta = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
    const double m = -2.0 * std::sqrt(q);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    roots = {m * std::cos(theta / 3.0) - shift, m * std::cos((theta + two_pi) / 3.0) - shift,
             m * std::cos((theta - two_pi) / 3.0) - shift};
  } else {
    double a = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(disc)), r);
    const double bb = (a != 0.0) ? q / a : 0.0;
    roots = {a + bb - shift};
    if (disc == 0.0 && a != 0.0) roots.push_back(-0.5 * (a + bb) - shift);
  }

  const RealPolynomial p = RealPolynomial::cubic(c3, c2, c1, c0);
  const RealPolynomial dp = p.derivative();
  for (double& x : roots) {
    for (int k = 0; k < 2; ++k) {
      const double next = polish_once(p, dp, x);
      if (std::isfinite(next) && std::abs(p(next)) < std::abs(p(x))) x = next;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace bohr
