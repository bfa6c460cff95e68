#include "bohr/radii.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt_pair(WeightPair w) {
  std::ostringstream os;
  os.precision(17);
  os << "(alpha=" << w.alpha << ", beta=" << w.beta << ")";
  return os.str();
}

RadiusCertificate from_root(Theorem t, Regime regime, const CertifiedRoot& root) {
  RadiusCertificate c;
  c.theorem = t;
  c.value = root.value;
  c.regime = regime;
  c.residual = root.residual;
  c.bracket = root.bracket;
  c.components.push_back(root);
  return c;
}

RadiusCertificate closed_value(Theorem t, Regime regime, double value, double residual) {
  RadiusCertificate c;
  c.theorem = t;
  c.value = value;
  c.regime = regime;
  c.residual = residual;
  return c;
}

}  // namespace

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::T31: return "t31";
    case Theorem::T32: return "t32";
    case Theorem::T33: return "t33";
    case Theorem::T34: return "t34";
    case Theorem::T35: return "t35";
    case Theorem::T36: return "t36";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view text) {
  std::string key;
  for (char ch : text) {
    if (ch == '.') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  for (Theorem t : kAllTheorems) {
    if (key == to_string(t)) return t;
  }
  return std::nullopt;
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Linear: return "linear";
    case Regime::Quadratic: return "quadratic";
    case Regime::MinR1: return "min-r1star";
    case Regime::MinR3: return "min-r3star";
    case Regime::ClosedForm: return "closed-form";
    case Regime::Constant: return "constant";
    case Regime::Cubic: return "cubic";
  }
  return "?";
}

std::string admissibility_violation(Theorem t, WeightPair w) {
  const double a = w.alpha;
  const double b = w.beta;
  if (!std::isfinite(a) || !std::isfinite(b)) return "alpha and beta must be finite";
  if (!(a > 0.0 && a <= 1.0)) return "alpha must lie in (0, 1]";
  if (!(b > 0.0)) return "beta must be positive";
  switch (t) {
    case Theorem::T31:
      if (!(b > 1.0 - a)) return "t31 requires beta > 1 - alpha";
      break;
    case Theorem::T33:
      if (!(b >= a)) return "t33 requires beta >= alpha";
      break;
    case Theorem::T34:
      if (!(a >= 0.8)) return "t34 requires alpha in [4/5, 1]";
      if (!(b < a)) return "t34 requires beta < alpha";
      break;
    case Theorem::T32:
    case Theorem::T35:
    case Theorem::T36:
      break;
  }
  return {};
}

bool is_admissible(Theorem t, WeightPair w) { return admissibility_violation(t, w).empty(); }

void require_admissible(Theorem t, WeightPair w) {
  const std::string why = admissibility_violation(t, w);
  if (!why.empty()) throw DomainError(why + " " + fmt_pair(w));
}

RealPolynomial r1_quadratic(WeightPair w) {
  return RealPolynomial::quadratic(2.0 * w.alpha, 2.0 * w.beta + w.alpha, -w.alpha);
}

RealPolynomial r2_quadratic(WeightPair w) {
  return RealPolynomial::quadratic(2.0, w.beta - 2.0 * w.alpha - 1.0, w.alpha - w.beta);
}

RealPolynomial t31_polynomial(WeightPair w) {
  return RealPolynomial::quadratic(1.0 + 2.0 * w.beta - 2.0 * w.alpha, 2.0 * (w.alpha + w.beta), -1.0);
}

RealPolynomial t32_polynomial(WeightPair w) {
  return RealPolynomial::quadratic(1.0 - 2.0 * w.beta, -(w.alpha + 2.0 * w.beta + 1.0), w.alpha);
}

RealPolynomial t33_cubic(WeightPair w) {
  const double a = w.alpha;
  const double b = w.beta;
  return RealPolynomial::cubic(4.0 - 2.0 * a, 2.0 + 2.0 * b - 3.0 * a, -(2.0 * b + 2.0), a);
}

RealPolynomial area_cubic(WeightPair w) {
  const double a = w.alpha;
  return RealPolynomial::cubic(a, a, 4.0 * w.beta - a, -a);
}

CertifiedRoot r1_root(WeightPair w) {
  if (!(w.alpha > 0.0) || !(w.beta > 0.0)) {
    throw DomainError("r1_root requires alpha > 0 and beta > 0 " + fmt_pair(w));
  }
  return bisect_unique_root(r1_quadratic(w), Bracket{0.0, 0.5});
}

Lemma24Roots lemma24_roots(WeightPair w) {
  if (!(w.alpha >= 0.8 && w.alpha <= 1.0) || !(w.beta > 0.0 && w.beta < w.alpha)) {
    throw DomainError("lemma24 requires alpha in [4/5, 1] and beta in (0, alpha) " + fmt_pair(w));
  }
  return Lemma24Roots{r1_root(w), bisect_unique_root(r2_quadratic(w), Bracket{0.0, 0.5})};
}

RadiusCertificate radius_t31(WeightPair w) {
  require_admissible(Theorem::T31, w);
  if (std::abs(w.beta - t31_branch_beta(w.alpha)) <= kRegimeTolerance) {
    // Leading coefficient vanishes: g(1) = (4 alpha - 1) r - 1.
    const double v = 1.0 / (4.0 * w.alpha - 1.0);
    return closed_value(Theorem::T31, Regime::Linear, v, std::abs((4.0 * w.alpha - 1.0) * v - 1.0));
  }
  // g(1) is -1 at r = 0 and 4 beta at r = 1, with exactly one root in between.
  return from_root(Theorem::T31, Regime::Quadratic,
                   bisect_unique_root(t31_polynomial(w), Bracket{0.0, 1.0}));
}

RadiusCertificate radius_t32(WeightPair w) {
  require_admissible(Theorem::T32, w);
  if (std::abs(w.beta - t32_branch_beta(w.alpha)) <= kRegimeTolerance) {
    const double v = w.alpha / (w.alpha + 2.0);
    return closed_value(Theorem::T32, Regime::Linear, v, std::abs(w.alpha - (w.alpha + 2.0) * v));
  }
  // u(0) = alpha > 0, u(1) = -4 beta < 0.
  return from_root(Theorem::T32, Regime::Quadratic,
                   bisect_unique_root(t32_polynomial(w), Bracket{0.0, 1.0}));
}

RadiusCertificate radius_t33(WeightPair w) {
  require_admissible(Theorem::T33, w);
  const CertifiedRoot r1 = r1_root(w);
  // p(0) = alpha, p(1/2) = -beta/2, p convex on the interval.
  const CertifiedRoot r3 = bisect_unique_root(t33_cubic(w), Bracket{0.0, 0.5});
  RadiusCertificate c = (r1.value <= r3.value) ? from_root(Theorem::T33, Regime::MinR1, r1)
                                               : from_root(Theorem::T33, Regime::MinR3, r3);
  c.components = {r1, r3};
  return c;
}

RadiusCertificate radius_t34(WeightPair w) {
  require_admissible(Theorem::T34, w);
  const Lemma24Roots roots = lemma24_roots(w);
  RadiusCertificate c = from_root(Theorem::T34, Regime::ClosedForm, roots.r2star);
  c.components = {roots.r1star, roots.r2star};
  return c;
}

RadiusCertificate radius_t35(WeightPair w) {
  require_admissible(Theorem::T35, w);
  if (w.beta < t35_branch_beta(w.alpha) - kRegimeTolerance) {
    return closed_value(Theorem::T35, Regime::Constant, 1.0 / 3.0, 0.0);
  }
  return from_root(Theorem::T35, Regime::Cubic,
                   bisect_unique_root(area_cubic(w), Bracket{0.0, 1.0 / 3.0}));
}

RadiusCertificate radius_t36(WeightPair w) {
  require_admissible(Theorem::T36, w);
  const double cap = 1.0 / (2.0 * w.alpha + 1.0);
  if (w.beta < t36_branch_beta(w.alpha) - kRegimeTolerance) {
    return closed_value(Theorem::T36, Regime::Constant, cap, 0.0);
  }
  return from_root(Theorem::T36, Regime::Cubic, bisect_unique_root(area_cubic(w), Bracket{0.0, cap}));
}

RadiusCertificate radius(Theorem t, WeightPair w) {
  switch (t) {
    case Theorem::T31: return radius_t31(w);
    case Theorem::T32: return radius_t32(w);
    case Theorem::T33: return radius_t33(w);
    case Theorem::T34: return radius_t34(w);
    case Theorem::T35: return radius_t35(w);
    case Theorem::T36: return radius_t36(w);
  }
  throw InvalidInput("radius: unknown theorem");
}

double defining_residual(const RadiusCertificate& c, WeightPair w) {
  const double v = c.value;
  switch (c.regime) {
    case Regime::Linear:
      if (c.theorem == Theorem::T31) return std::abs((4.0 * w.alpha - 1.0) * v - 1.0);
      return std::abs(w.alpha - (w.alpha + 2.0) * v);
    case Regime::Quadratic:
      return std::abs(c.theorem == Theorem::T31 ? t31_polynomial(w)(v) : t32_polynomial(w)(v));
    case Regime::MinR1: return std::abs(r1_quadratic(w)(v));
    case Regime::MinR3: return std::abs(t33_cubic(w)(v));
    case Regime::ClosedForm: return std::abs(r2_quadratic(w)(v));
    case Regime::Constant: return 0.0;
    case Regime::Cubic: return std::abs(area_cubic(w)(v));
  }
  return kNaN;
}

namespace {

double pick_root(const std::vector<double>& roots, double lo, double hi) {
  for (double r : roots) {
    if (r > lo && r <= hi) return r;
  }
  return kNaN;
}

// Radical form of the T33 cubic root as usually quoted, evaluated verbatim.
double printed_r3(WeightPair w) {
  const double a = w.alpha;
  const double b = w.beta;
  const double A = 54 * a * a * a + 16 * b * b * b + 216 * a * a * b - 144 * a * b * b - 236 * a * a +
                   192 * b * b - 288 * a * b + 336 * b + 304;
  const double B = -9 * a * a - 4 * b * b + 24 * a * b + 24 * a - 32 * b - 4;
  const double lead = 4.0 - 2.0 * a;
  const double inner = (A * A + 4 * B * B * B) / (4.0 * lead * lead * lead);
  if (inner < 0.0) return kNaN;
  const double root = std::sqrt(inner) / 27.0;
  return std::cbrt(-A / 2.0 + root) + std::cbrt(-A / 2.0 - root) -
         (2.0 + 2.0 * b - 3.0 * a) / (3.0 * lead);
}

// Radical form of the area cubic root as usually quoted, evaluated verbatim.
double printed_r5(WeightPair w) {
  const double a = w.alpha;
  const double b = w.beta;
  const double p = (8.0 * a + 18.0 * b) / (27.0 * a);
  const double inner = b * (8.0 * a * a - 13.0 * a * b + 16.0 * b * b) / (3.0 * a);
  if (inner < 0.0) return kNaN;
  const double root = 2.0 / 3.0 * std::sqrt(inner);
  return -1.0 / 3.0 + std::cbrt(p + root) + std::cbrt(p - root);
}

}  // namespace

CrosscheckReport closed_form_crosscheck(Theorem t, WeightPair w) {
  CrosscheckReport rep;
  const auto finish = [&rep]() {
    rep.gap = std::isnan(rep.closed) ? kNaN : std::abs(rep.closed - rep.numeric);
    rep.cardano_gap = std::isnan(rep.cardano) ? kNaN : std::abs(rep.cardano - rep.numeric);
    return rep;
  };
  if (t == Theorem::T33) {
    require_admissible(t, w);
    const RealPolynomial p = t33_cubic(w);
    rep.numeric = bisect_unique_root(p, Bracket{0.0, 0.5}).value;
    rep.closed = printed_r3(w);
    const auto& c = p.coefficients();
    rep.cardano = pick_root(cardano_cubic(c[3], c[2], c[1], c[0]), 0.0, 0.5);
    return finish();
  }
  if (t == Theorem::T35) {
    const RadiusCertificate cert = radius_t35(w);
    if (cert.regime != Regime::Cubic) {
      throw NotApplicable("closed_form_crosscheck: t35 cubic branch inactive (beta < 8 alpha / 9)");
    }
    rep.numeric = cert.value;
    rep.closed = printed_r5(w);
    const RealPolynomial p = area_cubic(w);
    const auto& c = p.coefficients();
    rep.cardano = pick_root(cardano_cubic(c[3], c[2], c[1], c[0]), 0.0, 1.0 / 3.0 + 1e-12);
    return finish();
  }
  throw NotApplicable("closed_form_crosscheck: only t33 and t35 have printed radicals");
}

}  // namespace bohr
