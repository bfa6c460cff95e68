#include "bohr/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

struct Fraction {
  double num;
  double den;
};

void require_majorant_domain(Theorem t, double a, double r) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("majorant: a must lie in [0, 1]");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("majorant: r must lie in [0, 1)");
  if ((t == Theorem::T33 || t == Theorem::T34) && !(r < 0.5)) {
    throw DomainError("majorant: t33/t34 need r < 1/2");
  }
}

Fraction majorant_parts(Theorem t, double a, double r, WeightPair w) {
  require_majorant_domain(t, a, r);
  const double al = w.alpha;
  const double be = w.beta;
  const double one_a2 = 1.0 - a * a;
  switch (t) {
    case Theorem::T31:
      return {al * (a + r) * (1 - r) + (1 - al) * a * (1 + a * r) * (1 - r) +
                  be * one_a2 * (1 + a * r) * r,
              (1 + a * r) * (1 - r)};
    case Theorem::T32:
      return {al * (a + r) * (1 - r) + be * one_a2 * (1 + a * r) * r, (1 + a * r) * (1 - r)};
    case Theorem::T33:
    case Theorem::T34:
      return {al * (a + r) * (1 + a * r) * (1 - 2 * r) + be * one_a2 * (1 - r) * r,
              (1 + a * r) * (1 + a * r) * (1 - 2 * r)};
    case Theorem::T35:
    case Theorem::T36: {
      const double m = (1 - r * r) * (1 - r * r);
      double num = al * a * m + al * r * one_a2 * (1 + r) * (1 - r * r) + be * r * r * one_a2 * one_a2;
      if (t == Theorem::T36) num += (1 - al) * a * m;
      return {num, m};
    }
  }
  throw InvalidInput("majorant: unknown theorem");
}

void require_t31_shape(double a, double r, WeightPair w) {
  require_admissible(Theorem::T31, w);
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("sharpness: a must lie in [0, 1]");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("sharpness: r must lie in [0, 1)");
}

}  // namespace

FunctionalBreakdown bohr_lhs(Theorem t, const AnalyticFunction& f, complex z, WeightPair w) {
  require_admissible(t, w);
  const double r = std::abs(z);
  if (!(r < 1.0)) throw DomainError("bohr_lhs: |z| must be < 1");
  if ((t == Theorem::T33 || t == Theorem::T34) && !(r < 0.5)) {
    throw DomainError("bohr_lhs: the recentred series of t33/t34 needs |z| < 1/2");
  }
  const BoundednessCertificate cert = certify_bounded(f);
  if (!cert.certified) {
    throw DomainError("bohr_lhs: function is not certified bounded (sup estimate " +
                      std::to_string(cert.sup_estimate) + ")");
  }

  FunctionalBreakdown out;
  out.theorem = t;
  const double alpha = w.alpha;
  const double beta = w.beta;
  const complex origin{0.0, 0.0};
  const double c0 = std::abs(eval(f, origin));

  switch (t) {
    case Theorem::T31:
    case Theorem::T32: {
      const SeriesValue s = coefficient_sum(f, origin, r);
      out.modulus_term = alpha * std::abs(eval(f, z));
      if (t == Theorem::T31) out.constant_term = (1 - alpha) * c0;
      out.series_term = beta * s.value;
      out.truncation_slack = beta * s.tail_bound;
      break;
    }
    case Theorem::T33:
    case Theorem::T34: {
      const SeriesValue s = coefficient_sum(f, z, r);
      out.modulus_term = alpha * std::abs(eval(f, z));
      out.series_term = beta * s.value;
      out.truncation_slack = beta * s.tail_bound;
      break;
    }
    case Theorem::T35:
    case Theorem::T36: {
      const SeriesValue s = coefficient_sum(f, origin, r);
      out.series_term = alpha * (c0 + s.value);
      out.truncation_slack = alpha * s.tail_bound;
      if (r > 0.0) {
        const SeriesValue area = area_sum(f, r);
        out.area_term = beta * area.value;
        out.truncation_slack += beta * area.tail_bound;
      }
      if (t == Theorem::T36) out.constant_term = (1 - alpha) * c0;
      break;
    }
  }
  if (!std::isfinite(out.truncation_slack)) {
    throw DomainError("bohr_lhs: series does not converge at this radius");
  }
  out.total = out.modulus_term + out.constant_term + out.series_term + out.area_term;
  return out;
}

double majorant(Theorem t, double a, double r, WeightPair w) {
  const Fraction f = majorant_parts(t, a, r, w);
  return f.num / f.den;
}

double gap(Theorem t, double a, double r, WeightPair w) {
  const Fraction f = majorant_parts(t, a, r, w);
  return f.num - f.den;
}

double t31_g(double a, double r, WeightPair w) {
  const double al = w.alpha;
  return (al * r + al * r * a - 1 - a * r) * (1 - r) + w.beta * (1 + a) * r * (1 + a * r);
}

double t32_u(double r, WeightPair w) {
  return (1 - 2 * w.beta) * r * r - (w.alpha + 2 * w.beta + 1) * r + w.alpha;
}

double t33_s(double r, WeightPair w) {
  return 2 * r * r + (w.beta - 2 * w.alpha - 1) * r + w.alpha - w.beta;
}

double t33_p(double r, WeightPair w) {
  const double al = w.alpha;
  const double be = w.beta;
  return (4 - 2 * al) * r * r * r + (2 + 2 * be - 3 * al) * r * r - (2 * be + 2) * r + al;
}

double t34_q(double r, WeightPair w) { return w.alpha * r * r - 2 * r + w.alpha; }

double area_phi(double r, WeightPair w) {
  const double al = w.alpha;
  return al * r * r * r + al * r * r + (4 * w.beta - al) * r - al;
}

double lemma24_g(WeightPair w) {
  const double al = w.alpha;
  const double be = w.beta;
  return (4 - 2 * al) * be * be + 4 * al * al * be + al * (-al * al + al + 2);
}

double sharpness_fn(double a, double r, WeightPair w) {
  require_t31_shape(a, r, w);
  const double al = w.alpha;
  const double num = al * (a + r) * (1 - a * r) + (1 - al) * a * (1 + a * r) * (1 - a * r) +
                     w.beta * (1 - a * a) * (1 + a * r) * r;
  return num / (1 - a * a * r * r);
}

double sharpness_h(double a, double r, WeightPair w) {
  require_t31_shape(a, r, w);
  const double al = w.alpha;
  return al * (a + r) * (1 - a * r) + (1 - al) * a * (1 + a * r) * (1 - a * r) +
         w.beta * (1 - a * a) * (1 + a * r) * r - (1 - a * r) * (1 + a * r);
}

double sharpness_rho(double a, double r, WeightPair w) {
  require_t31_shape(a, r, w);
  const double al = w.alpha;
  const double be = w.beta;
  return (1 - al + be) * r * r * a * a + (al * r + be * r - al * r * r + be * r * r) * a +
         (al * r + be * r - 1);
}

EnvelopeResult envelope_sup(Theorem t, double r, WeightPair w) {
  require_admissible(t, w);
  const auto value = [&](double a) { return majorant(t, a, r, w); };

  int best = 0;
  double best_val = value(0.0);
  const double step = kEnvelopeAMax / (kEnvelopeGrid - 1);
  for (int i = 1; i < kEnvelopeGrid; ++i) {
    const double v = value(i == kEnvelopeGrid - 1 ? kEnvelopeAMax : i * step);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  EnvelopeResult out{best_val, best == kEnvelopeGrid - 1 ? kEnvelopeAMax : best * step};

  double lo = std::max(0, best - 1) * step;
  double hi = std::min(kEnvelopeAMax, (best + 1) * step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = value(x1);
  double f2 = value(x2);
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = value(x1);
    }
  }
  for (const auto& [x, v] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
    if (v > out.sup) out = EnvelopeResult{v, x};
  }
  return out;
}

}  // namespace bohr
