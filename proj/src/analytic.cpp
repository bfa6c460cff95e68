#include "bohr/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesTailTarget = 1e-12;
constexpr int kMaxSeriesTerms = 4096;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_inside(complex z, const char* what) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError(std::string(what) + ": point must satisfy |z| < 1");
  }
}

void require_order(int n) {
  if (n < 0) throw InvalidInput("series order must be nonnegative");
}

// One disk-automorphism factor (z - b)/(1 - conj(b) z) expanded in w = z - z0:
// d_0 + sum_{k>=1} c q^{k-1} w^k.
struct LocalFactor {
  complex d0;
  complex c;
  complex q;
};

LocalFactor expand_factor(complex b, complex z0) {
  const complex den = 1.0 - std::conj(b) * z0;
  return LocalFactor{(z0 - b) / den, (1.0 - std::norm(b)) / (den * den), std::conj(b) / den};
}

// Multiplies the truncated series g by a factor series in O(N).
template <class T>
void multiply_geometric(std::vector<T>& g, T d0, T c, T q) {
  T running{};
  T prev = g[0];
  g[0] = d0 * g[0];
  for (std::size_t k = 1; k < g.size(); ++k) {
    running = prev + q * running;
    prev = g[k];
    g[k] = d0 * g[k] + c * running;
  }
}

TaylorSlice recenter_polynomial(const PolynomialFn& p, complex z0, int n, double rho) {
  std::vector<complex> b = p.coeffs;
  const int d = static_cast<int>(b.size()) - 1;
  for (int i = 0; i < d; ++i) {
    for (int j = d - 1; j >= i; --j) b[j] += z0 * b[j + 1];
  }
  TaylorSlice s{z0, {}, rho, 0.0};
  s.coeffs.assign(static_cast<std::size_t>(n) + 1, complex{});
  double pw = 1.0;
  for (int k = 0; k <= d; ++k) {
    if (k <= n) {
      s.coeffs[k] = b[k];
    } else {
      s.tail_bound += std::abs(b[k]) * pw;
    }
    pw *= rho;
  }
  return s;
}

TaylorSlice recenter_moebius(const MoebiusFn& m, complex z0, int n, double rho) {
  const double a = m.a;
  const complex den = 1.0 - a * z0;
  const complex base = -(1.0 - a * a) / (den * den);
  const complex t = a / den;
  TaylorSlice s{z0, {}, rho, 0.0};
  s.coeffs.resize(static_cast<std::size_t>(n) + 1);
  s.coeffs[0] = (a - z0) / den;
  complex tk = 1.0;
  for (int k = 1; k <= n; ++k) {
    s.coeffs[k] = base * tk;
    tk *= t;
  }
  const double ratio = std::abs(t) * rho;
  if (ratio >= 1.0) {
    s.tail_bound = kInf;
  } else if (a == 0.0 || rho == 0.0) {
    s.tail_bound = (n >= 1 || rho == 0.0) ? 0.0 : std::abs(base) * rho / (1.0 - ratio);
  } else {
    s.tail_bound = std::abs(base) * rho * std::pow(ratio, n) / (1.0 - ratio);
  }
  return s;
}

TaylorSlice recenter_blaschke(const BlaschkeFn& bp, complex z0, int n, double rho) {
  const std::size_t len = static_cast<std::size_t>(n) + 1;
  std::vector<complex> g(len, complex{});
  std::vector<double> major(len, 0.0);
  g[0] = bp.scale;
  major[0] = bp.scale;
  double closed = bp.scale;  // majorant series evaluated at rho in closed form
  for (complex b : bp.zeros) {
    const LocalFactor f = expand_factor(b, z0);
    multiply_geometric<complex>(g, f.d0, f.c, f.q);
    multiply_geometric<double>(major, std::abs(f.d0), std::abs(f.c), std::abs(f.q));
    const double qr = std::abs(f.q) * rho;
    closed = (qr < 1.0) ? closed * (std::abs(f.d0) + std::abs(f.c) * rho / (1.0 - qr)) : kInf;
  }
  TaylorSlice s{z0, std::move(g), rho, 0.0};
  if (!std::isfinite(closed)) {
    s.tail_bound = kInf;
    return s;
  }
  double partial = 0.0;
  double pw = 1.0;
  for (double m : major) {
    partial += m * pw;
    pw *= rho;
  }
  const double rounding = 2.0 * static_cast<double>(len + bp.zeros.size()) * kEps * closed;
  s.tail_bound = std::max(0.0, closed - partial) + (rho > 0.0 ? rounding : 0.0);
  return s;
}

}  // namespace

std::string_view to_string(FunctionKind k) {
  switch (k) {
    case FunctionKind::Polynomial: return "polynomial";
    case FunctionKind::Moebius: return "moebius";
    case FunctionKind::Blaschke: return "blaschke";
  }
  return "?";
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<complex> coeffs) {
  if (coeffs.empty()) throw InvalidInput("polynomial needs at least one coefficient");
  for (const complex& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidInput("polynomial coefficients must be finite");
    }
  }
  return AnalyticFunction(PolynomialFn{std::move(coeffs)});
}

AnalyticFunction AnalyticFunction::moebius(double a) {
  if (!(a >= 0.0 && a < 1.0)) throw DomainError("moebius parameter must lie in [0, 1)");
  return AnalyticFunction(MoebiusFn{a});
}

AnalyticFunction AnalyticFunction::blaschke(std::vector<complex> zeros, double scale) {
  if (!(scale > 0.0 && scale <= 1.0)) throw DomainError("blaschke scale must lie in (0, 1]");
  for (const complex& b : zeros) {
    if (!(std::abs(b) < 1.0)) throw DomainError("blaschke zeros must lie in the open unit disk");
  }
  return AnalyticFunction(BlaschkeFn{std::move(zeros), scale});
}

FunctionKind AnalyticFunction::kind() const {
  return static_cast<FunctionKind>(repr_.index());
}

complex eval(const AnalyticFunction& f, complex z) {
  require_inside(z, "eval");
  return std::visit(
      overloaded{
          [z](const PolynomialFn& p) {
            complex acc{};
            for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * z + *it;
            return acc;
          },
          [z](const MoebiusFn& m) { return (m.a - z) / (1.0 - m.a * z); },
          [z](const BlaschkeFn& b) {
            complex acc = b.scale;
            for (complex zero : b.zeros) acc *= (z - zero) / (1.0 - std::conj(zero) * z);
            return acc;
          },
      },
      f.repr());
}

TaylorSlice taylor_at_zero(const AnalyticFunction& f, int n, double rho) {
  return recenter(f, complex{0.0, 0.0}, n, rho);
}

TaylorSlice recenter(const AnalyticFunction& f, complex z0, int n, double rho) {
  require_inside(z0, "recenter");
  require_order(n);
  if (!(rho >= 0.0)) throw InvalidInput("recenter: rho must be nonnegative");
  return std::visit(overloaded{
                        [&](const PolynomialFn& p) { return recenter_polynomial(p, z0, n, rho); },
                        [&](const MoebiusFn& m) { return recenter_moebius(m, z0, n, rho); },
                        [&](const BlaschkeFn& b) { return recenter_blaschke(b, z0, n, rho); },
                    },
                    f.repr());
}

SeriesValue coefficient_sum(const AnalyticFunction& f, complex z0, double rho) {
  require_inside(z0, "coefficient_sum");
  if (!(rho >= 0.0)) throw InvalidInput("coefficient_sum: rho must be nonnegative");

  if (const auto* m = std::get_if<MoebiusFn>(&f.repr())) {
    const double den = std::abs(1.0 - m->a * z0);
    if (!(den > m->a * rho)) return SeriesValue{kInf, kInf, 0};
    return SeriesValue{(1.0 - m->a * m->a) * rho / (den * (den - m->a * rho)), 0.0, 0};
  }

  int n = 64;
  if (const auto* p = std::get_if<PolynomialFn>(&f.repr())) {
    n = static_cast<int>(p->coeffs.size()) - 1;
  }
  TaylorSlice s = recenter(f, z0, n, rho);
  while (f.kind() == FunctionKind::Blaschke && !(s.tail_bound <= kSeriesTailTarget) &&
         n < kMaxSeriesTerms) {
    n *= 2;
    s = recenter(f, z0, n, rho);
  }
  SeriesValue out{0.0, s.tail_bound, n};
  double pw = 1.0;
  for (int k = 1; k <= n; ++k) {
    pw *= rho;
    out.value += std::abs(s.coeffs[k]) * pw;
  }
  return out;
}

SeriesValue area_sum(const AnalyticFunction& f, double r, int n) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("area_sum: r must lie in (0, 1)");
  require_order(n);
  const double x = r * r;

  if (const auto* m = std::get_if<MoebiusFn>(&f.repr())) {
    const double a2 = m->a * m->a;
    const double den = 1.0 - a2 * x;
    return SeriesValue{(1.0 - a2) * (1.0 - a2) * x / (den * den), 0.0, 0};
  }

  double scale2 = 0.0;
  if (const auto* p = std::get_if<PolynomialFn>(&f.repr())) {
    n = static_cast<int>(p->coeffs.size()) - 1;
  } else {
    const auto& b = std::get<BlaschkeFn>(f.repr());
    scale2 = b.scale * b.scale;
  }
  // |c_k| <= sup|f| <= scale, so the tail is at most scale^2 sum_{k>N} k x^k.
  const auto tail = [&](int terms) {
    const double nn = terms;
    return scale2 * std::pow(x, nn + 1.0) * ((nn + 1.0) - nn * x) / ((1.0 - x) * (1.0 - x));
  };
  if (scale2 > 0.0) {
    while (tail(n) > 1e-15 && n < 8 * kMaxSeriesTerms) n = std::max(2 * n, 16);
  }
  const TaylorSlice s = taylor_at_zero(f, n, r);
  SeriesValue out{0.0, scale2 > 0.0 ? tail(n) : 0.0, n};
  double pw = 1.0;
  for (int k = 1; k <= n; ++k) {
    pw *= x;
    out.value += k * std::norm(s.coeffs[k]) * pw;
  }
  return out;
}

BoundednessCertificate certify_bounded(const AnalyticFunction& f, int samples) {
  if (samples < 256) throw InvalidInput("certify_bounded: need at least 256 samples");
  return std::visit(
      overloaded{
          [samples](const PolynomialFn& p) {
            double deriv_bound = 0.0;
            for (std::size_t k = 1; k < p.coeffs.size(); ++k) {
              deriv_bound += static_cast<double>(k) * std::abs(p.coeffs[k]);
            }
            double sup = 0.0;
            for (int j = 0; j < samples; ++j) {
              const double theta = 2.0 * std::numbers::pi * j / samples;
              const complex z = std::polar(1.0, theta);
              complex acc{};
              for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * z + *it;
              sup = std::max(sup, std::abs(acc));
            }
            // Every boundary point is within pi/samples of a sample.
            const double margin = std::numbers::pi * deriv_bound / samples;
            return BoundednessCertificate{sup + margin <= 1.0, sup};
          },
          [](const MoebiusFn&) { return BoundednessCertificate{true, 1.0}; },
          [](const BlaschkeFn& b) { return BoundednessCertificate{true, b.scale}; },
      },
      f.repr());
}

AnalyticFunction random_test_function(std::uint64_t seed, int degree) {
  if (degree < 1) throw InvalidInput("random_test_function: degree must be >= 1");
  std::mt19937_64 gen(seed);
  const auto unit = [&gen]() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  std::vector<complex> zeros;
  zeros.reserve(static_cast<std::size_t>(degree));
  for (int j = 0; j < degree; ++j) {
    const double radius = 0.95 * std::sqrt(unit());
    const double angle = 2.0 * std::numbers::pi * unit();
    zeros.push_back(std::polar(radius, angle));
  }
  const double scale = 0.5 + 0.499 * unit();
  return AnalyticFunction::blaschke(std::move(zeros), scale);
}

}  // namespace bohr
