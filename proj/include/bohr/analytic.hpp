#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

namespace bohr {

using complex = std::complex<double>;

/// p(z) = sum_k coeffs[k] z^k
struct PolynomialFn {
  std::vector<complex> coeffs;
};

/// f(z) = (a - z) / (1 - a z), 0 <= a < 1.
struct MoebiusFn {
  double a = 0.0;
};

/// f(z) = scale * prod_j (z - b_j) / (1 - conj(b_j) z), |b_j| < 1, 0 < scale <= 1.
struct BlaschkeFn {
  std::vector<complex> zeros;
  double scale = 1.0;
};

enum class FunctionKind { Polynomial, Moebius, Blaschke };
std::string_view to_string(FunctionKind k);

/// Immutable bounded-analytic test function on the unit disk.
class AnalyticFunction {
public:
  using Repr = std::variant<PolynomialFn, MoebiusFn, BlaschkeFn>;

  static AnalyticFunction polynomial(std::vector<complex> coeffs);
  static AnalyticFunction moebius(double a);
  static AnalyticFunction blaschke(std::vector<complex> zeros, double scale = 1.0);

  FunctionKind kind() const;
  const Repr& repr() const { return repr_; }

private:
  explicit AnalyticFunction(Repr r) : repr_(std::move(r)) {}
  Repr repr_;
};

/// Taylor coefficients about `center`, with a bound on the discarded tail
/// sum_{k>N} |c_k| rho^k for the stated rho.
struct TaylorSlice {
  complex center;
  std::vector<complex> coeffs;  // c_0 .. c_N
  double rho = 0.0;
  double tail_bound = 0.0;  // +inf when the expansion does not converge at rho
};

/// A truncated nonnegative series with a rigorous bound on what was dropped.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms = 0;
};

/// f(z) for |z| < 1; DomainError otherwise.
complex eval(const AnalyticFunction& f, complex z);

/// Maclaurin coefficients c_0..c_N. Same as recenter(f, 0, N, rho).
TaylorSlice taylor_at_zero(const AnalyticFunction& f, int n, double rho = 0.0);

/// Coefficients f^{(k)}(z0)/k!, k = 0..N, about |z0| < 1.
TaylorSlice recenter(const AnalyticFunction& f, complex z0, int n, double rho = 0.0);

/// sum_{k>=1} |c_k(z0)| rho^k. Closed form for Moebius, exact for polynomials,
/// adaptively truncated (tail <= 1e-12 when reachable) for Blaschke products.
SeriesValue coefficient_sum(const AnalyticFunction& f, complex z0, double rho);

/// S_r / pi = sum_{k>=1} k |c_k|^2 r^{2k}, 0 < r < 1.
SeriesValue area_sum(const AnalyticFunction& f, double r, int n = 64);

struct BoundednessCertificate {
  bool certified = false;
  double sup_estimate = 0.0;
};

/// Sup-norm certification on the closed disk. Polynomials are sampled on the
/// circle with a derivative-based margin; Moebius and Blaschke are analytic.
BoundednessCertificate certify_bounded(const AnalyticFunction& f, int samples = 1024);

/// Seeded Blaschke product: `degree` zeros uniform in |z| <= 0.95,
/// scale uniform in [0.5, 0.999].
AnalyticFunction random_test_function(std::uint64_t seed, int degree);

}  // namespace bohr
