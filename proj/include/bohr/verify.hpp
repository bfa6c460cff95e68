#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohr/analytic.hpp"
#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"

namespace bohr {

enum class Campaign {
  BelowRadius,
  Sharpness,
  Thresholds,
  Lemma24,
  CoefficientBound,
  ValueBound,
  DerivativeBound,
  AboveRadius,
};
std::string_view to_string(Campaign c);

/// Enough to rebuild a corpus function bit-for-bit.
struct FunctionRef {
  FunctionKind kind = FunctionKind::Moebius;
  double moebius_a = 0.0;
  std::uint64_t seed = 0;
  int degree = 0;

  std::string describe() const;
};

AnalyticFunction materialize(const FunctionRef& ref);

struct CorpusEntry {
  FunctionRef ref;
  AnalyticFunction f;
};
using Corpus = std::vector<CorpusEntry>;

/// `moebius_count` Moebius maps with a on a Chebyshev-Lobatto grid of
/// [0, 0.999], then `blaschke_count` seeded Blaschke products of degree 1..6.
Corpus make_corpus(std::uint64_t seed, int moebius_count = 100, int blaschke_count = 100);

struct Witness {
  std::optional<Theorem> theorem;
  WeightPair weights;
  double r = 0.0;
  double theta = 0.0;
  FunctionRef function;
  double lhs = 0.0;
};

/// Re-evaluates a theorem witness: bohr_lhs at z = r e^{i theta}.
double recheck(const Witness& w);

/// Outcome of one campaign. passed == (max_violation <= tolerance); report-only
/// campaigns use an infinite tolerance.
struct VerificationReport {
  Campaign campaign = Campaign::BelowRadius;
  std::string label;
  std::size_t cells_checked = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;
  double max_lhs = 0.0;  // largest functional value seen (theorem campaigns)
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  bool passed = false;

  void finalize() { passed = max_violation <= tolerance; }
};

inline constexpr int kThetaPoints = 64;
inline constexpr double kDefaultOffset = 1e-3;
inline constexpr double kSafetyTolerance = 1e-9;
inline constexpr std::size_t kMaxWitnesses = 64;

/// Every corpus function on the theta grid at r = R - epsilon, plus the
/// majorant envelope there.
VerificationReport check_below_radius(Theorem t, WeightPair w, const Corpus& corpus,
                                      double epsilon = kDefaultOffset);

/// Some a in [0, 1) with sharpness_fn(a, r, w) > 1, or nullopt.
/// PreconditionError when r <= R1.
std::optional<double> sharpness_witness_t31(WeightPair w, double r);

/// Radius at beta0 - 1e-7, beta0 and beta0 + 1e-7 around the regime switch.
VerificationReport threshold_continuity(Theorem t, double alpha);

/// Report-only search for LHS > 1 above the radius (Moebius family + corpus).
VerificationReport above_radius_probe(Theorem t, WeightPair w, double r, int budget,
                                      const Corpus& corpus);

/// 0 < r*2 < r*1 < 1/2 and g(alpha, beta) > 0 on a grid_n x grid_n grid.
VerificationReport lemma24_campaign(int grid_n);

/// For each pair: a witness at R1 + offset and none among `probes` Moebius
/// probes (and envelope <= 1 + 1e-9) at R1 - offset.
VerificationReport sharpness_campaign(const std::vector<WeightPair>& pairs,
                                      double offset = kDefaultOffset, int probes = 10000);

/// Threshold continuity merged over several alpha samples.
VerificationReport threshold_campaign(Theorem t, const std::vector<double>& alphas);

/// |c_k| <= 1 - |c_0|^2 for k = 1..order.
VerificationReport coefficient_bound_campaign(const Corpus& corpus, int order = 20);
/// |f(z)| <= (|z| + |c0|)/(1 + |c0||z|), equality for Moebius at z = -r.
VerificationReport value_bound_campaign(const Corpus& corpus);
/// |f^{(k)}(z)/k!| <= (1-|f(z)|^2)(1+r)^{k-1}/(1-r^2)^k at z = -r, k <= 6.
VerificationReport derivative_bound_campaign(const Corpus& corpus);

/// 5 x 5 admissible (alpha, beta) grid used by the below-radius suite.
std::vector<WeightPair> default_grid(Theorem t);
/// Nine (alpha, beta) pairs covering every T31 regime.
std::vector<WeightPair> sharpness_pairs();
/// Ten alpha samples with an admissible regime switch.
std::vector<double> threshold_alphas(Theorem t);

enum class Suite { All, Below, Sharpness, Thresholds, Lemma24, Lemmas };
std::optional<Suite> parse_suite(std::string_view text);

std::vector<VerificationReport> run_suite(Suite s, std::uint64_t seed);

std::string summary_line(const VerificationReport& r);
/// CSV with header campaign,label,theorem,alpha,beta,r,theta,function,lhs.
std::string witnesses_csv(const std::vector<VerificationReport>& reports);

}  // namespace bohr
