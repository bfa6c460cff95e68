#include "bohr/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bohr/errors.hpp"
#include "bohr/format.hpp"
#include "bohr/parallel.hpp"

namespace bohr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// H within this distance of 1 is roundoff, not a witness.
constexpr double kWitnessFloor = 1e-12;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string pair_label(WeightPair w) {
  return "alpha=" + format_short(w.alpha) + " beta=" + format_short(w.beta);
}

VerificationReport make_report(Campaign c, std::string label, double tolerance) {
  VerificationReport r;
  r.campaign = c;
  r.label = std::move(label);
  r.tolerance = tolerance;
  r.max_violation = -kInf;
  r.max_lhs = -kInf;
  return r;
}

void add_witness(VerificationReport& rep, Witness w) {
  if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back(std::move(w));
}

Witness moebius_witness(Theorem t, WeightPair w, double r, double a) {
  FunctionRef ref{FunctionKind::Moebius, a, 0, 0};
  Witness wit{t, w, r, std::numbers::pi, ref, 0.0};
  wit.lhs = recheck(wit);
  return wit;
}

// a values clustering towards 1: a uniform part and a geometric approach.
std::vector<double> probe_parameters(int count) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  const int uniform = count / 2;
  for (int j = 0; j < uniform; ++j) out.push_back(0.999 * j / std::max(1, uniform - 1));
  const int geometric = count - uniform;
  for (int j = 0; j < geometric; ++j) {
    const double e = 1.0 + 39.0 * j / std::max(1, geometric - 1);
    out.push_back(1.0 - std::exp2(-e));
  }
  return out;
}

void merge_into(VerificationReport& into, const VerificationReport& part) {
  into.cells_checked += part.cells_checked;
  into.max_violation = std::max(into.max_violation, part.max_violation);
  into.max_lhs = std::max(into.max_lhs, part.max_lhs);
  for (const auto& w : part.witnesses) add_witness(into, w);
  into.notes.insert(into.notes.end(), part.notes.begin(), part.notes.end());
}

}  // namespace

std::string_view to_string(Campaign c) {
  switch (c) {
    case Campaign::BelowRadius: return "below";
    case Campaign::Sharpness: return "sharpness";
    case Campaign::Thresholds: return "thresholds";
    case Campaign::Lemma24: return "lemma24";
    case Campaign::CoefficientBound: return "coefficient-bound";
    case Campaign::ValueBound: return "value-bound";
    case Campaign::DerivativeBound: return "derivative-bound";
    case Campaign::AboveRadius: return "above";
  }
  return "?";
}

std::string FunctionRef::describe() const {
  switch (kind) {
    case FunctionKind::Moebius: return "moebius:a=" + format_real(moebius_a);
    case FunctionKind::Blaschke:
      return "blaschke:seed=" + std::to_string(seed) + ":degree=" + std::to_string(degree);
    case FunctionKind::Polynomial: return "polynomial";
  }
  return "?";
}

AnalyticFunction materialize(const FunctionRef& ref) {
  switch (ref.kind) {
    case FunctionKind::Moebius: return AnalyticFunction::moebius(ref.moebius_a);
    case FunctionKind::Blaschke: return random_test_function(ref.seed, ref.degree);
    case FunctionKind::Polynomial: break;
  }
  throw InvalidInput("materialize: polynomial references are not reconstructible");
}

Corpus make_corpus(std::uint64_t seed, int moebius_count, int blaschke_count) {
  Corpus corpus;
  corpus.reserve(static_cast<std::size_t>(moebius_count + blaschke_count));
  for (int i = 0; i < moebius_count; ++i) {
    const double x = moebius_count > 1 ? static_cast<double>(i) / (moebius_count - 1) : 0.0;
    const double a = 0.999 * 0.5 * (1.0 - std::cos(std::numbers::pi * x));
    FunctionRef ref{FunctionKind::Moebius, a, 0, 0};
    corpus.push_back(CorpusEntry{ref, materialize(ref)});
  }
  for (int i = 0; i < blaschke_count; ++i) {
    FunctionRef ref{FunctionKind::Blaschke, 0.0, splitmix64(seed * 1000003ULL + static_cast<std::uint64_t>(i)),
                    1 + i % 6};
    corpus.push_back(CorpusEntry{ref, materialize(ref)});
  }
  return corpus;
}

double recheck(const Witness& w) {
  if (!w.theorem) throw InvalidInput("recheck: witness carries no theorem");
  const AnalyticFunction f = materialize(w.function);
  return bohr_lhs(*w.theorem, f, std::polar(w.r, w.theta), w.weights).total;
}

VerificationReport check_below_radius(Theorem t, WeightPair w, const Corpus& corpus, double epsilon) {
  const RadiusCertificate cert = radius(t, w);
  if (!(epsilon > 0.0 && epsilon < cert.value)) {
    throw PreconditionError("check_below_radius: epsilon must lie in (0, R)");
  }
  const double r = cert.value - epsilon;
  VerificationReport rep = make_report(Campaign::BelowRadius,
                                       std::string(to_string(t)) + " " + pair_label(w), kSafetyTolerance);

  struct Cell {
    double violation = -kInf;
    double lhs = -kInf;
    std::vector<Witness> bad;
  };
  std::vector<Cell> cells(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    Cell& cell = cells[i];
    for (int j = 0; j < kThetaPoints; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / kThetaPoints;
      const FunctionalBreakdown b = bohr_lhs(t, corpus[i].f, std::polar(r, theta), w);
      const double v = b.total - b.truncation_slack - 1.0;
      cell.violation = std::max(cell.violation, v);
      cell.lhs = std::max(cell.lhs, b.total);
      if (v > kSafetyTolerance) cell.bad.push_back(Witness{t, w, r, theta, corpus[i].ref, b.total});
    }
  });
  for (const Cell& c : cells) {
    rep.max_violation = std::max(rep.max_violation, c.violation);
    rep.max_lhs = std::max(rep.max_lhs, c.lhs);
    for (const auto& wit : c.bad) add_witness(rep, wit);
  }
  rep.cells_checked = corpus.size() * kThetaPoints;

  const EnvelopeResult env = envelope_sup(t, r, w);
  rep.max_violation = std::max(rep.max_violation, env.sup - 1.0);
  rep.cells_checked += 1;
  rep.notes.push_back("R=" + format_real(cert.value) + " r=" + format_real(r) +
                      " envelope_sup=" + format_real(env.sup));
  rep.finalize();
  return rep;
}

std::optional<double> sharpness_witness_t31(WeightPair w, double r) {
  const double radius1 = radius_t31(w).value;
  if (!(r > radius1)) throw PreconditionError("sharpness_witness_t31: r must exceed R1");
  if (!(r < 1.0)) throw DomainError("sharpness_witness_t31: r must be < 1");

  int best_j = 0;
  double best_a = 0.0;
  double best_h = -kInf;
  for (int j = 1; j <= 40; ++j) {
    const double a = 1.0 - std::exp2(-j);
    const double h = sharpness_fn(a, r, w);
    if (h > best_h) {
      best_h = h;
      best_a = a;
      best_j = j;
    }
  }
  // Golden-section refinement between the scanned neighbours.
  double lo = 1.0 - std::exp2(-(best_j - 1));
  double hi = 1.0 - std::exp2(-(best_j + 1));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
    const double x1 = hi - inv_phi * (hi - lo);
    const double x2 = lo + inv_phi * (hi - lo);
    if (sharpness_fn(x1, r, w) < sharpness_fn(x2, r, w)) {
      lo = x1;
    } else {
      hi = x2;
    }
  }
  const double refined = 0.5 * (lo + hi);
  if (refined < 1.0) {
    const double h = sharpness_fn(refined, r, w);
    if (h > best_h) {
      best_h = h;
      best_a = refined;
    }
  }
  if (best_h > 1.0 + kWitnessFloor) return best_a;
  return std::nullopt;
}

VerificationReport threshold_continuity(Theorem t, double alpha) {
  double beta0 = 0.0;
  switch (t) {
    case Theorem::T31: beta0 = t31_branch_beta(alpha); break;
    case Theorem::T32: beta0 = t32_branch_beta(alpha); break;
    case Theorem::T35: beta0 = t35_branch_beta(alpha); break;
    case Theorem::T36: beta0 = t36_branch_beta(alpha); break;
    case Theorem::T33:
    case Theorem::T34:
      throw NotApplicable("threshold_continuity: " + std::string(to_string(t)) + " has no beta branch");
  }
  constexpr double kOffset = 1e-7;
  const double below = radius(t, WeightPair{alpha, beta0 - kOffset}).value;
  const RadiusCertificate at = radius(t, WeightPair{alpha, beta0});
  const double above = radius(t, WeightPair{alpha, beta0 + kOffset}).value;

  VerificationReport rep = make_report(Campaign::Thresholds,
                                       std::string(to_string(t)) + " alpha=" + format_short(alpha), 1e-6);
  rep.cells_checked = 3;
  rep.max_violation = std::max({std::abs(below - at.value), std::abs(above - at.value),
                                std::abs(above - below)});
  rep.notes.push_back(std::string(to_string(t)) + " alpha=" + format_real(alpha) +
                      " beta0=" + format_real(beta0) + " below=" + format_real(below) +
                      " at=" + format_real(at.value) + " (" + std::string(to_string(at.regime)) +
                      ") above=" + format_real(above));
  rep.finalize();
  return rep;
}

VerificationReport above_radius_probe(Theorem t, WeightPair w, double r, int budget, const Corpus& corpus) {
  const double rad = radius(t, w).value;
  if (!(r > rad)) throw PreconditionError("above_radius_probe: r must exceed the radius");
  if (!(r < 1.0) || ((t == Theorem::T33 || t == Theorem::T34) && !(r < 0.5))) {
    throw DomainError("above_radius_probe: r outside the functional's domain");
  }
  VerificationReport rep = make_report(Campaign::AboveRadius,
                                       std::string(to_string(t)) + " " + pair_label(w) + " r=" + format_short(r),
                                       kInf);
  const int moebius_budget = std::max(1, budget / 2);
  for (double a : probe_parameters(moebius_budget)) {
    const FunctionalBreakdown b = bohr_lhs(t, AnalyticFunction::moebius(a), complex{-r, 0.0}, w);
    rep.max_violation = std::max(rep.max_violation, b.total - 1.0);
    rep.max_lhs = std::max(rep.max_lhs, b.total);
    if (b.total - b.truncation_slack > 1.0 + kWitnessFloor) add_witness(rep, moebius_witness(t, w, r, a));
    ++rep.cells_checked;
  }
  int remaining = budget - moebius_budget;
  for (std::size_t i = 0; i < corpus.size() && remaining > 0; ++i) {
    for (int j = 0; j < kThetaPoints && remaining > 0; ++j, --remaining) {
      const double theta = 2.0 * std::numbers::pi * j / kThetaPoints;
      const FunctionalBreakdown b = bohr_lhs(t, corpus[i].f, std::polar(r, theta), w);
      rep.max_violation = std::max(rep.max_violation, b.total - 1.0);
      rep.max_lhs = std::max(rep.max_lhs, b.total);
      if (b.total - b.truncation_slack > 1.0 + kWitnessFloor) {
        add_witness(rep, Witness{t, w, r, theta, corpus[i].ref, b.total});
      }
      ++rep.cells_checked;
    }
  }
  const EnvelopeResult env = envelope_sup(t, r, w);
  rep.notes.push_back("radius=" + format_real(rad) + " envelope_sup=" + format_real(env.sup) +
                      " witnesses=" + std::to_string(rep.witnesses.size()) +
                      (rep.witnesses.empty() ? " (none found; not evidence of sharpness)" : ""));
  rep.finalize();
  return rep;
}

VerificationReport lemma24_campaign(int grid_n) {
  if (grid_n < 2) throw InvalidInput("lemma24_campaign: grid_n must be >= 2");
  VerificationReport rep = make_report(Campaign::Lemma24, "grid " + std::to_string(grid_n), 0.0);
  for (int i = 0; i < grid_n; ++i) {
    const double alpha = 0.8 + 0.2 * i / (grid_n - 1);
    for (int j = 0; j < grid_n; ++j) {
      const WeightPair w{alpha, alpha * (j + 1) / (grid_n + 1)};
      const Lemma24Roots roots = lemma24_roots(w);
      const double r1 = roots.r1star.value;
      const double r2 = roots.r2star.value;
      const double g = lemma24_g(w);
      const double v = std::max({-r2, r2 - r1, r1 - 0.5, -g});
      rep.max_violation = std::max(rep.max_violation, v);
      if (v >= 0.0) rep.notes.push_back("ordering fails at " + pair_label(w));
      ++rep.cells_checked;
    }
  }
  rep.finalize();
  return rep;
}

VerificationReport sharpness_campaign(const std::vector<WeightPair>& pairs, double offset, int probes) {
  VerificationReport rep = make_report(Campaign::Sharpness, "t31 " + std::to_string(pairs.size()) + " pairs",
                                       kSafetyTolerance);
  std::vector<VerificationReport> parts(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const WeightPair w = pairs[i];
    VerificationReport part = make_report(Campaign::Sharpness, pair_label(w), kSafetyTolerance);
    const double radius1 = radius_t31(w).value;
    const double above = radius1 + offset;
    const double below = radius1 - offset;

    const std::optional<double> a = sharpness_witness_t31(w, above);
    if (a) {
      add_witness(part, moebius_witness(Theorem::T31, w, above, *a));
    } else {
      part.max_violation = 1.0;  // missing witness above the radius
    }
    const EnvelopeResult env = envelope_sup(Theorem::T31, below, w);
    part.max_violation = std::max(part.max_violation, env.sup - 1.0);
    double worst = -kInf;
    for (double p : probe_parameters(probes)) worst = std::max(worst, sharpness_fn(p, below, w));
    part.max_violation = std::max(part.max_violation, worst - 1.0 - kWitnessFloor);
    part.cells_checked = static_cast<std::size_t>(probes) + 2;
    part.notes.push_back(pair_label(w) + " R1=" + format_real(radius1) + " witness_a=" +
                         (a ? format_real(*a) : std::string("none")) + " H_above=" +
                         (a ? format_real(sharpness_fn(*a, above, w)) : std::string("-")) +
                         " max_H_below=" + format_real(worst) + " envelope_below=" + format_real(env.sup));
    parts[i] = std::move(part);
  });
  for (const auto& p : parts) merge_into(rep, p);
  rep.finalize();
  return rep;
}

VerificationReport threshold_campaign(Theorem t, const std::vector<double>& alphas) {
  VerificationReport rep = make_report(Campaign::Thresholds,
                                       std::string(to_string(t)) + " " + std::to_string(alphas.size()) + " alphas",
                                       1e-6);
  for (double a : alphas) merge_into(rep, threshold_continuity(t, a));
  rep.finalize();
  return rep;
}

VerificationReport coefficient_bound_campaign(const Corpus& corpus, int order) {
  VerificationReport rep = make_report(Campaign::CoefficientBound,
                                       "k<=" + std::to_string(order), 1e-12);
  for (const auto& entry : corpus) {
    const TaylorSlice s = taylor_at_zero(entry.f, order);
    const double bound = 1.0 - std::norm(s.coeffs[0]);
    for (int k = 1; k <= order; ++k) {
      const double v = std::abs(s.coeffs[k]) - bound;
      rep.max_violation = std::max(rep.max_violation, v);
      if (v > rep.tolerance) rep.notes.push_back(entry.ref.describe() + " k=" + std::to_string(k));
      ++rep.cells_checked;
    }
  }
  rep.finalize();
  return rep;
}

VerificationReport value_bound_campaign(const Corpus& corpus) {
  VerificationReport rep = make_report(Campaign::ValueBound, "theta grid x 5 radii", 1e-12);
  const double radii[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (const auto& entry : corpus) {
    const double c0 = std::abs(eval(entry.f, complex{0.0, 0.0}));
    for (double r : radii) {
      const double bound = (r + c0) / (1.0 + c0 * r);
      for (int j = 0; j < kThetaPoints; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / kThetaPoints;
        const double v = std::abs(eval(entry.f, std::polar(r, theta))) - bound;
        rep.max_violation = std::max(rep.max_violation, v);
        ++rep.cells_checked;
      }
      if (entry.ref.kind == FunctionKind::Moebius) {
        // Extremal case: equality at z = -r.
        const double eq = std::abs(std::abs(eval(entry.f, complex{-r, 0.0})) - bound);
        rep.max_violation = std::max(rep.max_violation, eq);
        ++rep.cells_checked;
      }
    }
  }
  rep.finalize();
  return rep;
}

VerificationReport derivative_bound_campaign(const Corpus& corpus) {
  constexpr int kOrder = 6;
  VerificationReport rep = make_report(Campaign::DerivativeBound, "k<=6 at z=-r, 5 radii", 1e-10);
  const double radii[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (const auto& entry : corpus) {
    for (double r : radii) {
      const complex z{-r, 0.0};
      const double fz2 = std::norm(eval(entry.f, z));
      const TaylorSlice s = recenter(entry.f, z, kOrder);
      for (int k = 1; k <= kOrder; ++k) {
        const double bound = (1.0 - fz2) * std::pow(1.0 + r, k - 1) / std::pow(1.0 - r * r, k);
        const double ck = std::abs(s.coeffs[k]);
        rep.max_violation = std::max(rep.max_violation, ck - bound);
        if (k == 1 && entry.ref.kind == FunctionKind::Moebius) {
          rep.max_violation = std::max(rep.max_violation, std::abs(ck - bound));
        }
        ++rep.cells_checked;
      }
    }
  }
  rep.finalize();
  return rep;
}

std::vector<WeightPair> default_grid(Theorem t) {
  std::vector<WeightPair> out;
  const double alphas[] = {0.2, 0.4, 0.6, 0.8, 1.0};
  switch (t) {
    case Theorem::T31:
      for (double a : alphas)
        for (double d : {0.05, 0.25, 0.5, 1.0, 2.0}) out.push_back({a, (1.0 - a) + d});
      break;
    case Theorem::T32:
      for (double a : alphas)
        for (double b : {0.1, 0.3, 0.5, 1.0, 2.0}) out.push_back({a, b});
      break;
    case Theorem::T33:
      for (double a : alphas)
        for (double m : {1.0, 1.25, 1.5, 2.0, 4.0}) out.push_back({a, a * m});
      break;
    case Theorem::T34:
      for (double a : {0.8, 0.85, 0.9, 0.95, 1.0})
        for (double m : {0.05, 0.25, 0.5, 0.75, 0.95}) out.push_back({a, a * m});
      break;
    case Theorem::T35:
      for (double a : alphas)
        for (double b : {0.05, 0.3, 0.7, 1.0, 2.0}) out.push_back({a, b});
      break;
    case Theorem::T36:
      for (double a : alphas)
        for (double b : {0.01, 0.1, 0.3, 1.0, 2.0}) out.push_back({a, b});
      break;
  }
  return out;
}

std::vector<WeightPair> sharpness_pairs() {
  return {{0.6, 0.5},  {0.6, 1.0}, {0.6, 2.0},   // quadratic, leading coefficient > 0
          {0.8, 0.25}, {0.8, 0.3}, {0.8, 1.0},   // leading coefficient < 0, linear, > 0
          {1.0, 0.25}, {1.0, 0.5}, {1.0, 1.0}};
}

std::vector<double> threshold_alphas(Theorem t) {
  std::vector<double> out;
  for (int i = 0; i < 10; ++i) {
    // The t31 switch beta = alpha - 1/2 is admissible only for alpha > 3/4.
    out.push_back(t == Theorem::T31 ? 0.775 + 0.025 * i : 0.1 * (i + 1));
  }
  return out;
}

std::optional<Suite> parse_suite(std::string_view text) {
  std::string key;
  for (char ch : text) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (key == "all") return Suite::All;
  if (key == "below") return Suite::Below;
  if (key == "sharpness") return Suite::Sharpness;
  if (key == "thresholds") return Suite::Thresholds;
  if (key == "lemma24") return Suite::Lemma24;
  if (key == "lemmas") return Suite::Lemmas;
  return std::nullopt;
}

std::vector<VerificationReport> run_suite(Suite s, std::uint64_t seed) {
  std::vector<VerificationReport> out;
  const bool all = s == Suite::All;
  const auto need_corpus = all || s == Suite::Below || s == Suite::Lemmas;
  const Corpus corpus = need_corpus ? make_corpus(seed) : Corpus{};

  if (all || s == Suite::Lemmas) {
    out.push_back(coefficient_bound_campaign(corpus));
    out.push_back(value_bound_campaign(corpus));
    out.push_back(derivative_bound_campaign(corpus));
  }
  if (all || s == Suite::Lemma24 || s == Suite::Lemmas) out.push_back(lemma24_campaign(20));
  if (all || s == Suite::Thresholds) {
    for (Theorem t : {Theorem::T31, Theorem::T32, Theorem::T35, Theorem::T36}) {
      out.push_back(threshold_campaign(t, threshold_alphas(t)));
    }
  }
  if (all || s == Suite::Sharpness) out.push_back(sharpness_campaign(sharpness_pairs()));
  if (all || s == Suite::Below) {
    for (Theorem t : kAllTheorems) {
      VerificationReport merged = make_report(Campaign::BelowRadius,
                                              std::string(to_string(t)) + " 5x5 grid", kSafetyTolerance);
      for (const WeightPair& w : default_grid(t)) merge_into(merged, check_below_radius(t, w, corpus));
      merged.notes.clear();
      merged.finalize();
      out.push_back(std::move(merged));
    }
  }
  return out;
}

std::string summary_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << to_string(r.campaign) << " " << r.label
     << " cells=" << r.cells_checked << " max_violation=" << format_short(r.max_violation)
     << " tolerance=" << format_short(r.tolerance) << " witnesses=" << r.witnesses.size();
  return os.str();
}

std::string witnesses_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "campaign,label,theorem,alpha,beta,r,theta,function,lhs\n";
  for (const auto& rep : reports) {
    for (const auto& w : rep.witnesses) {
      os << to_string(rep.campaign) << ',' << rep.label << ','
         << (w.theorem ? std::string(to_string(*w.theorem)) : std::string("-")) << ','
         << format_real(w.weights.alpha) << ',' << format_real(w.weights.beta) << ','
         << format_real(w.r) << ',' << format_real(w.theta) << ',' << w.function.describe() << ','
         << format_real(w.lhs) << '\n';
    }
  }
  return os.str();
}

}  // namespace bohr
