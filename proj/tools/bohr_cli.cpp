// Command-line front end: radius queries, sweeps, functional checks and the
// verification suites.
//
// Exit codes: 0 ok, 1 parse, 2 domain, 3 io, 4 uncertified function,
// 5 verification failure.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "bohr/analytic.hpp"
#include "bohr/errors.hpp"
#include "bohr/format.hpp"
#include "bohr/function_spec.hpp"
#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"
#include "bohr/sweep.hpp"
#include "bohr/verify.hpp"

namespace {

enum ExitCode : int { kOk = 0, kParse = 1, kDomain = 2, kIo = 3, kUncertified = 4, kFailed = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bohr::Theorem theorem_arg(const std::string& text) {
  const auto t = bohr::parse_theorem(text);
  if (!t) throw UsageError("unknown theorem '" + text + "' (expected t31..t36)");
  return *t;
}

bohr::SweepRange range_arg(const std::string& text, const char* name) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError(std::string(name) + " range must be lo:hi");
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    bohr::SweepRange r{std::stod(lo, &used), 0.0};
    if (used != lo.size()) throw UsageError("bad number");
    r.hi = std::stod(hi, &used);
    if (used != hi.size()) throw UsageError("bad number");
    return r;
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " range must be lo:hi with numeric bounds");
  }
}

int cmd_radius(const std::string& theorem, double alpha, double beta) {
  const bohr::Theorem t = theorem_arg(theorem);
  const bohr::RadiusCertificate c = bohr::radius(t, {alpha, beta});
  std::cout << "theorem=" << bohr::to_string(t) << '\n'
            << "alpha=" << bohr::format_real(alpha) << '\n'
            << "beta=" << bohr::format_real(beta) << '\n'
            << "radius=" << bohr::format_real(c.value) << '\n'
            << "regime=" << bohr::to_string(c.regime) << '\n'
            << "residual=" << bohr::format_real(c.residual) << '\n';
  if (c.bracket) {
    std::cout << "bracket=[" << bohr::format_real(c.bracket->lo) << ", "
              << bohr::format_real(c.bracket->hi) << "]\n";
  } else {
    std::cout << "bracket=closed-form\n";
  }
  return kOk;
}

int cmd_sweep(const std::string& theorem, const std::string& alpha, const std::string& beta, int steps,
              const std::string& out_path) {
  const bohr::Theorem t = theorem_arg(theorem);
  const auto rows = bohr::sweep(t, range_arg(alpha, "alpha"), range_arg(beta, "beta"), steps);
  const std::string csv = bohr::sweep_csv(rows);
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + out_path + "' for writing");
  out << csv;
  out.flush();
  if (!out) throw IoError("failed writing '" + out_path + "'");
  std::cerr << "wrote " << rows.size() << " rows to " << out_path << '\n';
  return kOk;
}

int cmd_check(const std::string& theorem, double alpha, double beta, double r, const std::string& path,
              const double* theta_opt) {
  const bohr::Theorem t = theorem_arg(theorem);
  std::ifstream in(path);
  if (!in) throw IoError("cannot read function spec '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const bohr::AnalyticFunction f = bohr::parse_function_spec(buf.str());

  const bohr::BoundednessCertificate cert = bohr::certify_bounded(f);
  if (!cert.certified) {
    std::cerr << "error: function is not certified bounded by 1 (sup_estimate="
              << bohr::format_real(cert.sup_estimate) << ")\n";
    return kUncertified;
  }
  if (!(r > 0.0 && r < 1.0)) throw bohr::DomainError("r must lie in (0, 1)");

  const bohr::WeightPair w{alpha, beta};
  bohr::FunctionalBreakdown worst;
  double worst_theta = 0.0;
  bool first = true;
  const auto consider = [&](double theta) {
    const bohr::FunctionalBreakdown b = bohr::bohr_lhs(t, f, std::polar(r, theta), w);
    if (first || b.total > worst.total) {
      worst = b;
      worst_theta = theta;
      first = false;
    }
  };
  if (theta_opt != nullptr) {
    consider(*theta_opt);
  } else {
    for (int j = 0; j < bohr::kThetaPoints; ++j) consider(2.0 * std::numbers::pi * j / bohr::kThetaPoints);
  }

  const bohr::RadiusCertificate rad = bohr::radius(t, w);
  std::cout << "theorem=" << bohr::to_string(t) << '\n'
            << "alpha=" << bohr::format_real(alpha) << '\n'
            << "beta=" << bohr::format_real(beta) << '\n'
            << "r=" << bohr::format_real(r) << '\n'
            << "theta=" << bohr::format_real(worst_theta)
            << (theta_opt ? "" : " (worst of 64-point grid)") << '\n'
            << "modulus_term=" << bohr::format_real(worst.modulus_term) << '\n'
            << "constant_term=" << bohr::format_real(worst.constant_term) << '\n'
            << "series_term=" << bohr::format_real(worst.series_term) << '\n'
            << "area_term=" << bohr::format_real(worst.area_term) << '\n'
            << "truncation_slack=" << bohr::format_real(worst.truncation_slack) << '\n'
            << "total=" << bohr::format_real(worst.total) << '\n'
            << "total_le_1=" << (worst.total <= 1.0 + worst.truncation_slack ? "yes" : "no") << '\n'
            << "radius=" << bohr::format_real(rad.value) << '\n'
            << "position=" << (r <= rad.value ? "below" : "above") << '\n';
  return kOk;
}

int cmd_verify(const std::string& suite_text, std::uint64_t seed, const std::string& witness_path) {
  const auto suite = bohr::parse_suite(suite_text);
  if (!suite) throw UsageError("unknown suite '" + suite_text + "'");
  const auto reports = bohr::run_suite(*suite, seed);
  bool ok = true;
  for (const auto& rep : reports) {
    std::cout << bohr::summary_line(rep) << '\n';
    ok = ok && rep.passed;
  }
  if (!witness_path.empty()) {
    std::ofstream out(witness_path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + witness_path + "' for writing");
    out << bohr::witnesses_csv(reports);
  }
  std::cout << (ok ? "verify: all campaigns passed" : "verify: FAILED") << '\n';
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-parameter Bohr-type radii: certified computation and numerical verification"};
  app.require_subcommand(1);

  std::string theorem;
  double alpha = 0.0;
  double beta = 0.0;

  auto* radius_cmd = app.add_subcommand("radius", "Compute a certified radius");
  radius_cmd->add_option("--theorem", theorem, "t31 .. t36")->required();
  radius_cmd->add_option("--alpha", alpha)->required();
  radius_cmd->add_option("--beta", beta)->required();

  std::string alpha_range;
  std::string beta_range;
  int steps = 0;
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Grid sweep of a radius to CSV");
  sweep_cmd->add_option("--theorem", theorem)->required();
  sweep_cmd->add_option("--alpha", alpha_range, "lo:hi")->required();
  sweep_cmd->add_option("--beta", beta_range, "lo:hi")->required();
  sweep_cmd->add_option("--steps", steps, "grid points per axis (>= 2)")->required();
  sweep_cmd->add_option("--out", out_path, "output CSV path ('-' for stdout)");

  double r = 0.0;
  double theta = 0.0;
  std::string function_path;
  auto* check_cmd = app.add_subcommand("check", "Evaluate a functional on a function spec");
  check_cmd->add_option("--theorem", theorem)->required();
  check_cmd->add_option("--alpha", alpha)->required();
  check_cmd->add_option("--beta", beta)->required();
  check_cmd->add_option("--r", r, "|z|")->required();
  check_cmd->add_option("--function", function_path, "JSON function spec")->required();
  auto* theta_opt = check_cmd->add_option("--theta", theta, "argument of z (default: worst on grid)");

  std::string suite = "all";
  std::uint64_t seed = 1;
  std::string witness_path;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification campaigns");
  verify_cmd->add_option("--suite", suite, "all|below|sharpness|thresholds|lemma24|lemmas");
  verify_cmd->add_option("--seed", seed, "corpus seed");
  verify_cmd->add_option("--witnesses", witness_path, "write witnesses CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*radius_cmd) return cmd_radius(theorem, alpha, beta);
    if (*sweep_cmd) return cmd_sweep(theorem, alpha_range, beta_range, steps, out_path);
    if (*check_cmd) {
      return cmd_check(theorem, alpha, beta, r, function_path, *theta_opt ? &theta : nullptr);
    }
    if (*verify_cmd) return cmd_verify(suite, seed, witness_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const bohr::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const bohr::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kParse;
}
