// Python bindings for the radius, function, functional and verification layers.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "bohr/analytic.hpp"
#include "bohr/errors.hpp"
#include "bohr/format.hpp"
#include "bohr/function_spec.hpp"
#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"
#include "bohr/rootfind.hpp"
#include "bohr/sweep.hpp"
#include "bohr/verify.hpp"

namespace py = pybind11;
using namespace bohr;

namespace {

using TheoremArg = std::variant<Theorem, std::string>;

Theorem to_theorem(const TheoremArg& arg) {
  if (const auto* t = std::get_if<Theorem>(&arg)) return *t;
  const auto t = parse_theorem(std::get<std::string>(arg));
  if (!t) throw InvalidInput("unknown theorem '" + std::get<std::string>(arg) + "' (expected t31..t36)");
  return *t;
}

std::string pair_repr(WeightPair w) {
  return "WeightPair(alpha=" + format_real(w.alpha) + ", beta=" + format_real(w.beta) + ")";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-parameter Bohr-type radii: certified roots, test functions and verification campaigns";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<BracketError>(m, "BracketError", PyExc_ArithmeticError);
  py::register_exception<NonUniqueRoot>(m, "NonUniqueRoot", PyExc_ArithmeticError);
  py::register_exception<CertificationError>(m, "CertificationError", PyExc_ArithmeticError);
  py::register_exception<NotApplicable>(m, "NotApplicable", PyExc_LookupError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  // --- roots -----------------------------------------------------------------
  py::class_<Bracket>(m, "Bracket")
      .def_readonly("lo", &Bracket::lo)
      .def_readonly("hi", &Bracket::hi)
      .def_property_readonly("width", &Bracket::width)
      .def("__repr__", [](const Bracket& b) {
        return "Bracket(" + format_real(b.lo) + ", " + format_real(b.hi) + ")";
      });

  py::class_<CertifiedRoot>(m, "CertifiedRoot")
      .def_readonly("value", &CertifiedRoot::value)
      .def_readonly("residual", &CertifiedRoot::residual)
      .def_readonly("bracket", &CertifiedRoot::bracket)
      .def_readonly("iterations", &CertifiedRoot::iterations)
      .def("__float__", [](const CertifiedRoot& r) { return r.value; })
      .def("__repr__", [](const CertifiedRoot& r) {
        return "CertifiedRoot(value=" + format_real(r.value) + ", residual=" + format_short(r.residual) + ")";
      });

  m.def("solve_quadratic", &solve_quadratic, py::arg("c2"), py::arg("c1"), py::arg("c0"),
        "Real roots of c2 x^2 + c1 x + c0, ascending.");
  m.def("cardano_cubic", &cardano_cubic, py::arg("c3"), py::arg("c2"), py::arg("c1"), py::arg("c0"),
        "Real roots of c3 x^3 + c2 x^2 + c1 x + c0, ascending.");
  m.def(
      "bisect_unique_root",
      [](std::vector<double> ascending, double lo, double hi) {
        return bisect_unique_root(RealPolynomial(std::move(ascending)), Bracket{lo, hi});
      },
      py::arg("coeffs"), py::arg("lo"), py::arg("hi"),
      "Certified unique root of sum coeffs[i] x^i on [lo, hi].");

  // --- radii -----------------------------------------------------------------
  py::enum_<Theorem>(m, "Theorem")
      .value("T31", Theorem::T31)
      .value("T32", Theorem::T32)
      .value("T33", Theorem::T33)
      .value("T34", Theorem::T34)
      .value("T35", Theorem::T35)
      .value("T36", Theorem::T36)
      .def("__str__", [](Theorem t) { return std::string(to_string(t)); }, py::prepend());

  py::enum_<Regime>(m, "Regime")
      .value("LINEAR", Regime::Linear)
      .value("QUADRATIC", Regime::Quadratic)
      .value("MIN_R1", Regime::MinR1)
      .value("MIN_R3", Regime::MinR3)
      .value("CLOSED_FORM", Regime::ClosedForm)
      .value("CONSTANT", Regime::Constant)
      .value("CUBIC", Regime::Cubic)
      .def("__str__", [](Regime r) { return std::string(to_string(r)); }, py::prepend());

  py::class_<WeightPair>(m, "WeightPair")
      .def(py::init([](double a, double b) { return WeightPair{a, b}; }), py::arg("alpha"), py::arg("beta"))
      .def(py::init([](const std::pair<double, double>& p) { return WeightPair{p.first, p.second}; }))
      .def_readwrite("alpha", &WeightPair::alpha)
      .def_readwrite("beta", &WeightPair::beta)
      .def("__repr__", &pair_repr);
  py::implicitly_convertible<py::tuple, WeightPair>();

  py::class_<RadiusCertificate>(m, "RadiusCertificate")
      .def_readonly("theorem", &RadiusCertificate::theorem)
      .def_readonly("value", &RadiusCertificate::value)
      .def_readonly("residual", &RadiusCertificate::residual)
      .def_readonly("bracket", &RadiusCertificate::bracket)
      .def_readonly("components", &RadiusCertificate::components)
      .def_property_readonly("regime", [](const RadiusCertificate& c) { return std::string(to_string(c.regime)); })
      .def("__float__", [](const RadiusCertificate& c) { return c.value; })
      .def("__repr__", [](const RadiusCertificate& c) {
        return "RadiusCertificate(" + std::string(to_string(c.theorem)) + ", value=" + format_real(c.value) +
               ", regime=" + std::string(to_string(c.regime)) + ")";
      });

  m.def("parse_theorem", &parse_theorem, py::arg("text"));
  m.def(
      "radius", [](const TheoremArg& t, double alpha, double beta) { return radius(to_theorem(t), {alpha, beta}); },
      py::arg("theorem"), py::arg("alpha"), py::arg("beta"),
      "Certified radius for a theorem given as Theorem or 't31'..'t36'.");
  m.def("radius_t31", &radius_t31, py::arg("w"));
  m.def("radius_t32", &radius_t32, py::arg("w"));
  m.def("radius_t33", &radius_t33, py::arg("w"));
  m.def("radius_t34", &radius_t34, py::arg("w"));
  m.def("radius_t35", &radius_t35, py::arg("w"));
  m.def("radius_t36", &radius_t36, py::arg("w"));
  m.def(
      "lemma24_roots",
      [](WeightPair w) {
        const Lemma24Roots r = lemma24_roots(w);
        return py::make_tuple(r.r1star, r.r2star);
      },
      py::arg("w"), "(r1star, r2star) of the two quadratics on (0, 1/2).");
  m.def(
      "is_admissible", [](const TheoremArg& t, WeightPair w) { return is_admissible(to_theorem(t), w); },
      py::arg("theorem"), py::arg("w"));
  m.def(
      "closed_form_crosscheck",
      [](const TheoremArg& t, WeightPair w) {
        const CrosscheckReport r = closed_form_crosscheck(to_theorem(t), w);
        py::dict d;
        d["closed"] = r.closed;
        d["numeric"] = r.numeric;
        d["gap"] = r.gap;
        d["cardano"] = r.cardano;
        d["cardano_gap"] = r.cardano_gap;
        return d;
      },
      py::arg("theorem"), py::arg("w"));

  // --- test functions --------------------------------------------------------
  py::enum_<FunctionKind>(m, "FunctionKind")
      .value("POLYNOMIAL", FunctionKind::Polynomial)
      .value("MOEBIUS", FunctionKind::Moebius)
      .value("BLASCHKE", FunctionKind::Blaschke);

  py::class_<AnalyticFunction>(m, "AnalyticFunction")
      .def_static("polynomial", &AnalyticFunction::polynomial, py::arg("coeffs"))
      .def_static("moebius", &AnalyticFunction::moebius, py::arg("a"))
      .def_static("blaschke", &AnalyticFunction::blaschke, py::arg("zeros"), py::arg("scale") = 1.0)
      .def_static("from_spec", &parse_function_spec, py::arg("text"))
      .def_property_readonly("kind", &AnalyticFunction::kind)
      .def("to_spec", &to_function_spec)
      .def("__call__", [](const AnalyticFunction& f, complex z) { return eval(f, z); }, py::arg("z"))
      .def("__repr__", [](const AnalyticFunction& f) { return "AnalyticFunction(" + to_function_spec(f) + ")"; });

  py::class_<TaylorSlice>(m, "TaylorSlice")
      .def_readonly("center", &TaylorSlice::center)
      .def_readonly("coeffs", &TaylorSlice::coeffs)
      .def_readonly("rho", &TaylorSlice::rho)
      .def_readonly("tail_bound", &TaylorSlice::tail_bound);

  py::class_<SeriesValue>(m, "SeriesValue")
      .def_readonly("value", &SeriesValue::value)
      .def_readonly("tail_bound", &SeriesValue::tail_bound)
      .def_readonly("terms", &SeriesValue::terms);

  m.def("eval", &eval, py::arg("f"), py::arg("z"));
  m.def("taylor_at_zero", &taylor_at_zero, py::arg("f"), py::arg("n"), py::arg("rho") = 0.0);
  m.def("recenter", &recenter, py::arg("f"), py::arg("z0"), py::arg("n"), py::arg("rho") = 0.0);
  m.def("coefficient_sum", &coefficient_sum, py::arg("f"), py::arg("z0"), py::arg("rho"));
  m.def("area_sum", &area_sum, py::arg("f"), py::arg("r"), py::arg("n") = 64);
  m.def(
      "certify_bounded",
      [](const AnalyticFunction& f, int samples) {
        const BoundednessCertificate c = certify_bounded(f, samples);
        return py::make_tuple(c.certified, c.sup_estimate);
      },
      py::arg("f"), py::arg("samples") = 1024, "(certified, sup_estimate)");
  m.def("random_test_function", &random_test_function, py::arg("seed"), py::arg("degree"));

  // --- functionals -----------------------------------------------------------
  py::class_<FunctionalBreakdown>(m, "FunctionalBreakdown")
      .def_readonly("theorem", &FunctionalBreakdown::theorem)
      .def_readonly("total", &FunctionalBreakdown::total)
      .def_readonly("modulus_term", &FunctionalBreakdown::modulus_term)
      .def_readonly("constant_term", &FunctionalBreakdown::constant_term)
      .def_readonly("series_term", &FunctionalBreakdown::series_term)
      .def_readonly("area_term", &FunctionalBreakdown::area_term)
      .def_readonly("truncation_slack", &FunctionalBreakdown::truncation_slack);

  m.def(
      "bohr_lhs",
      [](const TheoremArg& t, const AnalyticFunction& f, complex z, WeightPair w) {
        return bohr_lhs(to_theorem(t), f, z, w);
      },
      py::arg("theorem"), py::arg("f"), py::arg("z"), py::arg("w"));
  m.def(
      "majorant", [](const TheoremArg& t, double a, double r, WeightPair w) { return majorant(to_theorem(t), a, r, w); },
      py::arg("theorem"), py::arg("a"), py::arg("r"), py::arg("w"));
  m.def(
      "gap", [](const TheoremArg& t, double a, double r, WeightPair w) { return gap(to_theorem(t), a, r, w); },
      py::arg("theorem"), py::arg("a"), py::arg("r"), py::arg("w"));
  m.def(
      "envelope_sup",
      [](const TheoremArg& t, double r, WeightPair w) {
        const EnvelopeResult e = envelope_sup(to_theorem(t), r, w);
        return py::make_tuple(e.sup, e.argmax_a);
      },
      py::arg("theorem"), py::arg("r"), py::arg("w"), "(sup, argmax_a) of the majorant over a.");
  m.def("sharpness_fn", &sharpness_fn, py::arg("a"), py::arg("r"), py::arg("w"));

  // --- verification ----------------------------------------------------------
  py::enum_<Campaign>(m, "Campaign")
      .value("BELOW_RADIUS", Campaign::BelowRadius)
      .value("SHARPNESS", Campaign::Sharpness)
      .value("THRESHOLDS", Campaign::Thresholds)
      .value("LEMMA24", Campaign::Lemma24)
      .value("COEFFICIENT_BOUND", Campaign::CoefficientBound)
      .value("VALUE_BOUND", Campaign::ValueBound)
      .value("DERIVATIVE_BOUND", Campaign::DerivativeBound)
      .value("ABOVE_RADIUS", Campaign::AboveRadius);

  py::class_<FunctionRef>(m, "FunctionRef")
      .def_readonly("kind", &FunctionRef::kind)
      .def_readonly("moebius_a", &FunctionRef::moebius_a)
      .def_readonly("seed", &FunctionRef::seed)
      .def_readonly("degree", &FunctionRef::degree)
      .def("describe", &FunctionRef::describe);

  py::class_<CorpusEntry>(m, "CorpusEntry")
      .def_readonly("ref", &CorpusEntry::ref)
      .def_readonly("f", &CorpusEntry::f);

  py::class_<Witness>(m, "Witness")
      .def_readonly("theorem", &Witness::theorem)
      .def_readonly("weights", &Witness::weights)
      .def_readonly("r", &Witness::r)
      .def_readonly("theta", &Witness::theta)
      .def_readonly("function", &Witness::function)
      .def_readonly("lhs", &Witness::lhs)
      .def("recheck", &recheck);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("campaign", &VerificationReport::campaign)
      .def_readonly("label", &VerificationReport::label)
      .def_readonly("cells_checked", &VerificationReport::cells_checked)
      .def_readonly("max_violation", &VerificationReport::max_violation)
      .def_readonly("tolerance", &VerificationReport::tolerance)
      .def_readonly("max_lhs", &VerificationReport::max_lhs)
      .def_readonly("witnesses", &VerificationReport::witnesses)
      .def_readonly("notes", &VerificationReport::notes)
      .def_readonly("passed", &VerificationReport::passed)
      .def("summary", &summary_line)
      .def("__repr__", &summary_line);

  m.def("make_corpus", &make_corpus, py::arg("seed"), py::arg("moebius_count") = 100,
        py::arg("blaschke_count") = 100);
  m.def(
      "check_below_radius",
      [](const TheoremArg& t, WeightPair w, const Corpus& corpus, double eps) {
        py::gil_scoped_release release;
        return check_below_radius(to_theorem(t), w, corpus, eps);
      },
      py::arg("theorem"), py::arg("w"), py::arg("corpus"), py::arg("epsilon") = kDefaultOffset);
  m.def("sharpness_witness_t31", &sharpness_witness_t31, py::arg("w"), py::arg("r"));
  m.def(
      "threshold_continuity",
      [](const TheoremArg& t, double alpha) { return threshold_continuity(to_theorem(t), alpha); },
      py::arg("theorem"), py::arg("alpha"));
  m.def(
      "above_radius_probe",
      [](const TheoremArg& t, WeightPair w, double r, int budget, const Corpus& corpus) {
        py::gil_scoped_release release;
        return above_radius_probe(to_theorem(t), w, r, budget, corpus);
      },
      py::arg("theorem"), py::arg("w"), py::arg("r"), py::arg("budget"), py::arg("corpus"));
  m.def("lemma24_campaign", &lemma24_campaign, py::arg("grid_n") = 20);
  m.def("sharpness_campaign", &sharpness_campaign, py::arg("pairs"), py::arg("offset") = kDefaultOffset,
        py::arg("probes") = 10000, py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_suite",
      [](const std::string& suite, std::uint64_t seed) {
        const auto s = parse_suite(suite);
        if (!s) throw InvalidInput("unknown suite '" + suite + "'");
        py::gil_scoped_release release;
        return run_suite(*s, seed);
      },
      py::arg("suite") = "all", py::arg("seed") = 1);
  m.def("witnesses_csv", &witnesses_csv, py::arg("reports"));

  // --- sweeps ----------------------------------------------------------------
  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("alpha", &SweepRow::alpha)
      .def_readonly("beta", &SweepRow::beta)
      .def_readonly("theorem", &SweepRow::theorem)
      .def_readonly("radius", &SweepRow::radius)
      .def_readonly("regime", &SweepRow::regime)
      .def_readonly("residual", &SweepRow::residual);

  m.def(
      "sweep",
      [](const TheoremArg& t, std::pair<double, double> alpha, std::pair<double, double> beta, int steps) {
        return sweep(to_theorem(t), {alpha.first, alpha.second}, {beta.first, beta.second}, steps);
      },
      py::arg("theorem"), py::arg("alpha"), py::arg("beta"), py::arg("steps"));
  m.def("sweep_csv", &sweep_csv, py::arg("rows"));
}
