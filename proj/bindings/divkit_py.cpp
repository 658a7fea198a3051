// Python bindings for the divkit core.  Extended reals cross the boundary
// as python floats (math.inf / -math.inf); NaN never appears.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "divkit/convex.hpp"
#include "divkit/divergence.hpp"
#include "divkit/dynsys.hpp"
#include "divkit/errors.hpp"
#include "divkit/ext_real.hpp"
#include "divkit/measure.hpp"
#include "divkit/partition.hpp"
#include "divkit/verify.hpp"

namespace py = pybind11;
using namespace divkit;

namespace {

double unwrap(ExtReal x) { return x.value(); }

}  // namespace

PYBIND11_MODULE(_divkit, m) {
    m.doc() = "sup-sums F-divergences, extended KL divergence, and t-entropy on finite spaces";

    py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);

    py::class_<AtomSpace>(m, "AtomSpace")
        .def(py::init<std::vector<std::string>>(), py::arg("labels"))
        .def_static("indexed", &AtomSpace::indexed, py::arg("n"))
        .def("__len__", &AtomSpace::size)
        .def_property_readonly("labels", &AtomSpace::labels)
        .def("__eq__", [](const AtomSpace& a, const AtomSpace& b) { return a == b; });

    py::class_<ConvexFunction>(m, "ConvexFunction")
        .def("__call__", [](const ConvexFunction& f, double t) { return unwrap(f(t)); })
        .def("eval", [](const ConvexFunction& f, double t) { return unwrap(f(t)); })
        .def_property_readonly("slope_pos", [](const ConvexFunction& f) { return unwrap(f.slope_pos()); })
        .def_property_readonly("slope_neg", [](const ConvexFunction& f) { return unwrap(f.slope_neg()); })
        .def("perspective",
             [](const ConvexFunction& f, double s, double x) { return unwrap(f.perspective(s, x)); },
             py::arg("s"), py::arg("x"))
        .def_property_readonly("support_line", &ConvexFunction::support_line)
        .def_property_readonly("label", &ConvexFunction::label);

    m.def("make_generator",
          [](const std::string& name, std::optional<double> alpha) {
              return make_generator(name, alpha);
          },
          py::arg("name"), py::arg("alpha") = py::none());
    m.def("parse_generator", [](const std::string& token) { return parse_generator(token); },
          py::arg("token"));
    m.def("numeric_asymptotic_slope",
          [](const ConvexFunction& f, bool positive) {
              return unwrap(numeric_asymptotic_slope(
                  f, positive ? Direction::plus : Direction::minus));
          },
          py::arg("f"), py::arg("positive") = true);
    m.def("check_convexity",
          [](const ConvexFunction& f, const std::vector<double>& grid, double tol) {
              return check_convexity(f, grid, tol);
          },
          py::arg("f"), py::arg("grid"), py::arg("tol") = 1e-9);

    py::class_<SignedMeasure>(m, "SignedMeasure")
        .def(py::init<AtomSpace, std::vector<double>>(), py::arg("space"), py::arg("weights"))
        .def_property_readonly("space", &SignedMeasure::space)
        .def_property_readonly("weights", &SignedMeasure::weights)
        .def("mass", &SignedMeasure::mass)
        .def("__add__", [](const SignedMeasure& a, const SignedMeasure& b) { return a + b; });

    py::class_<FiniteMeasure>(m, "FiniteMeasure")
        .def(py::init<AtomSpace, std::vector<double>>(), py::arg("space"), py::arg("weights"))
        .def_property_readonly("space", &FiniteMeasure::space)
        .def_property_readonly("weights", &FiniteMeasure::weights)
        .def("mass", &FiniteMeasure::mass)
        .def("as_signed", &FiniteMeasure::as_signed)
        .def("__add__", [](const FiniteMeasure& a, const FiniteMeasure& b) { return a + b; });

    m.def("integrate",
          [](const SignedMeasure& midx, const std::vector<double>& g) { return integrate(midx, g); });
    m.def("integrate",
          [](const FiniteMeasure& midx, const std::vector<double>& g) { return integrate(midx, g); });
    m.def("jordan_decompose", &jordan_decompose, py::arg("nu"));

    py::class_<LebesgueDecomposition>(m, "LebesgueDecomposition")
        .def_readonly("nu_a", &LebesgueDecomposition::nu_a)
        .def_readonly("nu_s_plus", &LebesgueDecomposition::nu_s_plus)
        .def_readonly("nu_s_minus", &LebesgueDecomposition::nu_s_minus)
        .def("reconstruct", &LebesgueDecomposition::reconstruct);

    m.def("lebesgue_decompose", &lebesgue_decompose, py::arg("nu"), py::arg("mu"));

    py::class_<Density>(m, "Density")
        .def_readonly("space", &Density::space)
        .def_readonly("values", &Density::values);

    m.def("radon_nikodym", &radon_nikodym, py::arg("nu_a"), py::arg("mu"));
    m.def("apply_density",
          [](const std::vector<double>& f, const SignedMeasure& mm) { return apply_density(f, mm); });
    m.def("apply_density",
          [](const std::vector<double>& f, const FiniteMeasure& mm) { return apply_density(f, mm); });
    m.def("total_variation", &total_variation, py::arg("nu"));

    py::class_<PartitionOfUnity>(m, "PartitionOfUnity")
        .def(py::init<AtomSpace, std::vector<std::vector<double>>>(), py::arg("space"),
             py::arg("elements"))
        .def("__len__", &PartitionOfUnity::size)
        .def_property_readonly("elements", &PartitionOfUnity::elements)
        .def_property_readonly("space", &PartitionOfUnity::space);

    m.def("validate_partition",
          [](std::size_t n_atoms, const std::vector<std::vector<double>>& elements, double tol) {
              return validate_partition(n_atoms, elements, tol);
          },
          py::arg("n_atoms"), py::arg("elements"), py::arg("tol") = 1e-12);
    m.def("atomic_partition", &atomic_partition, py::arg("space"));
    m.def("sample_partition", &sample_partition, py::arg("space"), py::arg("k"), py::arg("seed"));
    m.def("refine", &refine, py::arg("g"), py::arg("h"));

    py::class_<DivergenceReport>(m, "DivergenceReport")
        .def_property_readonly("value", [](const DivergenceReport& r) { return unwrap(r.value); })
        .def_property_readonly("ac_term", [](const DivergenceReport& r) { return unwrap(r.ac_term); })
        .def_property_readonly("sing_plus_term",
                               [](const DivergenceReport& r) { return unwrap(r.sing_plus_term); })
        .def_property_readonly("sing_minus_term",
                               [](const DivergenceReport& r) { return unwrap(r.sing_minus_term); })
        .def_readonly("decomposition", &DivergenceReport::decomposition);

    m.def("supsum_term",
          [](const ConvexFunction& f, const FiniteMeasure& mu, const SignedMeasure& nu,
             const std::vector<double>& g) { return unwrap(supsum_term(f, mu, nu, g)); });
    m.def("partition_sum",
          [](const ConvexFunction& f, const FiniteMeasure& mu, const SignedMeasure& nu,
             const PartitionOfUnity& g) { return unwrap(partition_sum(f, mu, nu, g)); });
    m.def("closed_form", &closed_form, py::arg("f"), py::arg("mu"), py::arg("nu"));
    m.def("supsum_estimate",
          [](const ConvexFunction& f, const FiniteMeasure& mu, const SignedMeasure& nu,
             std::size_t k_max, std::size_t samples, std::uint64_t seed) {
              return unwrap(supsum_estimate(f, mu, nu, k_max, samples, seed));
          },
          py::arg("f"), py::arg("mu"), py::arg("nu"), py::arg("k_max") = 4,
          py::arg("samples") = 100, py::arg("seed") = 1);
    m.def("kl_divergence",
          [](const FiniteMeasure& mu, const FiniteMeasure& nu) {
              return unwrap(kl_divergence(mu, nu));
          },
          py::arg("mu"), py::arg("nu"));
    m.def("named_divergence",
          [](const std::string& name, const FiniteMeasure& mu, const SignedMeasure& nu,
             std::optional<double> alpha) { return named_divergence(name, mu, nu, alpha); },
          py::arg("name"), py::arg("mu"), py::arg("nu"), py::arg("alpha") = py::none());
    m.def("integral_via_partitions",
          [](const ConvexFunction& f_gen, const std::vector<double>& f, const FiniteMeasure& mu,
             const PartitionOfUnity& g) {
              return unwrap(integral_via_partitions(f_gen, f, mu, g));
          });

    py::class_<DynamicalSystem>(m, "DynamicalSystem")
        .def(py::init<AtomSpace, std::vector<std::size_t>>(), py::arg("space"), py::arg("map"))
        .def_property_readonly("space", &DynamicalSystem::space)
        .def_property_readonly("map", &DynamicalSystem::map)
        .def("__len__", &DynamicalSystem::size);

    py::class_<TransferOperator>(m, "TransferOperator")
        .def(py::init<DynamicalSystem, std::vector<double>>(), py::arg("system"),
             py::arg("weights"))
        .def_property_readonly("system", &TransferOperator::system)
        .def_property_readonly("weights", &TransferOperator::weight)
        .def("apply",
             [](const TransferOperator& a, const std::vector<double>& f) { return a.apply(f); })
        .def("apply_n",
             [](const TransferOperator& a, const std::vector<double>& f, std::size_t n) {
                 return a.apply_n(f, n);
             })
        .def("matrix", &TransferOperator::matrix);

    m.def("weight_operator",
          [](const TransferOperator& a, const std::vector<double>& phi) {
              return weight_operator(a, phi);
          },
          py::arg("a"), py::arg("phi"));
    m.def("spectral_potential",
          [](const TransferOperator& a, const std::vector<double>& phi, double tol) {
              return unwrap(spectral_potential(a, phi, tol));
          },
          py::arg("a"), py::arg("phi"), py::arg("tol") = 1e-12);
    m.def("spectral_potential_cycle_formula",
          [](const TransferOperator& a, const std::vector<double>& phi) {
              return unwrap(spectral_potential_cycle_formula(a, phi));
          },
          py::arg("a"), py::arg("phi"));
    m.def("adjoint_push", &adjoint_push, py::arg("a"), py::arg("mu"), py::arg("n") = 1);

    py::class_<CycleDecomposition>(m, "CycleDecomposition")
        .def_readonly("cycles", &CycleDecomposition::cycles)
        .def_readonly("transient", &CycleDecomposition::transient);

    m.def("enumerate_cycles", &enumerate_cycles, py::arg("system"));
    m.def("invariance_residual", &invariance_residual, py::arg("system"), py::arg("mu"));
    m.def("is_invariant", &is_invariant, py::arg("system"), py::arg("mu"), py::arg("tol") = 1e-12);
    m.def("invariant_vertices", &invariant_vertices, py::arg("system"));
    m.def("t_entropy_n",
          [](const TransferOperator& a, const FiniteMeasure& mu, std::size_t n, double tol) {
              return unwrap(t_entropy_n(a, mu, n, tol));
          },
          py::arg("a"), py::arg("mu"), py::arg("n"), py::arg("invariance_tol") = 1e-12);
    m.def("t_entropy",
          [](const TransferOperator& a, const FiniteMeasure& mu, std::size_t n_max, double tol) {
              return unwrap(t_entropy(a, mu, n_max, tol));
          },
          py::arg("a"), py::arg("mu"), py::arg("n_max") = 32, py::arg("invariance_tol") = 1e-12);
    m.def("t_entropy_n_sup",
          [](const TransferOperator& a, const FiniteMeasure& mu, std::size_t n,
             const PartitionOfUnity& g, std::size_t max_iters, double tol) {
              return unwrap(t_entropy_n_sup(a, mu, n, g, max_iters, tol));
          },
          py::arg("a"), py::arg("mu"), py::arg("n"), py::arg("g"),
          py::arg("max_iters") = 10000, py::arg("tol") = 1e-10);
    m.def("t_entropy_n_objective",
          [](const TransferOperator& a, const FiniteMeasure& mu, std::size_t n,
             const PartitionOfUnity& g) { return unwrap(t_entropy_n_objective(a, mu, n, g)); },
          py::arg("a"), py::arg("mu"), py::arg("n"), py::arg("g"));

    py::class_<VariationalReport>(m, "VariationalReport")
        .def_property_readonly("lambda_", [](const VariationalReport& r) { return unwrap(r.lambda); })
        .def_property_readonly("best", [](const VariationalReport& r) { return unwrap(r.best); })
        .def_readonly("argmax_cycle", &VariationalReport::argmax_cycle)
        .def_readonly("gap", &VariationalReport::gap);

    m.def("variational_check",
          [](const TransferOperator& a, const std::vector<double>& phi, double tol) {
              return variational_check(a, phi, tol);
          },
          py::arg("a"), py::arg("phi"), py::arg("tol") = 1e-12);

    py::class_<verify::SuiteResult>(m, "SuiteResult")
        .def_readonly("suite", &verify::SuiteResult::suite)
        .def_readonly("trials", &verify::SuiteResult::trials)
        .def_readonly("failures", &verify::SuiteResult::failures)
        .def_readonly("first_failure", &verify::SuiteResult::first_failure)
        .def("passed", &verify::SuiteResult::passed);

    m.def("run_verify_suites",
          [](std::uint64_t seed, int trials, bool inject_defect) {
              verify::VerifyConfig cfg;
              cfg.seed = seed;
              cfg.trials = trials;
              cfg.inject_defect = inject_defect;
              return verify::run_verify_suites(cfg);
          },
          py::arg("seed") = 1, py::arg("trials") = 200, py::arg("inject_defect") = false);
}
