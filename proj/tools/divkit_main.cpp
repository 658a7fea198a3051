// divkit: sup-sums F-divergences, extended Kullback-Leibler divergence, and
// t-entropy of finite dynamical systems, with built-in brute-force
// verification of the identities and inequalities the library rests on.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "divkit/divergence.hpp"
#include "divkit/dynsys.hpp"
#include "divkit/errors.hpp"
#include "divkit/io.hpp"
#include "divkit/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string generator = "kl";
    std::optional<double> alpha;
    std::string mu_path, nu_path, system_path, phi_path;
    std::size_t n_max = 32;
    std::size_t k_max = 4;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    std::size_t iters = 10000;
    int trials = 200;
    std::string suite_filter;
    bool report = false;
    bool inject_defect = false;
    std::string output = "plain";
};

divkit::ConvexFunction generator_from(const Options& opt) {
    if (opt.alpha) return divkit::make_generator(opt.generator, opt.alpha);
    return divkit::parse_generator(opt.generator);
}

void emit(const ordered_json& doc, const Options& opt) {
    if (opt.output == "structured") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // plain: flat "key = value" lines in document order
    for (const auto& [key, value] : doc.items()) {
        if (value.is_structured())
            std::cout << key << " = " << value.dump() << "\n";
        else if (value.is_string())
            std::cout << key << " = " << value.get<std::string>() << "\n";
        else
            std::cout << key << " = " << value.dump() << "\n";
    }
}

int run_divergence(const Options& opt) {
    divkit::FiniteMeasure mu = divkit::read_finite_measure(opt.mu_path);
    divkit::SignedMeasure nu = divkit::read_signed_measure(opt.nu_path);
    divkit::ConvexFunction f = generator_from(opt);
    if (f.label() == "kl")
        for (double v : nu.weights())
            if (v < 0)
                throw std::invalid_argument(
                    "kl requires a nonnegative nu: the extended Kullback-Leibler divergence "
                    "is defined for pairs of nonnegative measures");
    divkit::DivergenceReport rep = divkit::closed_form(f, mu, nu);
    ordered_json doc;
    doc["command"] = "divergence";
    doc["generator"] = f.label();
    if (opt.report) {
        doc["value"] = divkit::ext_real_to_json(rep.value);
        doc["ac_term"] = divkit::ext_real_to_json(rep.ac_term);
        doc["sing_plus_term"] = divkit::ext_real_to_json(rep.sing_plus_term);
        doc["sing_minus_term"] = divkit::ext_real_to_json(rep.sing_minus_term);
        doc["decomposition"] = divkit::decomposition_to_json(rep.decomposition);
    } else {
        doc["value"] = divkit::ext_real_to_json(rep.value);
    }
    emit(doc, opt);
    return 0;
}

int run_decompose(const Options& opt) {
    divkit::FiniteMeasure mu = divkit::read_finite_measure(opt.mu_path);
    divkit::SignedMeasure nu = divkit::read_signed_measure(opt.nu_path);
    divkit::LebesgueDecomposition dec = divkit::lebesgue_decompose(nu, mu);
    ordered_json doc;
    doc["command"] = "decompose";
    doc["nu_a"] = dec.nu_a.weights();
    doc["nu_s_plus"] = dec.nu_s_plus.weights();
    doc["nu_s_minus"] = dec.nu_s_minus.weights();
    emit(doc, opt);
    return 0;
}

int run_supsums(const Options& opt) {
    divkit::FiniteMeasure mu = divkit::read_finite_measure(opt.mu_path);
    divkit::SignedMeasure nu = divkit::read_signed_measure(opt.nu_path);
    divkit::ConvexFunction f = generator_from(opt);
    divkit::ExtReal estimate =
        divkit::supsum_estimate(f, mu, nu, opt.k_max, opt.samples, opt.seed);
    divkit::ExtReal closed = divkit::closed_form(f, mu, nu).value;
    ordered_json doc;
    doc["command"] = "supsums";
    doc["generator"] = f.label();
    doc["k_max"] = opt.k_max;
    doc["samples"] = opt.samples;
    doc["seed"] = opt.seed;
    doc["estimate"] = divkit::ext_real_to_json(estimate);
    doc["closed_form"] = divkit::ext_real_to_json(closed);
    emit(doc, opt);
    return 0;
}

int run_tentropy(const Options& opt) {
    divkit::SystemFile sys = divkit::read_system(opt.system_path);
    divkit::FiniteMeasure mu = divkit::read_finite_measure(opt.mu_path);
    double residual = divkit::invariance_residual(sys.op.system(), mu);
    if (residual > opt.tol || std::abs(mu.mass() - 1.0) > opt.tol)
        throw std::invalid_argument("mu is not an invariant probability measure (max residual " +
                                    std::to_string(residual) + ")");
    ordered_json doc;
    doc["command"] = "tentropy";
    doc["n_max"] = opt.n_max;
    ordered_json table = ordered_json::array();
    divkit::PartitionOfUnity atoms = divkit::atomic_partition(mu.space());
    divkit::ExtReal tau = divkit::ExtReal::pos_inf();
    for (std::size_t n = 1; n <= opt.n_max; ++n) {
        divkit::ExtReal tau_n = divkit::t_entropy_n(sys.op, mu, n, opt.tol);
        ordered_json row;
        row["n"] = n;
        row["tau_n"] = divkit::ext_real_to_json(tau_n);
        divkit::ExtReal rate = tau_n.is_neg_inf() ? divkit::ExtReal::neg_inf()
                                                  : divkit::ExtReal(tau_n.value() / double(n));
        row["tau_n_over_n"] = divkit::ext_real_to_json(rate);
        // cross-check through the inner sup over probability measures
        row["inner_sup"] = divkit::ext_real_to_json(
            divkit::t_entropy_n_sup(sys.op, mu, n, atoms, opt.iters));
        table.push_back(row);
        if (rate < tau) tau = rate;
    }
    doc["table"] = table;
    doc["t_entropy"] = divkit::ext_real_to_json(tau);
    // tau(mu) = -sup_n D_KL(mu || A*^n mu)/n
    doc["sup_kl_rate"] = divkit::ext_real_to_json(-tau);
    emit(doc, opt);
    return 0;
}

int run_variational(const Options& opt) {
    divkit::SystemFile sys = divkit::read_system(opt.system_path);
    std::vector<double> phi(sys.op.size(), 0.0);
    if (!opt.phi_path.empty()) {
        std::ifstream in(opt.phi_path);
        if (!in) throw std::invalid_argument("cannot open file: " + opt.phi_path);
        nlohmann::json j;
        in >> j;
        if (j.is_object() && j.contains("phi")) j = j["phi"];
        if (!j.is_array()) throw std::invalid_argument("phi file: expected an array of numbers");
        phi = j.get<std::vector<double>>();
        if (phi.size() != sys.op.size())
            throw std::invalid_argument("phi size does not match the system's atom count");
    } else if (sys.phi) {
        phi = *sys.phi;
    }
    divkit::VariationalReport rep = divkit::variational_check(sys.op, phi, opt.tol);
    ordered_json doc;
    doc["command"] = "variational";
    doc["lambda"] = divkit::ext_real_to_json(rep.lambda);
    doc["best"] = divkit::ext_real_to_json(rep.best);
    doc["argmax_cycle"] = rep.argmax_cycle;
    doc["gap"] = rep.gap;
    emit(doc, opt);
    return 0;
}

int run_verify(const Options& opt) {
    divkit::verify::VerifyConfig cfg;
    cfg.seed = opt.seed;
    cfg.trials = opt.trials;
    cfg.only = opt.suite_filter;
    cfg.inject_defect = opt.inject_defect;
    std::vector<divkit::verify::SuiteResult> results = divkit::verify::run_verify_suites(cfg);
    ordered_json doc;
    doc["command"] = "verify";
    doc["seed"] = opt.seed;
    doc["trials"] = opt.trials;
    ordered_json suites = ordered_json::array();
    bool all_passed = true;
    for (const auto& r : results) {
        ordered_json row;
        row["suite"] = r.suite;
        row["trials"] = r.trials;
        row["failures"] = r.failures;
        if (!r.passed()) row["first_failure"] = r.first_failure;
        suites.push_back(row);
        all_passed = all_passed && r.passed();
    }
    doc["suites"] = suites;
    doc["all_passed"] = all_passed;
    if (opt.output == "structured") {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.suite << "  "
                      << (r.trials - r.failures) << "/" << r.trials << "\n";
            if (!r.passed()) std::cout << "      " << r.first_failure << "\n";
        }
        std::cout << (all_passed ? "all suites passed" : "property violation detected") << "\n";
    }
    return all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sup-sums F-divergences, extended KL divergence, and t-entropy on finite spaces"};
    app.require_subcommand(1);
    Options opt;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", opt.output, "Output format")
            ->check(CLI::IsMember({"plain", "structured"}));
    };
    auto add_generator = [&](CLI::App* cmd) {
        cmd->add_option("--f", opt.generator,
                        "Generator: kl | hellinger | total_variation | pearson_chi2 | alpha:<value>");
        cmd->add_option("--alpha", opt.alpha, "Parameter for the alpha generator");
    };

    CLI::App* divergence = app.add_subcommand("divergence", "F-divergence of nu from mu");
    add_generator(divergence);
    divergence->add_option("--mu", opt.mu_path, "Reference measure file")->required();
    divergence->add_option("--nu", opt.nu_path, "Measure file (signed allowed except for kl)")->required();
    divergence->add_flag("--report", opt.report, "Print the three-term decomposition");
    add_output(divergence);

    CLI::App* decompose = app.add_subcommand("decompose", "Lebesgue decomposition of nu against mu");
    decompose->add_option("--mu", opt.mu_path, "Reference measure file")->required();
    decompose->add_option("--nu", opt.nu_path, "Measure file")->required();
    add_output(decompose);

    CLI::App* supsums = app.add_subcommand("supsums", "Partition-search estimate vs the closed form");
    add_generator(supsums);
    supsums->add_option("--mu", opt.mu_path, "Reference measure file")->required();
    supsums->add_option("--nu", opt.nu_path, "Measure file")->required();
    supsums->add_option("--k-max", opt.k_max, "Largest partition size to sample")->check(CLI::PositiveNumber);
    supsums->add_option("--samples", opt.samples, "Number of sampled partitions");
    supsums->add_option("--seed", opt.seed, "Seed for partition sampling");
    add_output(supsums);

    CLI::App* tentropy = app.add_subcommand("tentropy", "t-entropy of an invariant measure");
    tentropy->add_option("--system", opt.system_path, "System file")->required();
    tentropy->add_option("--mu", opt.mu_path, "Invariant probability measure file")->required();
    tentropy->add_option("--n-max", opt.n_max, "Truncation of the inf over n")->check(CLI::PositiveNumber);
    tentropy->add_option("--tol", opt.tol, "Invariance tolerance")->check(CLI::PositiveNumber);
    tentropy->add_option("--iters", opt.iters, "Iteration budget for the inner-sup cross-check")
        ->check(CLI::PositiveNumber);
    add_output(tentropy);

    CLI::App* variational = app.add_subcommand("variational",
                                               "Spectral potential vs the entropy maximum");
    variational->add_option("--system", opt.system_path, "System file")->required();
    variational->add_option("--phi", opt.phi_path, "Potential file (array or {\"phi\": [...]})");
    variational->add_option("--tol", opt.tol, "Spectral convergence tolerance")->check(CLI::PositiveNumber);
    add_output(variational);

    CLI::App* verify = app.add_subcommand("verify", "Run the property verification suites");
    verify->add_option("suite", opt.suite_filter,
                       "Run only suites whose name contains this token (e.g. supsums)");
    verify->add_option("--trials", opt.trials, "Random instances per suite")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", opt.seed, "Master seed for all suites");
    verify->add_flag("--inject-defect", opt.inject_defect)->group("");  // harness hook, hidden
    add_output(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(divergence)) return run_divergence(opt);
        if (app.got_subcommand(decompose)) return run_decompose(opt);
        if (app.got_subcommand(supsums)) return run_supsums(opt);
        if (app.got_subcommand(tentropy)) return run_tentropy(opt);
        if (app.got_subcommand(variational)) return run_variational(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
    } catch (const divkit::NonConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
