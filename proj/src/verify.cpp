#include "divkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "divkit/divergence.hpp"
#include "divkit/dynsys.hpp"
#include "divkit/partition.hpp"

namespace divkit::verify {

namespace {

// a <= b + tol in the extended-real order.
bool ext_leq(ExtReal a, ExtReal b, double tol) {
    if (b.is_pos_inf() || a.is_neg_inf()) return true;
    if (a.is_pos_inf() || b.is_neg_inf()) return false;
    return a.value() <= b.value() + tol;
}

std::string str(ExtReal x) {
    if (x.is_pos_inf()) return "inf";
    if (x.is_neg_inf()) return "-inf";
    std::ostringstream os;
    os.precision(17);
    os << x.value();
    return os.str();
}

template <typename Body>
SuiteResult run_suite(const char* name, SuiteId id, const VerifyConfig& cfg, Body&& body) {
    SuiteResult r;
    r.suite = name;
    for (int i = 0; i < cfg.trials; ++i) {
        SplitRng rng = SplitRng::for_instance(cfg.seed, id, static_cast<std::uint64_t>(i));
        std::string detail;
        bool ok = false;
        try {
            ok = body(rng, detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        ++r.trials;
        if (!ok) {
            ++r.failures;
            if (r.first_failure.empty()) {
                std::ostringstream os;
                os << "seed=" << cfg.seed << " suite=" << static_cast<std::uint64_t>(id)
                   << " index=" << i << ": " << detail;
                r.first_failure = os.str();
            }
        }
    }
    return r;
}

// Total-variation generator with deliberately understated asymptotic
// slopes; used to prove the suites can fail.
ConvexFunction defective_generator() {
    return ConvexFunction::from_raw(
        "total_variation(defective)", [](double t) { return std::abs(t - 1.0); },
        -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
        ExtReal(0.25), ExtReal(-0.25), 1.0, -1.0);
}

ConvexFunction pick(const VerifyConfig& cfg, SplitRng& rng) {
    if (cfg.inject_defect) return defective_generator();
    return pick_generator(rng);
}

}  // namespace

ConvexFunction pick_generator(SplitRng& rng) {
    switch (rng.uniform_index(7)) {
        case 0: return ConvexFunction::kl();
        case 1: return ConvexFunction::hellinger();
        case 2: return ConvexFunction::total_variation();
        case 3: return ConvexFunction::pearson_chi2();
        case 4: return ConvexFunction::alpha(2.0);
        case 5: return ConvexFunction::alpha(0.5);
        default: return ConvexFunction::alpha(-1.0);
    }
}

FiniteMeasure random_finite_measure(const AtomSpace& space, SplitRng& rng) {
    std::vector<double> w(space.size(), 0.0);
    bool any = false;
    for (double& v : w)
        if (!rng.bernoulli(1.0 / 3.0)) {
            v = rng.uniform(0.3, 1.5);
            any = true;
        }
    if (!any) w[0] = 1.0;
    return FiniteMeasure(space, std::move(w));
}

SignedMeasure random_signed_measure(const AtomSpace& space, const FiniteMeasure& mu,
                                    SplitRng& rng) {
    std::vector<double> w(space.size(), 0.0);
    for (double& v : w)
        if (!rng.bernoulli(0.25))
            v = (rng.bernoulli(0.5) ? 1.0 : -1.0) * rng.uniform(0.2, 1.5);
    // Guarantee a singular atom whenever mu has a null one.
    for (std::size_t i = 0; i < space.size(); ++i)
        if (mu.weight(i) == 0.0) {
            if (w[i] == 0.0) w[i] = (rng.bernoulli(0.5) ? 1.0 : -1.0) * rng.uniform(0.2, 1.5);
            break;
        }
    return SignedMeasure(space, std::move(w));
}

FiniteMeasure random_probability(const AtomSpace& space, SplitRng& rng) {
    std::vector<double> w(space.size());
    double total = 0;
    for (double& v : w) total += v = rng.uniform(0.1, 1.0);
    for (double& v : w) v /= total;
    return FiniteMeasure(space, std::move(w));
}

namespace {

SuiteResult suite_perspective_lemmas(const VerifyConfig& cfg) {
    return run_suite("perspective_lemmas", kPerspectiveLemmas, cfg,
                     [&cfg](SplitRng& rng, std::string& detail) {
        ConvexFunction f = pick(cfg, rng);
        auto mass = [&rng] { return rng.bernoulli(0.25) ? 0.0 : rng.uniform(0.01, 3.0); };
        auto point = [&rng] { return rng.bernoulli(0.15) ? 0.0 : rng.uniform(-3.0, 3.0); };
        double s = mass(), t = mass(), x = point(), y = point();

        ExtReal lhs = f.perspective(s + t, x + y);
        ExtReal rhs = f.perspective(s, x) + f.perspective(t, y);
        if (!ext_leq(lhs, rhs, 1e-9)) {
            detail = f.label() + " subadditivity: s=" + std::to_string(s) +
                     " t=" + std::to_string(t) + " x=" + std::to_string(x) +
                     " y=" + std::to_string(y) + " lhs=" + str(lhs) + " rhs=" + str(rhs);
            return false;
        }

        auto [a, b] = f.support_line();
        ExtReal bound(a * x + b * s);
        if (!ext_leq(bound, f.perspective(s, x), 1e-9)) {
            detail = f.label() + " lower bound: s=" + std::to_string(s) +
                     " x=" + std::to_string(x) + " p=" + str(f.perspective(s, x)) +
                     " Ax+Bs=" + str(bound);
            return false;
        }

        if (s > 0) {
            double lam = rng.uniform(0.1, 4.0);
            ExtReal p1 = f.perspective(lam * s, lam * x);
            ExtReal p0 = f.perspective(s, x);
            ExtReal scaled = p0.is_pos_inf() ? ExtReal::pos_inf() : ExtReal(lam * p0.value());
            if (!ext_close(p1, scaled, 1e-9 * (1.0 + std::abs(lam)))) {
                detail = f.label() + " homogeneity: lam=" + std::to_string(lam) +
                         " p(lam s, lam x)=" + str(p1) + " lam*p=" + str(scaled);
                return false;
            }
        }

        // p(s, x) -> p(0, x) as s -> 0+ exactly when the relevant tail slope
        // is finite; for x == 0 the convention value 0 is the limit exactly
        // when F(0) is finite (s * F(0) stays +inf otherwise).
        bool limit_holds = (x == 0.0) ? f(0.0).finite()
                                      : (x > 0 ? f.slope_pos() : f.slope_neg()).finite();
        if (limit_holds) {
            double eps = std::ldexp(1.0, -50);
            ExtReal limit = f.perspective(eps, x);
            ExtReal at_zero = f.perspective(0.0, x);
            if (!ext_close(limit, at_zero, 1e-6)) {
                detail = f.label() + " s->0 limit: x=" + std::to_string(x) +
                         " p(eps,x)=" + str(limit) + " p(0,x)=" + str(at_zero);
                return false;
            }
        }
        return true;
    });
}

SuiteResult suite_supsums_principle(const VerifyConfig& cfg) {
    return run_suite("supsums_principle", kSupsumsPrinciple, cfg,
                     [&cfg](SplitRng& rng, std::string& detail) {
        AtomSpace space = AtomSpace::indexed(2 + rng.uniform_index(5));
        ConvexFunction f = pick(cfg, rng);
        FiniteMeasure mu = random_finite_measure(space, rng);
        SignedMeasure nu = random_signed_measure(space, mu, rng);

        DivergenceReport rep = closed_form(f, mu, nu);
        ExtReal resum = rep.ac_term + rep.sing_plus_term + rep.sing_minus_term;
        if (!(resum == rep.value)) {
            detail = "report terms do not add up: " + str(rep.value) + " vs " + str(resum);
            return false;
        }

        ExtReal at_atomic = partition_sum(f, mu, nu, atomic_partition(space));
        if (!ext_close(at_atomic, rep.value, 1e-12)) {
            detail = f.label() + " atomic=" + str(at_atomic) + " closed=" + str(rep.value);
            return false;
        }

        for (int j = 0; j < 5; ++j) {
            std::size_t k = 1 + rng.uniform_index(2 * space.size());
            ExtReal v = partition_sum(f, mu, nu, sample_partition(space, k, rng.next_u64()));
            if (!ext_leq(v, rep.value, 1e-9)) {
                detail = f.label() + " sampled partition " + std::to_string(j) + " (k=" +
                         std::to_string(k) + ") sum " + str(v) + " exceeds closed form " +
                         str(rep.value);
                return false;
            }
        }
        return true;
    });
}

SuiteResult suite_subadditivity(const VerifyConfig& cfg) {
    return run_suite("subadditivity", kSubadditivity, cfg,
                     [](SplitRng& rng, std::string& detail) {
        AtomSpace space = AtomSpace::indexed(2 + rng.uniform_index(5));
        ConvexFunction f = pick_generator(rng);
        FiniteMeasure mu1 = random_finite_measure(space, rng);
        FiniteMeasure mu2 = random_finite_measure(space, rng);
        SignedMeasure nu1 = random_signed_measure(space, mu1, rng);
        SignedMeasure nu2 = random_signed_measure(space, mu2, rng);
        ExtReal lhs = closed_form(f, mu1 + mu2, nu1 + nu2).value;
        ExtReal rhs = closed_form(f, mu1, nu1).value + closed_form(f, mu2, nu2).value;
        if (!ext_leq(lhs, rhs, 1e-9)) {
            detail = f.label() + ": rho(mu1+mu2,nu1+nu2)=" + str(lhs) +
                     " > rho1+rho2=" + str(rhs);
            return false;
        }
        return true;
    });
}

SuiteResult suite_additivity(const VerifyConfig& cfg) {
    return run_suite("additivity", kAdditivity, cfg, [](SplitRng& rng, std::string& detail) {
        AtomSpace space = AtomSpace::indexed(2 + rng.uniform_index(5));
        ConvexFunction f = pick_generator(rng);
        FiniteMeasure mu = random_finite_measure(space, rng);
        SignedMeasure nu = random_signed_measure(space, mu, rng);
        auto density = [&rng, &space] {
            std::vector<double> d(space.size(), 0.0);
            for (double& v : d)
                if (!rng.bernoulli(0.25)) v = rng.uniform(0.2, 1.5);
            return d;
        };
        std::vector<double> f1 = density(), f2 = density(), sum(space.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = f1[i] + f2[i];
        ExtReal lhs = closed_form(f, apply_density(sum, mu), apply_density(sum, nu)).value;
        ExtReal rhs = closed_form(f, apply_density(f1, mu), apply_density(f1, nu)).value +
                      closed_form(f, apply_density(f2, mu), apply_density(f2, nu)).value;
        if (!ext_close(lhs, rhs, 1e-9)) {
            detail = f.label() + ": rho((f1+f2)mu,(f1+f2)nu)=" + str(lhs) +
                     " vs sum=" + str(rhs);
            return false;
        }
        return true;
    });
}

SuiteResult suite_kl_identities(const VerifyConfig& cfg) {
    return run_suite("kl_identities", kKlIdentities, cfg, [](SplitRng& rng, std::string& detail) {
        AtomSpace space = AtomSpace::indexed(2 + rng.uniform_index(5));
        FiniteMeasure nu = random_probability(space, rng);
        FiniteMeasure mu = random_probability(space, rng);
        std::size_t variant = rng.uniform_index(4);
        if (variant == 1) mu = nu;
        if (variant == 2 && space.size() > 1) {
            // mu with a null atom: nu then has a part singular with respect to mu
            std::vector<double> w = mu.weights();
            w.back() = 0.0;
            double total = 0;
            for (double v : w) total += v;
            for (double& v : w) v /= total;
            mu = FiniteMeasure(space, std::move(w));
        }

        ExtReal kl = kl_divergence(mu, nu);
        double direct = 0;
        for (std::size_t i = 0; i < space.size(); ++i)
            if (mu.weight(i) > 0) direct += mu.weight(i) * std::log(mu.weight(i) / nu.weight(i));
        if (!ext_close(kl, ExtReal(direct), 1e-12)) {
            detail = "kl=" + str(kl) + " direct=" + std::to_string(direct);
            return false;
        }

        // Insensitive to the nu-part singular with respect to mu.
        LebesgueDecomposition dec = lebesgue_decompose(nu.as_signed(), mu);
        std::vector<double> nu_a_w = dec.nu_a.weights();
        ExtReal kl_a = kl_divergence(mu, FiniteMeasure(space, std::move(nu_a_w)));
        if (!ext_close(kl, kl_a, 1e-12)) {
            detail = "kl(mu,nu)=" + str(kl) + " kl(mu,nu_a)=" + str(kl_a);
            return false;
        }

        auto kl_partition_sum = [&](const PartitionOfUnity& g) {
            double s = 0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                double mg = integrate(mu, g.element(i));
                if (mg <= 0) continue;  // vanishes regardless of the second factor
                s += mg * std::log(mg / integrate(nu, g.element(i)));
            }
            return s;
        };

        double atomic = kl_partition_sum(atomic_partition(space));
        if (!ext_close(ExtReal(atomic), kl, 1e-12)) {
            detail = "atomic partition sum " + std::to_string(atomic) + " vs kl " + str(kl);
            return false;
        }
        for (int j = 0; j < 3; ++j) {
            std::size_t k = 1 + rng.uniform_index(2 * space.size());
            PartitionOfUnity g = sample_partition(space, k, rng.next_u64());
            double s = kl_partition_sum(g);
            if (!ext_leq(ExtReal(s), kl, 1e-9)) {
                detail = "sampled kl sum " + std::to_string(s) + " exceeds kl " + str(kl);
                return false;
            }
            ExtReal via_generator = partition_sum(ConvexFunction::kl(), mu, nu.as_signed(), g);
            if (!ext_close(via_generator, ExtReal(s), 1e-9)) {
                detail = "kl partition sum " + std::to_string(s) +
                         " disagrees with -ln generator sum " + str(via_generator);
                return false;
            }
        }

        if (!ext_leq(ExtReal(0.0), kl, 1e-12)) {
            detail = "kl negative: " + str(kl);
            return false;
        }
        double tv_diff = 0;
        for (std::size_t i = 0; i < space.size(); ++i)
            tv_diff += std::abs(mu.weight(i) - nu.weight(i));
        if (variant == 1 && kl.finite() && std::abs(kl.value()) > 1e-12) {
            detail = "kl(mu,mu) = " + str(kl) + " != 0";
            return false;
        }
        if (tv_diff > 0.05 && !(kl > ExtReal(0.0))) {
            detail = "kl not strictly positive for distinct measures: " + str(kl);
            return false;
        }
        return true;
    });
}

SuiteResult suite_jensen_corollary(const VerifyConfig& cfg) {
    return run_suite("jensen_corollary", kJensenCorollary, cfg,
                     [](SplitRng& rng, std::string& detail) {
        AtomSpace space = AtomSpace::indexed(2 + rng.uniform_index(5));
        ConvexFunction gen = pick_generator(rng);
        FiniteMeasure mu = random_finite_measure(space, rng);
        std::vector<double> f(space.size(), 0.0);
        for (double& v : f)
            if (!rng.bernoulli(0.2)) v = rng.uniform(-1.0, 3.0);

        ExtReal direct(0.0);  // integral of F(f) d mu
        for (std::size_t i = 0; i < space.size(); ++i) {
            double m = mu.weight(i);
            if (m <= 0) continue;
            ExtReal fi = gen(f[i]);
            direct += fi.is_pos_inf() ? ExtReal::pos_inf() : ExtReal(m * fi.value());
        }

        ExtReal atomic = integral_via_partitions(gen, f, mu, atomic_partition(space));
        if (!ext_close(atomic, direct, 1e-12)) {
            detail = gen.label() + " atomic=" + str(atomic) + " integral=" + str(direct);
            return false;
        }
        for (int j = 0; j < 3; ++j) {
            std::size_t k = 1 + rng.uniform_index(2 * space.size());
            ExtReal v = integral_via_partitions(gen, f, mu,
                                                sample_partition(space, k, rng.next_u64()));
            if (!ext_leq(v, direct, 1e-9)) {
                detail = gen.label() + " sampled=" + str(v) + " exceeds integral=" + str(direct);
                return false;
            }
        }
        return true;
    });
}

SuiteResult suite_measure_ops(const VerifyConfig& cfg) {
    return run_suite("measure_ops", kMeasureOps, cfg, [](SplitRng& rng, std::string& detail) {
        AtomSpace space = AtomSpace::indexed(2 + rng.uniform_index(5));
        FiniteMeasure mu = random_finite_measure(space, rng);
        SignedMeasure nu = random_signed_measure(space, mu, rng);

        LebesgueDecomposition dec = lebesgue_decompose(nu, mu);
        SignedMeasure back = dec.reconstruct();
        for (std::size_t i = 0; i < space.size(); ++i) {
            if (back.weight(i) != nu.weight(i)) {  // componentwise selection: bitwise exact
                detail = "reconstruction differs at atom " + std::to_string(i);
                return false;
            }
            if (mu.weight(i) > 0 &&
                (dec.nu_s_plus.weight(i) != 0 || dec.nu_s_minus.weight(i) != 0)) {
                detail = "singular mass on the support of mu";
                return false;
            }
            if (mu.weight(i) == 0 && dec.nu_a.weight(i) != 0) {
                detail = "nu_a charges a mu-null atom";
                return false;
            }
        }

        auto [plus, minus] = jordan_decompose(nu);
        if (std::abs(plus.mass() + minus.mass() - total_variation(nu)) > 1e-12) {
            detail = "jordan masses do not add to the total variation";
            return false;
        }
        for (std::size_t i = 0; i < space.size(); ++i)
            if (plus.weight(i) != 0 && minus.weight(i) != 0) {
                detail = "jordan parts overlap at atom " + std::to_string(i);
                return false;
            }

        Density d = radon_nikodym(dec.nu_a, mu);
        std::vector<double> g(space.size()), dg(space.size());
        for (std::size_t i = 0; i < space.size(); ++i) {
            g[i] = rng.uniform(-2, 2);
            dg[i] = d.values[i] * g[i];
        }
        if (std::abs(integrate(dec.nu_a, g) - integrate(mu, dg)) > 1e-12) {
            detail = "radon-nikodym density fails the defining identity";
            return false;
        }

        std::vector<double> f1(space.size()), f2(space.size()), fsum(space.size());
        for (std::size_t i = 0; i < space.size(); ++i) {
            f1[i] = rng.uniform(0, 2);
            f2[i] = rng.uniform(0, 2);
            fsum[i] = f1[i] + f2[i];
        }
        SignedMeasure lhs = apply_density(fsum, nu);
        SignedMeasure rhs = apply_density(f1, nu) + apply_density(f2, nu);
        for (std::size_t i = 0; i < space.size(); ++i)
            if (std::abs(lhs.weight(i) - rhs.weight(i)) > 1e-12) {
                detail = "apply_density additivity fails at atom " + std::to_string(i);
                return false;
            }
        return true;
    });
}

SuiteResult suite_partition_refinement(const VerifyConfig& cfg) {
    return run_suite("partition_refinement", kPartitionRefinement, cfg,
                     [](SplitRng& rng, std::string& detail) {
        AtomSpace space = AtomSpace::indexed(2 + rng.uniform_index(4));
        ConvexFunction f = pick_generator(rng);
        FiniteMeasure mu = random_finite_measure(space, rng);
        SignedMeasure nu = random_signed_measure(space, mu, rng);
        PartitionOfUnity g = sample_partition(space, 1 + rng.uniform_index(4), rng.next_u64());
        PartitionOfUnity h = sample_partition(space, 1 + rng.uniform_index(4), rng.next_u64());
        ExtReal coarse = partition_sum(f, mu, nu, g);
        ExtReal fine = partition_sum(f, mu, nu, refine(g, h));
        if (!ext_leq(coarse, fine, 1e-9)) {
            detail = f.label() + ": refinement decreased the sum, " + str(coarse) + " -> " +
                     str(fine);
            return false;
        }
        return true;
    });
}

SuiteResult suite_transfer_identities(const VerifyConfig& cfg) {
    return run_suite("transfer_identities", kTransferIdentities, cfg,
                     [](SplitRng& rng, std::string& detail) {
        std::size_t n = 2 + rng.uniform_index(7);
        AtomSpace space = AtomSpace::indexed(n);
        std::vector<std::size_t> map(n);
        for (auto& v : map) v = rng.uniform_index(n);
        std::vector<double> a(n);
        for (auto& v : a) v = rng.bernoulli(0.2) ? 0.0 : rng.uniform(0.2, 2.0);
        TransferOperator op(DynamicalSystem(space, map), a);

        for (int pair = 0; pair < 4; ++pair) {
            std::vector<double> f(n), g(n), gf(n);
            for (std::size_t i = 0; i < n; ++i) {
                f[i] = rng.uniform(-2, 2);
                g[i] = rng.uniform(-2, 2);
            }
            for (std::size_t i = 0; i < n; ++i) gf[i] = g[map[i]] * f[i];
            std::vector<double> lhs = op.apply(gf), af = op.apply(f);
            for (std::size_t i = 0; i < n; ++i)
                if (std::abs(lhs[i] - g[i] * af[i]) > 1e-12) {
                    detail = "homological identity off at atom " + std::to_string(i);
                    return false;
                }
        }

        std::vector<double> nonneg(n);
        for (auto& v : nonneg) v = rng.uniform(0, 2);
        for (double v : op.apply(nonneg))
            if (v < 0) {
                detail = "positivity violated";
                return false;
            }

        FiniteMeasure mu = random_finite_measure(space, rng);
        for (std::size_t steps = 1; steps <= 4; ++steps) {
            std::vector<double> g(n);
            for (auto& v : g) v = rng.uniform(-2, 2);
            double via_op = integrate(mu, op.apply_n(g, steps));
            double via_adjoint = integrate(adjoint_push(op, mu, steps), g);
            if (std::abs(via_op - via_adjoint) > 1e-12 * (1.0 + std::abs(via_op))) {
                detail = "adjoint identity off for n=" + std::to_string(steps);
                return false;
            }
        }
        return true;
    });
}

SuiteResult suite_spectral_agreement(const VerifyConfig& cfg) {
    return run_suite("spectral_agreement", kSpectralAgreement, cfg,
                     [](SplitRng& rng, std::string& detail) {
        std::size_t n = 2 + rng.uniform_index(7);
        AtomSpace space = AtomSpace::indexed(n);
        std::vector<std::size_t> map(n);
        for (auto& v : map) v = rng.uniform_index(n);
        bool kill_cycles = rng.bernoulli(0.1);
        std::vector<double> a(n);
        for (auto& v : a) v = kill_cycles ? 0.0 : rng.uniform(0.2, 3.0);
        std::vector<double> phi(n);
        for (auto& v : phi) v = rng.uniform(-2, 2);
        TransferOperator op(DynamicalSystem(space, map), a);
        ExtReal power = spectral_potential(op, phi, 1e-12);
        ExtReal cycle = spectral_potential_cycle_formula(op, phi);
        if (!ext_close(power, cycle, 1e-9)) {
            detail = "power=" + str(power) + " cycle=" + str(cycle);
            return false;
        }
        return true;
    });
}

SuiteResult suite_tentropy_closed_forms(const VerifyConfig& cfg) {
    return run_suite("tentropy_closed_forms", kTentropyClosedForms, cfg,
                     [](SplitRng& rng, std::string& detail) {
        std::size_t n = 2 + rng.uniform_index(7);
        AtomSpace space = AtomSpace::indexed(n);
        std::vector<std::size_t> map(n);
        for (auto& v : map) v = rng.uniform_index(n);
        std::vector<double> a(n);
        for (auto& v : a) v = rng.uniform(0.2, 3.0);
        DynamicalSystem sys(space, map);
        TransferOperator op(sys, a);
        CycleDecomposition cycles = enumerate_cycles(sys);
        std::vector<FiniteMeasure> vertices = invariant_vertices(sys);

        std::vector<double> cycle_avg(cycles.cycles.size());
        for (std::size_t c = 0; c < cycles.cycles.size(); ++c) {
            double s = 0;
            for (std::size_t y : cycles.cycles[c]) s += std::log(a[y]);
            cycle_avg[c] = s / double(cycles.cycles[c].size());
        }

        for (std::size_t c = 0; c < vertices.size(); ++c)
            for (std::size_t steps : {std::size_t(1), std::size_t(2), std::size_t(5)}) {
                ExtReal tau = t_entropy_n(op, vertices[c], steps);
                if (!tau.finite() ||
                    std::abs(tau.value() / double(steps) - cycle_avg[c]) > 1e-9) {
                    detail = "vertex " + std::to_string(c) + " tau_" + std::to_string(steps) +
                             "/n = " + str(tau) + " vs cycle average " +
                             std::to_string(cycle_avg[c]);
                    return false;
                }
            }

        // Linearity of tau_n/n over mixtures of cycle vertices.
        std::vector<double> wts(vertices.size());
        double total = 0;
        for (auto& v : wts) total += v = rng.uniform(0.1, 1.0);
        std::vector<double> mix(n, 0.0);
        double expected = 0;
        for (std::size_t c = 0; c < vertices.size(); ++c) {
            for (std::size_t i = 0; i < n; ++i) mix[i] += (wts[c] / total) * vertices[c].weight(i);
            expected += (wts[c] / total) * cycle_avg[c];
        }
        FiniteMeasure mixture(space, std::move(mix));
        for (std::size_t steps : {std::size_t(1), std::size_t(3)}) {
            ExtReal tau = t_entropy_n(op, mixture, steps, 1e-9);
            if (!tau.finite() || std::abs(tau.value() / double(steps) - expected) > 1e-9) {
                detail = "mixture tau_" + std::to_string(steps) + "/n = " + str(tau) +
                         " vs mixed cycle averages " + std::to_string(expected);
                return false;
            }
        }
        return true;
    });
}

SuiteResult suite_definition_equivalence(const VerifyConfig& cfg) {
    return run_suite("definition_equivalence", kDefinitionEquivalence, cfg,
                     [](SplitRng& rng, std::string& detail) {
        std::size_t n = 2 + rng.uniform_index(5);
        AtomSpace space = AtomSpace::indexed(n);
        std::vector<std::size_t> map(n);
        for (auto& v : map) v = rng.uniform_index(n);
        bool with_zeros = rng.bernoulli(0.1);
        std::vector<double> a(n);
        for (auto& v : a) v = (with_zeros && rng.bernoulli(0.3)) ? 0.0 : rng.uniform(0.2, 3.0);
        DynamicalSystem sys(space, map);
        TransferOperator op(sys, a);

        std::vector<FiniteMeasure> vertices = invariant_vertices(sys);
        std::vector<double> wts(vertices.size());
        double total = 0;
        for (auto& v : wts) total += v = rng.uniform(0.1, 1.0);
        std::vector<double> mix(n, 0.0);
        for (std::size_t c = 0; c < vertices.size(); ++c)
            for (std::size_t i = 0; i < n; ++i)
                mix[i] += (wts[c] / total) * vertices[c].weight(i);
        FiniteMeasure mu(space, std::move(mix));

        PartitionOfUnity atomic = atomic_partition(space);
        for (std::size_t steps : {std::size_t(1), std::size_t(2), std::size_t(3)}) {
            ExtReal tau = t_entropy_n(op, mu, steps, 1e-9);
            ExtReal d1 = t_entropy_n_sup(op, mu, steps, atomic);
            if (!ext_close(d1, tau, 1e-6)) {
                detail = "inner-sup value " + str(d1) + " vs KL form " + str(tau);
                return false;
            }
            ExtReal d2 = t_entropy_n_objective(op, mu, steps, atomic);
            if (!ext_close(d2, tau, 1e-9)) {
                detail = "atomic objective " + str(d2) + " vs KL form " + str(tau);
                return false;
            }
            for (int j = 0; j < 3; ++j) {
                std::size_t k = 1 + rng.uniform_index(2 * n);
                PartitionOfUnity g = sample_partition(space, k, rng.next_u64());
                ExtReal obj = t_entropy_n_objective(op, mu, steps, g);
                if (!ext_leq(tau, obj, 1e-6)) {
                    detail = "sampled objective " + str(obj) + " fell below tau_n " + str(tau);
                    return false;
                }
            }
        }
        return true;
    });
}

SuiteResult suite_variational_principle(const VerifyConfig& cfg) {
    return run_suite("variational_principle", kVariationalPrinciple, cfg,
                     [](SplitRng& rng, std::string& detail) {
        std::size_t n = 2 + rng.uniform_index(7);
        AtomSpace space = AtomSpace::indexed(n);
        std::vector<std::size_t> map(n);
        for (auto& v : map) v = rng.uniform_index(n);
        std::vector<double> a(n), phi(n);
        for (auto& v : a) v = rng.uniform(0.2, 3.0);
        for (auto& v : phi) v = rng.uniform(-2, 2);
        TransferOperator op(DynamicalSystem(space, map), a);
        VariationalReport rep = variational_check(op, phi, 1e-12);
        if (rep.gap > 1e-9) {
            detail = "gap " + std::to_string(rep.gap) + " (lambda=" + str(rep.lambda) +
                     " best=" + str(rep.best) + ")";
            return false;
        }
        ExtReal cycle = spectral_potential_cycle_formula(op, phi);
        if (!ext_close(rep.lambda, cycle, 1e-9)) {
            detail = "power lambda " + str(rep.lambda) + " vs cycle formula " + str(cycle);
            return false;
        }
        return true;
    });
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(const VerifyConfig& cfg) {
    using Runner = SuiteResult (*)(const VerifyConfig&);
    static constexpr std::pair<const char*, Runner> runners[] = {
        {"perspective_lemmas", suite_perspective_lemmas},
        {"supsums_principle", suite_supsums_principle},
        {"subadditivity", suite_subadditivity},
        {"additivity", suite_additivity},
        {"kl_identities", suite_kl_identities},
        {"jensen_corollary", suite_jensen_corollary},
        {"measure_ops", suite_measure_ops},
        {"partition_refinement", suite_partition_refinement},
        {"transfer_identities", suite_transfer_identities},
        {"spectral_agreement", suite_spectral_agreement},
        {"tentropy_closed_forms", suite_tentropy_closed_forms},
        {"definition_equivalence", suite_definition_equivalence},
        {"variational_principle", suite_variational_principle},
    };
    std::vector<SuiteResult> out;
    for (const auto& [name, run] : runners)
        if (cfg.only.empty() || std::string_view(name).find(cfg.only) != std::string_view::npos)
            out.push_back(run(cfg));
    if (out.empty()) throw std::invalid_argument("no verification suite matches '" + cfg.only + "'");
    return out;
}

}  // namespace divkit::verify
