// Acceptance battery: exercises the full identity/inequality stack on
// randomized desk-scale instances and prints one PASS/FAIL line per
// criterion.  Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "divkit/convex.hpp"
#include "divkit/divergence.hpp"
#include "divkit/dynsys.hpp"
#include "divkit/partition.hpp"
#include "divkit/rng.hpp"
#include "divkit/verify.hpp"

using namespace divkit;

namespace {

constexpr std::uint64_t kSeed = 2026;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

bool ext_leq(ExtReal a, ExtReal b, double tol) {
    if (b.is_pos_inf() || a.is_neg_inf()) return true;
    if (a.is_pos_inf() || b.is_neg_inf()) return false;
    return a.value() <= b.value() + tol;
}

std::string str(ExtReal x) {
    if (x.is_pos_inf()) return "inf";
    if (x.is_neg_inf()) return "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x.value());
    return buf;
}

ConvexFunction generator_cycle(std::size_t i) {
    switch (i % 7) {
        case 0: return ConvexFunction::kl();
        case 1: return ConvexFunction::hellinger();
        case 2: return ConvexFunction::total_variation();
        case 3: return ConvexFunction::pearson_chi2();
        case 4: return ConvexFunction::alpha(2.0);
        case 5: return ConvexFunction::alpha(0.5);
        default: return ConvexFunction::alpha(-1.0);
    }
}

// ---------------------------------------------------------------- criterion 1
Outcome supsums_principle() {
    Outcome out;
    for (int i = 0; i < 1000 && out.pass; ++i) {
        SplitRng rng = SplitRng::for_instance(kSeed, 101, i);
        AtomSpace space = AtomSpace::indexed(2 + rng.uniform_index(5));  // n <= 6
        ConvexFunction f = generator_cycle(i);
        FiniteMeasure mu = verify::random_finite_measure(space, rng);
        {
            // force a mu-null atom so nu always carries a singular part
            std::vector<double> w = mu.weights();
            std::size_t idx = rng.uniform_index(w.size());
            w[idx] = 0.0;
            if (*std::max_element(w.begin(), w.end()) == 0.0)
                w[(idx + 1) % w.size()] = 1.0;
            mu = FiniteMeasure(space, std::move(w));
        }
        SignedMeasure nu = verify::random_signed_measure(space, mu, rng);

        ExtReal closed = closed_form(f, mu, nu).value;
        ExtReal atomic = partition_sum(f, mu, nu, atomic_partition(space));
        if (!ext_close(atomic, closed, 1e-12)) {
            out.fail("instance " + std::to_string(i) + " (" + f.label() + "): atomic " +
                     str(atomic) + " vs closed " + str(closed));
            break;
        }
        for (int j = 0; j < 200; ++j) {
            std::size_t k = 1 + rng.uniform_index(2 * space.size());
            ExtReal v = partition_sum(f, mu, nu, sample_partition(space, k, rng.next_u64()));
            if (!ext_leq(v, closed, 1e-9)) {
                out.fail("instance " + std::to_string(i) + " partition " + std::to_string(j) +
                         ": " + str(v) + " > " + str(closed));
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 2
Outcome perspective_lemmas() {
    Outcome out;
    for (int i = 0; i < 10000 && out.pass; ++i) {
        SplitRng rng = SplitRng::for_instance(kSeed, 102, i);
        ConvexFunction f = generator_cycle(i);
        double s = rng.bernoulli(0.25) ? 0.0 : rng.uniform(0.01, 3.0);
        double t = rng.bernoulli(0.25) ? 0.0 : rng.uniform(0.01, 3.0);
        double x = rng.bernoulli(0.15) ? 0.0 : rng.uniform(-3.0, 3.0);
        double y = rng.bernoulli(0.15) ? 0.0 : rng.uniform(-3.0, 3.0);

        ExtReal lhs = f.perspective(s + t, x + y);
        ExtReal rhs = f.perspective(s, x) + f.perspective(t, y);
        if (!ext_leq(lhs, rhs, 1e-9))
            out.fail("subadditivity: " + f.label() + " s=" + std::to_string(s) + " t=" +
                     std::to_string(t) + " x=" + std::to_string(x) + " y=" + std::to_string(y));

        auto [a, b] = f.support_line();
        if (!ext_leq(ExtReal(a * x + b * s), f.perspective(s, x), 1e-9))
            out.fail("lower bound: " + f.label() + " s=" + std::to_string(s) +
                     " x=" + std::to_string(x));
    }
    return out;
}

// ---------------------------------------------------------------- criterion 3
Outcome subadditivity_and_additivity() {
    Outcome out;
    for (int i = 0; i < 1000 && out.pass; ++i) {
        SplitRng rng = SplitRng::for_instance(kSeed, 103, i);
        AtomSpace space = AtomSpace::indexed(2 + rng.uniform_index(5));
        ConvexFunction f = generator_cycle(i);
        FiniteMeasure mu1 = verify::random_finite_measure(space, rng);
        FiniteMeasure mu2 = verify::random_finite_measure(space, rng);
        SignedMeasure nu1 = verify::random_signed_measure(space, mu1, rng);
        SignedMeasure nu2 = verify::random_signed_measure(space, mu2, rng);

        ExtReal joint = closed_form(f, mu1 + mu2, nu1 + nu2).value;
        ExtReal split = closed_form(f, mu1, nu1).value + closed_form(f, mu2, nu2).value;
        if (!ext_leq(joint, split, 1e-9))
            out.fail("subadditivity instance " + std::to_string(i) + ": " + str(joint) + " > " +
                     str(split));

        std::vector<double> f1(space.size()), f2(space.size()), fs(space.size());
        for (std::size_t k = 0; k < space.size(); ++k) {
            f1[k] = rng.bernoulli(0.25) ? 0.0 : rng.uniform(0.2, 1.5);
            f2[k] = rng.bernoulli(0.25) ? 0.0 : rng.uniform(0.2, 1.5);
            fs[k] = f1[k] + f2[k];
        }
        ExtReal lhs = closed_form(f, apply_density(fs, mu1), apply_density(fs, nu1)).value;
        ExtReal rhs = closed_form(f, apply_density(f1, mu1), apply_density(f1, nu1)).value +
                      closed_form(f, apply_density(f2, mu1), apply_density(f2, nu1)).value;
        if (!ext_close(lhs, rhs, 1e-9))
            out.fail("additivity instance " + std::to_string(i) + ": " + str(lhs) + " vs " +
                     str(rhs));
    }
    return out;
}

// ---------------------------------------------------------------- criterion 4
Outcome kl_identities() {
    Outcome out;
    for (int i = 0; i < 1000 && out.pass; ++i) {
        SplitRng rng = SplitRng::for_instance(kSeed, 104, i);
        AtomSpace space = AtomSpace::indexed(2 + rng.uniform_index(5));
        FiniteMeasure nu = verify::random_probability(space, rng);
        FiniteMeasure mu = verify::random_probability(space, rng);
        std::size_t variant = i % 4;
        if (variant == 1) mu = nu;
        if (variant == 2) {  // mu null on the last atom; nu keeps singular mass there
            std::vector<double> w = mu.weights();
            w.back() = 0.0;
            double total = 0;
            for (double v : w) total += v;
            for (double& v : w) v /= total;
            mu = FiniteMeasure(space, std::move(w));
        }

        ExtReal kl = kl_divergence(mu, nu);
        double direct = 0;
        for (std::size_t x = 0; x < space.size(); ++x)
            if (mu.weight(x) > 0) direct += mu.weight(x) * std::log(mu.weight(x) / nu.weight(x));
        if (!ext_close(kl, ExtReal(direct), 1e-12)) {
            out.fail("direct sum " + std::to_string(direct) + " vs kl " + str(kl));
            break;
        }

        auto partition_value = [&](const PartitionOfUnity& g) {
            double s = 0;
            for (std::size_t e = 0; e < g.size(); ++e) {
                double mg = integrate(mu, g.element(e));
                if (mg <= 0) continue;
                s += mg * std::log(mg / integrate(nu, g.element(e)));
            }
            return s;
        };
        if (std::abs(partition_value(atomic_partition(space)) - kl.value()) > 1e-12) {
            out.fail("atomic kl partition sum does not attain the divergence");
            break;
        }
        for (int j = 0; j < 20; ++j) {
            std::size_t k = 1 + rng.uniform_index(2 * space.size());
            double v = partition_value(sample_partition(space, k, rng.next_u64()));
            if (v > kl.value() + 1e-9) {
                out.fail("sampled kl partition sum " + std::to_string(v) + " > " + str(kl));
                break;
            }
        }

        if (kl < ExtReal(-1e-12)) out.fail("negative divergence " + str(kl));
        if (variant == 1 && !(kl.finite() && std::abs(kl.value()) <= 1e-12))
            out.fail("kl(mu,mu) != 0: " + str(kl));
        double tv = 0;
        for (std::size_t x = 0; x < space.size(); ++x)
            tv += std::abs(mu.weight(x) - nu.weight(x));
        if (tv > 0.05 && !(kl > ExtReal(0.0)))
            out.fail("kl = " + str(kl) + " for measures with total variation " + std::to_string(tv));
    }
    return out;
}

// ---------------------------------------------------------------- criterion 5
Outcome jensen_corollary() {
    Outcome out;
    for (int i = 0; i < 1000 && out.pass; ++i) {
        SplitRng rng = SplitRng::for_instance(kSeed, 105, i);
        AtomSpace space = AtomSpace::indexed(2 + rng.uniform_index(5));
        ConvexFunction gen = generator_cycle(i);
        FiniteMeasure mu = verify::random_finite_measure(space, rng);
        std::vector<double> f(space.size(), 0.0);
        for (double& v : f)
            if (!rng.bernoulli(0.2)) v = rng.uniform(-1.0, 3.0);

        ExtReal integral(0.0);
        for (std::size_t x = 0; x < space.size(); ++x) {
            double m = mu.weight(x);
            if (m <= 0) continue;
            ExtReal fx = gen(f[x]);
            integral += fx.is_pos_inf() ? ExtReal::pos_inf() : ExtReal(m * fx.value());
        }

        ExtReal atomic = integral_via_partitions(gen, f, mu, atomic_partition(space));
        if (!ext_close(atomic, integral, 1e-12)) {
            out.fail("atomic " + str(atomic) + " vs integral " + str(integral));
            break;
        }
        for (int j = 0; j < 20; ++j) {
            std::size_t k = 1 + rng.uniform_index(2 * space.size());
            ExtReal v =
                integral_via_partitions(gen, f, mu, sample_partition(space, k, rng.next_u64()));
            if (!ext_leq(v, integral, 1e-9)) {
                out.fail("sampled " + str(v) + " > integral " + str(integral));
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome tentropy_closed_forms() {
    Outcome out;
    const double e1 = std::exp(1.0);
    AtomSpace two = AtomSpace::indexed(2);
    TransferOperator ident(DynamicalSystem(two, {0, 1}), {e1, e1 * e1});
    FiniteMeasure uniform(two, {0.5, 0.5});
    for (std::size_t n = 1; n <= 32; ++n) {
        ExtReal tau = t_entropy_n(ident, uniform, n);
        if (!tau.finite() || std::abs(tau.value() - 1.5 * double(n)) > 1e-9) {
            out.fail("identity map: tau_" + std::to_string(n) + " = " + str(tau) +
                     " expected " + std::to_string(1.5 * double(n)));
            return out;
        }
    }

    for (int i = 0; i < 200 && out.pass; ++i) {
        SplitRng rng = SplitRng::for_instance(kSeed, 106, i);
        std::size_t n = 2 + rng.uniform_index(7);  // n <= 8
        std::vector<std::size_t> map(n);
        for (auto& v : map) v = rng.uniform_index(n);
        std::vector<double> a(n);
        for (auto& v : a) v = rng.uniform(0.2, 3.0);
        DynamicalSystem sys(AtomSpace::indexed(n), map);
        TransferOperator op(sys, a);

        CycleDecomposition cycles = enumerate_cycles(sys);
        std::vector<FiniteMeasure> vertices = invariant_vertices(sys);
        for (std::size_t c = 0; c < vertices.size() && out.pass; ++c) {
            double avg = 0;  // independent orbit oracle: average of ln a on the cycle
            for (std::size_t y : cycles.cycles[c]) avg += std::log(a[y]);
            avg /= double(cycles.cycles[c].size());
            for (std::size_t steps = 1; steps <= 4; ++steps) {
                ExtReal tau = t_entropy_n(op, vertices[c], steps);
                if (!tau.finite() || std::abs(tau.value() / double(steps) - avg) > 1e-9) {
                    out.fail("instance " + std::to_string(i) + " cycle " + std::to_string(c) +
                             ": tau_" + std::to_string(steps) + "/n = " + str(tau) +
                             " vs average " + std::to_string(avg));
                    break;
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 7
Outcome definition_equivalence() {
    Outcome out;
    for (int i = 0; i < 200 && out.pass; ++i) {
        SplitRng rng = SplitRng::for_instance(kSeed, 107, i);
        std::size_t n = 2 + rng.uniform_index(5);
        std::vector<std::size_t> map(n);
        for (auto& v : map) v = rng.uniform_index(n);
        std::vector<double> a(n);
        for (auto& v : a) v = rng.uniform(0.2, 3.0);
        AtomSpace space = AtomSpace::indexed(n);
        DynamicalSystem sys(space, map);
        TransferOperator op(sys, a);

        std::vector<FiniteMeasure> vertices = invariant_vertices(sys);
        std::vector<double> wts(vertices.size());
        double total = 0;
        for (auto& v : wts) total += v = rng.uniform(0.1, 1.0);
        std::vector<double> mix(n, 0.0);
        for (std::size_t c = 0; c < vertices.size(); ++c)
            for (std::size_t x = 0; x < n; ++x) mix[x] += (wts[c] / total) * vertices[c].weight(x);
        FiniteMeasure mu(space, std::move(mix));

        PartitionOfUnity atoms = atomic_partition(space);
        for (std::size_t steps = 1; steps <= 3 && out.pass; ++steps) {
            ExtReal tau = t_entropy_n(op, mu, steps, 1e-9);
            ExtReal inner_sup = t_entropy_n_sup(op, mu, steps, atoms);
            if (!ext_close(inner_sup, tau, 1e-6)) {
                out.fail("instance " + std::to_string(i) + ": inner sup " + str(inner_sup) +
                         " vs tau_" + std::to_string(steps) + " " + str(tau));
                break;
            }
            for (int j = 0; j < 20; ++j) {
                std::size_t k = 1 + rng.uniform_index(2 * n);
                PartitionOfUnity g = sample_partition(space, k, rng.next_u64());
                ExtReal obj = t_entropy_n_objective(op, mu, steps, g);
                if (!ext_leq(tau, obj, 1e-6)) {
                    out.fail("instance " + std::to_string(i) + ": sampled objective " +
                             str(obj) + " below tau_" + std::to_string(steps) + " " + str(tau));
                    break;
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome variational_principle() {
    Outcome out;
    for (int i = 0; i < 200 && out.pass; ++i) {
        SplitRng rng = SplitRng::for_instance(kSeed, 108, i);
        std::size_t n = 2 + rng.uniform_index(7);  // n <= 8
        std::vector<std::size_t> map(n);
        for (auto& v : map) v = rng.uniform_index(n);
        std::vector<double> a(n), phi(n);
        for (auto& v : a) v = rng.uniform(0.2, 3.0);
        for (auto& v : phi) v = rng.uniform(-2.0, 2.0);
        TransferOperator op(DynamicalSystem(AtomSpace::indexed(n), map), a);

        VariationalReport rep = variational_check(op, phi, 1e-12);
        ExtReal cycle = spectral_potential_cycle_formula(op, phi);
        if (!ext_close(rep.lambda, cycle, 1e-9)) {
            out.fail("instance " + std::to_string(i) + ": power " + str(rep.lambda) +
                     " vs cycle formula " + str(cycle));
            break;
        }
        if (rep.gap > 1e-9) {
            out.fail("instance " + std::to_string(i) + ": gap " + std::to_string(rep.gap));
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 9
Outcome slope_oracle() {
    Outcome out;
    struct FiniteCase {
        ConvexFunction f;
        Direction d;
        double expect;
    };
    const std::vector<FiniteCase> finite = {
        {ConvexFunction::kl(), Direction::plus, 0.0},
        {ConvexFunction::hellinger(), Direction::plus, 0.0},
        {ConvexFunction::total_variation(), Direction::plus, 1.0},
        {ConvexFunction::total_variation(), Direction::minus, -1.0},
        {ConvexFunction::alpha(-1.0), Direction::plus, -0.5},
    };
    for (const auto& c : finite) {
        ExtReal analytic = c.f.asymptotic_slope(c.d);
        ExtReal numeric = numeric_asymptotic_slope(c.f, c.d);
        if (!analytic.finite() || std::abs(analytic.value() - c.expect) > 1e-12)
            out.fail(c.f.label() + ": stored slope " + str(analytic));
        if (!numeric.finite() || std::abs(numeric.value() - analytic.value()) > 1e-6)
            out.fail(c.f.label() + ": numeric slope " + str(numeric) + " vs analytic " +
                     str(analytic));
    }
    if (!numeric_asymptotic_slope(ConvexFunction::pearson_chi2(), Direction::plus).is_pos_inf())
        out.fail("pearson_chi2 F'(+inf) not promoted to +inf");
    if (!numeric_asymptotic_slope(ConvexFunction::pearson_chi2(), Direction::minus).is_neg_inf())
        out.fail("pearson_chi2 F'(-inf) not promoted to -inf");
    if (!numeric_asymptotic_slope(ConvexFunction::alpha(2.0), Direction::plus).is_pos_inf())
        out.fail("alpha(2) F'(+inf) not promoted to +inf");
    if (!numeric_asymptotic_slope(ConvexFunction::kl(), Direction::minus).is_neg_inf())
        out.fail("kl F'(-inf) not detected as -inf");
    if (!numeric_asymptotic_slope(ConvexFunction::hellinger(), Direction::minus).is_neg_inf())
        out.fail("hellinger F'(-inf) not detected as -inf");
    return out;
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;  // 0 = no runtime requirement
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"sup-sums principle (atomic attains, sampled below)", supsums_principle, 30.0},
        {"perspective lemmas (subadditivity, lower bound)", perspective_lemmas, 0.0},
        {"subadditivity and additivity of the closed form", subadditivity_and_additivity, 0.0},
        {"KL identities (direct sum, partition sup, Gibbs)", kl_identities, 0.0},
        {"Jensen corollary (partition sums vs the integral)", jensen_corollary, 0.0},
        {"t-entropy closed forms on cycles", tentropy_closed_forms, 0.0},
        {"definition equivalence (inner sup vs KL form)", definition_equivalence, 0.0},
        {"variational principle (two spectral routes)", variational_principle, 60.0},
        {"slope oracle (analytic vs doubling limit)", slope_oracle, 0.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].budget_seconds > 0 && elapsed > criteria[i].budget_seconds)
            out.fail("runtime " + std::to_string(elapsed) + "s over the " +
                     std::to_string(criteria[i].budget_seconds) + "s budget");
        std::printf("[%s] criterion %zu: %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, elapsed, out.pass ? "" : " -- ",
                    out.pass ? "" : out.detail.c_str());
        if (!out.pass) ++failures;
    }
    return failures;
}
