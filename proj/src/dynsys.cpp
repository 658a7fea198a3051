#include "divkit/dynsys.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "divkit/divergence.hpp"
#include "divkit/errors.hpp"
#include "divkit/rng.hpp"

namespace divkit {

DynamicalSystem::DynamicalSystem(AtomSpace space, std::vector<std::size_t> map_alpha)
    : space_(std::move(space)), map_(std::move(map_alpha)) {
    if (map_.size() != space_.size())
        throw std::invalid_argument("DynamicalSystem: map size does not match atom count");
    for (std::size_t y : map_)
        if (y >= space_.size())
            throw std::invalid_argument("DynamicalSystem: map image out of range");
}

TransferOperator::TransferOperator(DynamicalSystem system, std::vector<double> weight_a)
    : system_(std::move(system)), weight_(std::move(weight_a)) {
    if (weight_.size() != system_.size())
        throw std::invalid_argument("TransferOperator: weight size does not match atom count");
    for (double a : weight_)
        if (!(a >= 0) || !std::isfinite(a))
            throw std::invalid_argument("TransferOperator: weights must be nonnegative finite");

    // Spot-check the homological identity A(g.alpha * f) = g * A f on seeded
    // random pairs.
    std::size_t n = system_.size();
    SplitRng rng = SplitRng::for_instance(0x686F6D, n, weight_.empty() ? 0 : n);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<double> f(n), g(n), gf(n);
        for (std::size_t i = 0; i < n; ++i) {
            f[i] = rng.uniform(-1, 1);
            g[i] = rng.uniform(-1, 1);
        }
        for (std::size_t i = 0; i < n; ++i) gf[i] = g[system_.step(i)] * f[i];
        std::vector<double> lhs = apply(gf), af = apply(f);
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(lhs[i] - g[i] * af[i]) > 1e-12 * (1.0 + std::abs(lhs[i])))
                throw std::logic_error("TransferOperator: homological identity violated");
    }
}

std::vector<double> TransferOperator::apply(std::span<const double> f) const {
    if (f.size() != size())
        throw std::invalid_argument("TransferOperator::apply: f not on the atom space");
    std::vector<double> out(size(), 0.0);
    for (std::size_t y = 0; y < size(); ++y) out[system_.step(y)] += weight_[y] * f[y];
    return out;
}

std::vector<double> TransferOperator::apply_n(std::span<const double> f, std::size_t n) const {
    std::vector<double> v(f.begin(), f.end());
    for (std::size_t i = 0; i < n; ++i) v = apply(v);
    return v;
}

std::vector<std::vector<double>> TransferOperator::matrix() const {
    std::vector<std::vector<double>> m(size(), std::vector<double>(size(), 0.0));
    for (std::size_t y = 0; y < size(); ++y) m[system_.step(y)][y] = weight_[y];
    return m;
}

TransferOperator weight_operator(const TransferOperator& a, std::span<const double> phi) {
    if (phi.size() != a.size())
        throw std::invalid_argument("weight_operator: phi not on the atom space");
    std::vector<double> w(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) w[i] = a.weight()[i] * std::exp(phi[i]);
    return TransferOperator(a.system(), std::move(w));
}

namespace {

double sup_norm(const std::vector<std::vector<double>>& m) {
    double best = 0;
    for (const auto& row : m) {
        double s = 0;
        for (double v : row) s += v;
        best = std::max(best, s);
    }
    return best;
}

std::vector<std::vector<double>> square(const std::vector<std::vector<double>>& m) {
    std::size_t n = m.size();
    std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            double mik = m[i][k];
            if (mik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += mik * m[k][j];
        }
    return out;
}

}  // namespace

ExtReal spectral_potential(const TransferOperator& a, std::span<const double> phi, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("spectral_potential: tol must be > 0");
    TransferOperator aphi = weight_operator(a, phi);
    std::vector<std::vector<double>> p = aphi.matrix();

    // Track M^(2^k) = exp(log_scale) * p with ||p|| renormalized to 1.  The
    // estimate log_scale / 2^k decreases monotonically to ln r(M) with error
    // bounded by a structure constant over 2^k, so the full 64-squaring
    // budget always runs (early successive-difference coincidences are not
    // trustworthy); the tolerance is checked against the final step.
    double c = sup_norm(p);
    if (c == 0) return ExtReal::neg_inf();
    for (auto& row : p)
        for (double& v : row) v /= c;
    double log_scale = std::log(c);
    double est = log_scale, prev = est;
    for (int k = 1; k <= 64; ++k) {
        p = square(p);
        c = sup_norm(p);
        if (c == 0) return ExtReal::neg_inf();
        for (auto& row : p)
            for (double& v : row) v /= c;
        log_scale = 2 * log_scale + std::log(c);
        prev = est;
        est = log_scale / std::ldexp(1.0, k);
    }
    if (std::abs(est - prev) >= tol)
        throw NonConvergence(
            "spectral_potential: log-norm estimates did not stabilize within 64 squarings");
    return ExtReal(est);
}

ExtReal spectral_potential_cycle_formula(const TransferOperator& a,
                                         std::span<const double> phi) {
    if (phi.size() != a.size())
        throw std::invalid_argument("spectral_potential_cycle_formula: phi not on the atom space");
    CycleDecomposition cycles = enumerate_cycles(a.system());
    ExtReal best = ExtReal::neg_inf();
    for (const auto& cycle : cycles.cycles) {
        double sum = 0;
        bool dead = false;
        for (std::size_t y : cycle) {
            double w = a.weight()[y];
            if (w == 0) {
                dead = true;
                break;
            }
            sum += phi[y] + std::log(w);
        }
        ExtReal avg = dead ? ExtReal::neg_inf() : ExtReal(sum / double(cycle.size()));
        if (avg > best) best = avg;
    }
    return best;
}

FiniteMeasure adjoint_push(const TransferOperator& a, const FiniteMeasure& mu, std::size_t n) {
    if (!(mu.space() == a.system().space()))
        throw std::invalid_argument("adjoint_push: measure on a different atom space");
    if (n < 1) throw std::invalid_argument("adjoint_push: n must be >= 1");
    std::vector<double> w = mu.weights();
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<double> next(w.size());
        for (std::size_t y = 0; y < w.size(); ++y)
            next[y] = a.weight()[y] * w[a.system().step(y)];
        w = std::move(next);
    }
    return FiniteMeasure(mu.space(), std::move(w));
}

CycleDecomposition enumerate_cycles(const DynamicalSystem& system) {
    std::size_t n = system.size();
    // 0 = unvisited, 1 = on the current walk, 2 = finished.
    std::vector<int> state(n, 0);
    std::vector<bool> on_cycle(n, false);
    CycleDecomposition out;
    for (std::size_t start = 0; start < n; ++start) {
        if (state[start] != 0) continue;
        std::vector<std::size_t> walk;
        std::size_t x = start;
        while (state[x] == 0) {
            state[x] = 1;
            walk.push_back(x);
            x = system.step(x);
        }
        if (state[x] == 1) {  // found a new cycle; x is its entry point
            auto it = std::find(walk.begin(), walk.end(), x);
            std::vector<std::size_t> cycle(it, walk.end());
            // Canonical rotation: start at the smallest atom index.
            auto mn = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), mn, cycle.end());
            for (std::size_t y : cycle) on_cycle[y] = true;
            out.cycles.push_back(std::move(cycle));
        }
        for (std::size_t y : walk) state[y] = 2;
    }
    for (std::size_t x = 0; x < n; ++x)
        if (!on_cycle[x]) out.transient.push_back(x);
    return out;
}

double invariance_residual(const DynamicalSystem& system, const FiniteMeasure& mu) {
    if (!(mu.space() == system.space()))
        throw std::invalid_argument("invariance_residual: measure on a different atom space");
    std::vector<double> push(mu.size(), 0.0);
    for (std::size_t y = 0; y < mu.size(); ++y) push[system.step(y)] += mu.weight(y);
    double r = 0;
    for (std::size_t x = 0; x < mu.size(); ++x)
        r = std::max(r, std::abs(push[x] - mu.weight(x)));
    return r;
}

bool is_invariant(const DynamicalSystem& system, const FiniteMeasure& mu, double tol) {
    return invariance_residual(system, mu) <= tol;
}

std::vector<FiniteMeasure> invariant_vertices(const DynamicalSystem& system) {
    CycleDecomposition dec = enumerate_cycles(system);
    std::vector<FiniteMeasure> out;
    out.reserve(dec.cycles.size());
    for (const auto& cycle : dec.cycles) {
        std::vector<double> w(system.size(), 0.0);
        for (std::size_t y : cycle) w[y] = 1.0 / double(cycle.size());
        out.emplace_back(system.space(), std::move(w));
    }
    return out;
}

namespace {

void require_invariant_probability(const TransferOperator& a, const FiniteMeasure& mu,
                                   double tol, const char* what) {
    if (std::abs(mu.mass() - 1.0) > tol)
        throw std::invalid_argument(std::string(what) + ": mu must be a probability measure");
    double r = invariance_residual(a.system(), mu);
    if (r > tol) {
        std::ostringstream os;
        os << what << ": mu is not invariant (max residual " << r << ")";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

ExtReal t_entropy_n(const TransferOperator& a, const FiniteMeasure& mu, std::size_t n,
                    double invariance_tol) {
    if (n < 1) throw std::invalid_argument("t_entropy_n: n must be >= 1");
    require_invariant_probability(a, mu, invariance_tol, "t_entropy_n");
    return -kl_divergence(mu, adjoint_push(a, mu, n));
}

ExtReal t_entropy(const TransferOperator& a, const FiniteMeasure& mu, std::size_t n_max,
                  double invariance_tol) {
    if (n_max < 1) throw std::invalid_argument("t_entropy: n_max must be >= 1");
    require_invariant_probability(a, mu, invariance_tol, "t_entropy");
    ExtReal best = ExtReal::pos_inf();
    FiniteMeasure pushed = mu;
    for (std::size_t n = 1; n <= n_max; ++n) {
        pushed = adjoint_push(a, pushed, 1);
        ExtReal tau_n = -kl_divergence(mu, pushed);
        if (tau_n.is_neg_inf()) return tau_n;
        ExtReal rate(tau_n.value() / double(n));
        if (rate < best) best = rate;
    }
    return best;
}

ExtReal t_entropy_n_sup(const TransferOperator& a, const FiniteMeasure& mu, std::size_t n,
                        const PartitionOfUnity& g, std::size_t max_iters, double tol) {
    if (n < 1) throw std::invalid_argument("t_entropy_n_sup: n must be >= 1");
    if (max_iters < 1) throw std::invalid_argument("t_entropy_n_sup: max_iters must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("t_entropy_n_sup: tol must be > 0");
    if (!(mu.space() == a.system().space()) || !(g.space() == mu.space()))
        throw std::invalid_argument("t_entropy_n_sup: atom spaces differ");
    if (std::abs(mu.mass() - 1.0) > 1e-9)
        throw std::invalid_argument("t_entropy_n_sup: mu must be a probability measure");

    std::size_t atoms = mu.size();
    std::vector<double> cs;            // mu[g_i] over active elements
    std::vector<std::vector<double>> hs;  // A^n g_i over active elements
    for (std::size_t i = 0; i < g.size(); ++i) {
        double c = integrate(mu, g.element(i));
        if (c <= 0) continue;  // zero-mass summands vanish by convention
        std::vector<double> h = a.apply_n(g.element(i), n);
        if (*std::max_element(h.begin(), h.end()) == 0.0)
            return ExtReal::neg_inf();  // no m can give this summand finite value
        cs.push_back(c);
        hs.push_back(std::move(h));
    }
    if (cs.empty()) return ExtReal(0.0);

    auto objective = [&](const std::vector<double>& m) {
        double v = 0;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            double mh = 0;
            for (std::size_t x = 0; x < atoms; ++x) mh += m[x] * hs[i][x];
            v += cs[i] * (std::log(mh) - std::log(cs[i]));
        }
        return v;
    };

    // Expectation-maximization fixed point for the mixture weights m.
    std::vector<double> m(atoms, 1.0 / double(atoms));
    double obj = objective(m);
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        std::vector<double> next(atoms, 0.0);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            double mh = 0;
            for (std::size_t x = 0; x < atoms; ++x) mh += m[x] * hs[i][x];
            double w = cs[i] / mh;
            for (std::size_t x = 0; x < atoms; ++x) next[x] += w * hs[i][x] * m[x];
        }
        double z = 0;
        for (double v : next) z += v;
        for (double& v : next) v /= z;
        m = std::move(next);
        double next_obj = objective(m);
        if (std::abs(next_obj - obj) < tol) return ExtReal(next_obj);
        obj = next_obj;
    }
    std::ostringstream os;
    os << "t_entropy_n_sup: EM did not reach tol within " << max_iters
       << " iterations (best value " << obj << ")";
    throw NonConvergence(os.str());
}

ExtReal t_entropy_n_objective(const TransferOperator& a, const FiniteMeasure& mu, std::size_t n,
                              const PartitionOfUnity& g) {
    if (n < 1) throw std::invalid_argument("t_entropy_n_objective: n must be >= 1");
    if (!(mu.space() == a.system().space()) || !(g.space() == mu.space()))
        throw std::invalid_argument("t_entropy_n_objective: atom spaces differ");
    ExtReal total(0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        double c = integrate(mu, g.element(i));
        if (c <= 0) continue;  // vanishes regardless of mu[A^n g]
        double h = integrate(mu, a.apply_n(g.element(i), n));
        if (h <= 0) return ExtReal::neg_inf();
        total += ExtReal(c * std::log(h / c));
    }
    return total;
}

VariationalReport variational_check(const TransferOperator& a, std::span<const double> phi,
                                    double tol) {
    if (!(tol > 0)) throw std::invalid_argument("variational_check: tol must be > 0");
    VariationalReport report;
    report.lambda = spectral_potential(a, phi, tol);

    CycleDecomposition dec = enumerate_cycles(a.system());
    std::vector<FiniteMeasure> vertices = invariant_vertices(a.system());
    report.best = ExtReal::neg_inf();
    for (std::size_t c = 0; c < vertices.size(); ++c) {
        ExtReal tau = t_entropy(a, vertices[c], 8);
        ExtReal val = tau.is_neg_inf()
                          ? ExtReal::neg_inf()
                          : ExtReal(integrate(vertices[c], phi) + tau.value());
        if (c == 0 || val > report.best) {
            report.best = val;
            report.argmax_cycle = c;
        }
    }
    if (report.lambda.finite() && report.best.finite())
        report.gap = std::abs(report.lambda.value() - report.best.value());
    else
        report.gap = (report.lambda == report.best)
                         ? 0.0
                         : std::numeric_limits<double>::infinity();
    return report;
}

}  // namespace divkit
