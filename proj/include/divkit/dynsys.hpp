#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "divkit/ext_real.hpp"
#include "divkit/measure.hpp"
#include "divkit/partition.hpp"

namespace divkit {

// A self-map alpha of a finite atom set.
class DynamicalSystem {
  public:
    DynamicalSystem(AtomSpace space, std::vector<std::size_t> map_alpha);

    const AtomSpace& space() const { return space_; }
    std::size_t size() const { return map_.size(); }
    std::size_t step(std::size_t x) const { return map_[x]; }
    const std::vector<std::size_t>& map() const { return map_; }

  private:
    AtomSpace space_;
    std::vector<std::size_t> map_;
};

// Weighted pushforward along alpha:
//
//   (A f)(x) = sum over y with alpha(y) = x of a(y) f(y),
//
// the finite-space Perron-Frobenius operator.  It is positive and satisfies
// the homological identity A(g.alpha * f) = g * A f; construction checks the
// identity on a few seeded random pairs.  Stored as (alpha, a): the identity
// forces column y of the matrix to be supported on row alpha(y), so the
// dense matrix is derived on demand.
class TransferOperator {
  public:
    TransferOperator(DynamicalSystem system, std::vector<double> weight_a);

    const DynamicalSystem& system() const { return system_; }
    const std::vector<double>& weight() const { return weight_; }
    std::size_t size() const { return weight_.size(); }

    std::vector<double> apply(std::span<const double> f) const;             // A f
    std::vector<double> apply_n(std::span<const double> f, std::size_t n) const;  // A^n f
    std::vector<std::vector<double>> matrix() const;  // M[x][y] = a(y) [alpha(y) = x]

  private:
    DynamicalSystem system_;
    std::vector<double> weight_;
};

// A with weight a(y) replaced by a(y) * exp(phi(y)), i.e. f -> A(e^phi f).
TransferOperator weight_operator(const TransferOperator& a, std::span<const double> phi);

// Spectral potential lambda(phi) = ln r(A_phi), computed by repeated
// squaring of the nonnegative matrix with sup-norm renormalization (64
// squarings maximum; successive log-norm estimates must differ by < tol).
// -inf when the weighting is nilpotent on every cycle.  Throws
// NonConvergence if the budget runs out.
ExtReal spectral_potential(const TransferOperator& a, std::span<const double> phi, double tol);

// Independent closed form for deterministic finite systems: max over cycles
// of the cycle average of phi + ln a; a cycle containing a zero weight
// contributes -inf.
ExtReal spectral_potential_cycle_formula(const TransferOperator& a, std::span<const double> phi);

// A*^n mu, defined by (A*^n mu)[g] = mu[A^n g]; componentwise
// (A* mu)(y) = a(y) mu(alpha(y)).
FiniteMeasure adjoint_push(const TransferOperator& a, const FiniteMeasure& mu, std::size_t n);

// Cycles of the functional graph of alpha plus the atoms not on any cycle.
struct CycleDecomposition {
    std::vector<std::vector<std::size_t>> cycles;
    std::vector<std::size_t> transient;
};

CycleDecomposition enumerate_cycles(const DynamicalSystem& system);

// max_x |mu(x) - sum over alpha(y) = x of mu(y)|: zero exactly for
// alpha-invariant measures.
double invariance_residual(const DynamicalSystem& system, const FiniteMeasure& mu);

bool is_invariant(const DynamicalSystem& system, const FiniteMeasure& mu, double tol = 1e-12);

// The extreme points of the alpha-invariant probability measures: the
// uniform measure on each cycle.  Every invariant measure of a finite
// deterministic system is a convex combination of these.
std::vector<FiniteMeasure> invariant_vertices(const DynamicalSystem& system);

// tau_n(mu) = -D_KL(mu || A*^n mu): the integral of ln of the density of
// the absolutely continuous part of A*^n mu with respect to mu.  Values in
// R u {-inf}; -inf iff mu charges an atom where A*^n mu vanishes.  mu must
// be an invariant probability measure (checked; invariance_tol bounds both
// the fixed-point residual and |mass - 1|).
ExtReal t_entropy_n(const TransferOperator& a, const FiniteMeasure& mu, std::size_t n,
                    double invariance_tol = 1e-12);

// t-entropy tau(mu) = inf over n >= 1 of tau_n(mu)/n, truncated at n_max.
// For cycle-mixture invariant measures tau_n/n is constant in n, so the
// truncation is exact.
ExtReal t_entropy(const TransferOperator& a, const FiniteMeasure& mu, std::size_t n_max,
                  double invariance_tol = 1e-12);

// The partition functional sup over probability measures m of
//
//   sum_i mu[g_i] ln( m[A^n g_i] / mu[g_i] ),
//
// for arbitrary probability mu (not necessarily invariant).  Summands with
// mu[g_i] = 0 are zero by convention; the value is -inf when some
// mu[g_i] > 0 has A^n g_i identically zero.  The inner sup is computed by
// the expectation-maximization fixed point for mixture weights, stopping
// when successive objective values differ by < tol; NonConvergence (with the
// best value in the message) if max_iters is exhausted first.
ExtReal t_entropy_n_sup(const TransferOperator& a, const FiniteMeasure& mu, std::size_t n,
                        const PartitionOfUnity& g, std::size_t max_iters = 10000,
                        double tol = 1e-10);

// The same functional evaluated at m = mu instead of the sup:
// sum_i mu[g_i] ln( mu[A^n g_i] / mu[g_i] ).  For invariant mu its infimum
// over partitions is tau_n(mu), attained at the atomic partition.
ExtReal t_entropy_n_objective(const TransferOperator& a, const FiniteMeasure& mu, std::size_t n,
                              const PartitionOfUnity& g);

// Two independent routes to the variational principle
// lambda(phi) = max over invariant mu of (mu[phi] + tau(mu)):
// lambda from the spectral side, best from the entropy side maximized over
// cycle vertices (mu[phi] + tau(mu) is affine on the invariant polytope, so
// the vertex maximum is the global one).
struct VariationalReport {
    ExtReal lambda;
    ExtReal best;
    std::size_t argmax_cycle = 0;  // index into enumerate_cycles().cycles
    double gap = 0;                // |lambda - best|, 0 when both are -inf
};

VariationalReport variational_check(const TransferOperator& a, std::span<const double> phi,
                                    double tol);

}  // namespace divkit
