#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "divkit/convex.hpp"
#include "divkit/ext_real.hpp"
#include "divkit/measure.hpp"
#include "divkit/partition.hpp"

namespace divkit {

// Closed-form value of the sup-sums F-divergence together with its three
// terms:
//
//   value = integral of F(d nu_a / d mu) d mu        (ac_term)
//         + nu_s_plus(X)  * F'(+inf)                 (sing_plus_term)
//         + nu_s_minus(X) * F'(-inf)                 (sing_minus_term)
//
// A vanishing singular part contributes exactly 0 regardless of an infinite
// slope.  Every term is > -inf, so the extended-real sum is always defined.
struct DivergenceReport {
    ExtReal value;
    ExtReal ac_term;
    ExtReal sing_plus_term;
    ExtReal sing_minus_term;
    LebesgueDecomposition decomposition;
};

// One summand of the sup-sums expression: the perspective of F at
// (mu[g], nu[g]), i.e. mu[g] * F(nu[g]/mu[g]) with the zero-mass convention.
// g must be nonnegative.
ExtReal supsum_term(const ConvexFunction& f, const FiniteMeasure& mu, const SignedMeasure& nu,
                    std::span<const double> g);

// Sum of supsum_term over the elements of a partition of unity; lives in
// R u {+inf} since every term is bounded below by its support line.
ExtReal partition_sum(const ConvexFunction& f, const FiniteMeasure& mu, const SignedMeasure& nu,
                      const PartitionOfUnity& g);

// The three-term closed form.  On a finite space the atomic partition
// attains the supremum, so this is the sup-sums divergence itself.
DivergenceReport closed_form(const ConvexFunction& f, const FiniteMeasure& mu,
                             const SignedMeasure& nu);

// Maximum of partition_sum over the atomic partition and `samples` sampled
// partitions with at most k_max elements.  A verification and demo
// instrument: closed_form is the authority for the reported value.
ExtReal supsum_estimate(const ConvexFunction& f, const FiniteMeasure& mu,
                        const SignedMeasure& nu, std::size_t k_max, std::size_t samples,
                        std::uint64_t seed);

// Extended Kullback-Leibler divergence of nonnegative measures:
// integral of -ln(d nu_a / d mu) d mu.  +inf iff mu charges an atom where
// the absolutely continuous part of nu vanishes.
ExtReal kl_divergence(const FiniteMeasure& mu, const FiniteMeasure& nu);

// closed_form with a generator chosen by name; nu may be signed except for
// kl, which is defined for nonnegative measures only.
DivergenceReport named_divergence(std::string_view name, const FiniteMeasure& mu,
                                  const SignedMeasure& nu,
                                  std::optional<double> alpha_param = std::nullopt);

// Partition-sum form of the integral of F(f) d mu:
// sum_g mu[g] * F(mu[f g] / mu[g]) with the zero-mass convention.  The sup
// over partitions equals the integral, attained at the atomic partition.
ExtReal integral_via_partitions(const ConvexFunction& f_gen, std::span<const double> f,
                                const FiniteMeasure& mu, const PartitionOfUnity& g);

}  // namespace divkit
