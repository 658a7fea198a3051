#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divkit/convex.hpp"
#include "divkit/measure.hpp"
#include "divkit/rng.hpp"

namespace divkit::verify {

// Brute-force verification batches for every inequality and identity the
// library is built on: the perspective lemmas, the sup-sums principle and
// its subadditivity/additivity corollaries, the Kullback-Leibler identities,
// the Jensen corollary, measure and partition algebra, the transfer-operator
// identities, the two t-entropy definitions, and the variational principle.
//
// Instance i of suite s draws from SplitRng::for_instance(seed, s, i), so
// any failure replays in isolation from (seed, suite, index).

struct SuiteResult {
    std::string suite;
    int trials = 0;
    int failures = 0;
    std::string first_failure;  // replay info + detail, empty when clean

    bool passed() const { return failures == 0; }
};

struct VerifyConfig {
    std::uint64_t seed = 1;
    int trials = 200;
    // Run only the suites whose name contains this token; empty = all.
    std::string only;
    // Swaps a deliberately wrong generator into the convex-analysis suites
    // so the failure path itself can be exercised end to end.
    bool inject_defect = false;
};

// Throws std::invalid_argument when `only` matches no suite.
std::vector<SuiteResult> run_verify_suites(const VerifyConfig& cfg);

// Stable suite ids; the counter-based seed split keys on these, so adding
// suites never perturbs existing instances.
enum SuiteId : std::uint64_t {
    kPerspectiveLemmas = 1,
    kSupsumsPrinciple = 2,
    kSubadditivity = 3,
    kAdditivity = 4,
    kKlIdentities = 5,
    kJensenCorollary = 6,
    kMeasureOps = 7,
    kPartitionRefinement = 8,
    kTransferIdentities = 9,
    kSpectralAgreement = 10,
    kTentropyClosedForms = 11,
    kDefinitionEquivalence = 12,
    kVariationalPrinciple = 13,
};

// Shared instance generators (also used by the acceptance battery).

// Generator rotation over the five builtin families; alpha is instantiated
// at a few representative exponents.
ConvexFunction pick_generator(SplitRng& rng);

// Nonnegative weights in {0} u [0.3, 1.5]; at least one positive atom.
FiniteMeasure random_finite_measure(const AtomSpace& space, SplitRng& rng);

// Signed weights in {0} u +-[0.2, 1.5], with singular atoms (nu != 0 where
// mu == 0) whenever mu has null atoms.
SignedMeasure random_signed_measure(const AtomSpace& space, const FiniteMeasure& mu,
                                    SplitRng& rng);

// Probability vector with strictly positive entries.
FiniteMeasure random_probability(const AtomSpace& space, SplitRng& rng);

}  // namespace divkit::verify
