#include "divkit/divergence.hpp"

#include <stdexcept>

#include "divkit/rng.hpp"

namespace divkit {

namespace {

// Terms of a sup-sums expression are bounded below by their support line, so
// -inf can never appear; assert rather than assume.
void require_not_neg_inf(ExtReal term, const char* what) {
    if (term.is_neg_inf())
        throw std::logic_error(std::string(what) + ": summand of -inf violates superlinearity");
}

}  // namespace

ExtReal supsum_term(const ConvexFunction& f, const FiniteMeasure& mu, const SignedMeasure& nu,
                    std::span<const double> g) {
    if (!(mu.space() == nu.space()))
        throw std::invalid_argument("supsum_term: atom spaces differ");
    for (double v : g)
        if (!(v >= 0)) throw std::invalid_argument("supsum_term: g must be nonnegative");
    ExtReal term = f.perspective(integrate(mu, g), integrate(nu, g));
    require_not_neg_inf(term, "supsum_term");
    return term;
}

ExtReal partition_sum(const ConvexFunction& f, const FiniteMeasure& mu, const SignedMeasure& nu,
                      const PartitionOfUnity& g) {
    if (!(g.space() == mu.space()))
        throw std::invalid_argument("partition_sum: partition on a different atom space");
    ExtReal total(0.0);
    for (std::size_t i = 0; i < g.size(); ++i) total += supsum_term(f, mu, nu, g.element(i));
    return total;
}

DivergenceReport closed_form(const ConvexFunction& f, const FiniteMeasure& mu,
                             const SignedMeasure& nu) {
    LebesgueDecomposition dec = lebesgue_decompose(nu, mu);
    ExtReal ac(0.0);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        double m = mu.weight(i);
        if (m <= 0) continue;
        ExtReal fi = f(dec.nu_a.weight(i) / m);
        ac += fi.is_pos_inf() ? ExtReal::pos_inf() : ExtReal(m * fi.value());
    }
    ExtReal sp = singular_product(dec.nu_s_plus.mass(), f.slope_pos());
    ExtReal sm = singular_product(dec.nu_s_minus.mass(), f.slope_neg());
    require_not_neg_inf(sp, "closed_form");
    require_not_neg_inf(sm, "closed_form");
    ExtReal value = ac + sp + sm;
    return {value, ac, sp, sm, std::move(dec)};
}

ExtReal supsum_estimate(const ConvexFunction& f, const FiniteMeasure& mu,
                        const SignedMeasure& nu, std::size_t k_max, std::size_t samples,
                        std::uint64_t seed) {
    if (k_max < 1) throw std::invalid_argument("supsum_estimate: k_max must be >= 1");
    ExtReal best = partition_sum(f, mu, nu, atomic_partition(mu.space()));
    for (std::size_t j = 0; j < samples; ++j) {
        SplitRng rng = SplitRng::for_instance(seed, 0x70617274, j);  // partition stream
        std::size_t k = 1 + rng.uniform_index(k_max);
        ExtReal v = partition_sum(f, mu, nu, sample_partition(mu.space(), k, rng.next_u64()));
        if (v > best) best = v;
    }
    return best;
}

ExtReal kl_divergence(const FiniteMeasure& mu, const FiniteMeasure& nu) {
    static const ConvexFunction gen = ConvexFunction::kl();
    return closed_form(gen, mu, nu.as_signed()).value;
}

DivergenceReport named_divergence(std::string_view name, const FiniteMeasure& mu,
                                  const SignedMeasure& nu, std::optional<double> alpha_param) {
    ConvexFunction f = make_generator(name, alpha_param);
    if (name == "kl")
        for (double v : nu.weights())
            if (v < 0)
                throw std::invalid_argument(
                    "kl requires a nonnegative nu: the extended Kullback-Leibler divergence "
                    "is defined for pairs of nonnegative measures");
    return closed_form(f, mu, nu);
}

ExtReal integral_via_partitions(const ConvexFunction& f_gen, std::span<const double> f,
                                const FiniteMeasure& mu, const PartitionOfUnity& g) {
    if (f.size() != mu.size())
        throw std::invalid_argument("integral_via_partitions: f not on the atom space");
    if (!(g.space() == mu.space()))
        throw std::invalid_argument("integral_via_partitions: partition on a different space");
    std::vector<double> fg(mu.size());
    ExtReal total(0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto gi = g.element(i);
        for (std::size_t x = 0; x < fg.size(); ++x) fg[x] = f[x] * gi[x];
        ExtReal term = f_gen.perspective(integrate(mu, gi), integrate(mu, fg));
        require_not_neg_inf(term, "integral_via_partitions");
        total += term;
    }
    return total;
}

}  // namespace divkit
