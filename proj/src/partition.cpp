#include "divkit/partition.hpp"

#include <cmath>
#include <stdexcept>

#include "divkit/rng.hpp"

namespace divkit {

bool validate_partition(std::size_t n_atoms, const std::vector<std::vector<double>>& elements,
                        double tol) {
    if (!(tol > 0)) throw std::invalid_argument("validate_partition: tol must be > 0");
    if (elements.empty()) return false;
    for (const auto& g : elements) {
        if (g.size() != n_atoms) return false;
        for (double v : g)
            if (!(v >= 0) || !std::isfinite(v)) return false;
    }
    for (std::size_t x = 0; x < n_atoms; ++x) {
        double s = 0;
        for (const auto& g : elements) s += g[x];
        if (std::abs(s - 1.0) > tol) return false;
    }
    return true;
}

PartitionOfUnity::PartitionOfUnity(AtomSpace space, std::vector<std::vector<double>> elements)
    : space_(std::move(space)), elements_(std::move(elements)) {
    if (!validate_partition(space_.size(), elements_, 1e-12))
        throw std::invalid_argument("PartitionOfUnity: elements do not sum to one");
}

bool validate_partition(const PartitionOfUnity& g, double tol) {
    return validate_partition(g.space().size(), g.elements(), tol);
}

PartitionOfUnity atomic_partition(const AtomSpace& space) {
    std::size_t n = space.size();
    std::vector<std::vector<double>> elements(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) elements[i][i] = 1.0;
    return PartitionOfUnity(space, std::move(elements));
}

PartitionOfUnity sample_partition(const AtomSpace& space, std::size_t k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("sample_partition: k must be >= 1");
    std::size_t n = space.size();
    std::vector<std::vector<double>> elements(k, std::vector<double>(n));
    SplitRng rng = SplitRng::for_instance(seed, 0, 0);
    for (std::size_t x = 0; x < n; ++x) {
        double total = 0;
        std::vector<double> e(k);
        for (std::size_t i = 0; i < k; ++i) total += e[i] = rng.exponential();
        for (std::size_t i = 0; i < k; ++i) elements[i][x] = e[i] / total;
    }
    return PartitionOfUnity(space, std::move(elements));
}

PartitionOfUnity refine(const PartitionOfUnity& g, const PartitionOfUnity& h) {
    if (!(g.space() == h.space()))
        throw std::invalid_argument("refine: atom spaces differ");
    std::size_t n = g.space().size();
    std::vector<std::vector<double>> elements;
    elements.reserve(g.size() * h.size());
    for (const auto& gi : g.elements())
        for (const auto& hj : h.elements()) {
            std::vector<double> e(n);
            for (std::size_t x = 0; x < n; ++x) e[x] = gi[x] * hj[x];
            elements.push_back(std::move(e));
        }
    return PartitionOfUnity(g.space(), std::move(elements));
}

}  // namespace divkit
