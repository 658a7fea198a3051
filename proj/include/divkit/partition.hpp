#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "divkit/measure.hpp"

namespace divkit {

// Raw validity check: k >= 1, every entry >= 0, every atom's column sums to
// 1 within tol.  Usable on arbitrary candidate data.
bool validate_partition(std::size_t n_atoms, const std::vector<std::vector<double>>& elements,
                        double tol);

// Finite partition of unity on an AtomSpace: nonnegative functions g_1..g_k
// with sum_i g_i(x) = 1 at every atom (within 1e-12 at construction).
class PartitionOfUnity {
  public:
    PartitionOfUnity(AtomSpace space, std::vector<std::vector<double>> elements);

    const AtomSpace& space() const { return space_; }
    std::size_t size() const { return elements_.size(); }  // k
    std::span<const double> element(std::size_t i) const { return elements_[i]; }
    const std::vector<std::vector<double>>& elements() const { return elements_; }

  private:
    AtomSpace space_;
    std::vector<std::vector<double>> elements_;
};

bool validate_partition(const PartitionOfUnity& g, double tol);

// The indicator functions of the atoms (k = n).
PartitionOfUnity atomic_partition(const AtomSpace& space);

// For each atom independently, a point of the (k-1)-simplex from normalized
// independent exponentials; deterministic in seed.
PartitionOfUnity sample_partition(const AtomSpace& space, std::size_t k, std::uint64_t seed);

// Common refinement {g*h : g in G, h in H} (pointwise products).
PartitionOfUnity refine(const PartitionOfUnity& g, const PartitionOfUnity& h);

}  // namespace divkit
