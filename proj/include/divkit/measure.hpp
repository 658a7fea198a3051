#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace divkit {

// Finite set of labelled atoms.  Every subset of a finite space is
// measurable, so no sigma-algebra object exists; measures are dense weight
// arrays over this space.
class AtomSpace {
  public:
    explicit AtomSpace(std::vector<std::string> labels);
    static AtomSpace indexed(std::size_t n);  // labels "0", "1", ...

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    friend bool operator==(const AtomSpace& a, const AtomSpace& b) {
        return a.labels_ == b.labels_;
    }

  private:
    std::vector<std::string> labels_;
};

// Finite real-valued measure: one finite weight per atom.  NaN and
// infinities are rejected at construction.
class SignedMeasure {
  public:
    SignedMeasure(AtomSpace space, std::vector<double> weights);

    const AtomSpace& space() const { return space_; }
    std::size_t size() const { return weights_.size(); }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }

    double mass() const;  // nu(X)

    SignedMeasure& operator+=(const SignedMeasure& o);
    friend SignedMeasure operator+(SignedMeasure a, const SignedMeasure& b) { return a += b; }

  private:
    AtomSpace space_;
    std::vector<double> weights_;
};

// Finite nonnegative measure.
class FiniteMeasure {
  public:
    FiniteMeasure(AtomSpace space, std::vector<double> weights);

    const AtomSpace& space() const { return m_.space(); }
    std::size_t size() const { return m_.size(); }
    double weight(std::size_t i) const { return m_.weight(i); }
    const std::vector<double>& weights() const { return m_.weights(); }

    double mass() const { return m_.mass(); }
    const SignedMeasure& as_signed() const { return m_; }

    FiniteMeasure& operator+=(const FiniteMeasure& o);
    friend FiniteMeasure operator+(FiniteMeasure a, const FiniteMeasure& b) { return a += b; }

  private:
    SignedMeasure m_;
};

// Integral of g against m over the atoms: sum_x g(x) m(x).
double integrate(const SignedMeasure& m, std::span<const double> g);
double integrate(const FiniteMeasure& m, std::span<const double> g);

// nu = plus - minus with disjoint supports; total_variation(nu) equals
// plus.mass() + minus.mass().
std::pair<FiniteMeasure, FiniteMeasure> jordan_decompose(const SignedMeasure& nu);

// nu = nu_a + nu_s_plus + nu_s_minus relative to a reference mu: the
// absolutely continuous part lives on {mu > 0}, the singular parts split the
// rest by sign (nu_s_minus has all entries <= 0).
struct LebesgueDecomposition {
    SignedMeasure nu_a;
    FiniteMeasure nu_s_plus;
    SignedMeasure nu_s_minus;

    SignedMeasure reconstruct() const;  // exact componentwise sum
};

LebesgueDecomposition lebesgue_decompose(const SignedMeasure& nu, const FiniteMeasure& mu);

// Radon-Nikodym derivative of an absolutely continuous nu_a with respect to
// mu; 0 by convention on mu-null atoms.
struct Density {
    AtomSpace space;
    std::vector<double> values;
};

Density radon_nikodym(const SignedMeasure& nu_a, const FiniteMeasure& mu);

// The measure f*m defined by (f m)(x) = f(x) m(x); f must be nonnegative.
SignedMeasure apply_density(std::span<const double> f, const SignedMeasure& m);
FiniteMeasure apply_density(std::span<const double> f, const FiniteMeasure& m);

double total_variation(const SignedMeasure& nu);

}  // namespace divkit
