#include "divkit/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace divkit {

namespace {

void require_same_space(const AtomSpace& a, const AtomSpace& b, const char* what) {
    if (!(a == b)) throw std::invalid_argument(std::string(what) + ": atom spaces differ");
}

void require_finite(const std::vector<double>& w, const char* what) {
    for (double v : w)
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(what) + ": weights must be finite");
}

}  // namespace

AtomSpace::AtomSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("AtomSpace: needs at least one atom");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw std::invalid_argument("AtomSpace: duplicate label '" + l + "'");
}

AtomSpace AtomSpace::indexed(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return AtomSpace(std::move(labels));
}

SignedMeasure::SignedMeasure(AtomSpace space, std::vector<double> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
    if (weights_.size() != space_.size())
        throw std::invalid_argument("SignedMeasure: weight count does not match atom count");
    require_finite(weights_, "SignedMeasure");
}

double SignedMeasure::mass() const {
    double s = 0;
    for (double v : weights_) s += v;
    return s;
}

SignedMeasure& SignedMeasure::operator+=(const SignedMeasure& o) {
    require_same_space(space_, o.space_, "SignedMeasure::operator+");
    for (std::size_t i = 0; i < weights_.size(); ++i) weights_[i] += o.weights_[i];
    return *this;
}

FiniteMeasure::FiniteMeasure(AtomSpace space, std::vector<double> weights)
    : m_(std::move(space), std::move(weights)) {
    for (double v : m_.weights())
        if (v < 0) throw std::invalid_argument("FiniteMeasure: weights must be nonnegative");
}

FiniteMeasure& FiniteMeasure::operator+=(const FiniteMeasure& o) {
    m_ += o.m_;
    return *this;
}

double integrate(const SignedMeasure& m, std::span<const double> g) {
    if (g.size() != m.size())
        throw std::invalid_argument("integrate: function not defined on the atom space");
    double s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) s += g[i] * m.weight(i);
    return s;
}

double integrate(const FiniteMeasure& m, std::span<const double> g) {
    return integrate(m.as_signed(), g);
}

std::pair<FiniteMeasure, FiniteMeasure> jordan_decompose(const SignedMeasure& nu) {
    std::vector<double> plus(nu.size(), 0.0), minus(nu.size(), 0.0);
    for (std::size_t i = 0; i < nu.size(); ++i) {
        double v = nu.weight(i);
        (v >= 0 ? plus[i] : minus[i]) = std::abs(v);
    }
    return {FiniteMeasure(nu.space(), std::move(plus)),
            FiniteMeasure(nu.space(), std::move(minus))};
}

SignedMeasure LebesgueDecomposition::reconstruct() const {
    return nu_a + nu_s_plus.as_signed() + nu_s_minus;
}

LebesgueDecomposition lebesgue_decompose(const SignedMeasure& nu, const FiniteMeasure& mu) {
    require_same_space(nu.space(), mu.space(), "lebesgue_decompose");
    std::vector<double> a(nu.size(), 0.0), sp(nu.size(), 0.0), sm(nu.size(), 0.0);
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (mu.weight(i) > 0)
            a[i] = nu.weight(i);
        else if (nu.weight(i) > 0)
            sp[i] = nu.weight(i);
        else
            sm[i] = nu.weight(i);
    }
    return {SignedMeasure(nu.space(), std::move(a)),
            FiniteMeasure(nu.space(), std::move(sp)),
            SignedMeasure(nu.space(), std::move(sm))};
}

Density radon_nikodym(const SignedMeasure& nu_a, const FiniteMeasure& mu) {
    require_same_space(nu_a.space(), mu.space(), "radon_nikodym");
    std::vector<double> values(nu_a.size(), 0.0);
    for (std::size_t i = 0; i < nu_a.size(); ++i) {
        if (mu.weight(i) > 0)
            values[i] = nu_a.weight(i) / mu.weight(i);
        else if (nu_a.weight(i) != 0)
            throw std::invalid_argument(
                "radon_nikodym: nu_a is not absolutely continuous with respect to mu");
    }
    return {nu_a.space(), std::move(values)};
}

namespace {

std::vector<double> scaled_weights(std::span<const double> f, const SignedMeasure& m,
                                   const char* what) {
    if (f.size() != m.size())
        throw std::invalid_argument(std::string(what) + ": density not on the atom space");
    std::vector<double> w(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!(f[i] >= 0) || !std::isfinite(f[i]))
            throw std::invalid_argument(std::string(what) +
                                        ": density must be nonnegative and finite");
        w[i] = f[i] * m.weight(i);
    }
    return w;
}

}  // namespace

SignedMeasure apply_density(std::span<const double> f, const SignedMeasure& m) {
    return SignedMeasure(m.space(), scaled_weights(f, m, "apply_density"));
}

FiniteMeasure apply_density(std::span<const double> f, const FiniteMeasure& m) {
    return FiniteMeasure(m.space(), scaled_weights(f, m.as_signed(), "apply_density"));
}

double total_variation(const SignedMeasure& nu) {
    double s = 0;
    for (double v : nu.weights()) s += std::abs(v);
    return s;
}

}  // namespace divkit
