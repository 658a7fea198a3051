#include "divkit/convex.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "divkit/errors.hpp"

namespace divkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::ostream& operator<<(std::ostream& os, ExtReal x) {
    if (x.is_pos_inf()) return os << "inf";
    if (x.is_neg_inf()) return os << "-inf";
    return os << x.value();
}

ExtReal ConvexFunction::operator()(double t) const {
    if (std::isnan(t)) throw std::domain_error("ConvexFunction: NaN argument");
    double v = f_(t);
    if (std::isnan(v)) throw std::domain_error(label_ + ": evaluator returned NaN");
    if (std::isinf(v) && v < 0) throw std::domain_error(label_ + ": evaluator returned -inf");
    return ExtReal(v);
}

ExtReal ConvexFunction::perspective(double s, double x) const {
    if (!(s >= 0)) throw std::invalid_argument("perspective: s must be >= 0");
    if (std::isnan(x)) throw std::domain_error("perspective: NaN argument");
    if (s == 0.0) {
        if (x > 0) return singular_product(x, slope_pos_);
        if (x < 0) return singular_product(x, slope_neg_);
        return ExtReal(0.0);
    }
    double r = x / s;
    if (std::isinf(r))  // x/s overflowed; continue with the tail slope
        return singular_product(x, r > 0 ? slope_pos_ : slope_neg_);
    ExtReal v = (*this)(r);
    if (v.is_pos_inf()) return ExtReal::pos_inf();
    return ExtReal(s * v.value());
}

ConvexFunction ConvexFunction::from_raw(std::string label, Evaluator f, double finite_lo,
                                        double finite_hi, ExtReal slope_pos, ExtReal slope_neg,
                                        double line_a, double line_b) {
    if (slope_pos.is_neg_inf()) throw std::invalid_argument(label + ": F'(+inf) cannot be -inf");
    if (slope_neg.is_pos_inf()) throw std::invalid_argument(label + ": F'(-inf) cannot be +inf");
    ConvexFunction g;
    g.label_ = std::move(label);
    g.f_ = std::move(f);
    g.lo_ = finite_lo;
    g.hi_ = finite_hi;
    g.slope_pos_ = slope_pos;
    g.slope_neg_ = slope_neg;
    g.line_a_ = line_a;
    g.line_b_ = line_b;
    return g;
}

ConvexFunction ConvexFunction::kl() {
    return from_raw("kl", [](double t) { return t > 0 ? -std::log(t) : kInf; },
                    0.0, kInf, ExtReal(0.0), ExtReal::neg_inf(), -1.0, 1.0);
}

ConvexFunction ConvexFunction::hellinger() {
    return from_raw("hellinger", [](double t) { return t >= 0 ? 1.0 - std::sqrt(t) : kInf; },
                    0.0, kInf, ExtReal(0.0), ExtReal::neg_inf(), -0.5, 0.5);
}

ConvexFunction ConvexFunction::total_variation() {
    return from_raw("total_variation", [](double t) { return std::abs(t - 1.0); },
                    -kInf, kInf, ExtReal(1.0), ExtReal(-1.0), 1.0, -1.0);
}

ConvexFunction ConvexFunction::pearson_chi2() {
    return from_raw("pearson_chi2", [](double t) { return (t - 1.0) * (t - 1.0); },
                    -kInf, kInf, ExtReal::pos_inf(), ExtReal::neg_inf(), 0.0, 0.0);
}

ConvexFunction ConvexFunction::alpha(double a) {
    if (std::isnan(a) || std::isinf(a) || a == 0.0 || a == 1.0)
        throw std::invalid_argument("alpha generator: parameter must be finite and not 0 or 1");
    double denom = a * a - a;
    auto f = [a, denom](double t) {
        if (t > 0) return (std::pow(t, a) - t) / denom;
        if (t == 0.0) return a > 0 ? 0.0 : kInf;
        return kInf;  // t^a extended by +inf on the negative axis for every a
    };
    // F(t)/t = (t^(a-1) - 1)/(a^2 - a): +inf for a > 1, else 1/(a - a^2).
    ExtReal slope_pos = a > 1 ? ExtReal::pos_inf() : ExtReal(1.0 / (a - a * a));
    // Tangent at t = 1: F(1) = 0, F'(1) = 1/a.
    return from_raw("alpha:" + std::to_string(a), f, 0.0, kInf,
                    slope_pos, ExtReal::neg_inf(), 1.0 / a, -1.0 / a);
}

ConvexFunction ConvexFunction::from_callable(std::string label, Evaluator f,
                                             double finite_lo, double finite_hi) {
    if (!(finite_lo <= finite_hi))
        throw std::invalid_argument(label + ": empty finiteness domain");
    ConvexFunction probe = from_raw(label, f, finite_lo, finite_hi, ExtReal(0.0),
                                    ExtReal(0.0), 0.0, 0.0);
    ExtReal sp = numeric_asymptotic_slope(probe, Direction::plus);
    ExtReal sn = numeric_asymptotic_slope(probe, Direction::minus);
    if (sp.is_neg_inf() || sn.is_pos_inf())
        throw std::invalid_argument(label + ": asymptotic slopes inconsistent with convexity");

    // Support line from a subgradient at an interior point of the
    // finiteness domain.
    double lo = std::isinf(finite_lo) ? -1.0 : finite_lo;
    double hi = std::isinf(finite_hi) ? std::max(lo + 2.0, 1.0) : finite_hi;
    double t0 = 0.5 * (lo + hi);
    double h = 1e-6 * (1.0 + std::abs(t0));
    ExtReal fl = probe(t0 - h), fm = probe(t0), fr = probe(t0 + h);
    if (!fl.finite() || !fm.finite() || !fr.finite()) {
        // Boundary effects; fall back to one-sided differences at t0.
        fl = fm;
        h = 0;
    }
    double a = (h > 0) ? (fr.value() - fl.value()) / (2 * h) : 0.0;
    double b = fm.value() - a * t0;
    b -= 1e-9 * (1.0 + std::abs(b));  // slack for the numeric subgradient
    return from_raw(std::move(label), std::move(f), finite_lo, finite_hi, sp, sn, a, b);
}

ConvexFunction make_generator(std::string_view name, std::optional<double> alpha_param) {
    if (name == "alpha") {
        if (!alpha_param) throw std::invalid_argument("alpha generator requires a parameter");
        return ConvexFunction::alpha(*alpha_param);
    }
    if (alpha_param)
        throw std::invalid_argument("alpha parameter is only valid for the alpha generator");
    if (name == "kl") return ConvexFunction::kl();
    if (name == "hellinger") return ConvexFunction::hellinger();
    if (name == "total_variation") return ConvexFunction::total_variation();
    if (name == "pearson_chi2") return ConvexFunction::pearson_chi2();
    throw std::invalid_argument("unknown generator: " + std::string(name));
}

ConvexFunction parse_generator(std::string_view token) {
    auto colon = token.find(':');
    if (colon == std::string_view::npos) return make_generator(token);
    std::string_view name = token.substr(0, colon);
    std::string arg(token.substr(colon + 1));
    double v = 0;
    try {
        std::size_t used = 0;
        v = std::stod(arg, &used);
        if (used != arg.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad generator parameter: " + std::string(token));
    }
    return make_generator(name, v);
}

ExtReal numeric_asymptotic_slope(const ConvexFunction& f, Direction d) {
    const double sign = (d == Direction::plus) ? 1.0 : -1.0;
    bool have_prev = false;
    ExtReal prev(0.0);
    for (int k = 1; k <= 60; ++k) {
        double t = sign * std::ldexp(1.0, k);
        ExtReal ft = f(t);
        ExtReal ratio = ft.is_pos_inf()
                            ? (sign > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf())
                            : ExtReal(ft.value() / t);
        if (ratio.finite() && std::abs(ratio.value()) > 1e12)
            return ratio.value() > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
        // k >= 16 guards against coincidental matches in the early ratios
        // (e.g. -ln(t)/t takes the same value at t = 2 and t = 4).
        if (have_prev && k >= 16) {
            if (!ratio.finite() && ratio == prev) return ratio;
            if (ratio.finite() && prev.finite() &&
                std::abs(ratio.value() - prev.value()) < 1e-9)
                return ratio;
        }
        prev = ratio;
        have_prev = true;
    }
    throw NonConvergence(f.label() + ": asymptotic slope (" +
                         (d == Direction::plus ? "+" : "-") +
                         ") did not stabilize within the doubling budget");
}

std::pair<double, double> superlinear_bounds(const ConvexFunction& f) {
    return f.support_line();
}

bool check_convexity(const ConvexFunction& f, std::span<const double> grid, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("check_convexity: tol must be > 0");
    for (std::size_t i = 0; i + 2 < grid.size(); ++i) {
        double t1 = grid[i], t2 = grid[i + 1], t3 = grid[i + 2];
        if (!(t1 < t2 && t2 < t3))
            throw std::invalid_argument("check_convexity: grid must be strictly increasing");
        ExtReal f1 = f(t1), f2 = f(t2), f3 = f(t3);
        if (f1.is_pos_inf() || f3.is_pos_inf()) continue;  // vacuous
        if (f2.is_pos_inf()) return false;
        double lerp = ((t3 - t2) * f1.value() + (t2 - t1) * f3.value()) / (t3 - t1);
        if (f2.value() > lerp + tol) return false;
    }
    return true;
}

}  // namespace divkit
