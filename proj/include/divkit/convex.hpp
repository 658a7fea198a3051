#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "divkit/ext_real.hpp"

namespace divkit {

enum class Direction { plus, minus };

// A convex function F: R -> R u {+inf} together with the data the sup-sums
// machinery needs: the asymptotic slopes F(t)/t at +-inf, a supporting line
// F(t) >= A t + B, and the closure [finite_lo, finite_hi] of the interval
// where F is finite.  F never takes the value -inf.
//
// Builtins carry analytic slopes and support lines; from_callable() derives
// them numerically (doubling-limit slopes, subgradient support line).
class ConvexFunction {
  public:
    using Evaluator = std::function<double(double)>;

    // Standard divergence generators.
    static ConvexFunction kl();               // -ln t
    static ConvexFunction hellinger();        // 1 - sqrt(t)
    static ConvexFunction total_variation();  // |t - 1|
    static ConvexFunction pearson_chi2();     // (t - 1)^2
    static ConvexFunction alpha(double alpha_param);  // (t^a - t)/(a^2 - a), a not in {0,1}

    // User-supplied convex function; f returns +inf outside its finiteness
    // interval and must never return NaN or -inf.  Slopes and the support
    // line are computed numerically (may throw NonConvergence).
    static ConvexFunction from_callable(std::string label, Evaluator f,
                                        double finite_lo, double finite_hi);

    // All-fields constructor; the caller vouches for consistency.  Builtins
    // are assembled through this, and the verification harness uses it to
    // inject a deliberately broken generator when asked to prove that the
    // property suites can fail.
    static ConvexFunction from_raw(std::string label, Evaluator f, double finite_lo,
                                   double finite_hi, ExtReal slope_pos, ExtReal slope_neg,
                                   double line_a, double line_b);

    // F(t); +inf outside the finiteness interval, never -inf.
    ExtReal operator()(double t) const;
    ExtReal eval(double t) const { return (*this)(t); }

    ExtReal slope_pos() const { return slope_pos_; }
    ExtReal slope_neg() const { return slope_neg_; }
    ExtReal asymptotic_slope(Direction d) const {
        return d == Direction::plus ? slope_pos_ : slope_neg_;
    }

    // s * F(x/s) extended to s == 0 through the asymptotic slopes:
    // x > 0 gives x * F'(+inf), x < 0 gives x * F'(-inf), x == 0 gives 0.
    // Requires s >= 0.  The result is never -inf.
    ExtReal perspective(double s, double x) const;

    // The stored supporting line (A, B) with F(t) >= A t + B everywhere.
    std::pair<double, double> support_line() const { return {line_a_, line_b_}; }

    const std::string& label() const { return label_; }
    double finite_lo() const { return lo_; }
    double finite_hi() const { return hi_; }

  private:
    ConvexFunction() = default;

    std::string label_;
    Evaluator f_;
    double lo_ = 0, hi_ = 0;
    ExtReal slope_pos_, slope_neg_;
    double line_a_ = 0, line_b_ = 0;
};

// Lookup by name: kl | hellinger | total_variation | pearson_chi2 | alpha
// (alpha requires alpha_param, which must not be 0 or 1).
ConvexFunction make_generator(std::string_view name,
                              std::optional<double> alpha_param = std::nullopt);

// Same lookup from a single CLI/config token, e.g. "kl" or "alpha:2.5".
ConvexFunction parse_generator(std::string_view token);

// Doubling-limit estimate of lim F(t)/t as t -> +-inf, independent of any
// stored slope: t = +-2^k for k = 1..60, declared converged when successive
// ratios differ by < 1e-9; ratios above 1e12 in magnitude are promoted to
// +-inf.  Throws NonConvergence when the budget runs out.
ExtReal numeric_asymptotic_slope(const ConvexFunction& f, Direction d);

// The stored support line; provided as a named operation for symmetry with
// asymptotic_slope.
std::pair<double, double> superlinear_bounds(const ConvexFunction& f);

// Midpoint-convexity check over consecutive triples of a sorted grid, in the
// extended-real order (+inf endpoints make the inequality vacuous).
bool check_convexity(const ConvexFunction& f, std::span<const double> grid, double tol);

}  // namespace divkit
