#pragma once

#include <cmath>
#include <iosfwd>
#include <limits>
#include <stdexcept>

namespace divkit {

// The real line extended with +inf and -inf.
//
// NaN is rejected at every entry point, and adding infinities of opposite
// sign throws instead of silently producing NaN.  The product 0 * (+-inf)
// is not defined by operator overloads at all; the only place it is legal
// is singular_product(), which implements the zero-mass convention: a zero
// mass annihilates the slope no matter how infinite the slope is.
class ExtReal {
  public:
    ExtReal() : v_(0.0) {}
    ExtReal(double v) : v_(v == 0.0 ? 0.0 : v) {  // implicit; -0.0 normalized away
        if (std::isnan(v)) throw std::domain_error("ExtReal: NaN is not a value");
    }

    static ExtReal pos_inf() { return ExtReal(std::numeric_limits<double>::infinity()); }
    static ExtReal neg_inf() { return ExtReal(-std::numeric_limits<double>::infinity()); }

    bool finite() const { return std::isfinite(v_); }
    bool is_pos_inf() const { return std::isinf(v_) && v_ > 0; }
    bool is_neg_inf() const { return std::isinf(v_) && v_ < 0; }

    // Raw value; +-inf is a legitimate result, never NaN.
    double value() const { return v_; }

    ExtReal operator-() const { return ExtReal(-v_); }

    ExtReal& operator+=(ExtReal o) {
        if ((is_pos_inf() && o.is_neg_inf()) || (is_neg_inf() && o.is_pos_inf()))
            throw std::domain_error("ExtReal: +inf + -inf is undefined");
        v_ += o.v_;
        return *this;
    }

    friend ExtReal operator+(ExtReal a, ExtReal b) { return a += b; }
    friend ExtReal operator-(ExtReal a, ExtReal b) { return a += (-b); }

    friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
    friend bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
    friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
    friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
    friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
    friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

  private:
    double v_;
};

// mass * slope with the convention that mass == 0 yields 0 regardless of the
// slope, infinite or not.  For nonzero mass the usual sign rules apply:
// mass > 0 keeps the sign of an infinite slope, mass < 0 flips it.
inline ExtReal singular_product(double mass, ExtReal slope) {
    if (std::isnan(mass) || std::isinf(mass))
        throw std::domain_error("singular_product: mass must be finite");
    if (mass == 0.0) return ExtReal(0.0);
    if (slope.is_pos_inf()) return mass > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
    if (slope.is_neg_inf()) return mass > 0 ? ExtReal::neg_inf() : ExtReal::pos_inf();
    return ExtReal(mass * slope.value());
}

// |a - b| with infinities of equal sign counting as equal.
inline bool ext_close(ExtReal a, ExtReal b, double tol) {
    if (a.finite() && b.finite()) return std::abs(a.value() - b.value()) <= tol;
    return a == b;
}

std::ostream& operator<<(std::ostream& os, ExtReal x);

}  // namespace divkit
