#pragma once

#include "mubound/interval.hpp"
#include "mubound/rational.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace mubound {

/// Exact real p + q*sqrt(r) with rational p, q and a non-negative radicand r.
///
/// The radicand is reduced by extracting square factors; it is guaranteed
/// square-free whenever the reduced value is below 10^10 (trial division to
/// 10^5 plus a perfect-square test on the cofactor). Equality and ordering are
/// decided exactly by sign analysis, so they do not depend on that reduction.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(const Rational& p) : p_(p) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(std::int64_t p) : p_(p) {}     // NOLINT(google-explicit-constructor)
    QuadraticNumber(const Rational& p, const Rational& q, const BigInt& radicand);

    const Rational& rational_part() const { return p_; }
    const Rational& surd_coefficient() const { return q_; }
    const BigInt& radicand() const { return r_; }
    bool is_rational() const { return q_.is_zero(); }

    int sign() const;

    /// Arithmetic requires a shared radicand (or a rational operand).
    QuadraticNumber operator-() const;
    friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b);
    friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b);
    friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b);
    friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b);

    friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
        return compare(a, b) == 0;
    }
    friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    /// -1, 0, +1. Works for any pair of radicands.
    static int compare(const QuadraticNumber& a, const QuadraticNumber& b);

    /// Exact rational enclosure [lo, hi] of width <= |q| * 2^-bits.
    std::pair<Rational, Rational> rational_bounds(unsigned bits) const;

    /// Outward-rounded double enclosure. Width <= 2^-precision * max(1, |x|)
    /// as long as that exceeds two ulps of the value.
    Interval enclose(unsigned precision = 40) const;
    double to_double() const;

    std::string str() const;

private:
    Rational p_;
    Rational q_;
    BigInt r_ = 0;
};

using BoundaryPoint = QuadraticNumber;

/// Ordering of two boundary points.
int compare_boundary(const BoundaryPoint& a, const BoundaryPoint& b);

/// Outward-rounded enclosure of a boundary point.
Interval enclose_boundary(const BoundaryPoint& a, unsigned precision = 40);

/// A rational strictly between a < b.
Rational rational_between(const QuadraticNumber& a, const QuadraticNumber& b);

/// Sign of u + v*sqrt(r) without floating point.
int sign_of_surd(const Rational& u, const Rational& v, const BigInt& r);

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x);

}  // namespace mubound
