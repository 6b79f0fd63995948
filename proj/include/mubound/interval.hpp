#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <limits>

namespace mubound {

/// Closed interval of doubles. Every operation rounds lo down and hi up, so the
/// exact real result of the operation on any enclosed operands stays enclosed.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    constexpr Interval() = default;
    constexpr Interval(double l, double h) : lo(l), hi(h) {}
    static constexpr Interval point(double x) { return {x, x}; }

    double width() const { return hi - lo; }
    double mid() const { return lo + 0.5 * (hi - lo); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool is_point() const { return lo == hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DenominatorVanishes when b contains zero.
Interval operator/(const Interval& a, const Interval& b);

Interval hull(const Interval& a, const Interval& b);
/// Intersection; callers guarantee overlap (both enclose the same quantity).
Interval intersect(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace mubound
