#include "mubound/interval.hpp"

#include "mubound/error.hpp"

#include <ostream>

namespace mubound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

// Error-free transforms: the exact result is s + e.
double sum_lo(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double e = (a - (s - bb)) + (b - bb);
    return e < 0.0 ? down(s) : s;
}
double sum_hi(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double e = (a - (s - bb)) + (b - bb);
    return e > 0.0 ? up(s) : s;
}
double prod_lo(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return e < 0.0 ? down(p) : p;
}
double prod_hi(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return e > 0.0 ? up(p) : p;
}
// Exact quotient is q + r/b with r = a - q*b computed exactly by fma.
double quot_lo(double a, double b) {
    double q = a / b;
    double r = std::fma(-q, b, a);
    bool below = (r > 0.0 && b < 0.0) || (r < 0.0 && b > 0.0);
    return below ? down(q) : q;
}
double quot_hi(double a, double b) {
    double q = a / b;
    double r = std::fma(-q, b, a);
    bool above = (r > 0.0 && b > 0.0) || (r < 0.0 && b < 0.0);
    return above ? up(q) : q;
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
    return {sum_lo(a.lo, b.lo), sum_hi(a.hi, b.hi)};
}

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
    double lo = std::min({prod_lo(a.lo, b.lo), prod_lo(a.lo, b.hi), prod_lo(a.hi, b.lo),
                          prod_lo(a.hi, b.hi)});
    double hi = std::max({prod_hi(a.lo, b.lo), prod_hi(a.lo, b.hi), prod_hi(a.hi, b.lo),
                          prod_hi(a.hi, b.hi)});
    return {lo, hi};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw Error(ErrorCode::DenominatorVanishes, "interval division by zero");
    double lo = std::min({quot_lo(a.lo, b.lo), quot_lo(a.lo, b.hi), quot_lo(a.hi, b.lo),
                          quot_lo(a.hi, b.hi)});
    double hi = std::max({quot_hi(a.lo, b.lo), quot_hi(a.lo, b.hi), quot_hi(a.hi, b.lo),
                          quot_hi(a.hi, b.hi)});
    return {lo, hi};
}

Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval intersect(const Interval& a, const Interval& b) {
    Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    if (r.lo > r.hi) return hull(a, b);
    return r;
}

Interval min(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
    return os << '[' << x.lo << ", " << x.hi << ']';
}

}  // namespace mubound
