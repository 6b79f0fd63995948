#include "mubound/rational.hpp"

#include "mubound/error.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace mubound {

Rational::Rational(std::int64_t n, std::int64_t d) : Rational(BigInt(n), BigInt(d)) {}

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw Error(ErrorCode::DenominatorVanishes, "rational with zero denominator");
    v_ = boost::multiprecision::cpp_rational(n, d);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw Error(ErrorCode::OutOfDomain, "non-finite double");
    if (x == 0.0) return Rational();
    int exp = 0;
    double mant = std::frexp(x, &exp);
    // mant * 2^53 is an integer for every double.
    auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    BigInt num(m);
    BigInt den(1);
    if (exp >= 0) num <<= exp;
    else den <<= -exp;
    return Rational(num, den);
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw Error(ErrorCode::DenominatorVanishes, "reciprocal of zero");
    return Rational(den(), num());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "division by zero");
    v_ /= o.v_;
    return *this;
}

double Rational::to_double() const { return v_.convert_to<double>(); }

double Rational::round_down() const {
    double d = to_double();
    if (std::isinf(d)) d = d > 0 ? std::numeric_limits<double>::max() : -std::numeric_limits<double>::max();
    while (from_double(d) > *this) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
    double up = std::nextafter(d, std::numeric_limits<double>::infinity());
    while (std::isfinite(up) && from_double(up) <= *this) {
        d = up;
        up = std::nextafter(d, std::numeric_limits<double>::infinity());
    }
    return d;
}

double Rational::round_up() const { return -(-*this).round_down(); }

std::string Rational::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw Error(ErrorCode::OutOfDomain, "isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

}  // namespace mubound
