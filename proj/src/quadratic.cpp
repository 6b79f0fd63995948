#include "mubound/quadratic.hpp"

#include "mubound/error.hpp"

#include <boost/integer/common_factor.hpp>

#include <ostream>
#include <sstream>

namespace mubound {

namespace {

constexpr unsigned kTrialLimit = 100000;

unsigned bit_length(const BigInt& n) {
    return n == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(n)) + 1u;
}

// Splits r = square^2 * rest with rest free of squares of primes <= kTrialLimit
// and not itself a perfect square.
void extract_square(BigInt& r, BigInt& square) {
    square = 1;
    BigInt rest = 1;
    for (unsigned f = 2; f <= kTrialLimit; f += (f == 2 ? 1 : 2)) {
        BigInt ff = BigInt(f) * f;
        if (ff > r) break;
        unsigned e = 0;
        while (r % f == 0) {
            r /= f;
            ++e;
        }
        for (unsigned i = 0; i < e / 2; ++i) square *= f;
        if (e % 2 == 1) rest *= f;
    }
    BigInt s = isqrt(r);
    if (s * s == r) {
        square *= s;
        r = 1;
    }
    r *= rest;
}

}  // namespace

int sign_of_surd(const Rational& u, const Rational& v, const BigInt& r) {
    if (v.is_zero() || r == 0) return u.sign();
    int sv = v.sign();
    int su = u.sign();
    if (su == 0 || su == sv) return sv;
    Rational lhs = u * u;
    Rational rhs = v * v * Rational(r);
    if (lhs > rhs) return su;
    if (lhs < rhs) return sv;
    return 0;
}

QuadraticNumber::QuadraticNumber(const Rational& p, const Rational& q, const BigInt& radicand)
    : p_(p), q_(q), r_(radicand) {
    if (r_ < 0) throw Error(ErrorCode::OutOfDomain, "negative radicand");
    if (q_.is_zero() || r_ == 0) {
        q_ = Rational();
        r_ = 0;
        return;
    }
    BigInt square;
    extract_square(r_, square);
    q_ *= Rational(square);
    if (r_ == 1) {
        p_ += q_;
        q_ = Rational();
        r_ = 0;
    }
}

int QuadraticNumber::sign() const { return sign_of_surd(p_, q_, r_); }

int QuadraticNumber::compare(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (a.is_rational() && b.is_rational()) {
        auto c = a.p_ <=> b.p_;
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    Rational u = a.p_ - b.p_;
    if (b.is_rational() || (!a.is_rational() && a.r_ == b.r_)) {
        return sign_of_surd(u, a.q_ - b.q_, a.is_rational() ? b.r_ : a.r_);
    }
    if (a.is_rational()) return sign_of_surd(u, -b.q_, b.r_);
    // u + v sqrt(r) + w sqrt(s) with distinct radicands; square once.
    const Rational& v = a.q_;
    const BigInt& r = a.r_;
    Rational w = -b.q_;
    const BigInt& s = b.r_;
    int sa = sign_of_surd(u, v, r);
    int sb = w.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    int d = sign_of_surd(u * u + v * v * Rational(r) - w * w * Rational(s), Rational(2) * u * v, r);
    if (d > 0) return sa;
    if (d < 0) return sb;
    return 0;
}

QuadraticNumber QuadraticNumber::operator-() const {
    QuadraticNumber x = *this;
    x.p_ = -x.p_;
    x.q_ = -x.q_;
    return x;
}

namespace {

const BigInt& shared_radicand(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (a.is_rational()) return b.radicand();
    if (b.is_rational() || a.radicand() == b.radicand()) return a.radicand();
    throw Error(ErrorCode::OutOfDomain, "arithmetic between distinct radicands");
}

QuadraticNumber make(const Rational& p, const Rational& q, const BigInt& r) {
    // Radicand is already reduced; skip re-normalization.
    return q.is_zero() ? QuadraticNumber(p) : QuadraticNumber(p, q, r);
}

}  // namespace

QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
    const BigInt& r = shared_radicand(a, b);
    return make(a.p_ + b.p_, a.q_ + b.q_, r);
}

QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
    const BigInt& r = shared_radicand(a, b);
    return make(a.p_ - b.p_, a.q_ - b.q_, r);
}

QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (a.is_rational()) return make(a.p_ * b.p_, a.p_ * b.q_, b.r_);
    if (b.is_rational()) return make(a.p_ * b.p_, a.q_ * b.p_, a.r_);
    const BigInt& r = shared_radicand(a, b);
    return make(a.p_ * b.p_ + a.q_ * b.q_ * Rational(r), a.p_ * b.q_ + a.q_ * b.p_, r);
}

QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (b.sign() == 0) throw Error(ErrorCode::DenominatorVanishes, "division by zero");
    if (b.is_rational()) return make(a.p_ / b.p_, a.q_ / b.p_, a.r_);
    const BigInt& r = shared_radicand(a, b);
    Rational norm = b.p_ * b.p_ - b.q_ * b.q_ * Rational(r);
    QuadraticNumber conj = make(b.p_, -b.q_, r);
    QuadraticNumber num = a * conj;
    return make(num.p_ / norm, num.q_ / norm, r);
}

std::pair<Rational, Rational> QuadraticNumber::rational_bounds(unsigned bits) const {
    if (is_rational()) return {p_, p_};
    BigInt scaled = r_ << (2 * bits);
    BigInt s = isqrt(scaled);
    BigInt scale = BigInt(1) << bits;
    Rational lo_root(s, scale);
    Rational hi_root(s + 1, scale);
    Rational a = p_ + q_ * lo_root;
    Rational b = p_ + q_ * hi_root;
    if (q_.sign() < 0) std::swap(a, b);
    return {a, b};
}

Interval QuadraticNumber::enclose(unsigned precision) const {
    if (is_rational()) return {p_.round_down(), p_.round_up()};
    Rational aq = q_.abs();
    int mag = static_cast<int>(bit_length(aq.num())) - static_cast<int>(bit_length(aq.den())) + 1;
    unsigned bits = precision + 1 + static_cast<unsigned>(std::max(mag, 0));
    auto [lo, hi] = rational_bounds(bits);
    return {lo.round_down(), hi.round_up()};
}

double QuadraticNumber::to_double() const { return enclose(60).mid(); }

std::string QuadraticNumber::str() const {
    if (is_rational()) return p_.str();
    BigInt d = boost::integer::lcm(p_.den(), q_.den());
    BigInt a = p_.num() * (d / p_.den());
    BigInt b = q_.num() * (d / q_.den());
    std::ostringstream os;
    bool wrap = d != 1;
    if (wrap) os << '(';
    if (a != 0) os << a.str() << (b < 0 ? " - " : " + ");
    else if (b < 0) os << '-';
    BigInt ab = b < 0 ? BigInt(-b) : b;
    if (ab != 1) os << ab.str() << '*';
    os << "sqrt(" << r_.str() << ')';
    if (wrap) os << ")/" << d.str();
    return os.str();
}

int compare_boundary(const BoundaryPoint& a, const BoundaryPoint& b) {
    return QuadraticNumber::compare(a, b);
}

Interval enclose_boundary(const BoundaryPoint& a, unsigned precision) { return a.enclose(precision); }

Rational rational_between(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (QuadraticNumber::compare(a, b) >= 0) throw Error(ErrorCode::OutOfDomain, "rational_between needs a < b");
    if (a.is_rational() && b.is_rational()) return (a.rational_part() + b.rational_part()) / Rational(2);
    for (unsigned bits = 16;; bits *= 2) {
        Rational a_hi = a.rational_bounds(bits).second;
        Rational b_lo = b.rational_bounds(bits).first;
        if (a_hi < b_lo) return (a_hi + b_lo) / Rational(2);
    }
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) { return os << x.str(); }

}  // namespace mubound
