#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace mubound {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);
    Rational(const BigInt& n, const BigInt& d);
    explicit Rational(const BigInt& n) : v_(n) {}

    /// Exact binary value of a finite double.
    static Rational from_double(double x);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }
    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational reciprocal() const;

    /// Round-to-nearest conversion (not certified; use enclosures for bounds).
    double to_double() const;
    /// Largest double <= value and smallest double >= value.
    double round_down() const;
    double round_up() const;

    std::string str() const;

    Rational operator-() const { return Rational(Raw{}, -v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    struct Raw {};
    Rational(Raw, boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Integer square root: floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

}  // namespace mubound
