#pragma once

#include "mubound/interval.hpp"
#include "mubound/quadratic.hpp"
#include "mubound/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace mubound {

/// Univariate polynomial in sigma with exact rational coefficients,
/// stored lowest degree first with no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial identity() { return Polynomial({Rational(0), Rational(1)}); }
    /// a*sigma + b
    static Polynomial linear(const Rational& a, const Rational& b) { return Polynomial({b, a}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(int i) const;
    Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

    Rational operator()(const Rational& x) const;
    QuadraticNumber operator()(const QuadraticNumber& x) const;
    Interval operator()(const Interval& x) const;

    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division: a = q*b + r, deg r < deg b.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Monic greatest common divisor (zero if both are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    /// Human-readable form in the variable name given, e.g. "24 - 30s".
    std::string str(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// P(sigma)/Q(sigma), reduced so that P and Q share no polynomial factor.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction constant(const Rational& c) {
        return RationalFunction(Polynomial::constant(c), Polynomial::constant(1));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    /// Exact value; throws DenominatorVanishes at a pole.
    Rational operator()(const Rational& x) const;
    QuadraticNumber operator()(const QuadraticNumber& x) const;

    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const Rational& s, const RationalFunction& f);

    /// Mathematical equality of the two functions (cross-multiplication).
    bool same_function(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

    std::string str(const std::string& var = "s") const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Interval evaluator for a fixed rational function. Combines natural Horner
/// evaluation with the mean-value form, which is quadratically tight as the
/// argument interval shrinks.
class RationalEnclosure {
public:
    RationalEnclosure() = default;
    explicit RationalEnclosure(const RationalFunction& f);

    /// Enclosure of {f(t) : t in x}; DenominatorVanishes if Q(x) contains zero.
    Interval operator()(const Interval& x) const;
    /// Enclosure of {f'(t) : t in x}.
    Interval derivative(const Interval& x) const;

private:
    static Interval horner(const std::vector<Interval>& c, const Interval& x);
    std::vector<Interval> num_, den_, dnum_, dden_;
};

/// Enclosure of {f(t) : t in x} (outward rounded).
Interval enclose_rational_function(const RationalFunction& f, const Interval& x);

}  // namespace mubound
