#include "mubound/polynomial.hpp"

#include "mubound/error.hpp"

#include <boost/integer/common_factor.hpp>

#include <sstream>

namespace mubound {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QuadraticNumber Polynomial::operator()(const QuadraticNumber& x) const {
    if (x.is_rational()) return (*this)(x.rational_part());
    QuadraticNumber acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + QuadraticNumber(*it);
    return acc;
}

Interval Polynomial::operator()(const Interval& x) const {
    Interval acc = Interval::point(0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + Interval(it->round_down(), it->round_up());
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Rational(static_cast<std::int64_t>(i)) * c_[i]);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rational lead = leading();
    std::vector<Rational> m;
    m.reserve(c_.size());
    for (const auto& c : c_) m.push_back(c / lead);
    return Polynomial(std::move(m));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> m;
    m.reserve(c_.size());
    for (const auto& c : c_) m.push_back(-c);
    return Polynomial(std::move(m));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> s(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i < a.c_.size()) s[i] += a.c_[i];
        if (i < b.c_.size()) s[i] += b.c_[i];
    }
    return Polynomial(std::move(s));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(p));
}

Polynomial operator*(const Rational& s, const Polynomial& p) { return Polynomial::constant(s) * p; }

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    std::vector<Rational> quot(std::max(a.degree() - db + 1, 0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational f = rem[k + db] / b.leading();
        quot[k] = f;
        for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
    }
    rem.resize(std::max(db, 0));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) os << (c.sign() < 0 ? "-" : "");
        else os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool unit = a == Rational(1);
        if (i == 0 || !unit) os << a.str();
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial::divmod(num_, g).first;
            den_ = Polynomial::divmod(den_, g).first;
        }
    }
    // Scale to integer coefficients with a primitive denominator of positive leading sign.
    BigInt l = 1;
    for (const auto& c : num_.coefficients()) l = boost::integer::lcm(l, c.den());
    for (const auto& c : den_.coefficients()) l = boost::integer::lcm(l, c.den());
    BigInt g = 0;
    for (const auto& c : den_.coefficients()) g = boost::integer::gcd(g, BigInt((c * Rational(l)).num()));
    Rational scale = Rational(l) / Rational(g);
    if (den_.leading().sign() < 0) scale = -scale;
    num_ = scale * num_;
    den_ = scale * den_;
}

Rational RationalFunction::operator()(const Rational& x) const {
    Rational q = den_(x);
    if (q.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "pole at " + x.str());
    return num_(x) / q;
}

QuadraticNumber RationalFunction::operator()(const QuadraticNumber& x) const {
    QuadraticNumber q = den_(x);
    if (q.sign() == 0) throw Error(ErrorCode::DenominatorVanishes, "pole at " + x.str());
    return num_(x) / q;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator*(const Rational& s, const RationalFunction& f) {
    return RationalFunction(s * f.num_, f.den_);
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_.degree() == 0 && den_.leading() == Rational(1)) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

namespace {

std::vector<Interval> to_intervals(const Polynomial& p) {
    std::vector<Interval> out;
    for (const auto& c : p.coefficients()) out.emplace_back(c.round_down(), c.round_up());
    return out;
}

}  // namespace

RationalEnclosure::RationalEnclosure(const RationalFunction& f)
    : num_(to_intervals(f.num())),
      den_(to_intervals(f.den())),
      dnum_(to_intervals(f.num().derivative())),
      dden_(to_intervals(f.den().derivative())) {}

Interval RationalEnclosure::horner(const std::vector<Interval>& c, const Interval& x) {
    Interval acc = Interval::point(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Interval RationalEnclosure::derivative(const Interval& x) const {
    Interval q = horner(den_, x);
    if (q.contains_zero()) throw Error(ErrorCode::DenominatorVanishes, "denominator sign test inconclusive");
    Interval p = horner(num_, x);
    Interval top = horner(dnum_, x) * q - p * horner(dden_, x);
    return top / (q * q);
}

Interval RationalEnclosure::operator()(const Interval& x) const {
    Interval q = horner(den_, x);
    if (q.contains_zero()) throw Error(ErrorCode::DenominatorVanishes, "denominator sign test inconclusive");
    Interval natural = horner(num_, x) / q;
    if (x.is_point()) return natural;
    Interval m = Interval::point(x.mid());
    Interval fm = horner(num_, m) / horner(den_, m);
    Interval mean_value = fm + derivative(x) * (x - m);
    return intersect(natural, mean_value);
}

Interval enclose_rational_function(const RationalFunction& f, const Interval& x) {
    return RationalEnclosure(f)(x);
}

}  // namespace mubound
