#include "doctest.h"

#include "mubound/cli.hpp"
#include "mubound/error.hpp"
#include "mubound/expr.hpp"
#include "mubound/extended.hpp"
#include "mubound/interval.hpp"
#include "mubound/polynomial.hpp"
#include "mubound/quadratic.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <random>

using namespace mubound;

namespace {

using Dec50 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<60>>;

Dec50 dec(const Rational& r) { return Dec50(r.num()) / Dec50(r.den()); }

Dec50 dec(const QuadraticNumber& x) {
    return dec(x.rational_part()) + dec(x.surd_coefficient()) * sqrt(Dec50(x.radicand()));
}

const QuadraticNumber kTty(Rational(539, 460), Rational(-1, 460), 42121);
const QuadraticNumber kTty2(Rational(5831, 8240), Rational(1, 8240), 60001);
const QuadraticNumber kTty3(Rational(1273, 1184), Rational(-1, 1184), 128689);

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("rational basics") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(-1, 3) < Rational(0));
    CHECK(Rational(17, 30).str() == "17/30");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK(Rational(1, 3).round_down() <= 1.0 / 3.0);
    CHECK(Rational(1, 3).round_up() >= 1.0 / 3.0);
    CHECK(Rational(1, 3).round_up() > Rational(1, 3).round_down());
    CHECK(Rational::from_double(0.75) == Rational(3, 4));
}

TEST_CASE("parse_exact") {
    CHECK(parse_exact("17/30") == Rational(17, 30));
    CHECK(parse_exact("0.76") == Rational(19, 25));
    CHECK(parse_exact("0.25") == Rational(1, 4));
    CHECK(parse_exact("-2") == Rational(-2));
    CHECK(parse_exact("1e-3") == Rational(1, 1000));
    CHECK(parse_exact("0.099") == Rational(99, 1000));
    CHECK(parse_exact("010/08") == Rational(5, 4));
    for (const char* bad : {"1/0", "", "abc", "1/2/3", "0.5.1", "1e", "/3"}) {
        CAPTURE(bad);
        try {
            parse_exact(bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
}

TEST_CASE("compare_boundary examples") {
    // 0.76 against 0.7255...: greater
    CHECK(compare_boundary(Rational(19, 25), kTty) > 0);
    CHECK(compare_boundary(Rational(1, 2), Rational(1, 2)) == 0);
    CHECK(compare_boundary(kTty2, Rational(42, 55)) < 0);
    CHECK(kTty < kTty3);
}

TEST_CASE("comparison agrees with 50 digit evaluation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(-40, 40), rad(2, 500);
    std::vector<QuadraticNumber> pts;
    for (int i = 0; i < 300; ++i) {
        int q = small(rng);
        pts.emplace_back(Rational(small(rng), 7), Rational(q, 11), BigInt(q == 0 ? 0 : (i % 3 == 0 ? 2 : rad(rng))));
    }
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
        const auto &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
        Dec50 da = dec(a), db = dec(b);
        int want = da < db ? -1 : (da > db ? 1 : 0);
        CHECK(QuadraticNumber::compare(a, b) == want);
        CHECK(QuadraticNumber::compare(b, a) == -want);
        if (a <= b && b <= c) CHECK(a <= c);
    }
}

TEST_CASE("enclose_boundary") {
    Interval seven = enclose_boundary(Rational(7, 10));
    CHECK(seven.contains(0.7));
    CHECK(seven.width() <= 2e-16);
    Interval t = enclose_boundary(kTty);
    CHECK(t.contains(static_cast<double>(dec(kTty))));
    CHECK(t.lo > 0.7255);
    CHECK(t.hi < 0.7256);
    CHECK(t.width() <= 1e-9);
    Interval t3 = enclose_boundary(kTty3);
    CHECK(t3.lo > 0.7721);
    CHECK(t3.hi < 0.7722);
    for (const auto& x : {kTty, kTty2, kTty3}) {
        Interval e = enclose_boundary(x, 30);
        CHECK(e.width() <= std::ldexp(1.0, -30));
        double v = static_cast<double>(dec(x));
        CHECK(e.contains(v));
    }
}

TEST_CASE("quadratic arithmetic") {
    QuadraticNumber s2(Rational(0), Rational(1), 2);
    CHECK(s2 * s2 == QuadraticNumber(2));
    CHECK((s2 + 1) * (s2 - 1) == QuadraticNumber(1));
    CHECK(QuadraticNumber(1) / (s2 + 1) == s2 - 1);
    auto [lo, hi] = s2.rational_bounds(40);
    CHECK(lo <= hi);
    CHECK(lo * lo < Rational(2));
    CHECK(hi * hi > Rational(2));
    Rational mid = rational_between(Rational(7, 10), kTty);
    CHECK(QuadraticNumber(Rational(7, 10)) < QuadraticNumber(mid));
    CHECK(QuadraticNumber(mid) < kTty);
}

TEST_CASE("interval arithmetic is outward rounded") {
    Interval a(0.1, 0.1), b(0.2, 0.2);
    Interval s = a + b;
    CHECK(s.lo <= 0.30000000000000004);
    CHECK(s.lo < s.hi);
    Interval third = Interval(1, 1) / Interval(3, 3);
    CHECK(third.lo < third.hi);
    Interval m = Interval(-1, 2) * Interval(3, 4);
    CHECK(m.lo == -4.0);
    CHECK(m.hi == 8.0);
    CHECK_THROWS(Interval(1, 1) / Interval(-1, 1));
}

TEST_CASE("enclose_rational_function examples") {
    RationalFunction f = parse_formula("3/(2-s)");
    Interval at_half = enclose_rational_function(f, Interval(0.5, 0.5));
    CHECK(at_half.contains(2.0));
    CHECK(at_half.width() <= 2 * std::numeric_limits<double>::epsilon() * 2);
    Interval cell = enclose_rational_function(f, Interval(0.5, 0.7));
    CHECK(cell.lo <= 2.0);
    CHECK(cell.hi >= Rational(30, 13).round_up());
    RationalFunction pole = parse_formula("1/(1-s)");
    try {
        enclose_rational_function(pole, Interval(0.999, 1.001));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DenominatorVanishes);
    }
}

TEST_CASE("enclosure soundness on random functions") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial num({Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng))});
        // denominator 10 + s^2 + b s stays positive on [-1, 1]
        Polynomial den({Rational(10), Rational(coef(rng)), Rational(1)});
        RationalFunction f(num, den);
        // keep x inside [-1, 1]
        int a = std::min(coef(rng), 8), w = 1 + std::abs(coef(rng));
        Rational lo(a, 10), hi(std::min(a + w, 9), 10);
        Interval x(lo.round_down(), hi.round_up());
        Interval e = enclose_rational_function(f, x);
        for (int k = 0; k <= 8; ++k) {
            Rational t = lo + (hi - lo) * Rational(k, 8);
            Rational v = f(t);
            CHECK(e.lo <= v.round_down());
            CHECK(v.round_up() <= e.hi);
        }
    }
}

TEST_CASE("polynomial and rational function normal form") {
    Polynomial p = Polynomial::linear(2, -1);
    CHECK(p(Rational(1, 2)) == Rational(0));
    CHECK(p.derivative() == Polynomial::constant(2));
    auto [q, r] = Polynomial::divmod(p * p + Polynomial::constant(1), p);
    CHECK(q == p);
    CHECK(r == Polynomial::constant(1));
    RationalFunction f(p * Polynomial::linear(1, 1), Polynomial::linear(1, 1) * Polynomial::constant(3));
    CHECK(f.same_function(RationalFunction(p, Polynomial::constant(3))));
    CHECK(parse_formula("15/(3+5s)")(Rational(7, 10)) == Rational(30, 13));
    CHECK(parse_formula("3/(n(1-2(n-1)(1-s)))", 6)(Rational(59, 60)) == Rational(3, 5));
    CHECK(parse_point("(539-sqrt(42121))/460") == kTty);
    CHECK(parse_point("1-1/(2n(n-1))", 6) == QuadraticNumber(Rational(59, 60)));
    CHECK_THROWS_AS(parse_formula("3/(2-"), Error);
}

TEST_CASE("extended reals") {
    ExtendedReal ninf = ExtendedReal::neg_inf();
    CHECK(ninf < ExtendedReal(Rational(-1000)));
    CHECK(ninf.str() == "-inf");
    CHECK(max(ninf, ExtendedReal(Rational(2))) == ExtendedReal(Rational(2)));
    CHECK(std::isinf(ninf.to_double()));
}

}  // TEST_SUITE
