#include "doctest.h"

#include "mubound/error.hpp"
#include "mubound/mu_bound.hpp"

#include <chrono>
#include <cstring>

using namespace mubound;

namespace {

constexpr auto U = HypothesisMode::Unconditional;
constexpr auto RH = HypothesisMode::RH;
constexpr auto LH = HypothesisMode::LH;
constexpr auto DH = HypothesisMode::DH;

ExtendedReal q(std::int64_t n, std::int64_t d = 1) { return ExtendedReal(Rational(n, d)); }

}  // namespace

TEST_SUITE("mu_bound") {

TEST_CASE("mu2 examples") {
    for (Rational theta : {Rational(1, 10), Rational(2, 15), Rational(9, 20)})
        CHECK(mu2(Rational(1, 2), theta, U) == ExtendedReal(Rational(1) - theta));
    CHECK(mu2(Rational(7, 10), Rational(2, 15), U) == q(1));
    Rational d(1, 100);
    CHECK(mu2(Rational(7, 10), Rational(2, 15) + d, U) == ExtendedReal(Rational(1) - Rational(9, 13) * d));
    CHECK(mu2(Rational(3, 5), Rational(1, 5), RH) == ExtendedReal::neg_inf());
    CHECK_THROWS_AS(mu2(Rational(1, 2), Rational(1), U), Error);
}

TEST_CASE("mu4 examples") {
    CHECK(mu4(Rational(7, 10), Rational(17, 30), U) == q(7, 12));
    for (auto mode : {U, DH, LH, RH})
        CHECK(mu4(Rational(1, 2), Rational(1, 5), mode) == ExtendedReal(Rational(2) - 3 * Rational(1, 5)));
    // printed LH energy value 50/9 at 3/4, not 6
    CHECK(mu4(Rational(3, 4), Rational(1, 2), LH) == q(25, 36));
}

TEST_CASE("mu_upper examples") {
    auto t0 = std::chrono::steady_clock::now();
    MuBoundResult r = mu_upper(Rational(17, 30), U);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(std::abs(r.upper - 7.0 / 12) <= 1e-9);
    REQUIRE(r.witness_sigma);
    CHECK(std::abs(*r.witness_sigma - 0.7) <= 1e-6);
    CHECK(r.active == ActiveMoment::L4);
    CHECK(r.lower <= r.upper);
    CHECK(secs < 1.0);

    MuBoundResult e = mu_upper(Rational(3, 5), U);
    CHECK(e.empty());
    CHECK(std::isinf(e.upper));
    CHECK(e.upper < 0);

    double rh = mu_upper(Rational(3, 10), RH).upper;
    CHECK(rh >= 0.7);
    CHECK(rh - 0.7 <= 1e-15);
    CHECK(std::abs(mu_upper(Rational(2, 5), LH, {.refined = false}).upper - 0.8) <= 1e-9);
    CHECK(mu_upper(Rational(2, 5), LH).upper <= 0.8 + 1e-9);

    Rational delta(1, 100);
    CHECK(std::abs(mu_upper(Rational(2, 15) + delta, U).upper - (1 - 9.0 / 1300)) <= 1e-6);

    CHECK_THROWS_AS(mu_upper(Rational(0), U), Error);
    CHECK_THROWS_AS(mu_upper(Rational(1, 2), U, {.tol = Rational(0)}), Error);
}

TEST_CASE("mu_upper invariants") {
    for (auto mode : {U, DH, LH, RH}) {
        for (int k = 1; k < 20; ++k) {
            MuBoundResult r = mu_upper(Rational(k, 20), mode);
            CAPTURE(k);
            if (r.empty()) {
                CHECK(std::isinf(r.upper));
                continue;
            }
            CHECK(r.lower <= r.upper);
            CHECK(r.upper - r.lower <= 1e-9);
        }
    }
}

TEST_CASE("mu_curve") {
    auto pts = mu_curve(Rational(1, 2), Rational(11, 20), 5, U);
    REQUIRE(pts.size() == 6);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(std::isfinite(pts[i].bound.upper));
        CHECK(pts[i].bound.upper == mu_upper(pts[i].theta, U).upper);
        if (i) CHECK(pts[i].bound.upper <= pts[i - 1].bound.upper);
    }
    auto rh = mu_curve(Rational(1, 20), Rational(19, 20), 18, RH);
    for (const auto& p : rh) {
        if (p.theta <= Rational(1, 2)) CHECK(p.bound.upper == doctest::Approx(1 - p.theta.to_double()).epsilon(1e-12));
        else CHECK(p.bound.empty());
    }
    auto tail = mu_curve(Rational(17, 30) + Rational(1, 1000), Rational(9, 10), 1, U);
    REQUIRE(tail.size() == 2);
    CHECK(tail[0].bound.empty());
    CHECK(tail[1].bound.empty());
    CHECK_THROWS_AS(mu_curve(Rational(1, 2), Rational(1, 3), 3, U), Error);
}

TEST_CASE("mu_curve output does not depend on the thread count") {
    auto one = mu_curve(Rational(1, 100), Rational(99, 100), 40, U, {}, 1);
    auto four = mu_curve(Rational(1, 100), Rational(99, 100), 40, U, {}, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].theta == four[i].theta);
        CHECK(std::memcmp(&one[i].bound.upper, &four[i].bound.upper, sizeof(double)) == 0);
        CHECK(one[i].bound.active == four[i].bound.active);
    }
}

TEST_CASE("gap_exponent") {
    CHECK(std::abs(gap_exponent(Rational(17, 30), U) - 1.0 / 60) <= 1e-9);
    CHECK(gap_exponent(Rational(3, 10), RH) == doctest::Approx(0.4).epsilon(1e-12));
    double g = gap_exponent(Rational(7, 10), U);
    CHECK(std::isinf(g));
    CHECK(g < 0);
}

TEST_CASE("bound at one half comes from the exact range") {
    // min(1 - theta, 2 - 3 theta) = 1 - theta there
    for (auto mode : {U, DH, LH, RH}) {
        MuBoundResult r = mu_upper(Rational(1, 10), mode);
        CHECK(r.upper >= 0.9 - 1e-12);
    }
}

}  // TEST_SUITE
