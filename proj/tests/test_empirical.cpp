#include "doctest.h"

#include "mubound/empirical.hpp"
#include "mubound/error.hpp"
#include "mubound/verify.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace mubound;

namespace {

double trial_lambda(std::uint64_t n) {
    if (n < 2) return 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
    }
    return std::log(static_cast<double>(n));
}

std::string temp_file(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / ("mubound_test_" + name);
    std::ofstream(path) << body;
    return path.string();
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error");
    return ErrorCode::Io;
}

const LambdaSieve& small_sieve() {
    static const LambdaSieve s = LambdaSieve::build(200'000);
    return s;
}

const ZeroSet& zeros() {
    static const ZeroSet z = load_zeros(default_zeros_path());
    return z;
}

std::uint64_t brute_energy(const std::vector<double>& g) {
    std::vector<double> s;
    for (double x : g) {
        s.push_back(x);
        s.push_back(-x);
    }
    std::uint64_t c = 0;
    for (double a : s)
        for (double b : s)
            for (double d : s)
                for (double e : s)
                    if (std::abs(a + b - d - e) <= 1) ++c;
    return c;
}

}  // namespace

TEST_SUITE("empirical") {

TEST_CASE("lambda values") {
    const auto& s = small_sieve();
    CHECK(s.lambda(8) == doctest::Approx(std::log(2.0)));
    CHECK(s.lambda(12) == 0);
    CHECK(s.lambda(1) == 0);
    CHECK(s.is_prime_power(49));
    CHECK(!s.is_prime_power(50));
    CHECK(code_of([&] { s.lambda(0); }) == ErrorCode::OutOfRange);
    CHECK(code_of([&] { s.lambda(200'001); }) == ErrorCode::OutOfRange);
}

TEST_CASE("sieve matches trial division") {
    const auto& s = small_sieve();
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        CAPTURE(n);
        CHECK(s.lambda(n) == doctest::Approx(trial_lambda(n)).epsilon(1e-15));
    }
}

TEST_CASE("psi") {
    double direct = 0;
    for (std::uint64_t n = 2; n <= 100; ++n) direct += trial_lambda(n);
    CHECK(std::abs(small_sieve().psi(100) - direct) <= 1e-6);
    CHECK(small_sieve().psi(100) == doctest::Approx(94.045).epsilon(1e-5));
    CHECK(small_sieve().psi(0) == 0);
    double run = 0;
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        run += trial_lambda(n);
        CHECK(small_sieve().psi(n) == doctest::Approx(run).epsilon(1e-13));
    }
}

TEST_CASE("sieve limits") {
    CHECK(code_of([] { LambdaSieve::build(1); }) == ErrorCode::OutOfDomain);
    CHECK(code_of([] { LambdaSieve::build(1000, 100); }) == ErrorCode::LimitTooLarge);
    CHECK(code_of([] { LambdaSieve::build(kMaxSieveLimit + 1, kMaxSieveLimit * 2); }) == ErrorCode::LimitTooLarge);
    LambdaSieve two = LambdaSieve::build(2);
    CHECK(two.psi(2) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("interval_sum examples") {
    const auto& s = small_sieve();
    double want = std::log(11.0) + std::log(13.0) + std::log(2.0) + std::log(17.0) + std::log(19.0);
    CHECK(interval_sum(s, 10, 10) == doctest::Approx(want).epsilon(1e-14));
    CHECK(interval_sum(s, 1234.5, 0) == 0);
    CHECK(interval_sum(s, 0, 200'000) == s.psi(200'000));
    CHECK(code_of([&] { interval_sum(s, 199'999, 2); }) == ErrorCode::OutOfRange);
    CHECK(code_of([&] { interval_sum(s, -1, 2); }) == ErrorCode::OutOfRange);
}

TEST_CASE("interval_sum is additive") {
    const auto& s = small_sieve();
    for (int i = 0; i < 2000; ++i) {
        double x = 37.0 * i + 0.5, y1 = 1 + (i * 7919) % 3000, y2 = 1 + (i * 104729) % 5000;
        double whole = interval_sum(s, x, y1 + y2);
        double parts = interval_sum(s, x, y1) + interval_sum(s, x + y1, y2);
        CHECK(std::abs(whole - parts) <= 1e-9 * std::max(1.0, whole));
    }
}

TEST_CASE("cache round trip") {
    LambdaSieve s = LambdaSieve::build(50'000);
    auto path = (std::filesystem::temp_directory_path() / "mubound_test_sieve.lams").string();
    s.save(path);
    LambdaSieve back = LambdaSieve::load(path);
    CHECK(back.limit() == s.limit());
    for (std::uint64_t n = 1; n <= 50'000; n += 7) {
        CHECK(back.psi(n) == s.psi(n));
        CHECK(back.lambda(n) == s.lambda(n));
    }
    std::ifstream raw(path, std::ios::binary);
    char magic[5] = {};
    raw.read(magic, 5);
    CHECK(std::string(magic, 4) == "LAMS");
    CHECK(magic[4] == 1);
    CHECK(std::filesystem::file_size(path) == 5 + 8 + 8 * (50'000 + 1));
    auto bad = temp_file("bad.lams", "NOPE");
    CHECK(code_of([&] { LambdaSieve::load(bad); }) == ErrorCode::Io);
    std::filesystem::remove(path);
}

TEST_CASE("exceptional_measure examples") {
    const auto& s = small_sieve();
    auto regular = exceptional_measure(s, 10'000, Rational(7, 10), Rational(1, 2));
    CHECK(regular.measure_estimate == 0);
    CHECK(regular.sample_count == 10'000);
    CHECK(!regular.sampled);
    auto all = exceptional_measure(s, 10'000, Rational(7, 10), Rational(0));
    CHECK(all.measure_estimate == 10'000);
    auto sparse = exceptional_measure(s, 10'000, Rational(1, 5), Rational(9, 10));
    CHECK(sparse.measure_estimate > 0);
    CHECK(sparse.measure_estimate <= 10'000);
    auto coarse = exceptional_measure(s, 10'000, Rational(1, 5), Rational(9, 10), 4);
    CHECK(coarse.sampled);
    CHECK(coarse.sample_count == 2500);
    CHECK(coarse.measure_estimate == 4.0 * coarse.exceptional_count);
    CHECK(code_of([&] { exceptional_measure(s, 150'000, Rational(1, 2), Rational(1, 2)); }) == ErrorCode::OutOfRange);
}

TEST_CASE("exceptional_measure matches a naive rescan") {
    const auto& s = small_sieve();
    for (auto [X, theta, delta] : {std::tuple{2000, Rational(1, 3), Rational(1, 2)},
                                   std::tuple{5000, Rational(1, 4), Rational(3, 4)},
                                   std::tuple{10000, Rational(2, 5), Rational(1, 3)}}) {
        std::uint64_t count = 0;
        for (int x = X; x < 2 * X; ++x) {
            double y = std::pow(static_cast<double>(x), theta.to_double());
            double sum = 0;
            for (auto n = static_cast<std::uint64_t>(x) + 1; n <= static_cast<std::uint64_t>(x + y); ++n)
                sum += trial_lambda(n);
            if (std::abs(sum - y) >= delta.to_double() * y) ++count;
        }
        auto scan = exceptional_measure(s, X, theta, delta);
        CHECK(scan.exceptional_count == count);
    }
}

TEST_CASE("load_zeros") {
    auto ok = temp_file("ok.txt", "14.134725\n21.022040\n25.010858\n");
    ZeroSet z = load_zeros(ok);
    CHECK(z.size() == 3);
    CHECK(z.max_T == doctest::Approx(25.01).epsilon(1e-3));
    CHECK(z.source == ok);
    CHECK(z.count_up_to(21.5) == 2);

    auto order = temp_file("order.txt", "21.0\n14.1\n");
    try {
        load_zeros(order);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OrderError);
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }
    auto junk = temp_file("junk.txt", "14.1\n\n# note\n2x.0\n");
    try {
        load_zeros(junk);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find(":4") != std::string::npos);
    }
    CHECK(code_of([] { parse_zeros("-3\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { load_zeros("/nonexistent/zeros.txt"); }) == ErrorCode::Io);
}

TEST_CASE("bundled dataset") {
    const ZeroSet& z = zeros();
    CHECK(z.size() == 6000);
    CHECK(z.ordinates.front() == doctest::Approx(14.134725142));
    CHECK(z.count_up_to(100) == 29);
    // 28.13 without the constant 7/8
    CHECK(riemann_von_mangoldt(100) == doctest::Approx(29.0023).epsilon(1e-4));
    CHECK(riemann_von_mangoldt(100) - 0.875 == doctest::Approx(28.13).epsilon(1e-3));
}

TEST_CASE("s_interval_sum") {
    const ZeroSet& z = zeros();
    CHECK(s_interval_sum(z, 1e5, 100, 1000, SigmaRange{0.6, 0.9, true, false}) == 0);
    CHECK(!SigmaRange{0.5, 0.9, true, false}.contains(0.5));
    CHECK(SigmaRange{}.contains(0.5));

    double x = 1e5, theta = 0.6, tau = std::pow(x, 1 - theta), T = 1000;
    LambdaSieve s = LambdaSieve::build(110'000);
    double direct = interval_sum(s, x, x / tau) - x / tau;
    double zero_sum = s_interval_sum(z, x, tau, T);
    double scale = x * std::log(x) * std::log(x) / T;
    // the zero sum approximates minus the prime count deviation
    CHECK(std::abs(direct + zero_sum) <= 2 * scale);
    CHECK(code_of([&] { s_interval_sum(z, x, tau, 1e6); }) == ErrorCode::InsufficientZeros);
}

TEST_CASE("explicit formula") {
    const ZeroSet& z = zeros();
    for (double x : {10.5, 1000.0}) {
        double trivial = x - std::log(2 * M_PI) - 0.5 * std::log(1 - 1 / (x * x));
        CHECK(explicit_formula_psi(z, x, 10) == doctest::Approx(trivial).epsilon(1e-15));
    }
    LambdaSieve s = LambdaSieve::build(20'000);
    CHECK(std::abs(explicit_formula_psi(z, 1000, 1000) - s.psi(1000)) <= 5);
    double err_big = std::abs(explicit_formula_psi(z, 1e4, 5000) - s.psi(10'000));
    double err_small = std::abs(explicit_formula_psi(z, 1e4, 50) - s.psi(10'000));
    CHECK(err_big <= err_small);
    for (double x : {1e3, 1e4})
        for (double T : {1e2, 1e3}) {
            double err = std::abs(explicit_formula_psi(z, x, T) - s.psi(static_cast<std::uint64_t>(x)));
            CHECK(err <= 10 * x * std::log(x) * std::log(x) / T);
        }
    CHECK(code_of([&] { explicit_formula_psi(z, 2, 100); }) == ErrorCode::OutOfDomain);
    CHECK(code_of([&] { explicit_formula_psi(z, 100, 1e5); }) == ErrorCode::InsufficientZeros);
}

TEST_CASE("additive energy") {
    CHECK(additive_energy(parse_zeros(""), 100) == 0);
    CHECK(additive_energy(parse_zeros("14.13\n"), 100) == 6);
    const ZeroSet& z = zeros();
    std::vector<double> first(z.ordinates.begin(), z.ordinates.begin() + 30);
    for (std::size_t m = 1; m <= first.size(); ++m) {
        CAPTURE(m);
        std::vector<double> prefix(first.begin(), first.begin() + m);
        CHECK(additive_energy(z, prefix.back(), 5000) == brute_energy(prefix));
    }
    double a = static_cast<double>(additive_energy(z, 100)), b = static_cast<double>(additive_energy(z, 200));
    CHECK(b / a > 8.0 / 16);
    CHECK(code_of([&] { additive_energy(z, 1000, 10); }) == ErrorCode::TooManyZeros);
}

TEST_CASE("moment statistic") {
    MomentEstimate e = moment_statistic(parse_zeros(""), 100'000, Rational(3, 5), 1, 50);
    CHECK(e.mean == 0);
    const ZeroSet& z = zeros();
    MomentEstimate m1 = moment_statistic(z, 100'000, Rational(3, 5), 1, 1000);
    MomentEstimate m2 = moment_statistic(z, 100'000, Rational(3, 5), 2, 1000);
    CHECK(m1.mean > 0);
    CHECK(std::isfinite(m1.mean));
    CHECK(m2.mean >= m1.mean * m1.mean - 3 * m2.standard_error);
    CHECK(m1.samples == 1000);
    CHECK(m1.T == doctest::Approx(std::pow(1e5, 0.4)));
    MomentEstimate again = moment_statistic(z, 100'000, Rational(3, 5), 1, 1000);
    CHECK(again.mean == m1.mean);
    CHECK(moment_statistic(z, 100'000, Rational(3, 5), 1, 1000, 99).mean != m1.mean);
}

}  // TEST_SUITE
