#include "doctest.h"

#include "mubound/error.hpp"
#include "mubound/expr.hpp"
#include "mubound/piecewise.hpp"
#include "mubound/tables.hpp"
#include "mubound/verify.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace mubound;

namespace {

const ExtendedReal kNegInf = ExtendedReal::neg_inf();

ExtendedReal at(HypothesisMode m, const Rational& s) { return evaluate_upper(a_table(m), s); }

}  // namespace

TEST_SUITE("tables") {

TEST_CASE("a_table examples") {
    CHECK(at(HypothesisMode::Unconditional, Rational(7, 10)) == ExtendedReal(Rational(30, 13)));
    CHECK(at(HypothesisMode::RH, Rational(3, 5)) == kNegInf);
    CHECK(at(HypothesisMode::DH, Rational(3, 5)) == ExtendedReal(Rational(2)));
    CHECK(at(HypothesisMode::Unconditional, Rational(3, 5)) == ExtendedReal(Rational(15, 7)));
    CHECK(at(HypothesisMode::LH, Rational(7, 10)) == ExtendedReal(Rational(2)));
    CHECK(at(HypothesisMode::LH, Rational(4, 5)) == ExtendedReal(Rational(0)));
    CHECK(at(HypothesisMode::RH, Rational(1, 2)) == ExtendedReal(Rational(2)));
}

TEST_CASE("astar_table examples") {
    auto u = astar_table(HypothesisMode::Unconditional);
    CHECK(evaluate_upper(u, Rational(7, 10)) == ExtendedReal(Rational(235, 39)));
    CHECK(evaluate_upper(u, Rational(9, 10)) == ExtendedReal(Rational(9, 2)));
    CHECK(evaluate_upper(u, Rational(1, 2)) == ExtendedReal(Rational(6)));
    CHECK(evaluate_upper(astar_table(HypothesisMode::RH), Rational(3, 5)) == kNegInf);
    // LH: the printed energy row at 3/4 is below 3 A_LH = 6
    CHECK(evaluate_upper(astar_table(HypothesisMode::LH), Rational(3, 4)) == ExtendedReal(Rational(50, 9)));
}

TEST_CASE("pintz_piece") {
    Piece p6 = pintz_piece(6);
    CHECK(p6.lo == BoundaryPoint(Rational(59, 60)));
    CHECK(p6.hi == BoundaryPoint(Rational(83, 84)));
    CHECK(p6.value_at(Rational(59, 60)) == ExtendedReal(Rational(3, 5)));
    CHECK(p6.formula->same_function(parse_formula("3/(6(1-10(1-s)))")));
    CHECK(pintz_piece(7).lo == p6.hi);
    try {
        pintz_piece(5);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidFamilyIndex);
    }
    CHECK(sigma_cap() == Rational(8319, 8320));
    CHECK(sigma_cap(6) == Rational(83, 84));
}

TEST_CASE("coverage and validation report") {
    auto reports = validate_tables();
    CHECK(reports.size() == 8);
    for (const auto& r : reports) {
        CAPTURE(mode_name(r.mode));
        CAPTURE(r.which);
        CHECK(r.coverage_ok);
        CHECK(r.lo == BoundaryPoint(Rational(0)));
        CHECK(r.cap == BoundaryPoint(sigma_cap()));
        if (r.mode == HypothesisMode::RH) CHECK(r.finite_until == BoundaryPoint(Rational(1, 2)));
        else CHECK(r.finite_until == r.cap);
    }
    const auto& ua = reports.front();
    REQUIRE(ua.mode == HypothesisMode::Unconditional);
    REQUIRE(ua.which == "A");
    bool seen_jump = false, seen_junction = false;
    for (const auto& b : ua.breakpoints) {
        if (b.at == BoundaryPoint(Rational(59, 60))) {
            seen_jump = true;
            CHECK(b.left == ExtendedReal(Rational(9, 13)));
            CHECK(b.right == ExtendedReal(Rational(3, 5)));
            CHECK(b.jump == doctest::Approx(-6.0 / 65).epsilon(1e-15));
        }
        if (b.at == BoundaryPoint(Rational(7, 10))) {
            seen_junction = true;
            CHECK(b.left == b.right);
        }
    }
    CHECK(seen_jump);
    CHECK(seen_junction);
}

TEST_CASE("energy table never exceeds three times the density table") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::int64_t> num(0, 999'999);
    for (auto mode : kAllModes) {
        const TableSet& t = TableSet::get(mode);
        PiecewiseBound three = scale(t.a, Rational(3));
        for (int i = 0; i < 10000; ++i) {
            BoundaryPoint s(sigma_cap() * Rational(num(rng), 1'000'000));
            CHECK(evaluate_upper(t.astar, s) <= evaluate_upper(three, s));
        }
    }
}

TEST_CASE("supremum of the unconditional table is 30/13") {
    PiecewiseBound a = a_table(HypothesisMode::Unconditional);
    std::vector<SupCell> cells;
    std::vector<SupCandidate> cands;
    for (const auto& p : a.pieces()) {
        cells.push_back({p.lo, p.hi, {ObjectiveTerm(*p.formula)}});
        cands.push_back({p.lo, evaluate_upper(a, p.lo), 0});
    }
    SupOptions opts;
    opts.tol = Rational(1, 1'000'000'000'000);
    SupResult r = certified_sup(cells, cands, opts);
    CHECK(std::abs(r.upper - 30.0 / 13) <= 1e-12);
    CHECK(r.lower <= r.upper);
    REQUIRE(r.witness_exact);
    CHECK(*r.witness_exact == BoundaryPoint(Rational(7, 10)));
}

TEST_CASE("regions stay below the cap for thresholds >= 1") {
    for (auto mode : kAllModes) {
        auto region = feasible_region(a_table(mode), Rational(1));
        for (const auto& iv : region) CHECK(iv.hi < BoundaryPoint(Rational(99, 100)));
    }
}

TEST_CASE("transcription matches the committed file") {
    std::ifstream in(default_data_dir() + "/tables.txt");
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == transcription());
    CHECK(transcription_checksum(ss.str()) == transcription_checksum(transcription()));
    CHECK(a_rows().size() == 23);
    CHECK(astar_rows().size() == 13);
    CHECK(transcription_checksum("# comment\n\nx\n") == transcription_checksum("x\n"));
    CHECK(transcription_checksum("x\n") != transcription_checksum("y\n"));
}

TEST_CASE("every row re-parses to its encoded form") {
    for (const auto* rows : {&a_rows(), &astar_rows()}) {
        for (const auto& row : *rows) {
            CAPTURE(row.line());
            std::optional<std::int64_t> n;
            if (row.family) n = 6;
            TableRow back = parse_table_row(row.line(), n);
            CHECK(back.table == row.table);
            CHECK(back.reference == row.reference);
            CHECK(back.lo_closed == row.lo_closed);
            CHECK(back.hi_closed == row.hi_closed);
            if (row.family) {
                Piece p = pintz_piece(6);
                CHECK(back.lo == p.lo);
                CHECK(back.formula.same_function(*p.formula));
            } else {
                CHECK(back.lo == row.lo);
                CHECK(back.hi == row.hi);
                CHECK(back.formula.same_function(row.formula));
            }
        }
    }
    CHECK_THROWS_AS(parse_table_row("A | nonsense | 1 | x"), Error);
}

TEST_CASE("mode names") {
    CHECK(parse_mode("RH") == HypothesisMode::RH);
    CHECK(parse_mode("unconditional") == HypothesisMode::Unconditional);
    CHECK(std::string(mode_name(HypothesisMode::LH)) == "lh");
    CHECK_THROWS_AS(parse_mode("gh"), Error);
}

}  // TEST_SUITE
