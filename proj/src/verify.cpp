#include "mubound/verify.hpp"

#include "mubound/empirical.hpp"
#include "mubound/error.hpp"
#include "mubound/mu_bound.hpp"

#include "json.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#ifndef MUBOUND_DATA_DIR
#define MUBOUND_DATA_DIR "data"
#endif

namespace mubound {

std::string default_data_dir() {
    if (const char* env = std::getenv("MUBOUND_DATA"); env && *env) return env;
    return MUBOUND_DATA_DIR;
}

std::string default_zeros_path() {
    if (const char* env = std::getenv("MUBOUND_ZEROS"); env && *env) return env;
    return default_data_dir() + "/zeros_6000.txt";
}

struct ClaimContext {
    VerifyConfig config;
    std::map<std::pair<int, bool>, std::vector<CurvePoint>> curves;
    double unconditional_curve_seconds = 0;
    std::unique_ptr<LambdaSieve> sieve;
    std::unique_ptr<ZeroSet> zeros;

    // 1000-point grid theta = k/1001 used by the structural claims.
    const std::vector<CurvePoint>& curve(HypothesisMode mode, bool refined) {
        auto key = std::make_pair(static_cast<int>(mode), refined);
        auto it = curves.find(key);
        if (it != curves.end()) return it->second;
        MuOptions o;
        o.refined = refined;
        auto t0 = std::chrono::steady_clock::now();
        auto c = mu_curve(Rational(1, 1001), Rational(1000, 1001), 999, mode, o, config.threads);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (mode == HypothesisMode::Unconditional && refined) unconditional_curve_seconds = secs;
        return curves.emplace(key, std::move(c)).first->second;
    }
    const LambdaSieve& small_sieve() {
        if (!sieve) sieve = std::make_unique<LambdaSieve>(LambdaSieve::build(40000));
        return *sieve;
    }
    const ZeroSet& zero_set() {
        if (!zeros) zeros = std::make_unique<ZeroSet>(load_zeros(config.zeros_path));
        return *zeros;
    }
};

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    if (v == kNegInf) return "-inf";
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

double slack_tol() { return 1e-9; }

// v <= bound + slack, treating -inf as below everything.
bool below(double v, double bound, double slack) { return v == kNegInf || v <= bound + slack; }

MuBoundResult mu(const Rational& theta, HypothesisMode mode, bool refined = true) {
    MuOptions o;
    o.refined = refined;
    return mu_upper(theta, mode, o);
}

// Grid theta = k/den for k in [k0, k1].
std::vector<Rational> grid(std::int64_t k0, std::int64_t k1, std::int64_t den) {
    std::vector<Rational> g;
    for (std::int64_t k = k0; k <= k1; ++k) g.emplace_back(k, den);
    return g;
}

// Tracks the worst case over a grid for the computed column.
struct Worst {
    double value = kNegInf;
    std::string where;
    bool ok = true;
    void fail(const std::string& at) {
        if (ok) where = at;
        ok = false;
    }
    void consider(double v, const std::string& at) {
        if (v > value) {
            value = v;
            if (ok) where = at;
        }
    }
};

double trial_lambda(std::uint64_t n) {
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
    }
    return n >= 2 ? std::log(static_cast<double>(n)) : 0.0;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorCode::Io, "cannot read " + path);
    std::stringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

std::vector<Claim> build_claims() {
    std::vector<Claim> v;
    auto add = [&v](std::string id, int crit, std::string desc, std::string quote, std::string tol,
                    std::function<void(ClaimContext&, ClaimResult&)> f) {
        v.push_back({std::move(id), crit, std::move(desc), std::move(quote), std::move(tol), std::move(f)});
    };

    // 1
    add("mu-17-30", 1, "refined unconditional bound at theta = 17/30", "mu(17/30) <= 7/12",
        "1e-9 (value), 1e-6 (witness), < 1 s",
        [](ClaimContext&, ClaimResult& r) {
            auto t0 = std::chrono::steady_clock::now();
            MuBoundResult m = mu(Rational(17, 30), HypothesisMode::Unconditional);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            double target = Rational(7, 12).to_double();
            double w = m.witness_sigma.value_or(kNegInf);
            r.expected = "upper 7/12, witness 7/10, active L4";
            r.computed = "upper " + fmt(m.upper) + ", witness " + fmt(w) + ", active " + moment_name(m.active) +
                         ", " + fmt(secs) + " s";
            r.pass = std::fabs(m.upper - target) <= 1e-9 && std::fabs(w - 0.7) <= 1e-6 &&
                     m.active == ActiveMoment::L4 && secs < 1.0;
        });

    // 2
    add("mu-2-15-delta", 2, "unconditional bound just above theta = 2/15", "mu(2/15 + D) <= 1 - 9/13 D", "1e-6",
        [](ClaimContext&, ClaimResult& r) {
            r.pass = true;
            for (const Rational& d : {Rational(1, 100), Rational(1, 1000)}) {
                MuBoundResult m = mu(Rational(2, 15) + d, HypothesisMode::Unconditional);
                double target = (Rational(1) - Rational(9, 13) * d).to_double();
                r.expected += (r.expected.empty() ? "" : "; ") + fmt(target);
                r.computed += (r.computed.empty() ? "" : "; ") + fmt(m.upper);
                r.pass = r.pass && std::fabs(m.upper - target) <= 1e-6;
            }
        });

    // 3
    add("rh-below-half", 3, "RH bound equals 1 - theta", "mu(theta) <= 1 - theta for 0 < theta <= 1/2", "1e-12",
        [](ClaimContext&, ClaimResult& r) {
            double worst = 0;
            for (const Rational& t : grid(1, 5, 10)) {
                double err = std::fabs(mu(t, HypothesisMode::RH).upper - (Rational(1) - t).to_double());
                if (!(err <= worst)) worst = err;  // NaN and -inf both count
            }
            r.expected = "1 - theta at 0.1, ..., 0.5";
            r.computed = "max deviation " + fmt(worst);
            r.pass = worst <= 1e-12;
        });
    add("rh-above-half", 3, "RH bound is empty above 1/2", "mu(theta) = -inf for 1/2 < theta <= 1", "exact",
        [](ClaimContext&, ClaimResult& r) {
            r.expected = "-inf at 0.51, 0.7, 0.9";
            r.pass = true;
            for (const Rational& t : {Rational(51, 100), Rational(7, 10), Rational(9, 10)}) {
                MuBoundResult m = mu(t, HypothesisMode::RH);
                r.computed += (r.computed.empty() ? "" : ", ") + fmt(m.upper);
                r.pass = r.pass && m.empty();
            }
        });

    // 4
    add("lh-l2-form", 4, "LH second-moment bound on a 50-point grid in (0, 1/2]", "mu(theta) <= 1 - theta/2",
        "1e-9", [](ClaimContext&, ClaimResult& r) {
            double worst = 0;
            for (const Rational& t : grid(1, 50, 100)) {
                double err =
                    std::fabs(mu(t, HypothesisMode::LH, false).upper - (Rational(1) - t / Rational(2)).to_double());
                if (!(err <= worst)) worst = err;
            }
            r.expected = "1 - theta/2";
            r.computed = "max deviation " + fmt(worst);
            r.pass = worst <= 1e-9;
        });
    add("lh-refined-le", 4, "refined LH bound never exceeds 1 - theta/2", "mu(theta) <= 1 - theta/2", "+1e-9",
        [](ClaimContext&, ClaimResult& r) {
            Worst w;
            for (const Rational& t : grid(1, 50, 100)) {
                double excess = mu(t, HypothesisMode::LH).upper - (Rational(1) - t / Rational(2)).to_double();
                w.consider(excess, t.str());
            }
            r.expected = "excess <= 1e-9";
            r.computed = "max excess " + fmt(w.value) + " at " + w.where;
            r.pass = w.value <= slack_tol();
        });
    add("lh-above-half", 4, "LH bound is empty above 1/2", "mu(theta) = -inf for 1/2 < theta <= 1", "exact",
        [](ClaimContext&, ClaimResult& r) {
            r.expected = "-inf at 0.51..0.99 (both moment variants)";
            r.pass = true;
            for (const Rational& t : grid(51, 99, 100))
                for (bool refined : {true, false})
                    if (!mu(t, HypothesisMode::LH, refined).empty()) {
                        r.pass = false;
                        r.computed = "finite at " + t.str();
                    }
            if (r.pass) r.computed = "all -inf";
        });

    // 5
    add("dh-crude", 5, "DH bound on a 50-point grid in (0, 1/2]", "mu(theta) <= 1 - theta/12", "+1e-9",
        [](ClaimContext&, ClaimResult& r) {
            Worst w;
            for (const Rational& t : grid(1, 50, 100))
                for (bool refined : {true, false}) {
                    double excess = mu(t, HypothesisMode::DH, refined).upper - (Rational(1) - t / Rational(12)).to_double();
                    w.consider(excess, t.str());
                }
            r.expected = "excess <= 1e-9";
            r.computed = "max excess " + fmt(w.value) + " at " + w.where;
            r.pass = w.value <= slack_tol();
        });
    add("dh-above-half", 5, "DH bound is empty above 1/2", "mu(theta) = -inf for 1/2 < theta <= 1", "exact",
        [](ClaimContext&, ClaimResult& r) {
            r.expected = "-inf at 0.51..0.99";
            r.pass = true;
            for (const Rational& t : grid(51, 99, 100))
                if (!mu(t, HypothesisMode::DH).empty()) {
                    r.pass = false;
                    r.computed = "finite at " + t.str();
                }
            if (r.pass) r.computed = "all -inf";
        });
    add("dh-pintz-sigma", 5, "DH feasible region at theta = 1/1000 stays below 23/24",
        "ensures that sigma <= 23/24", "exact", [](ClaimContext&, ClaimResult& r) {
            Rational theta(1, 1000);
            auto region = feasible_region(TableSet::get(HypothesisMode::DH).a, (Rational(1) - theta).reciprocal());
            BoundaryPoint top = region.empty() ? BoundaryPoint(0) : region.back().hi;
            r.expected = "sup region <= 23/24";
            r.computed = "sup region = " + top.str() + " (" + fmt(top.to_double()) + ")";
            r.pass = !region.empty() && !region.back().hi_open && !(top > BoundaryPoint(Rational(23, 24)));
        });

    // 6
    add("unconditional-empty", 6, "unconditional bound is empty above 17/30", "PNT in all intervals for theta > 17/30",
        "exact", [](ClaimContext&, ClaimResult& r) {
            const Rational start = Rational(17, 30) + Rational(1, 1000000000);
            const Rational span = Rational(1) - start;
            r.pass = true;
            std::vector<Rational> pts{start + Rational(1, 1000000000)};
            for (std::int64_t k = 1; k < 100; ++k) pts.push_back(start + span * Rational(k, 100));
            for (const Rational& t : pts)
                if (!mu(t, HypothesisMode::Unconditional).empty()) {
                    r.pass = false;
                    r.computed = "finite at " + t.str();
                }
            r.expected = "-inf at 100 points of (17/30 + 1e-9, 1)";
            if (r.pass) r.computed = "all -inf";
        });
    add("unconditional-window", 6, "unconditional bound is finite and below 1 on [2/15 + 1e-3, 17/30]",
        "PNT in almost all intervals for theta > 2/15", "strict", [](ClaimContext&, ClaimResult& r) {
            const Rational a = Rational(2, 15) + Rational(1, 1000);
            const Rational b(17, 30);
            Worst w;
            for (std::int64_t k = 0; k <= 99; ++k) {
                Rational t = a + (b - a) * Rational(k, 99);
                MuBoundResult m = mu(t, HypothesisMode::Unconditional);
                if (m.empty()) w.fail(t.str());
                w.consider(m.upper, t.str());
            }
            r.expected = "finite, max < 1";
            r.computed = (w.ok ? "max " : "empty at ") + (w.ok ? fmt(w.value) + " at " : std::string()) + w.where;
            r.pass = w.ok && w.value < 1;
        });

    // 7
    add("prior-bounds", 7, "unconditional bound below the earlier piecewise bounds on (1/2, 7/12]",
        "3(1-theta)/2, (47-42theta)/35, (36theta^2-96theta+55)/(39-36theta)", "+1e-9",
        [](ClaimContext&, ClaimResult& r) {
            Worst w;
            for (std::int64_t k = 1; k <= 100; ++k) {
                Rational t = Rational(1, 2) + Rational(k, 1200);
                Rational f = t <= Rational(11, 21)   ? Rational(3) * (Rational(1) - t) / Rational(2)
                             : t <= Rational(23, 42) ? (Rational(47) - Rational(42) * t) / Rational(35)
                                                     : (Rational(36) * t * t - Rational(96) * t + Rational(55)) /
                                                           (Rational(39) - Rational(36) * t);
                double u = mu(t, HypothesisMode::Unconditional).upper;
                if (u != kNegInf) w.consider(u - f.round_up(), t.str());
            }
            r.expected = "excess <= 1e-9";
            r.computed = "max excess " + fmt(w.value) + " at " + w.where;
            r.pass = w.value <= slack_tol();
        });

    // 8
    add("mode-dominance", 8, "RH <= LH <= DH <= unconditional on a 1000-point grid",
        "table majorants are pointwise ordered", "+tol", [](ClaimContext& c, ClaimResult& r) {
            const HypothesisMode order[] = {HypothesisMode::RH, HypothesisMode::LH, HypothesisMode::DH,
                                            HypothesisMode::Unconditional};
            Worst w;
            for (bool refined : {true, false})
                for (int m = 0; m + 1 < 4; ++m) {
                    const auto& lo = c.curve(order[m], refined);
                    const auto& hi = c.curve(order[m + 1], refined);
                    for (std::size_t i = 0; i < lo.size(); ++i)
                        if (!below(lo[i].bound.upper, hi[i].bound.upper, slack_tol()))
                            w.fail(std::string(mode_name(order[m])) + " at " + lo[i].theta.str());
                }
            r.expected = "ordered";
            r.computed = w.ok ? "ordered at all 1000 points" : "violated: " + w.where;
            r.pass = w.ok;
        });
    add("refined-dominance", 8, "refined bound <= second-moment bound", "min over two moments", "+tol",
        [](ClaimContext& c, ClaimResult& r) {
            Worst w;
            for (HypothesisMode m : kAllModes) {
                const auto& a = c.curve(m, true);
                const auto& b = c.curve(m, false);
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (!below(a[i].bound.upper, b[i].bound.upper, slack_tol()))
                        w.fail(std::string(mode_name(m)) + " at " + a[i].theta.str());
            }
            r.expected = "refined <= L2";
            r.computed = w.ok ? "holds at all points" : "violated: " + w.where;
            r.pass = w.ok;
        });
    add("monotonicity", 8, "bounds are non-increasing in theta", "mu is a non-increasing function of theta", "+tol",
        [](ClaimContext& c, ClaimResult& r) {
            Worst w;
            for (HypothesisMode m : kAllModes)
                for (bool refined : {true, false}) {
                    const auto& a = c.curve(m, refined);
                    for (std::size_t i = 1; i < a.size(); ++i)
                        if (!below(a[i].bound.upper, a[i - 1].bound.upper, slack_tol()))
                            w.fail(std::string(mode_name(m)) + " at " + a[i].theta.str());
                }
            r.expected = "non-increasing";
            r.computed = w.ok ? "non-increasing for every mode" : "violated: " + w.where;
            r.pass = w.ok;
        });
    add("curve-runtime", 8, "1000-point unconditional curve runtime", "full curve run < 60 s", "60 s",
        [](ClaimContext& c, ClaimResult& r) {
            c.curves.erase({static_cast<int>(HypothesisMode::Unconditional), true});
            c.curve(HypothesisMode::Unconditional, true);
            r.expected = "< 60 s";
            r.computed = fmt(c.unconditional_curve_seconds) + " s";
            r.pass = c.unconditional_curve_seconds < 60;
        });

    // 9
    add("a-sup-30-13", 9, "supremum of the unconditional A table", "A(sigma) <= 30/13", "1e-12",
        [](ClaimContext&, ClaimResult& r) {
            std::vector<SupCell> cells;
            for (const auto& p : TableSet::get(HypothesisMode::Unconditional).a.pieces())
                if (p.formula) cells.push_back({p.lo, p.hi, {ObjectiveTerm(*p.formula)}});
            SupOptions o;
            o.tol = Rational(1, 1000000000000LL);
            SupResult s = certified_sup(cells, {}, o);
            double target = Rational(30, 13).to_double();
            r.expected = "30/13 = " + fmt(target);
            r.computed = "[" + fmt(s.lower) + ", " + fmt(s.upper) + "] at " + fmt(s.witness.value_or(kNegInf));
            r.pass = std::fabs(s.upper - target) <= 1e-12 && std::fabs(s.lower - target) <= 1e-12;
        });
    add("transcription-checksum", 9, "encoded table rows match the committed transcription file",
        "every printed row appears exactly once", "exact", [](ClaimContext& c, ClaimResult& r) {
            std::string path = c.config.data_dir + "/tables.txt";
            std::string text = read_file(path);
            std::string mine = transcription();
            std::ostringstream hx;
            hx << std::hex << transcription_checksum(text) << " vs " << transcription_checksum(mine);
            // Independent route: parse the file and compare exact values row by row.
            std::vector<const TableRow*> encoded;
            for (const auto& row : a_rows()) encoded.push_back(&row);
            for (const auto& row : astar_rows()) encoded.push_back(&row);
            std::size_t k = 0, mismatches = 0;
            std::istringstream in(text);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') continue;
                if (k >= encoded.size()) {
                    ++mismatches;
                    continue;
                }
                const TableRow& e = *encoded[k++];
                TableRow p = parse_table_row(line);
                bool same = p.table == e.table && p.reference == e.reference && p.lo_closed == e.lo_closed &&
                            p.hi_closed == e.hi_closed && p.family == e.family;
                if (same && e.family) {
                    for (std::int64_t n = 6; n <= kDefaultFamilyMax && same; ++n) {
                        TableRow pn = parse_table_row(line, n);
                        Piece f = pintz_piece(n);
                        same = pn.lo == f.lo && pn.hi == f.hi && pn.formula.same_function(*f.formula);
                    }
                } else if (same) {
                    same = p.lo == e.lo && p.hi == e.hi && p.formula.same_function(e.formula);
                }
                if (!same) ++mismatches;
            }
            bool count_ok = k == encoded.size() && a_rows().size() == 23 && astar_rows().size() == 13;
            r.expected = "23 + 13 rows, identical values, equal FNV-1a checksum";
            r.computed = std::to_string(k) + " rows, " + std::to_string(mismatches) + " mismatches, checksum " + hx.str();
            r.pass = count_ok && mismatches == 0 && transcription_checksum(text) == transcription_checksum(mine);
        });
    add("pintz-jump", 9, "diagnostic jump of the unconditional A table at 59/60", "9/13 - 3/5 = 6/65", "exact",
        [](ClaimContext&, ClaimResult& r) {
            const BoundaryPoint at(Rational(59, 60));
            r.expected = "left 9/13, right 3/5, magnitude 6/65";
            r.pass = false;
            for (const auto& rep : validate_tables())
                if (rep.mode == HypothesisMode::Unconditional && rep.which == "A")
                    for (const auto& b : rep.breakpoints)
                        if (b.at == at) {
                            r.computed = "left " + b.left.str() + ", right " + b.right.str() + ", jump " + fmt(b.jump);
                            r.pass = b.left == ExtendedReal(Rational(9, 13)) && b.right == ExtendedReal(Rational(3, 5)) &&
                                     b.left.value() - b.right.value() == QuadraticNumber(Rational(6, 65));
                        }
        });

    // 10
    add("sieve-trial-division", 10, "sieve Lambda agrees with trial division up to 10^4", "Lambda(n) = log p iff n = p^k",
        "exact", [](ClaimContext& c, ClaimResult& r) {
            const LambdaSieve& s = c.small_sieve();
            std::uint64_t bad = 0;
            for (std::uint64_t n = 1; n <= 10000; ++n)
                if (s.lambda(n) != trial_lambda(n)) ++bad;
            r.expected = "0 mismatches";
            r.computed = std::to_string(bad) + " mismatches";
            r.pass = bad == 0;
        });
    add("psi-100", 10, "psi(100) against direct prime-power summation", "sum_{n <= x} Lambda(n)", "1e-6",
        [](ClaimContext& c, ClaimResult& r) {
            double direct = 0;
            for (std::uint64_t n = 2; n <= 100; ++n) direct += trial_lambda(n);
            double got = c.small_sieve().psi(100);
            r.expected = fmt(direct);
            r.computed = fmt(got);
            r.pass = std::fabs(got - direct) <= 1e-6;
        });
    add("exceptional-regular", 10, "no exceptional x at X = 10^4, theta = 0.7, delta = 0.5",
        "|sum Lambda(n) - y| >= delta y", "exact", [](ClaimContext& c, ClaimResult& r) {
            auto e = exceptional_measure(c.small_sieve(), 10000, Rational(7, 10), Rational(1, 2));
            r.expected = "0";
            r.computed = fmt(e.measure_estimate) + " over " + std::to_string(e.sample_count) + " integers";
            r.pass = e.measure_estimate == 0 && e.sample_count == 10000;
        });
    add("exceptional-positive", 10, "exceptional x exist at X = 10^4, theta = 0.2, delta = 0.9",
        "|sum Lambda(n) - y| >= delta y", "> 0", [](ClaimContext& c, ClaimResult& r) {
            auto e = exceptional_measure(c.small_sieve(), 10000, Rational(1, 5), Rational(9, 10));
            r.expected = "> 0";
            r.computed = fmt(e.measure_estimate);
            r.pass = e.measure_estimate > 0;
        });
    add("energy-brute-force", 10, "pair-sum energy equals quadruple enumeration on prefixes of 30 ordinates",
        "|g1 + g2 - g3 - g4| <= 1", "exact", [](ClaimContext& c, ClaimResult& r) {
            const ZeroSet& z = c.zero_set();
            std::size_t bad = 0;
            std::uint64_t last = 0;
            for (std::size_t m = 0; m <= 30 && m <= z.size(); ++m) {
                std::vector<double> s;
                for (std::size_t i = 0; i < m; ++i) {
                    s.push_back(z.ordinates[i]);
                    s.push_back(-z.ordinates[i]);
                }
                std::uint64_t brute = 0;
                for (double a : s)
                    for (double b : s)
                        for (double cc : s)
                            for (double d : s)
                                if (std::fabs((a + b) - (cc + d)) <= 1.0) ++brute;
                double T = m == 0 ? 1.0 : z.ordinates[m - 1];
                last = additive_energy(z, T);
                if (last != brute) ++bad;
            }
            r.expected = "31 prefixes agree";
            r.computed = std::to_string(bad) + " disagreements; N*(30 ordinates) = " + std::to_string(last);
            r.pass = bad == 0 && z.size() >= 30;
        });
    add("explicit-formula-1000", 10, "explicit formula with zeros up to 1000 at x = 1000",
        "psi(x) = x - sum x^rho/rho - log 2pi - log(1 - x^-2)/2", "5", [](ClaimContext& c, ClaimResult& r) {
            double ef = explicit_formula_psi(c.zero_set(), 1000, 1000);
            double psi = c.small_sieve().psi(1000);
            r.expected = "psi(1000) = " + fmt(psi);
            r.computed = fmt(ef) + " (error " + fmt(std::fabs(ef - psi)) + ")";
            r.pass = std::fabs(ef - psi) <= 5;
        });
    add("sieve-runtime", 10, "sieve to 10^7", "sieve to 10^7 in < 10 s", "10 s", [](ClaimContext&, ClaimResult& r) {
        auto t0 = std::chrono::steady_clock::now();
        LambdaSieve s = LambdaSieve::build(10000000);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.expected = "< 10 s";
        r.computed = fmt(secs) + " s, psi(10^7) = " + fmt(s.psi(10000000));
        r.pass = secs < 10;
    });
    return v;
}

}  // namespace

const std::vector<Claim>& claims() {
    static const std::vector<Claim> all = build_claims();
    return all;
}

std::vector<ClaimResult> run_claims(const std::optional<std::string>& filter, const VerifyConfig& config) {
    ClaimContext ctx;
    ctx.config = config;
    if (ctx.config.data_dir.empty()) ctx.config.data_dir = default_data_dir();
    if (ctx.config.zeros_path.empty()) ctx.config.zeros_path = default_zeros_path();
    std::vector<ClaimResult> out;
    for (const Claim& c : claims()) {
        if (filter && c.id.rfind(*filter, 0) != 0) continue;
        ClaimResult r;
        r.id = c.id;
        r.criterion = c.criterion;
        r.description = c.description;
        r.quote = c.quote;
        r.tolerance = c.tolerance;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.check(ctx, r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.computed = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

bool all_passed(const std::vector<ClaimResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string claims_text_report(const std::vector<ClaimResult>& results) {
    std::ostringstream os;
    std::size_t width = 2;
    for (const auto& r : results) width = std::max(width, r.id.size());
    std::size_t passed = 0;
    for (const auto& r : results) {
        passed += r.pass;
        os << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  ["
           << r.quote << "]\n"
           << std::string(width + 2, ' ') << "expected: " << r.expected << "\n"
           << std::string(width + 2, ' ') << "computed: " << r.computed << "  (tol " << r.tolerance << ", "
           << std::fixed << std::setprecision(2) << r.seconds << " s)\n"
           << std::defaultfloat;
    }
    os << passed << "/" << results.size() << " claims passed\n";
    return os.str();
}

std::string claims_json_report(const std::vector<ClaimResult>& results) {
    nlohmann::json doc;
    doc["schema"] = "mubound.claims";
    doc["version"] = 1;
    auto arr = nlohmann::json::array();
    for (const auto& r : results) {
        arr.push_back({{"id", r.id},
                       {"criterion", r.criterion},
                       {"description", r.description},
                       {"quote", r.quote},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
    }
    doc["claims"] = arr;
    doc["all_passed"] = all_passed(results);
    return doc.dump(2) + "\n";
}

}  // namespace mubound
