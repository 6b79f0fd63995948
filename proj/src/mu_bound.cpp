#include "mubound/mu_bound.hpp"

#include "mubound/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

namespace mubound {

const char* moment_name(ActiveMoment m) {
    switch (m) {
        case ActiveMoment::L2: return "L2";
        case ActiveMoment::L4: return "L4";
        case ActiveMoment::Empty: return "EMPTY";
    }
    return "?";
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_theta(const Rational& theta) {
    if (theta.sign() <= 0 || theta >= Rational(1))
        throw Error(ErrorCode::OutOfDomain, "theta " + theta.str() + " outside (0, 1)");
}

// alpha * h + beta * s + gamma, where h = (1 - s) * bound(s) is already known.
ExtendedReal moment(const ExtendedReal& h, const BoundaryPoint& s, const Rational& alpha, std::int64_t beta,
                    std::int64_t gamma) {
    if (!h.is_finite()) return h;
    return ExtendedReal(QuadraticNumber(alpha) * h.value() + QuadraticNumber(Rational(beta)) * s +
                        QuadraticNumber(Rational(gamma)));
}

ExtendedReal scaled_value(const PiecewiseBound& pw, const BoundaryPoint& s) {
    ExtendedReal v = evaluate_upper(pw, s);
    if (!v.is_finite()) return v;
    return ExtendedReal((QuadraticNumber(1) - s) * v.value());
}

}  // namespace

ExtendedReal mu2(const BoundaryPoint& sigma, const Rational& theta, HypothesisMode mode, int family_max) {
    check_theta(theta);
    const TableSet& t = TableSet::get(mode, family_max);
    return moment(scaled_value(t.a, sigma), sigma, Rational(1) - theta, 2, -1);
}

ExtendedReal mu4(const BoundaryPoint& sigma, const Rational& theta, HypothesisMode mode, int family_max) {
    check_theta(theta);
    const TableSet& t = TableSet::get(mode, family_max);
    return moment(scaled_value(t.astar, sigma), sigma, Rational(1) - theta, 4, -3);
}

MuBoundResult mu_upper(const Rational& theta, HypothesisMode mode, const MuOptions& options) {
    check_theta(theta);
    if (options.tol.sign() <= 0) throw Error(ErrorCode::OutOfDomain, "tolerance must be positive");
    const TableSet& t = TableSet::get(mode, options.family_max);
    const Rational alpha = Rational(1) - theta;
    const bool refined = options.refined;

    MuBoundResult res;
    res.theta = theta;
    res.mode = mode;
    res.tol = options.tol;
    res.refined = refined;
    res.upper = res.lower = kNegInf;

    std::vector<SigmaInterval> region = feasible_region(t.a, alpha.reciprocal());
    if (region.empty()) return res;

    std::vector<SupCell> cells;
    std::vector<SupCandidate> candidates;

    auto knot_candidate = [&](const BoundaryPoint& at, const ExtendedReal& ha, const ExtendedReal& hastar) {
        ExtendedReal m2 = moment(ha, at, alpha, 2, -1);
        if (!refined) {
            candidates.push_back({at, m2, 0});
            return;
        }
        ExtendedReal m4 = moment(hastar, at, alpha, 4, -3);
        bool use4 = m4 < m2;
        candidates.push_back({at, use4 ? m4 : m2, use4 ? 1 : 0});
    };
    auto point_candidate = [&](const BoundaryPoint& at) {
        auto it = std::lower_bound(t.knots.begin(), t.knots.end(), at,
                                   [](const Knot& k, const BoundaryPoint& v) { return k.at < v; });
        if (it != t.knots.end() && it->at == at) {
            knot_candidate(at, it->ha, it->hastar);
        } else {
            knot_candidate(at, scaled_value(t.a, at), scaled_value(t.astar, at));
        }
    };

    for (const auto& iv : region) {
        if (iv.degenerate()) {
            point_candidate(iv.lo);
            continue;
        }
        // Knots in [lo, hi] carry the regularized values; between them each
        // cell sits inside a single piece of both tables.
        std::vector<BoundaryPoint> cuts{iv.lo};
        auto first = std::lower_bound(t.knots.begin(), t.knots.end(), iv.lo,
                                      [](const Knot& k, const BoundaryPoint& v) { return k.at < v; });
        for (auto it = first; it != t.knots.end() && !(it->at > iv.hi); ++it) {
            knot_candidate(it->at, it->ha, it->hastar);
            if (iv.lo < it->at && it->at < iv.hi) cuts.push_back(it->at);
        }
        cuts.push_back(iv.hi);
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            const BoundaryPoint& l = cuts[k];
            const BoundaryPoint& h = cuts[k + 1];
            std::size_t ia = t.a.locate_cell(l, h);
            const CompiledPiece& ca = t.a_h[ia];
            if (!ca.h) continue;
            SupCell cell{l, h, {ObjectiveTerm(ca.h, ca.enc, alpha, Rational(2), Rational(-1))}};
            if (refined) {
                const CompiledPiece& cs = t.astar_h[t.astar.locate_cell(l, h)];
                if (!cs.h) continue;  // min with -inf
                cell.terms.emplace_back(cs.h, cs.enc, alpha, Rational(4), Rational(-3));
            }
            cells.push_back(std::move(cell));
        }
    }

    SupOptions so;
    so.tol = options.tol;
    so.node_budget = options.node_budget;
    SupResult sr = certified_sup(cells, candidates, so);
    res.upper = sr.upper;
    res.lower = sr.lower;
    res.nodes = sr.nodes;
    if (sr.upper == kNegInf) return res;
    res.witness_sigma = sr.witness;
    res.witness_exact = sr.witness_exact;
    res.active = sr.active == 1 ? ActiveMoment::L4 : ActiveMoment::L2;
    return res;
}

namespace {

double gap_from(const MuBoundResult& r) {
    if (r.upper == kNegInf) return kNegInf;
    return (Interval::point(r.upper) - Interval(r.theta.round_down(), r.theta.round_up())).hi;
}

}  // namespace

std::vector<CurvePoint> mu_curve(const Rational& theta_min, const Rational& theta_max, int steps,
                                 HypothesisMode mode, const MuOptions& options, unsigned threads) {
    if (steps < 1) throw Error(ErrorCode::OutOfDomain, "steps must be >= 1");
    check_theta(theta_min);
    check_theta(theta_max);
    if (!(theta_min < theta_max)) throw Error(ErrorCode::OutOfDomain, "theta_min must be below theta_max");

    const std::size_t n = static_cast<std::size_t>(steps) + 1;
    std::vector<CurvePoint> out(n);
    std::vector<std::exception_ptr> errors(n);
    TableSet::get(mode, options.family_max);  // build once before fanning out

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                Rational th = theta_min + (theta_max - theta_min) * Rational(static_cast<std::int64_t>(i), steps);
                MuBoundResult r = mu_upper(th, mode, options);
                out[i] = {th, r, gap_from(r)};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

double gap_exponent(const Rational& theta, HypothesisMode mode, const MuOptions& options) {
    return gap_from(mu_upper(theta, mode, options));
}

}  // namespace mubound
