#include "mubound/piecewise.hpp"

#include "mubound/error.hpp"
#include "mubound/roots.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace mubound {

ExtendedReal Piece::value_at(const BoundaryPoint& s) const {
    if (!formula) return ExtendedReal::neg_inf();
    return ExtendedReal((*formula)(s));
}

PiecewiseBound::PiecewiseBound(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw Error(ErrorCode::DomainMismatch, "piecewise bound without pieces");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        if (!(p.lo < p.hi)) throw Error(ErrorCode::DomainMismatch, "empty piece at " + p.lo.str());
        if (i > 0 && !(pieces_[i - 1].hi == p.lo))
            throw Error(ErrorCode::DomainMismatch, "pieces do not abut at " + p.lo.str());
    }
}

std::size_t PiecewiseBound::locate(const BoundaryPoint& s) const {
    if (s < lo() || !(s < cap())) throw Error(ErrorCode::OutOfDomain, "sigma " + s.str() + " outside domain");
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), s,
                               [](const BoundaryPoint& v, const Piece& p) { return v < p.lo; });
    return static_cast<std::size_t>(std::distance(pieces_.begin(), it)) - 1;
}

std::size_t PiecewiseBound::locate_cell(const BoundaryPoint& a, const BoundaryPoint& b) const {
    std::size_t i = locate(a);
    if (b > pieces_[i].hi) throw Error(ErrorCode::DomainMismatch, "cell straddles a breakpoint");
    return i;
}

std::vector<BoundaryPoint> PiecewiseBound::breakpoints() const {
    std::vector<BoundaryPoint> out;
    for (std::size_t i = 1; i < pieces_.size(); ++i) out.push_back(pieces_[i].lo);
    return out;
}

PiecewiseBound PiecewiseBound::restrict(const BoundaryPoint& a, const BoundaryPoint& b) const {
    std::vector<Piece> out;
    for (const auto& p : pieces_) {
        if (!(p.hi > a) || !(p.lo < b)) continue;
        Piece q = p;
        if (q.lo < a) q.lo = a;
        if (q.hi > b) q.hi = b;
        out.push_back(std::move(q));
    }
    return PiecewiseBound(std::move(out));
}

ExtendedReal evaluate_upper(const PiecewiseBound& pw, const BoundaryPoint& s) {
    std::size_t i = pw.locate(s);
    ExtendedReal v = pw.pieces()[i].value_at(s);
    if (i > 0 && s == pw.pieces()[i].lo) v = max(v, pw.pieces()[i - 1].value_at(s));
    return v;
}

PiecewiseBound scale(const PiecewiseBound& pw, const Rational& k) {
    if (k.sign() <= 0) throw Error(ErrorCode::OutOfDomain, "scale factor must be positive");
    std::vector<Piece> out = pw.pieces();
    for (auto& p : out)
        if (p.formula) p.formula = k * *p.formula;
    return PiecewiseBound(std::move(out));
}

namespace {

std::vector<BoundaryPoint> merged_breakpoints(const PiecewiseBound& a, const PiecewiseBound& b) {
    std::vector<BoundaryPoint> pts = a.breakpoints();
    for (auto& p : b.breakpoints()) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

int sign_at(const Polynomial& p, const BoundaryPoint& a, const BoundaryPoint& b) {
    return p(rational_between(a, b)).sign();
}

void append_piece(std::vector<Piece>& out, Piece p) {
    if (!out.empty()) {
        Piece& last = out.back();
        bool same = last.provenance == p.provenance && last.formula.has_value() == p.formula.has_value() &&
                    (!p.formula || last.formula->same_function(*p.formula));
        if (same) {
            last.hi = p.hi;
            return;
        }
    }
    out.push_back(std::move(p));
}

}  // namespace

PiecewiseBound pointwise_min(const PiecewiseBound& a, const PiecewiseBound& b, double bracket_width) {
    if (!(a.lo() == b.lo()) || !(a.cap() == b.cap()))
        throw Error(ErrorCode::DomainMismatch, "pointwise_min of bounds on different domains");
    std::vector<BoundaryPoint> pts;
    pts.push_back(a.lo());
    for (auto& p : merged_breakpoints(a, b)) pts.push_back(p);
    pts.push_back(a.cap());

    std::vector<Piece> out;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const BoundaryPoint& l = pts[k];
        const BoundaryPoint& h = pts[k + 1];
        const Piece& pa = a.pieces()[a.locate_cell(l, h)];
        const Piece& pb = b.pieces()[b.locate_cell(l, h)];
        if (pa.is_neg_inf() || pb.is_neg_inf()) {
            append_piece(out, {l, h, std::nullopt, pa.is_neg_inf() ? pa.provenance : pb.provenance});
            continue;
        }
        const RationalFunction& fa = *pa.formula;
        const RationalFunction& fb = *pb.formula;
        // sign(fa - fb) = sign(diff) * sign(Qa * Qb) on the cell.
        Polynomial diff = fa.num() * fb.den() - fb.num() * fa.den();
        if (diff.is_zero()) {
            append_piece(out, {l, h, fa, pa.provenance});
            continue;
        }
        int den_sign = sign_at(fa.den() * fb.den(), l, h);

        std::vector<RootLocation> roots;
        for (auto& r : real_roots(diff, l, h, bracket_width))
            if (r.lo > l && r.hi < h) roots.push_back(r);

        BoundaryPoint cur = l;
        auto emit_smaller = [&](const BoundaryPoint& u, const BoundaryPoint& v) {
            if (!(u < v)) return;
            bool a_smaller = sign_at(diff, u, v) * den_sign <= 0;
            append_piece(out, a_smaller ? Piece{u, v, fa, pa.provenance} : Piece{u, v, fb, pb.provenance});
        };
        for (const auto& r : roots) {
            emit_smaller(cur, r.lo);
            if (!r.exact) {
                // Either formula majorizes the minimum; keep the larger one at the bracket midpoint.
                bool a_larger = sign_at(diff, r.lo, r.hi) * den_sign >= 0;
                append_piece(out, a_larger ? Piece{r.lo, r.hi, fa, pa.provenance + " [bracket]"}
                                           : Piece{r.lo, r.hi, fb, pb.provenance + " [bracket]"});
            }
            cur = r.hi;
        }
        emit_smaller(cur, h);
    }
    return PiecewiseBound(std::move(out));
}

std::vector<SigmaInterval> feasible_region(const PiecewiseBound& pw, const Rational& c) {
    std::vector<SigmaInterval> raw;
    for (const auto& piece : pw.pieces()) {
        if (piece.is_neg_inf()) continue;
        const RationalFunction& f = *piece.formula;
        Polynomial g = f.num() - c * f.den();
        if (sign_at(f.den(), piece.lo, piece.hi) < 0) g = -g;
        if (g.is_zero()) {
            raw.push_back({piece.lo, piece.hi});
            continue;
        }
        // Walk [lo, hi] split at the roots of g; keep where g >= 0.
        std::vector<RootLocation> roots = real_roots(g, piece.lo, piece.hi);
        BoundaryPoint cur = piece.lo;
        auto keep_if_nonneg = [&](const BoundaryPoint& u, const BoundaryPoint& v) {
            if (u < v && sign_at(g, u, v) > 0) raw.push_back({u, v});
        };
        for (const auto& r : roots) {
            keep_if_nonneg(cur, r.lo);
            raw.push_back({r.lo, r.hi});  // g vanishes in here; brackets are kept whole
            cur = r.hi;
        }
        keep_if_nonneg(cur, piece.hi);
    }
    std::sort(raw.begin(), raw.end(), [](const SigmaInterval& x, const SigmaInterval& y) { return x.lo < y.lo; });
    std::vector<SigmaInterval> out;
    for (auto& iv : raw) {
        if (!out.empty() && !(out.back().hi < iv.lo)) {
            if (iv.hi > out.back().hi) out.back().hi = iv.hi;
        } else {
            out.push_back(iv);
        }
    }
    if (!out.empty() && out.back().hi == pw.cap()) out.back().hi_open = true;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

Interval enclose_exact(const Rational& r) { return {r.round_down(), r.round_up()}; }

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

ObjectiveTerm::ObjectiveTerm(std::shared_ptr<const RationalFunction> h,
                             std::shared_ptr<const RationalEnclosure> compiled, const Rational& alpha,
                             const Rational& beta, const Rational& gamma)
    : h_(std::move(h)),
      enc_(std::move(compiled)),
      alpha_(alpha),
      beta_(beta),
      gamma_(gamma),
      ia_(enclose_exact(alpha)),
      ib_(enclose_exact(beta)),
      ig_(enclose_exact(gamma)) {}

ObjectiveTerm::ObjectiveTerm(const RationalFunction& f)
    : ObjectiveTerm(std::make_shared<RationalFunction>(f), std::make_shared<RationalEnclosure>(f), Rational(1),
                    Rational(0), Rational(0)) {}

Interval ObjectiveTerm::operator()(const Interval& x) const {
    Interval natural = ia_ * (*enc_)(x) + ib_ * x + ig_;
    if (x.is_point()) return natural;
    Interval m = Interval::point(x.mid());
    Interval at_mid = ia_ * (*enc_)(m) + ib_ * m + ig_;
    Interval slope = ia_ * enc_->derivative(x) + ib_;
    return intersect(natural, at_mid + slope * (x - m));
}

QuadraticNumber ObjectiveTerm::exact(const QuadraticNumber& s) const {
    return QuadraticNumber(alpha_) * (*h_)(s) + QuadraticNumber(beta_) * s + QuadraticNumber(gamma_);
}

namespace {

struct Node {
    Interval x;
    double upper;
    std::size_t cell;
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.upper != b.upper) return a.upper < b.upper;
        if (a.cell != b.cell) return a.cell > b.cell;
        return a.x.lo > b.x.lo;
    }
};

struct CellBox {
    Interval outer;    // encloses the exact cell
    double inner_lo;   // certainly >= exact lo
    double inner_hi;   // certainly <= exact hi
};

// Enclosure of min_k term_k(x), with the index of the term whose enclosure is lowest.
Interval evaluate(const SupCell& cell, const Interval& x, int* active = nullptr) {
    Interval best = cell.terms.front()(x);
    int idx = 0;
    for (std::size_t k = 1; k < cell.terms.size(); ++k) {
        Interval v = cell.terms[k](x);
        if (v.mid() < best.mid()) idx = static_cast<int>(k);
        best = min(best, v);
    }
    if (active) *active = idx;
    return best;
}

}  // namespace

SupResult certified_sup(const std::vector<SupCell>& cells, const std::vector<SupCandidate>& candidates,
                        const SupOptions& options) {
    if (options.tol.sign() <= 0) throw Error(ErrorCode::OutOfDomain, "tolerance must be positive");
    const double tol = options.tol.round_down();

    SupResult res{kNegInf, kNegInf, std::nullopt, std::nullopt, -1, 0};
    double fixed_upper = kNegInf;  // contributions that can no longer be refined

    auto offer_lower = [&](double value, std::optional<double> at, std::optional<BoundaryPoint> exact,
                           int active) {
        if (value > res.lower) {
            res.lower = value;
            res.witness = at;
            res.witness_exact = std::move(exact);
            res.active = active;
        }
    };

    for (const auto& cand : candidates) {
        if (cand.value.is_neg_inf()) continue;
        Interval v = cand.value.enclose();
        fixed_upper = std::max(fixed_upper, v.hi);
        offer_lower(v.lo, cand.at.to_double(), cand.at, cand.active);
    }

    std::vector<CellBox> boxes;
    std::priority_queue<Node, std::vector<Node>, NodeOrder> queue;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const SupCell& cell = cells[i];
        Interval elo = cell.lo.enclose(50), ehi = cell.hi.enclose(50);
        boxes.push_back({{elo.lo, ehi.hi}, elo.hi, ehi.lo});
        if (cell.terms.empty()) continue;
        int act = 0;
        Interval at_lo = evaluate(cell, elo, &act);
        offer_lower(at_lo.lo, elo.mid(), cell.lo, act);
        Interval at_hi = evaluate(cell, ehi, &act);
        offer_lower(at_hi.lo, ehi.mid(), cell.hi, act);
        Interval whole = evaluate(cell, boxes.back().outer);
        queue.push({boxes.back().outer, whole.hi, i});
        ++res.nodes;
    }

    while (!queue.empty() && queue.top().upper > res.lower + tol) {
        Node node = queue.top();
        queue.pop();
        const SupCell& cell = cells[node.cell];
        const CellBox& box = boxes[node.cell];
        double m = node.x.mid();
        if (!(node.x.lo < m && m < node.x.hi)) {
            fixed_upper = std::max(fixed_upper, node.upper);
            continue;
        }
        if (m >= box.inner_lo && m <= box.inner_hi) {
            int act = 0;
            Interval v = evaluate(cell, Interval::point(m), &act);
            offer_lower(v.lo, m, std::nullopt, act);
        }
        for (Interval child : {Interval(node.x.lo, m), Interval(m, node.x.hi)}) {
            Interval v = evaluate(cell, child);
            if (++res.nodes > options.node_budget)
                throw Error(ErrorCode::NonConvergence, "branch and bound exceeded its node budget");
            if (v.hi > res.lower) queue.push({child, v.hi, node.cell});
        }
    }

    double upper = std::max(fixed_upper, res.lower);
    if (!queue.empty()) upper = std::max(upper, queue.top().upper);
    res.upper = upper;
    if (res.upper != kNegInf && res.upper - res.lower > tol)
        throw Error(ErrorCode::NonConvergence, "supremum enclosure wider than tolerance at double precision");
    return res;
}

SupResult certified_sup(const RationalFunction& f, const std::vector<SigmaInterval>& region, const Rational& tol) {
    std::vector<SupCell> cells;
    ObjectiveTerm term(f);
    for (const auto& iv : region) cells.push_back({iv.lo, iv.hi, {term}});
    SupOptions opts;
    opts.tol = tol;
    return certified_sup(cells, {}, opts);
}

}  // namespace mubound
