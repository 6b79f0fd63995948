#include "mubound/tables.hpp"

#include "mubound/error.hpp"
#include "mubound/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace mubound {

const char* mode_name(HypothesisMode mode) {
    switch (mode) {
        case HypothesisMode::Unconditional: return "unconditional";
        case HypothesisMode::DH: return "dh";
        case HypothesisMode::LH: return "lh";
        case HypothesisMode::RH: return "rh";
    }
    return "?";
}

HypothesisMode parse_mode(std::string_view text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "unconditional" || t == "u") return HypothesisMode::Unconditional;
    if (t == "dh") return HypothesisMode::DH;
    if (t == "lh") return HypothesisMode::LH;
    if (t == "rh") return HypothesisMode::RH;
    throw Error(ErrorCode::ParseError, "unknown mode '" + std::string(text) + "'");
}

std::string TableRow::range_text() const {
    return lo_text + (lo_closed ? " <= " : " < ") + "s" + (hi_closed ? " <= " : " < ") + hi_text;
}

std::string TableRow::line() const {
    return table + " | " + range_text() + " | " + formula_text + " | " + reference;
}

namespace {

Polynomial lin(std::int64_t a, std::int64_t b) { return Polynomial::linear(Rational(a), Rational(b)); }
Polynomial cst(std::int64_t c) { return Polynomial::constant(Rational(c)); }
RationalFunction rf(const Polynomial& p, const Polynomial& q) { return RationalFunction(p, q); }
BoundaryPoint q(std::int64_t n, std::int64_t d) { return BoundaryPoint(Rational(n, d)); }
BoundaryPoint surd(std::int64_t a, std::int64_t sign, std::int64_t r, std::int64_t d) {
    return BoundaryPoint(Rational(a, d), Rational(sign, d), BigInt(r));
}

TableRow row(const char* table, const char* lo_t, bool lo_c, const char* hi_t, bool hi_c, const char* f_t,
             const char* ref, BoundaryPoint lo, BoundaryPoint hi, RationalFunction f) {
    TableRow r;
    r.table = table;
    r.lo_text = lo_t;
    r.hi_text = hi_t;
    r.lo_closed = lo_c;
    r.hi_closed = hi_c;
    r.formula_text = f_t;
    r.reference = ref;
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    r.formula = std::move(f);
    return r;
}

constexpr bool kC = true;   // closed end ("<=")
constexpr bool kO = false;  // open end ("<")

std::vector<TableRow> build_a_rows() {
    const char* ttY = "Tao-Trudgian-Yang";
    std::vector<TableRow> v = {
        row("A", "1/2", kC, "7/10", kC, "3/(2-s)", "Ingham", q(1, 2), q(7, 10), rf(cst(3), lin(-1, 2))),
        row("A", "7/10", kC, "19/25", kO, "15/(3+5s)", "Guth-Maynard", q(7, 10), q(19, 25), rf(cst(15), lin(5, 3))),
        row("A", "19/25", kC, "127/167", kO, "9/(8s-2)", "Ivic", q(19, 25), q(127, 167), rf(cst(9), lin(8, -2))),
        row("A", "127/167", kC, "13/17", kO, "15/(13s-3)", "Ivic", q(127, 167), q(13, 17), rf(cst(15), lin(13, -3))),
        row("A", "13/17", kC, "17/22", kO, "6/(5s-1)", "Ivic", q(13, 17), q(17, 22), rf(cst(6), lin(5, -1))),
        row("A", "17/22", kC, "41/53", kO, "2/(9s-6)", ttY, q(17, 22), q(41, 53), rf(cst(2), lin(9, -6))),
        row("A", "41/53", kC, "7/9", kO, "9/(7s-1)", "Ivic", q(41, 53), q(7, 9), rf(cst(9), lin(7, -1))),
        row("A", "7/9", kC, "1867/2347", kO, "9/(8(2s-1))", ttY, q(7, 9), q(1867, 2347), rf(cst(9), lin(16, -8))),
        row("A", "1867/2347", kC, "4/5", kO, "3/(2s)", "Bourgain", q(1867, 2347), q(4, 5), rf(cst(3), lin(2, 0))),
        row("A", "4/5", kC, "7/8", kO, "3/(2s)", "Ivic", q(4, 5), q(7, 8), rf(cst(3), lin(2, 0))),
        row("A", "7/8", kC, "279/314", kO, "3/(10s-7)", "Heath-Brown", q(7, 8), q(279, 314), rf(cst(3), lin(10, -7))),
        row("A", "279/314", kC, "155/174", kO, "24/(30s-11)", "CDV", q(279, 314), q(155, 174), rf(cst(24), lin(30, -11))),
        row("A", "155/174", kC, "9/10", kC, "24/(30s-11)", "Ivic", q(155, 174), q(9, 10), rf(cst(24), lin(30, -11))),
        row("A", "9/10", kO, "31/34", kC, "3/(10s-7)", ttY, q(9, 10), q(31, 34), rf(cst(3), lin(10, -7))),
        row("A", "31/34", kO, "14/15", kO, "11/(48s-36)", ttY, q(31, 34), q(14, 15), rf(cst(11), lin(48, -36))),
        row("A", "14/15", kC, "2841/3016", kO, "391/(2493s-2014)", ttY, q(14, 15), q(2841, 3016),
            rf(cst(391), lin(2493, -2014))),
        row("A", "2841/3016", kC, "859/908", kO, "22232/(163248s-134765)", ttY, q(2841, 3016), q(859, 908),
            rf(cst(22232), lin(163248, -134765))),
        row("A", "859/908", kC, "23/24", kO, "356/(2742s-2279)", ttY, q(859, 908), q(23, 24),
            rf(cst(356), lin(2742, -2279))),
        row("A", "23/24", kC, "2211487/2274732", kO, "3/(24s-20)", "Pintz", q(23, 24), q(2211487, 2274732),
            rf(cst(3), lin(24, -20))),
        row("A", "2211487/2274732", kC, "39/40", kO, "86152/(1447460s-1311509)", ttY, q(2211487, 2274732),
            q(39, 40), rf(cst(86152), lin(1447460, -1311509))),
        row("A", "39/40", kC, "41/42", kO, "2/(15s-12)", "Pintz", q(39, 40), q(41, 42), rf(cst(2), lin(15, -12))),
        row("A", "41/42", kC, "59/60", kO, "3/(40s-35)", "Pintz", q(41, 42), q(59, 60), rf(cst(3), lin(40, -35))),
    };
    TableRow fam;
    fam.table = "A";
    fam.lo_text = "1-1/(2n(n-1))";
    fam.hi_text = "1-1/(2n(n+1))";
    fam.lo_closed = kC;
    fam.hi_closed = kO;
    fam.formula_text = "3/(n(1-2(n-1)(1-s)))";
    fam.reference = "Pintz (integer n >= 6)";
    fam.family = true;
    v.push_back(std::move(fam));
    return v;
}

std::vector<TableRow> build_astar_rows() {
    const char* ttY = "Tao-Trudgian-Yang";
    const Polynomial one_minus = lin(-1, 1);
    const BoundaryPoint s1 = surd(539, -1, 42121, 460);
    const BoundaryPoint s2 = surd(5831, 1, 60001, 8240);
    const BoundaryPoint s3 = surd(1273, -1, 128689, 1184);
    // 5(18-19s)/(2(5s+3)(1-s)) appears twice
    const RationalFunction gm = rf(Rational(5) * lin(-19, 18), Rational(2) * lin(5, 3) * one_minus);
    return {
        row("ASTAR", "1/2", kC, "2/3", kC, "(10-11s)/((2-s)(1-s))", "Heath-Brown", q(1, 2), q(2, 3),
            rf(lin(-11, 10), lin(-1, 2) * one_minus)),
        row("ASTAR", "2/3", kC, "7/10", kC, "(18-19s)/((4-2s)(1-s))", "Heath-Brown", q(2, 3), q(7, 10),
            rf(lin(-19, 18), lin(-2, 4) * one_minus)),
        row("ASTAR", "7/10", kC, "(539-sqrt(42121))/460", kC, "5(18-19s)/(2(5s+3)(1-s))", ttY, q(7, 10), s1, gm),
        row("ASTAR", "(539-sqrt(42121))/460", kC, "165/226", kC, "2(45-44s)/((2s+15)(1-s))", ttY, s1, q(165, 226),
            rf(Rational(2) * lin(-44, 45), lin(2, 15) * one_minus)),
        row("ASTAR", "165/226", kC, "(5831+sqrt(60001))/8240", kC, "(457-546s)/(2(61-58s)(1-s))", ttY,
            q(165, 226), s2, rf(lin(-546, 457), Rational(2) * lin(-58, 61) * one_minus)),
        row("ASTAR", "(5831+sqrt(60001))/8240", kC, "42/55", kC, "5(18-19s)/(2(5s+3)(1-s))", ttY, s2, q(42, 55), gm),
        row("ASTAR", "42/55", kC, "97/127", kC, "(18-19s)/(6(15s-11)(1-s))", ttY, q(42, 55), q(97, 127),
            rf(lin(-19, 18), Rational(6) * lin(15, -11) * one_minus)),
        row("ASTAR", "97/127", kC, "79/103", kC, "3(18-19s)/(4(4s-1)(1-s))", ttY, q(97, 127), q(79, 103),
            rf(Rational(3) * lin(-19, 18), Rational(4) * lin(4, -1) * one_minus)),
        row("ASTAR", "79/103", kC, "33/43", kC, "(18-19s)/(2(37s-27)(1-s))", ttY, q(79, 103), q(33, 43),
            rf(lin(-19, 18), Rational(2) * lin(37, -27) * one_minus)),
        row("ASTAR", "33/43", kC, "84/109", kC, "5(18-19s)/(2(13s-3)(1-s))", ttY, q(33, 43), q(84, 109),
            rf(Rational(5) * lin(-19, 18), Rational(2) * lin(13, -3) * one_minus)),
        row("ASTAR", "84/109", kC, "(1273-sqrt(128689))/1184", kC, "(18-19s)/(9(3s-2)(1-s))", ttY, q(84, 109), s3,
            rf(lin(-19, 18), Rational(9) * lin(3, -2) * one_minus)),
        row("ASTAR", "(1273-sqrt(128689))/1184", kC, "5/6", kC, "4(10-9s)/(5(4s-1)(1-s))", ttY, s3, q(5, 6),
            rf(Rational(4) * lin(-9, 10), Rational(5) * lin(4, -1) * one_minus)),
        row("ASTAR", "5/6", kC, "1", kC, "12/(4s-1)", "Heath-Brown", q(5, 6), q(1, 1), rf(cst(12), lin(4, -1))),
    };
}

const char* kTranscriptionHeader =
    "# Zero density exponent bounds, one printed row per line.\n"
    "# table | range (s = sigma) | bound | reference\n";

Piece low_piece(std::int64_t k) {
    // exact k/(1-s) on [0, 1/2)
    return {q(0, 1), q(1, 2), rf(cst(k), lin(-1, 1)), "classical"};
}

PiecewiseBound unconditional_a(int family_max) {
    std::vector<Piece> pieces{low_piece(1)};
    for (const auto& r : a_rows())
        if (!r.family) pieces.push_back({r.lo, r.hi, r.formula, r.reference});
    for (int n = 6; n <= family_max; ++n) pieces.push_back(pintz_piece(n));
    return PiecewiseBound(std::move(pieces));
}

PiecewiseBound full_astar(int family_max) {
    std::vector<Piece> pieces{low_piece(3)};
    const BoundaryPoint cap(sigma_cap(family_max));
    for (const auto& r : astar_rows()) {
        BoundaryPoint hi = r.hi > cap ? cap : r.hi;
        if (r.lo < hi) pieces.push_back({r.lo, hi, r.formula, r.reference});
    }
    return PiecewiseBound(std::move(pieces));
}

// Step function with the listed values on [0, b1), [b1, b2), ..., up to the cap.
PiecewiseBound step(const std::vector<std::pair<BoundaryPoint, std::optional<Rational>>>& steps,
                    const std::string& label, int family_max) {
    std::vector<Piece> pieces;
    BoundaryPoint lo(Rational(0));
    const BoundaryPoint cap(sigma_cap(family_max));
    for (std::size_t i = 0; i < steps.size(); ++i) {
        BoundaryPoint hi = i + 1 < steps.size() ? steps[i + 1].first : cap;
        std::optional<RationalFunction> f;
        if (steps[i].second) f = RationalFunction::constant(*steps[i].second);
        pieces.push_back({lo, hi, f, label});
        lo = hi;
    }
    return PiecewiseBound(std::move(pieces));
}

void validate_family_max(int family_max) {
    if (family_max < 6) throw Error(ErrorCode::InvalidFamilyIndex, "family truncation index must be >= 6");
}

}  // namespace

const std::vector<TableRow>& a_rows() {
    static const std::vector<TableRow> rows = build_a_rows();
    return rows;
}

const std::vector<TableRow>& astar_rows() {
    static const std::vector<TableRow> rows = build_astar_rows();
    return rows;
}

Piece pintz_piece(std::int64_t n) {
    if (n < 6) throw Error(ErrorCode::InvalidFamilyIndex, "family index n = " + std::to_string(n) + " < 6");
    Rational lo = Rational(1) - Rational(1, 2 * n * (n - 1));
    Rational hi = Rational(1) - Rational(1, 2 * n * (n + 1));
    // n(1 - 2(n-1)(1-s)) = 2n(n-1) s - n(2n-3)
    RationalFunction f(cst(3), lin(2 * n * (n - 1), -n * (2 * n - 3)));
    return {BoundaryPoint(lo), BoundaryPoint(hi), f, "Pintz (n=" + std::to_string(n) + ")"};
}

Rational sigma_cap(int family_max) {
    validate_family_max(family_max);
    std::int64_t n = family_max;
    return Rational(1) - Rational(1, 2 * n * (n + 1));
}

PiecewiseBound a_table(HypothesisMode mode, int family_max) {
    validate_family_max(family_max);
    PiecewiseBound u = unconditional_a(family_max);
    const BoundaryPoint half = q(1, 2);
    switch (mode) {
        case HypothesisMode::Unconditional:
            return u;
        case HypothesisMode::DH:
            return pointwise_min(u, step({{q(0, 1), Rational(2)}}, "density hypothesis", family_max));
        case HypothesisMode::LH:
            return pointwise_min(
                u, step({{q(0, 1), Rational(2)}, {q(3, 4), Rational(0)}}, "Lindelof hypothesis", family_max));
        case HypothesisMode::RH:
            return pointwise_min(u, step({{q(0, 1), Rational(2)}, {half, std::nullopt}}, "Riemann hypothesis",
                                         family_max));
    }
    return u;
}

PiecewiseBound astar_table(HypothesisMode mode, int family_max) {
    validate_family_max(family_max);
    PiecewiseBound trivial = scale(a_table(mode, family_max), Rational(3));
    return pointwise_min(full_astar(family_max), trivial);
}

std::string transcription() {
    std::string out = kTranscriptionHeader;
    for (const auto& r : a_rows()) out += r.line() + "\n";
    for (const auto& r : astar_rows()) out += r.line() + "\n";
    return out;
}

namespace {

std::string trim(std::string_view v) {
    auto b = v.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = v.find_last_not_of(" \t\r");
    return std::string(v.substr(b, e - b + 1));
}

}  // namespace

TableRow parse_table_row(std::string_view line, std::optional<std::int64_t> n) {
    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (true) {
        std::size_t bar = line.find('|', pos);
        cols.push_back(trim(line.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos)));
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    if (cols.size() != 4) throw Error(ErrorCode::ParseError, "expected 4 columns in '" + std::string(line) + "'");
    TableRow r;
    r.table = cols[0];
    r.formula_text = cols[2];
    r.reference = cols[3];
    if (r.table != "A" && r.table != "ASTAR") throw Error(ErrorCode::ParseError, "unknown table '" + r.table + "'");

    // "<lo> <op> s <op> <hi>"
    const std::string& range = cols[1];
    std::size_t s_at = range.find(" s ");
    if (s_at == std::string::npos) throw Error(ErrorCode::ParseError, "range without s: '" + range + "'");
    auto split_op = [&](std::string side, bool left) {
        side = trim(side);
        bool closed = false;
        if (left) {
            if (side.size() >= 2 && side.compare(side.size() - 2, 2, "<=") == 0) {
                closed = true;
                side.resize(side.size() - 2);
            } else if (!side.empty() && side.back() == '<') {
                side.pop_back();
            } else {
                throw Error(ErrorCode::ParseError, "bad range '" + range + "'");
            }
        } else {
            if (side.rfind("<=", 0) == 0) {
                closed = true;
                side.erase(0, 2);
            } else if (!side.empty() && side.front() == '<') {
                side.erase(0, 1);
            } else {
                throw Error(ErrorCode::ParseError, "bad range '" + range + "'");
            }
        }
        return std::make_pair(trim(side), closed);
    };
    std::tie(r.lo_text, r.lo_closed) = split_op(range.substr(0, s_at), true);
    std::tie(r.hi_text, r.hi_closed) = split_op(range.substr(s_at + 3), false);

    r.family = r.formula_text.find('n') != std::string::npos || r.lo_text.find('n') != std::string::npos;
    if (r.family && !n) return r;
    r.lo = parse_point(r.lo_text, n);
    r.hi = parse_point(r.hi_text, n);
    r.formula = parse_formula(r.formula_text, n);
    return r;
}

std::uint64_t transcription_checksum(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](char c) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    };
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        if (line.empty() || line.front() == '#') continue;
        for (char c : line) mix(c);
        mix('\n');
    }
    return h;
}

// ---------------------------------------------------------------------------

namespace {

ExtendedReal scaled(const ExtendedReal& v, const BoundaryPoint& s) {
    if (!v.is_finite()) return v;
    return ExtendedReal((QuadraticNumber(1) - s) * v.value());
}

double gap(const ExtendedReal& from, const ExtendedReal& to) {
    if (!from.is_finite() || !to.is_finite()) return 0;
    return to.to_double() - from.to_double();
}

TableReport report(HypothesisMode mode, const char* which, const PiecewiseBound& pw, int family_max) {
    TableReport r;
    r.mode = mode;
    r.which = which;
    r.lo = pw.lo();
    r.cap = pw.cap();
    r.pieces = pw.size();
    r.coverage_ok = pw.lo() == BoundaryPoint(0) && pw.cap() == BoundaryPoint(sigma_cap(family_max));
    r.finite_until = pw.lo();
    for (std::size_t i = 0; i < pw.size(); ++i) {
        const Piece& p = pw.pieces()[i];
        if (!p.is_neg_inf()) r.finite_until = p.hi;
        if (i > 0) {
            BreakpointReport b{p.lo, pw.pieces()[i - 1].value_at(p.lo), p.value_at(p.lo), 0};
            b.jump = gap(b.left, b.right);
            double up = gap(scaled(b.left, p.lo), scaled(b.right, p.lo));
            if (up > r.monotonicity_violation) {
                r.monotonicity_violation = up;
                r.violation_at = p.lo;
            }
            r.breakpoints.push_back(std::move(b));
        }
        if (p.is_neg_inf()) continue;
        // Exact samples: the endpoints and 15 interior rationals.
        std::vector<BoundaryPoint> pts{p.lo};
        auto [lo_a, lo_b] = p.lo.rational_bounds(64);
        auto [hi_a, hi_b] = p.hi.rational_bounds(64);
        if (lo_b < hi_a)
            for (int j = 1; j < 16; ++j) pts.emplace_back(lo_b + (hi_a - lo_b) * Rational(j, 16));
        pts.push_back(p.hi);
        ExtendedReal prev;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            ExtendedReal v = p.value_at(pts[k]);
            if (v.is_finite() && v.value().sign() < 0) r.nonnegative = false;
            ExtendedReal g = scaled(v, pts[k]);
            if (k > 0) {
                double up = gap(prev, g);
                if (up > r.monotonicity_violation) {
                    r.monotonicity_violation = up;
                    r.violation_at = pts[k];
                }
            }
            prev = g;
        }
    }
    return r;
}

}  // namespace

std::vector<TableReport> validate_tables(int family_max) {
    std::vector<TableReport> out;
    for (HypothesisMode m : kAllModes) {
        const TableSet& t = TableSet::get(m, family_max);
        out.push_back(report(m, "A", t.a, family_max));
        out.push_back(report(m, "ASTAR", t.astar, family_max));
    }
    return out;
}

namespace {

std::vector<CompiledPiece> compile(const PiecewiseBound& pw) {
    const RationalFunction one_minus(lin(-1, 1), cst(1));
    std::vector<CompiledPiece> out;
    out.reserve(pw.size());
    for (const auto& p : pw.pieces()) {
        if (p.is_neg_inf()) {
            out.push_back({});
            continue;
        }
        auto h = std::make_shared<const RationalFunction>(one_minus * *p.formula);
        out.push_back({h, std::make_shared<const RationalEnclosure>(*h)});
    }
    return out;
}

}  // namespace

const TableSet& TableSet::get(HypothesisMode mode, int family_max) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<TableSet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(mode), family_max);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    PiecewiseBound a = a_table(mode, family_max);
    PiecewiseBound astar = astar_table(mode, family_max);
    std::vector<BoundaryPoint> pts = a.breakpoints();
    for (auto& b : astar.breakpoints()) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Knot> knots;
    for (auto& b : pts) knots.push_back({b, scaled(evaluate_upper(a, b), b), scaled(evaluate_upper(astar, b), b)});
    auto set = std::make_unique<TableSet>(
        TableSet{mode, family_max, a, astar, compile(a), compile(astar), std::move(knots)});
    return *cache.emplace(key, std::move(set)).first->second;
}

}  // namespace mubound
