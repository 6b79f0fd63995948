#pragma once

#include "mubound/piecewise.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mubound {

enum class HypothesisMode { Unconditional, DH, LH, RH };

const char* mode_name(HypothesisMode mode);  // "unconditional", "dh", "lh", "rh"
/// Case-insensitive; throws ParseError on anything else.
HypothesisMode parse_mode(std::string_view text);
inline constexpr HypothesisMode kAllModes[] = {HypothesisMode::Unconditional, HypothesisMode::DH,
                                               HypothesisMode::LH, HypothesisMode::RH};

/// One printed row of a zero density table.
struct TableRow {
    std::string table;  // "A" or "ASTAR"
    std::string lo_text;
    std::string hi_text;
    bool lo_closed = true;
    bool hi_closed = false;
    std::string formula_text;
    std::string reference;
    bool family = false;  // lo/hi/formula depend on n; see pintz_piece

    BoundaryPoint lo;
    BoundaryPoint hi;
    RationalFunction formula;

    std::string range_text() const;
    /// "A | 1/2 <= s <= 7/10 | 3/(2-s) | Ingham"
    std::string line() const;
};

/// Rows of the A(sigma) table, in printed order (the last one is the family row).
const std::vector<TableRow>& a_rows();
/// Rows of the A*(sigma) table, in printed order.
const std::vector<TableRow>& astar_rows();

inline constexpr int kDefaultFamilyMax = 64;

/// Family piece 3/(n(1 - 2(n-1)(1-s))) on [1 - 1/(2n(n-1)), 1 - 1/(2n(n+1))).
/// Throws InvalidFamilyIndex for n < 6.
Piece pintz_piece(std::int64_t n);

/// Right end of the domain: 1 - 1/(2 n (n+1)) for the last family index.
Rational sigma_cap(int family_max = kDefaultFamilyMax);

PiecewiseBound a_table(HypothesisMode mode, int family_max = kDefaultFamilyMax);
PiecewiseBound astar_table(HypothesisMode mode, int family_max = kDefaultFamilyMax);

/// Machine-readable transcription, one row per line, same format as data/tables.txt.
std::string transcription();
/// Parse one transcription line through the exact expression reader. Family
/// rows need n to instantiate lo, hi and formula. Throws ParseError.
TableRow parse_table_row(std::string_view line, std::optional<std::int64_t> n = std::nullopt);

/// FNV-1a 64-bit hash of the non-comment, non-blank lines (each followed by '\n').
std::uint64_t transcription_checksum(std::string_view text);

// ---------------------------------------------------------------------------
// Diagnostics

struct BreakpointReport {
    BoundaryPoint at;
    ExtendedReal left;
    ExtendedReal right;
    double jump = 0;  // right - left; 0 when either side is -inf
};

struct TableReport {
    HypothesisMode mode = HypothesisMode::Unconditional;
    std::string which;  // "A" or "ASTAR"
    BoundaryPoint lo;
    BoundaryPoint cap;
    std::size_t pieces = 0;
    bool coverage_ok = false;
    BoundaryPoint finite_until;  // sup of the points where the bound is finite
    bool nonnegative = true;
    std::vector<BreakpointReport> breakpoints;
    /// Largest increase of (1 - s) * bound found (exact samples); 0 if none.
    double monotonicity_violation = 0;
    BoundaryPoint violation_at;
};

std::vector<TableReport> validate_tables(int family_max = kDefaultFamilyMax);

// ---------------------------------------------------------------------------
// Cached, precompiled tables for the optimizer

/// h(s) = (1 - s) * formula(s) for one piece, with its interval evaluator.
struct CompiledPiece {
    std::shared_ptr<const RationalFunction> h;  // null for -inf pieces
    std::shared_ptr<const RationalEnclosure> enc;
};

/// A breakpoint of either table with (1 - s) times the upper-regularized values.
struct Knot {
    BoundaryPoint at;
    ExtendedReal ha;
    ExtendedReal hastar;
};

struct TableSet {
    HypothesisMode mode;
    int family_max;
    PiecewiseBound a;
    PiecewiseBound astar;
    std::vector<CompiledPiece> a_h;
    std::vector<CompiledPiece> astar_h;
    std::vector<Knot> knots;  // ascending, union of both breakpoint lists

    /// Built once per (mode, family_max); safe to call concurrently.
    static const TableSet& get(HypothesisMode mode, int family_max = kDefaultFamilyMax);
};

}  // namespace mubound
