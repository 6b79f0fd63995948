#pragma once

#include "mubound/extended.hpp"
#include "mubound/polynomial.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mubound {

/// One formula on the half-open domain [lo, hi). A missing formula means the
/// bound is -infinity there (no zeros at all).
struct Piece {
    BoundaryPoint lo;
    BoundaryPoint hi;
    std::optional<RationalFunction> formula;
    std::string provenance;

    bool is_neg_inf() const { return !formula.has_value(); }
    /// Value of this piece's formula (or its limit) at a point of [lo, hi].
    ExtendedReal value_at(const BoundaryPoint& s) const;
};

/// Ordered, abutting pieces tiling [lo, cap).
class PiecewiseBound {
public:
    PiecewiseBound() = default;
    /// Throws DomainMismatch unless the pieces are non-empty, sorted and abut exactly.
    explicit PiecewiseBound(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }
    const BoundaryPoint& lo() const { return pieces_.front().lo; }
    const BoundaryPoint& cap() const { return pieces_.back().hi; }

    /// Index of the piece with lo <= s < hi; OutOfDomain outside [lo, cap).
    std::size_t locate(const BoundaryPoint& s) const;
    /// Index of the piece whose closure contains [a, b] for a < b.
    std::size_t locate_cell(const BoundaryPoint& a, const BoundaryPoint& b) const;
    /// Interior breakpoints (shared piece endpoints), ascending.
    std::vector<BoundaryPoint> breakpoints() const;

    /// Restriction to [a, b) with lo <= a < b <= cap.
    PiecewiseBound restrict(const BoundaryPoint& a, const BoundaryPoint& b) const;

private:
    std::vector<Piece> pieces_;
};

/// Upper-regularized value: at a shared breakpoint the larger of the two
/// adjacent formula values, otherwise the containing piece's value.
ExtendedReal evaluate_upper(const PiecewiseBound& pw, const BoundaryPoint& s);

/// Multiply every finite piece by k > 0.
PiecewiseBound scale(const PiecewiseBound& pw, const Rational& k);

/// Pointwise minimum on the common refinement. Crossings are inserted as exact
/// breakpoints when quadratic; otherwise an isolating bracket becomes its own
/// piece carrying the larger formula. Throws DomainMismatch on differing domains.
PiecewiseBound pointwise_min(const PiecewiseBound& a, const PiecewiseBound& b, double bracket_width = 1e-12);

/// Closed sigma interval; hi_open marks an interval that runs up to the
/// (excluded) cap of the domain.
struct SigmaInterval {
    BoundaryPoint lo;
    BoundaryPoint hi;
    bool hi_open = false;

    bool degenerate() const { return !hi_open && lo == hi; }
};

/// Maximal intervals of {s in [lo, cap) : evaluate_upper(pw, s) >= c}.
std::vector<SigmaInterval> feasible_region(const PiecewiseBound& pw, const Rational& c);

// ---------------------------------------------------------------------------
// Certified supremum

/// t(s) = alpha * h(s) + beta * s + gamma for an exact rational function h.
class ObjectiveTerm {
public:
    ObjectiveTerm(std::shared_ptr<const RationalFunction> h, std::shared_ptr<const RationalEnclosure> compiled,
                  const Rational& alpha, const Rational& beta, const Rational& gamma);
    /// Convenience: t = f.
    explicit ObjectiveTerm(const RationalFunction& f);

    Interval operator()(const Interval& x) const;
    QuadraticNumber exact(const QuadraticNumber& s) const;

private:
    std::shared_ptr<const RationalFunction> h_;
    std::shared_ptr<const RationalEnclosure> enc_;
    Rational alpha_, beta_, gamma_;
    Interval ia_, ib_, ig_;
};

/// Closed cell [lo, hi] on which the objective is the minimum of its terms.
struct SupCell {
    BoundaryPoint lo;
    BoundaryPoint hi;
    std::vector<ObjectiveTerm> terms;
};

/// A point whose (exactly known) objective value belongs to the supremum.
struct SupCandidate {
    BoundaryPoint at;
    ExtendedReal value;
    int active = 0;
};

struct SupOptions {
    Rational tol = Rational(1, 1000000000);
    std::size_t node_budget = 4'000'000;
};

struct SupResult {
    double upper;  // -inf for an empty supremum
    double lower;
    std::optional<double> witness;
    std::optional<BoundaryPoint> witness_exact;
    int active = -1;  // index of the minimizing term at the witness
    std::size_t nodes = 0;
};

/// Interval branch and bound: lower <= sup <= upper and upper - lower <= tol.
/// Throws NonConvergence when the node budget is exhausted.
SupResult certified_sup(const std::vector<SupCell>& cells, const std::vector<SupCandidate>& candidates,
                        const SupOptions& options = {});

/// Supremum of one rational function over a union of closed intervals.
SupResult certified_sup(const RationalFunction& f, const std::vector<SigmaInterval>& region,
                        const Rational& tol);

}  // namespace mubound
