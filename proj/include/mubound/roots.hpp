#pragma once

#include "mubound/polynomial.hpp"

#include <optional>
#include <vector>

namespace mubound {

/// A real root of a polynomial: exact when it is rational or quadratic,
/// otherwise an isolating bracket [lo, hi] holding exactly one root.
struct RootLocation {
    BoundaryPoint lo;
    BoundaryPoint hi;
    bool exact = true;
};

/// Distinct real roots in the closed interval [lo, hi], ascending.
/// Degree <= 2 is solved in closed form; higher degrees are isolated with a
/// Sturm sequence and bisected to brackets narrower than `bracket_width`.
std::vector<RootLocation> real_roots(const Polynomial& p, const BoundaryPoint& lo, const BoundaryPoint& hi,
                                     double bracket_width = 1e-12);

/// Closed-form roots of a polynomial of degree <= 2, ascending.
std::vector<QuadraticNumber> quadratic_roots(const Polynomial& p);

}  // namespace mubound
