#pragma once

#include "mubound/tables.hpp"

#include <optional>
#include <vector>

namespace mubound {

enum class ActiveMoment { L2, L4, Empty };
const char* moment_name(ActiveMoment m);  // "L2", "L4", "EMPTY"

struct MuOptions {
    Rational tol = Rational(1, 1000000000);
    bool refined = true;  // min of both moments; false uses the second moment only
    int family_max = kDefaultFamilyMax;
    std::size_t node_budget = 4'000'000;
};

struct MuBoundResult {
    Rational theta;
    HypothesisMode mode = HypothesisMode::Unconditional;
    double upper = 0;  // -inf when the feasible region is empty
    double lower = 0;
    std::optional<double> witness_sigma;
    std::optional<BoundaryPoint> witness_exact;  // set when the witness is a table point
    ActiveMoment active = ActiveMoment::Empty;
    Rational tol;
    bool refined = true;
    std::size_t nodes = 0;

    bool empty() const { return active == ActiveMoment::Empty; }
};

/// (1-theta)(1-s) A(s) + 2s - 1 with the mode's upper-regularized A.
ExtendedReal mu2(const BoundaryPoint& sigma, const Rational& theta, HypothesisMode mode,
                 int family_max = kDefaultFamilyMax);
/// (1-theta)(1-s) A*(s) + 4s - 3 with the mode's effective energy table.
ExtendedReal mu4(const BoundaryPoint& sigma, const Rational& theta, HypothesisMode mode,
                 int family_max = kDefaultFamilyMax);

/// Certified bound: sup over the feasible set {A(s) >= 1/(1-theta)} of
/// min(mu2, mu4) (or mu2 alone when not refined).
MuBoundResult mu_upper(const Rational& theta, HypothesisMode mode, const MuOptions& options = {});

struct CurvePoint {
    Rational theta;
    MuBoundResult bound;
    double gap_exponent;  // upper - theta, rounded up; -inf propagates
};

/// mu_upper on theta_min + (theta_max - theta_min) * i / steps, i = 0..steps.
/// Output is ordered by i regardless of the number of worker threads.
std::vector<CurvePoint> mu_curve(const Rational& theta_min, const Rational& theta_max, int steps,
                                 HypothesisMode mode, const MuOptions& options = {}, unsigned threads = 1);

/// mu_upper(theta) - theta, an upper bound for the prime gap exponent.
double gap_exponent(const Rational& theta, HypothesisMode mode, const MuOptions& options = {});

}  // namespace mubound
