#pragma once

#include "mubound/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mubound {

inline constexpr std::uint64_t kDefaultSieveGuard = 200'000'000;
inline constexpr std::uint64_t kMaxSieveLimit = 1'000'000'000;

/// Von Mangoldt function on 1..limit with cumulative psi.
///
/// Stores a prime-power bitset, a prime bitset and psi at every 64th integer
/// as a double-double, so memory is about limit/4 bytes.
class LambdaSieve {
public:
    /// Segmented sieve. Throws LimitTooLarge if limit exceeds the guard
    /// (at most kMaxSieveLimit) and OutOfDomain if limit < 2.
    static LambdaSieve build(std::uint64_t limit, std::uint64_t guard = kDefaultSieveGuard);

    std::uint64_t limit() const { return limit_; }
    /// Lambda(n) for 1 <= n <= limit; OutOfRange otherwise.
    double lambda(std::uint64_t n) const;
    bool is_prime_power(std::uint64_t n) const;
    /// psi(n) = sum_{m <= n} Lambda(m) for 0 <= n <= limit.
    double psi(std::uint64_t n) const;

    /// Binary cache: "LAMS", version byte, limit (u64 LE), psi(0..limit) as f64 LE.
    void save(const std::string& path) const;
    static LambdaSieve load(const std::string& path);

private:
    friend double interval_sum(const LambdaSieve&, double, double);
    struct DD {
        double hi = 0, lo = 0;
    };
    DD psi_dd(std::uint64_t n) const;
    void finish();  // block sums from the bitsets

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> pp_;     // prime powers
    std::vector<std::uint64_t> prime_;  // primes
    std::vector<DD> block_;             // psi(64 b - 1), psi(-1) := 0
};

/// sum_{x < n <= x + y} Lambda(n). OutOfRange if x + y > limit or x, y < 0.
double interval_sum(const LambdaSieve& sieve, double x, double y);

struct ExceptionalScan {
    std::uint64_t X = 0;
    Rational theta;
    Rational delta;
    double step = 1;
    double measure_estimate = 0;
    std::uint64_t sample_count = 0;
    std::uint64_t exceptional_count = 0;
    bool sampled = false;  // step != 1
};

/// Samples x = X + i*step for 0 <= i < X/step and counts those with
/// |sum_{x<n<=x+y} Lambda(n) - y| >= delta*y, y = x^theta.
ExceptionalScan exceptional_measure(const LambdaSieve& sieve, std::uint64_t X, const Rational& theta,
                                    const Rational& delta, double step = 1);

// ---------------------------------------------------------------------------

struct ZeroSet {
    std::vector<double> ordinates;  // strictly increasing, positive
    std::string source;
    double max_T = 0;

    std::size_t size() const { return ordinates.size(); }
    /// Number of ordinates <= T.
    std::size_t count_up_to(double T) const;
};

/// One ordinate per line. ParseError (with line number) on malformed input,
/// OrderError when not strictly ascending, Io when unreadable.
ZeroSet load_zeros(const std::string& path);
ZeroSet parse_zeros(const std::string& text, const std::string& source = "<memory>");

/// Riemann-von Mangoldt main term (T/2pi) log(T/2pi) - T/2pi + 7/8.
double riemann_von_mangoldt(double T);

/// Real-part interval for S_I.
struct SigmaRange {
    double lo = 0;
    double hi = 1;
    bool lo_open = false;
    bool hi_open = false;
    bool contains(double s) const;
};

/// sum over zeros with |gamma| <= T and real part in I of ((x + x/tau)^rho - x^rho)/rho.
/// InsufficientZeros if T > max_T.
double s_interval_sum(const ZeroSet& zeros, double x, double tau, double T, const SigmaRange& I = {});

/// x - sum_{|gamma| <= T} x^rho/rho - log(2 pi) - log(1 - x^-2)/2.
double explicit_formula_psi(const ZeroSet& zeros, double x, double T);

inline constexpr std::size_t kDefaultEnergyCap = 5000;

/// Ordered quadruples from {+-gamma : gamma <= T} with |g1 + g2 - g3 - g4| <= 1.
/// TooManyZeros if more than cap ordinates lie below T.
std::uint64_t additive_energy(const ZeroSet& zeros, double T, std::size_t cap = kDefaultEnergyCap);

struct MomentEstimate {
    double mean = 0;
    double standard_error = 0;
    double T = 0;
    std::uint64_t samples = 0;
};

/// Monte Carlo mean of |S_[0,1](x)|^(2k) for x uniform in [X, 2X], with
/// tau = x^(1-theta) and T = min(X^(1-theta), max_T). Deterministic for a seed.
MomentEstimate moment_statistic(const ZeroSet& zeros, std::uint64_t X, const Rational& theta, int k,
                                std::uint64_t samples, std::uint64_t seed = 0x6d75626f756e64ULL);

}  // namespace mubound
