#include "mubound/empirical.hpp"

#include "mubound/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

namespace mubound {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Neumaier compensated sum.
class Accumulator {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0, comp_ = 0;
};

bool test_bit(const std::vector<std::uint64_t>& bits, std::uint64_t n) { return (bits[n >> 6] >> (n & 63)) & 1U; }
void set_bit(std::vector<std::uint64_t>& bits, std::uint64_t n) { bits[n >> 6] |= std::uint64_t{1} << (n & 63); }

// Exact integer k-th root if n is a perfect k-th power, else 0.
std::uint64_t exact_root(std::uint64_t n, int k) {
    auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
    for (std::uint64_t c = r > 0 ? r - 1 : 0; c <= r + 1; ++c) {
        if (c < 2) continue;
        std::uint64_t p = 1;
        bool over = false;
        for (int i = 0; i < k && !over; ++i) {
            if (p > n / c) over = true;
            p *= c;
        }
        if (!over && p == n) return c;
    }
    return 0;
}

void put_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u64(std::istream& is, std::uint64_t& v) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), 8)) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{b[i]} << (8 * i);
    return true;
}

constexpr unsigned char kCacheVersion = 1;

}  // namespace

LambdaSieve LambdaSieve::build(std::uint64_t limit, std::uint64_t guard) {
    if (limit < 2) throw Error(ErrorCode::OutOfDomain, "sieve limit must be at least 2");
    if (limit > std::min(guard, kMaxSieveLimit))
        throw Error(ErrorCode::LimitTooLarge, "sieve limit " + std::to_string(limit) + " exceeds the memory guard");
    LambdaSieve s;
    s.limit_ = limit;
    const std::size_t words = limit / 64 + 1;
    s.pp_.assign(words, 0);
    s.prime_.assign(words, 0);

    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<std::uint8_t> small(root + 1, 1);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
    }

    constexpr std::uint64_t kSegment = 1 << 18;
    std::vector<std::uint8_t> seg(kSegment);
    for (std::uint64_t lo = 0; lo <= limit; lo += kSegment) {
        const std::uint64_t hi = std::min(limit + 1, lo + kSegment);
        std::fill(seg.begin(), seg.end(), 1);
        for (std::uint64_t p : base) {
            if (p * p >= hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t m = start; m < hi; m += p) seg[m - lo] = 0;
        }
        for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n < hi; ++n) {
            if (!seg[n - lo]) continue;
            set_bit(s.prime_, n);
            set_bit(s.pp_, n);
        }
    }
    for (std::uint64_t p : base) {
        if (p > limit / p) break;
        for (std::uint64_t m = p * p;; m *= p) {
            set_bit(s.pp_, m);
            if (m > limit / p) break;
        }
    }
    s.finish();
    return s;
}

void LambdaSieve::finish() {
    block_.assign(limit_ / 64 + 2, DD{});
    DD run;
    for (std::uint64_t w = 0; w < pp_.size(); ++w) {
        block_[w] = run;
        std::uint64_t bits = pp_[w];
        while (bits) {
            std::uint64_t n = w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
            bits &= bits - 1;
            double v = lambda(n);
            double t = run.hi + v;
            double bb = t - run.hi;
            run.lo += (run.hi - (t - bb)) + (v - bb);
            run.hi = t;
        }
    }
    block_[pp_.size()] = run;
}

double LambdaSieve::lambda(std::uint64_t n) const {
    if (n == 0 || n > limit_) throw Error(ErrorCode::OutOfRange, "n = " + std::to_string(n) + " outside the sieve");
    if (!test_bit(pp_, n)) return 0;
    if (test_bit(prime_, n)) return std::log(static_cast<double>(n));
    // Largest k first, so the root is prime.
    for (int k = 63 - std::countl_zero(n); k >= 2; --k)
        if (std::uint64_t r = exact_root(n, k)) return std::log(static_cast<double>(r));
    return std::log(static_cast<double>(n));
}

bool LambdaSieve::is_prime_power(std::uint64_t n) const {
    if (n == 0 || n > limit_) throw Error(ErrorCode::OutOfRange, "n = " + std::to_string(n) + " outside the sieve");
    return test_bit(pp_, n);
}

LambdaSieve::DD LambdaSieve::psi_dd(std::uint64_t n) const {
    DD r = block_[n / 64];
    std::uint64_t w = pp_[n / 64];
    unsigned upto = static_cast<unsigned>(n % 64);
    if (upto < 63) w &= (std::uint64_t{2} << upto) - 1;
    while (w) {
        std::uint64_t m = (n / 64) * 64 + static_cast<std::uint64_t>(std::countr_zero(w));
        w &= w - 1;
        double v = lambda(m);
        double t = r.hi + v;
        double bb = t - r.hi;
        r.lo += (r.hi - (t - bb)) + (v - bb);
        r.hi = t;
    }
    return r;
}

double LambdaSieve::psi(std::uint64_t n) const {
    if (n > limit_) throw Error(ErrorCode::OutOfRange, "psi beyond the sieve limit");
    DD d = psi_dd(n);
    return d.hi + d.lo;
}

void LambdaSieve::save(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorCode::Io, "cannot write " + path);
    os.write("LAMS", 4);
    os.put(static_cast<char>(kCacheVersion));
    put_u64(os, limit_);
    for (std::uint64_t n = 0; n <= limit_; ++n) put_u64(os, std::bit_cast<std::uint64_t>(psi(n)));
    if (!os) throw Error(ErrorCode::Io, "write failed for " + path);
}

LambdaSieve LambdaSieve::load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorCode::Io, "cannot read " + path);
    char magic[4];
    char version = 0;
    std::uint64_t limit = 0;
    if (!is.read(magic, 4) || std::memcmp(magic, "LAMS", 4) != 0 || !is.get(version) ||
        static_cast<unsigned char>(version) != kCacheVersion || !get_u64(is, limit) || limit < 2 ||
        limit > kMaxSieveLimit)
        throw Error(ErrorCode::Io, path + " is not a sieve cache");
    LambdaSieve s;
    s.limit_ = limit;
    s.pp_.assign(limit / 64 + 1, 0);
    s.prime_.assign(limit / 64 + 1, 0);
    double prev = 0;
    for (std::uint64_t n = 0; n <= limit; ++n) {
        std::uint64_t raw = 0;
        if (!get_u64(is, raw)) throw Error(ErrorCode::Io, path + " is truncated");
        double cur = std::bit_cast<double>(raw);
        double d = cur - prev;
        prev = cur;
        if (n == 0 || d < 0.5) continue;  // log 2 is the smallest nonzero value
        set_bit(s.pp_, n);
        if (std::fabs(d - std::log(static_cast<double>(n))) < 1e-3) set_bit(s.prime_, n);
    }
    s.finish();
    return s;
}

double interval_sum(const LambdaSieve& sieve, double x, double y) {
    if (!(x >= 0) || !(y >= 0)) throw Error(ErrorCode::OutOfRange, "interval must have x, y >= 0");
    if (x + y > static_cast<double>(sieve.limit()))
        throw Error(ErrorCode::OutOfRange, "interval (x, x+y] exceeds the sieve limit");
    auto a = static_cast<std::uint64_t>(std::floor(x));
    auto b = static_cast<std::uint64_t>(std::floor(x + y));
    if (b <= a) return 0;
    auto A = sieve.psi_dd(a);
    auto B = sieve.psi_dd(b);
    return (B.hi - A.hi) + (B.lo - A.lo);
}

ExceptionalScan exceptional_measure(const LambdaSieve& sieve, std::uint64_t X, const Rational& theta,
                                    const Rational& delta, double step) {
    if (X < 1) throw Error(ErrorCode::OutOfDomain, "X must be positive");
    if (!(step > 0)) throw Error(ErrorCode::OutOfDomain, "step must be positive");
    if (theta.sign() <= 0 || theta > Rational(1)) throw Error(ErrorCode::OutOfDomain, "theta outside (0, 1]");
    if (delta.sign() < 0) throw Error(ErrorCode::OutOfDomain, "delta must be non-negative");
    const double th = theta.to_double();
    const double dl = delta.to_double();
    const double top = 2.0 * static_cast<double>(X);
    if (top + std::pow(top, th) > static_cast<double>(sieve.limit()))
        throw Error(ErrorCode::OutOfRange, "scan needs a sieve up to 2X + (2X)^theta");

    ExceptionalScan r;
    r.X = X;
    r.theta = theta;
    r.delta = delta;
    r.step = step;
    r.sampled = step != 1;
    const double Xd = static_cast<double>(X);
    for (std::uint64_t i = 0; static_cast<double>(i) < Xd / step; ++i) {
        double x = Xd + static_cast<double>(i) * step;
        double y = std::pow(x, th);
        double s = interval_sum(sieve, x, y);
        ++r.sample_count;
        if (std::fabs(s - y) >= dl * y) ++r.exceptional_count;
    }
    r.measure_estimate = step * static_cast<double>(r.exceptional_count);
    return r;
}

// ---------------------------------------------------------------------------

std::size_t ZeroSet::count_up_to(double T) const {
    return static_cast<std::size_t>(std::upper_bound(ordinates.begin(), ordinates.end(), T) - ordinates.begin());
}

ZeroSet parse_zeros(const std::string& text, const std::string& source) {
    ZeroSet z;
    z.source = source;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        auto e = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(b, e - b + 1);
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size() || !std::isfinite(v) || v <= 0)
            throw Error(ErrorCode::ParseError,
                        source + ":" + std::to_string(lineno) + ": malformed ordinate '" + tok + "'");
        if (!z.ordinates.empty() && !(v > z.ordinates.back()))
            throw Error(ErrorCode::OrderError,
                        source + ":" + std::to_string(lineno) + ": ordinates must be strictly ascending");
        z.ordinates.push_back(v);
    }
    z.max_T = z.ordinates.empty() ? 0 : z.ordinates.back();
    return z;
}

ZeroSet load_zeros(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorCode::Io, "cannot read zeros file " + path);
    std::stringstream buf;
    buf << is.rdbuf();
    return parse_zeros(buf.str(), path);
}

double riemann_von_mangoldt(double T) {
    double u = T / (2 * kPi);
    return u * std::log(u) - u + 7.0 / 8.0;
}

bool SigmaRange::contains(double s) const {
    bool above = lo_open ? s > lo : s >= lo;
    bool below = hi_open ? s < hi : s <= hi;
    return above && below;
}

namespace {

void require_zeros(const ZeroSet& zeros, double T) {
    if (T > zeros.max_T && T >= (zeros.ordinates.empty() ? 0.0 : zeros.ordinates.front()))
        throw Error(ErrorCode::InsufficientZeros,
                    "T = " + std::to_string(T) + " exceeds the largest ordinate " + std::to_string(zeros.max_T));
}

// 2 Re(x^rho / rho) for rho = 1/2 + i gamma.
double paired_term(double log_x, double gamma) {
    std::complex<double> rho(0.5, gamma);
    return 2.0 * (std::exp(rho * log_x) / rho).real();
}

}  // namespace

double s_interval_sum(const ZeroSet& zeros, double x, double tau, double T, const SigmaRange& I) {
    if (!(x > 0) || !(tau > 0)) throw Error(ErrorCode::OutOfDomain, "x and tau must be positive");
    require_zeros(zeros, T);
    if (!I.contains(0.5)) return 0;
    const double l1 = std::log(x + x / tau);
    const double l0 = std::log(x);
    Accumulator acc;
    for (double g : zeros.ordinates) {
        if (g > T) break;
        acc.add(paired_term(l1, g) - paired_term(l0, g));
    }
    return acc.value();
}

double explicit_formula_psi(const ZeroSet& zeros, double x, double T) {
    if (!(x > 2)) throw Error(ErrorCode::OutOfDomain, "explicit formula needs x > 2");
    require_zeros(zeros, T);
    const double lx = std::log(x);
    Accumulator acc;
    acc.add(x);
    acc.add(-std::log(2 * kPi));
    acc.add(-0.5 * std::log1p(-1.0 / (x * x)));
    for (double g : zeros.ordinates) {
        if (g > T) break;
        acc.add(-paired_term(lx, g));
    }
    return acc.value();
}

namespace {

// #{(p, q) : |p - q| <= 1} for sorted p, q.
std::uint64_t window_pairs(const std::vector<double>& p, const std::vector<double>& q) {
    std::uint64_t total = 0;
    std::size_t j = 0, k = 0;
    for (double v : p) {
        while (j < q.size() && v - q[j] > 1.0) ++j;
        if (k < j) k = j;
        while (k < q.size() && !(q[k] - v > 1.0)) ++k;
        total += k - j;
    }
    return total;
}

}  // namespace

std::uint64_t additive_energy(const ZeroSet& zeros, double T, std::size_t cap) {
    const std::size_t n = zeros.count_up_to(T);
    if (n > cap)
        throw Error(ErrorCode::TooManyZeros,
                    std::to_string(n) + " ordinates below T exceed the energy cap " + std::to_string(cap));
    std::vector<double> s;
    s.reserve(2 * n);
    for (std::size_t i = n; i-- > 0;) s.push_back(-zeros.ordinates[i]);
    for (std::size_t i = 0; i < n; ++i) s.push_back(zeros.ordinates[i]);

    // Ordered pair sums split into the diagonal (weight 1) and unordered
    // off-diagonal pairs (weight 2).
    std::vector<double> diag, off;
    diag.reserve(s.size());
    off.reserve(s.size() * (s.size() - (s.empty() ? 0 : 1)) / 2);
    for (std::size_t i = 0; i < s.size(); ++i) {
        diag.push_back(s[i] + s[i]);
        for (std::size_t j = i + 1; j < s.size(); ++j) off.push_back(s[i] + s[j]);
    }
    std::sort(diag.begin(), diag.end());
    std::sort(off.begin(), off.end());
    return window_pairs(diag, diag) + 4 * window_pairs(diag, off) + 4 * window_pairs(off, off);
}

MomentEstimate moment_statistic(const ZeroSet& zeros, std::uint64_t X, const Rational& theta, int k,
                                std::uint64_t samples, std::uint64_t seed) {
    if (k != 1 && k != 2) throw Error(ErrorCode::OutOfDomain, "moment order k must be 1 or 2");
    if (samples < 1) throw Error(ErrorCode::OutOfDomain, "samples must be >= 1");
    if (X < 1) throw Error(ErrorCode::OutOfDomain, "X must be positive");
    if (theta.sign() <= 0 || theta >= Rational(1)) throw Error(ErrorCode::OutOfDomain, "theta outside (0, 1)");
    const double th = theta.to_double();
    const double Xd = static_cast<double>(X);
    MomentEstimate m;
    m.T = std::min(std::pow(Xd, 1 - th), zeros.max_T);
    m.samples = samples;

    std::mt19937_64 rng(seed);
    double mean = 0, m2 = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        double x = Xd + Xd * u;
        double s = s_interval_sum(zeros, x, std::pow(x, 1 - th), m.T);
        double v = std::pow(std::fabs(s), 2 * k);
        double d = v - mean;
        mean += d / static_cast<double>(i + 1);
        m2 += d * (v - mean);
    }
    m.mean = mean;
    m.standard_error = samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples)) : 0;
    return m;
}

}  // namespace mubound
