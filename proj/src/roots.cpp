#include "mubound/roots.hpp"

#include "mubound/error.hpp"

#include <algorithm>

namespace mubound {

std::vector<QuadraticNumber> quadratic_roots(const Polynomial& p) {
    switch (p.degree()) {
        case 1: return {QuadraticNumber(-p.coefficient(0) / p.coefficient(1))};
        case 2: break;
        default:
            if (p.degree() > 2) throw Error(ErrorCode::OutOfDomain, "quadratic_roots needs degree <= 2");
            return {};
    }
    const Rational a = p.coefficient(2), b = p.coefficient(1), c = p.coefficient(0);
    Rational disc = b * b - Rational(4) * a * c;
    Rational vertex = -b / (Rational(2) * a);
    if (disc.sign() < 0) return {};
    if (disc.is_zero()) return {QuadraticNumber(vertex)};
    // sqrt(N/M) = sqrt(N*M)/M
    BigInt n = disc.num(), m = disc.den();
    Rational half = Rational(1) / (Rational(2) * a * Rational(m));
    QuadraticNumber r1(vertex, half, n * m);
    QuadraticNumber r2(vertex, -half, n * m);
    if (r2 < r1) std::swap(r1, r2);
    return {r1, r2};
}

namespace {

class SturmChain {
public:
    explicit SturmChain(const Polynomial& p) {
        Polynomial sq = Polynomial::divmod(p, Polynomial::gcd(p, p.derivative())).first;
        chain_.push_back(sq);
        chain_.push_back(sq.derivative());
        while (!chain_.back().is_zero()) {
            Polynomial r = Polynomial::divmod(chain_[chain_.size() - 2], chain_.back()).second;
            chain_.push_back(-r);
        }
        chain_.pop_back();
    }

    const Polynomial& base() const { return chain_.front(); }

    int variations(const QuadraticNumber& x) const {
        int count = 0, last = 0;
        for (const auto& q : chain_) {
            int s = q(x).sign();
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    // Distinct roots in the open interval (a, b).
    int interior(const QuadraticNumber& a, const QuadraticNumber& b) const {
        int n = variations(a) - variations(b);
        if (base()(b).sign() == 0) --n;
        return n;
    }

private:
    std::vector<Polynomial> chain_;
};

double width(const QuadraticNumber& a, const QuadraticNumber& b) {
    return b.enclose(50).hi - a.enclose(50).lo;
}

void isolate(const SturmChain& chain, const QuadraticNumber& a, const QuadraticNumber& b, double eps,
             std::vector<RootLocation>& out) {
    int n = chain.interior(a, b);
    if (n <= 0) return;
    if (n == 1 && width(a, b) <= eps) {
        out.push_back({a, b, false});
        return;
    }
    QuadraticNumber m = rational_between(a, b);
    isolate(chain, a, m, eps, out);
    if (chain.base()(m).sign() == 0) out.push_back({m, m, true});
    isolate(chain, m, b, eps, out);
}

}  // namespace

std::vector<RootLocation> real_roots(const Polynomial& p, const BoundaryPoint& lo, const BoundaryPoint& hi,
                                     double bracket_width) {
    if (p.is_zero()) throw Error(ErrorCode::OutOfDomain, "roots of the zero polynomial");
    std::vector<RootLocation> out;
    if (hi < lo) return out;
    if (p.degree() <= 2) {
        for (auto& r : quadratic_roots(p))
            if (lo <= r && r <= hi) out.push_back({r, r, true});
        return out;
    }
    SturmChain chain(p);
    if (chain.base()(lo).sign() == 0) out.push_back({lo, lo, true});
    if (lo < hi) {
        isolate(chain, lo, hi, bracket_width, out);
        if (chain.base()(hi).sign() == 0) out.push_back({hi, hi, true});
    }
    return out;
}

}  // namespace mubound
