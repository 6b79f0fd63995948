#include "mubound/extended.hpp"

#include <limits>

namespace mubound {

int ExtendedReal::compare(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.kind_ != b.kind_ || !a.is_finite()) {
        auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : (k == Kind::Finite ? 1 : 2); };
        int ra = rank(a.kind_), rb = rank(b.kind_);
        return ra < rb ? -1 : (ra > rb ? 1 : 0);
    }
    return QuadraticNumber::compare(a.v_, b.v_);
}

double ExtendedReal::to_double() const {
    switch (kind_) {
        case Kind::NegInf: return -std::numeric_limits<double>::infinity();
        case Kind::PosInf: return std::numeric_limits<double>::infinity();
        case Kind::Finite: break;
    }
    return v_.to_double();
}

Interval ExtendedReal::enclose(unsigned precision) const {
    if (!is_finite()) return Interval::point(to_double());
    return v_.enclose(precision);
}

std::string ExtendedReal::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        case Kind::Finite: break;
    }
    return v_.str();
}

}  // namespace mubound
