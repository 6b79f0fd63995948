#pragma once

#include "mubound/quadratic.hpp"

#include <compare>
#include <string>

namespace mubound {

/// A QuadraticNumber or one of the two infinities.
class ExtendedReal {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtendedReal() : kind_(Kind::NegInf) {}
    ExtendedReal(const QuadraticNumber& v) : kind_(Kind::Finite), v_(v) {}  // NOLINT
    ExtendedReal(const Rational& v) : kind_(Kind::Finite), v_(v) {}         // NOLINT
    static ExtendedReal neg_inf() { return ExtendedReal(); }
    static ExtendedReal pos_inf() {
        ExtendedReal x;
        x.kind_ = Kind::PosInf;
        return x;
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    /// Only meaningful when finite.
    const QuadraticNumber& value() const { return v_; }

    double to_double() const;
    Interval enclose(unsigned precision = 50) const;
    std::string str() const;

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    static int compare(const ExtendedReal& a, const ExtendedReal& b);

private:
    Kind kind_;
    QuadraticNumber v_;
};

inline const ExtendedReal& max(const ExtendedReal& a, const ExtendedReal& b) { return a < b ? b : a; }
inline const ExtendedReal& min(const ExtendedReal& a, const ExtendedReal& b) { return b < a ? b : a; }

}  // namespace mubound
