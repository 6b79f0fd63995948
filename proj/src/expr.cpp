#include "mubound/expr.hpp"

#include "mubound/error.hpp"

#include <cctype>
#include <string>

namespace mubound {

namespace {

template <class Value>
struct Algebra;

template <>
struct Algebra<RationalFunction> {
    static RationalFunction number(const Rational& r) { return RationalFunction::constant(r); }
    static RationalFunction variable() {
        return RationalFunction(Polynomial::identity(), Polynomial::constant(1));
    }
    static RationalFunction sqrt_of(const RationalFunction&) {
        throw Error(ErrorCode::ParseError, "sqrt is not allowed in a formula");
    }
    static RationalFunction divide(const RationalFunction& a, const RationalFunction& b) {
        if (b.num().is_zero()) throw Error(ErrorCode::ParseError, "division by zero in formula");
        return a * RationalFunction(b.den(), b.num());
    }
};

template <>
struct Algebra<QuadraticNumber> {
    static QuadraticNumber number(const Rational& r) { return QuadraticNumber(r); }
    static QuadraticNumber variable() { throw Error(ErrorCode::ParseError, "variable s in a point expression"); }
    static QuadraticNumber sqrt_of(const QuadraticNumber& x) {
        if (!x.is_rational() || !x.rational_part().is_integer() || x.sign() < 0)
            throw Error(ErrorCode::ParseError, "sqrt needs a non-negative integer argument");
        return QuadraticNumber(Rational(0), Rational(1), x.rational_part().num());
    }
    static QuadraticNumber divide(const QuadraticNumber& a, const QuadraticNumber& b) {
        if (b.sign() == 0) throw Error(ErrorCode::ParseError, "division by zero in point");
        return a / b;
    }
};

template <class Value>
class Parser {
public:
    Parser(std::string_view text, std::optional<std::int64_t> n) : t_(text), n_(n) {}

    Value parse() {
        Value v = expr();
        skip();
        if (pos_ != t_.size()) fail("unexpected '" + std::string(1, t_[pos_]) + "'");
        return v;
    }

private:
    using A = Algebra<Value>;

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ParseError, "cannot parse '" + std::string(t_) + "': " + why);
    }

    void skip() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < t_.size() ? t_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Value expr() {
        Value v = term();
        for (;;) {
            if (accept('+')) v = v + term();
            else if (accept('-')) v = v - term();
            else return v;
        }
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
    }

    Value term() {
        Value v = unary();
        for (;;) {
            if (accept('*')) v = v * unary();
            else if (accept('/')) v = A::divide(v, unary());
            else if (starts_factor()) v = v * power();
            else return v;
        }
    }

    Value unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Value power() {
        Value base = primary();
        if (!accept('^')) return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent must be a non-negative integer");
        int e = std::stoi(std::string(t_.substr(start, pos_ - start)));
        Value out = A::number(Rational(1));
        for (int i = 0; i < e; ++i) out = out * base;
        return out;
    }

    Value primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return A::number(number());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < t_.size() && std::isalpha(static_cast<unsigned char>(t_[pos_]))) ++pos_;
            std::string_view id = t_.substr(start, pos_ - start);
            if (id == "s" || id == "sigma") return A::variable();
            if (id == "n") {
                if (!n_) fail("family index n is not bound");
                return A::number(Rational(*n_));
            }
            if (id == "sqrt") {
                if (!accept('(')) fail("sqrt needs '('");
                Value v = expr();
                if (!accept(')')) fail("missing ')'");
                return A::sqrt_of(v);
            }
            fail("unknown identifier '" + std::string(id) + "'");
        }
        fail(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
    }

    Rational number() {
        BigInt whole = 0;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_])))
            whole = whole * 10 + (t_[pos_++] - '0');
        if (pos_ < t_.size() && t_[pos_] == '.') {
            ++pos_;
            BigInt frac = 0, scale = 1;
            while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) {
                frac = frac * 10 + (t_[pos_++] - '0');
                scale *= 10;
            }
            return Rational(whole * scale + frac, scale);
        }
        return Rational(whole);
    }

    std::string_view t_;
    std::optional<std::int64_t> n_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_formula(std::string_view text, std::optional<std::int64_t> n) {
    return Parser<RationalFunction>(text, n).parse();
}

QuadraticNumber parse_point(std::string_view text, std::optional<std::int64_t> n) {
    return Parser<QuadraticNumber>(text, n).parse();
}

}  // namespace mubound
