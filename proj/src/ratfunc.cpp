#include "cocyclelab/ratfunc.hpp"

namespace cocyclelab {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_chart(num_.chart(), den_.chart());
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.chart(), Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

const Poly& RatFunc::as_poly() const {
    if (!is_polynomial()) throw NonPolynomialResult("value is not polynomial: " + str());
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

// Cross-reduction by denominator gcds keeps intermediate products small; the
// constructor performs the final reduction.
RatFunc& RatFunc::operator+=(const RatFunc& o) {
    Poly g = poly_gcd(den_, o.den_);
    if (g.is_constant()) {
        *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    } else {
        Poly d1 = divide_exact(den_, g);
        Poly d2 = divide_exact(o.den_, g);
        *this = RatFunc(num_ * d2 + o.num_ * d1, den_ * d2);
    }
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    *this += -o;
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : divide_exact(num_, g1);
    Poly d2 = g1.is_constant() ? o.den_ : divide_exact(o.den_, g1);
    Poly n2 = g2.is_constant() ? o.num_ : divide_exact(o.num_, g2);
    Poly d1 = g2.is_constant() ? den_ : divide_exact(den_, g2);
    *this = RatFunc(n1 * n2, d1 * d2);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    *this *= RatFunc(o.den_, o.num_);
    return *this;
}

RatFunc RatFunc::differentiate(size_t var) const {
    return RatFunc(num_.differentiate(var) * den_ - num_ * den_.differentiate(var), den_ * den_);
}

std::optional<Rational> RatFunc::evaluate(std::span<const Rational> point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) return std::nullopt;
    return num_.evaluate(point) / d;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    RatFunc out = a;
    out += b;
    return out;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    RatFunc out = a;
    out -= b;
    return out;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    RatFunc out = a;
    out *= b;
    return out;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    RatFunc out = a;
    out /= b;
    return out;
}

RatFunc operator*(const Rational& c, const RatFunc& f) {
    return RatFunc(c * f.num(), f.den());
}

} // namespace cocyclelab
