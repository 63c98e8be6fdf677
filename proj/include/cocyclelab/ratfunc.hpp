#pragma once

#include <optional>
#include <span>
#include <string>

#include "cocyclelab/poly.hpp"

namespace cocyclelab {

// Reduced rational function num/den: gcd(num, den) is a unit and den is monic
// under the graded-lex order (so a polynomial value always has den == 1).
class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(num_.chart(), Rational(1))) {}
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const Chart& chart, const Rational& c) {
        return RatFunc(Poly::constant(chart, c));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Chart& chart() const { return num_.chart(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    const Poly& as_poly() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    RatFunc differentiate(size_t var) const;

    // Exact evaluation; nullopt where the denominator vanishes.
    std::optional<Rational> evaluate(std::span<const Rational> point) const;

    bool operator==(const RatFunc& other) const { return num_ == other.num_ && den_ == other.den_; }

    std::string str() const;

  private:
    Poly num_;
    Poly den_;
};

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
RatFunc operator/(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const Rational& c, const RatFunc& f);

} // namespace cocyclelab
