#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cocyclelab/chart.hpp"
#include "cocyclelab/rational.hpp"

namespace cocyclelab {

using Exponents = std::vector<unsigned>;

// Graded lexicographic order over the chart's declared variable order.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size() && i < b.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return a.size() < b.size();
    }
};

// Exact multivariate polynomial over the rationals on a fixed chart.
// Canonical form: no zero coefficients stored; exponent vectors have length
// chart.size(); equality is chart equality plus identical term maps.
class Poly {
  public:
    using Terms = std::map<Exponents, Rational, GradedLexLess>;

    Poly() = default;
    explicit Poly(Chart chart) : chart_(std::move(chart)) {}

    static Poly constant(const Chart& chart, const Rational& c);
    static Poly variable(const Chart& chart, size_t index);
    static Poly variable(const Chart& chart, std::string_view name);

    const Chart& chart() const { return chart_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;
    unsigned total_degree() const; // 0 for constants and for the zero polynomial
    unsigned degree_in(size_t var) const;
    bool depends_on(size_t var) const { return degree_in(var) > 0; }

    // Coefficient of the graded-lex leading term (0 for the zero polynomial).
    Rational leading_coefficient() const;

    Poly& add_term(Exponents exps, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);

    Poly differentiate(size_t var) const;
    Poly differentiate(std::string_view var) const;

    Rational evaluate(std::span<const Rational> point) const;
    double evaluate_double(std::span<const double> point) const;

    // Substitutes images[i] (all on one target chart) for variable i.
    Poly substitute(std::span<const Poly> images) const;
    // Re-expresses the polynomial on a chart containing all its variables by name.
    Poly inject(const Chart& super) const;

    bool operator==(const Poly& other) const;

    // Canonical rendering, descending graded-lex, explicit `*` and `^`.
    std::string str() const;

  private:
    Chart chart_;
    Terms terms_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& c, const Poly& p);
Poly operator*(const Poly& p, const Rational& c);
Poly pow(const Poly& p, unsigned e);

// Exact division: q with p = q * d, or nullopt when d does not divide p.
std::optional<Poly> try_divide(const Poly& p, const Poly& d);
Poly divide_exact(const Poly& p, const Poly& d);

// Multivariate gcd over the rationals (primitive PRS), normalized so the
// graded-lex leading coefficient is 1. gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace cocyclelab
