#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cocyclelab/poly.hpp"

namespace cocyclelab {

// Polynomial-coefficient vector field on a chart; one component per geometric
// direction (parameters are scalars, not directions).
class VectorField {
  public:
    VectorField() = default;
    explicit VectorField(Chart chart)
      : chart_(std::move(chart)), comps_(chart_.dimension(), Poly(chart_)) {}
    VectorField(Chart chart, std::vector<Poly> comps);

    static VectorField basis(const Chart& chart, size_t direction);

    const Chart& chart() const { return chart_; }
    size_t dimension() const { return comps_.size(); }
    const Poly& component(size_t i) const { return comps_.at(i); }
    const std::vector<Poly>& components() const { return comps_; }
    void set_component(size_t i, Poly p);

    bool is_zero() const;

    // X(f) = sum_i X^i df/dx_i.
    Poly apply(const Poly& f) const;

    VectorField operator-() const;
    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);

    bool operator==(const VectorField& o) const { return chart_.same(o.chart_) && comps_ == o.comps_; }

    std::string str() const;

  private:
    Chart chart_;
    std::vector<Poly> comps_;
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(const Rational& c, const VectorField& x);
VectorField operator*(const Poly& f, const VectorField& x);

// [X,Y]^i = X(Y^i) - Y(X^i); antisymmetric, satisfies Jacobi.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

// Differential form of fixed degree with polynomial coefficients, stored on
// strictly increasing index tuples. Degrees above the chart dimension carry no
// tuples and are therefore the zero form.
class KForm {
  public:
    KForm() = default;
    KForm(Chart chart, int degree);

    static KForm from_function(Poly f);
    // dx^{i1} ^ ... ^ dx^{ik} for an arbitrary index tuple (sign-sorted).
    static KForm basis(const Chart& chart, std::vector<int> indices);

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Adds coeff * dx^{indices}; indices are sign-sorted, repeats drop out.
    KForm& add_term(std::vector<int> indices, const Poly& coeff);
    Poly coefficient(std::vector<int> indices) const;
    const std::map<std::vector<int>, Poly>& terms() const { return coeffs_; }

    KForm operator-() const;
    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);

    // Pairing with vector fields: dx^I(X_1..X_k) = det[X_m^{i_l}].
    Poly evaluate_on(std::span<const VectorField> fields) const;

    bool operator==(const KForm& o) const {
        return chart_.same(o.chart_) && degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }

    std::string str() const;

  private:
    Chart chart_;
    int degree_ = 0;
    std::map<std::vector<int>, Poly> coeffs_;
};

KForm operator+(const KForm& a, const KForm& b);
KForm operator-(const KForm& a, const KForm& b);
KForm operator*(const Poly& f, const KForm& a);
KForm operator*(const Rational& c, const KForm& a);

KForm wedge(const KForm& a, const KForm& b);
KForm exterior_derivative(const KForm& a);
// Degree drops by one; DegreeTooLow on 0-forms.
KForm interior_product(const VectorField& x, const KForm& a);
// Cartan formula L_X = i_X d + d i_X (i_X d alone on 0-forms).
KForm lie_derivative(const VectorField& x, const KForm& a);

// Polynomial map between charts: one component per geometric target variable;
// target parameters must exist in the source chart by name.
class PolyMap {
  public:
    PolyMap(Chart source, Chart target, std::vector<Poly> comps);

    static PolyMap identity(const Chart& chart);

    const Chart& source() const { return source_; }
    const Chart& target() const { return target_; }
    const Poly& component(size_t i) const { return comps_.at(i); }
    const std::vector<Poly>& components() const { return comps_; }

    // Full substitution images (geometric components + parameters by name).
    std::vector<Poly> images() const;

  private:
    Chart source_;
    Chart target_;
    std::vector<Poly> comps_;
};

Poly pullback(const PolyMap& phi, const Poly& f);
KForm pullback(const PolyMap& phi, const KForm& a);

// Antisymmetric coefficient matrix of a 2-form: A[i][j] = omega(d/dx_i, d/dx_j)
// over the chart's geometric directions, and its inverse construction.
std::vector<std::vector<Poly>> two_form_matrix(const KForm& omega);
KForm two_form_from_matrix(const Chart& chart, const std::vector<std::vector<Poly>>& a);

} // namespace cocyclelab
