#include "cocyclelab/symplectic.hpp"

namespace cocyclelab {

Poly two_form_determinant(const KForm& omega) {
    return poly_determinant(two_form_matrix(omega));
}

bool HamiltonianField::is_polynomial() const {
    for (const RatFunc& c : components)
        if (!c.is_polynomial()) return false;
    return true;
}

VectorField HamiltonianField::as_polynomial() const {
    VectorField x(chart);
    for (size_t i = 0; i < components.size(); ++i) x.set_component(i, components[i].as_poly());
    return x;
}

namespace {

// (i_X omega)_j = sum_i A_ij X^i with A the coefficient matrix, so the defining
// equation i_X omega = sign*df reads A^T X = sign * grad f.
HamiltonianField solve_hamiltonian(const KForm& omega, const std::vector<RatFunc>& grad,
                                   SignConvention conv) {
    if (omega.degree() != 2) throw DimensionMismatch("hamiltonian field requires a 2-form");
    const Chart& chart = omega.chart();
    const size_t n = chart.dimension();
    PolyMatrix a = two_form_matrix(omega);
    Poly det = poly_determinant(a);
    if (det.is_zero()) throw SingularForm("two-form is degenerate (determinant is the zero polynomial)");

    const Rational s(orientation(conv));
    std::vector<std::vector<RatFunc>> at(n, std::vector<RatFunc>(n));
    std::vector<RatFunc> rhs(n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) at[j][i] = RatFunc(a[i][j]);
        rhs[j] = s * grad[j];
    }

    HamiltonianField out{chart, gauss_solve(at, rhs), !det.is_constant()};

    // Back-substitution check of the defining equation.
    for (size_t j = 0; j < n; ++j) {
        RatFunc acc = -rhs[j];
        for (size_t i = 0; i < n; ++i) acc += RatFunc(a[i][j]) * out.components[i];
        if (!acc.is_zero()) throw Error("hamiltonian field verification failed");
    }
    return out;
}

} // namespace

HamiltonianField hamiltonian_field(const KForm& omega, const Poly& f, SignConvention conv) {
    require_same_chart(omega.chart(), f.chart());
    std::vector<RatFunc> grad;
    grad.reserve(omega.chart().dimension());
    for (size_t j = 0; j < omega.chart().dimension(); ++j) grad.emplace_back(f.differentiate(j));
    return solve_hamiltonian(omega, grad, conv);
}

HamiltonianField hamiltonian_field(const KForm& omega, const RatFunc& f, SignConvention conv) {
    require_same_chart(omega.chart(), f.chart());
    std::vector<RatFunc> grad;
    grad.reserve(omega.chart().dimension());
    for (size_t j = 0; j < omega.chart().dimension(); ++j) grad.push_back(f.differentiate(j));
    return solve_hamiltonian(omega, grad, conv);
}

RatFunc poisson_bracket(const KForm& omega, const RatFunc& f, const RatFunc& g, SignConvention conv) {
    HamiltonianField xf = hamiltonian_field(omega, f, conv);
    HamiltonianField xg = hamiltonian_field(omega, g, conv);
    PolyMatrix a = two_form_matrix(omega);
    const size_t n = omega.chart().dimension();
    RatFunc acc = RatFunc(Poly(omega.chart()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (a[i][j].is_zero()) continue;
            acc += RatFunc(a[i][j]) * xf.components[i] * xg.components[j];
        }
    return Rational(orientation(conv)) * acc;
}

RatFunc poisson_bracket(const KForm& omega, const Poly& f, const Poly& g, SignConvention conv) {
    return poisson_bracket(omega, RatFunc(f), RatFunc(g), conv);
}

} // namespace cocyclelab
