#pragma once

#include "cocyclelab/forms.hpp"
#include "cocyclelab/linsolve.hpp"

namespace cocyclelab {

// Global orientation bundle. paper-A is the verbatim reading of the defining
// equations (i_{X_f} omega = df, dJ_a = i_{X_a} omega, {f,g} = omega(X_f, X_g));
// paper-B flips the orientation throughout (i_{X_f} omega = -df,
// dJ_a = -i_{X_a} omega, {f,g} = -omega(X_f, X_g)).
enum class SignConvention { PaperA, PaperB };

inline int orientation(SignConvention c) { return c == SignConvention::PaperA ? 1 : -1; }

inline const char* to_string(SignConvention c) {
    return c == SignConvention::PaperA ? "paper-A" : "paper-B";
}

Poly two_form_determinant(const KForm& omega);

// Hamiltonian vector field of f: i_X omega = sign * df. Components are exact
// rational functions; they are polynomial whenever det(omega) is a nonzero
// constant. nonconstant_determinant flags the structured warning (the result
// is valid off the vanishing locus of the determinant).
struct HamiltonianField {
    Chart chart;
    std::vector<RatFunc> components;
    bool nonconstant_determinant = false;

    bool is_polynomial() const;
    VectorField as_polynomial() const; // NonPolynomialResult when components are not Poly
};

HamiltonianField hamiltonian_field(const KForm& omega, const Poly& f,
                                   SignConvention conv = SignConvention::PaperA);
HamiltonianField hamiltonian_field(const KForm& omega, const RatFunc& f,
                                   SignConvention conv = SignConvention::PaperA);

// {f,g} = sign * omega(X_f, X_g); exact, antisymmetric, Jacobi for closed omega.
RatFunc poisson_bracket(const KForm& omega, const RatFunc& f, const RatFunc& g,
                        SignConvention conv = SignConvention::PaperA);
RatFunc poisson_bracket(const KForm& omega, const Poly& f, const Poly& g,
                        SignConvention conv = SignConvention::PaperA);

} // namespace cocyclelab
