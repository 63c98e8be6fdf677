#pragma once

#include <optional>

#include "cocyclelab/liealg.hpp"

namespace cocyclelab {

// Alternating multilinear map Lie(G)^n -> C^inf(M) (polynomial model), stored
// on strictly increasing basis index tuples. Degree 0 is a single function.
class Cochain {
  public:
    Cochain(int degree, ActionMap action);

    int degree() const { return degree_; }
    const ActionMap& action() const { return action_; }
    const LieAlgebra& algebra() const { return action_.algebra(); }
    const Chart& chart() const { return action_.chart(); }

    Cochain& set_value(std::vector<int> basis_tuple, const Poly& value);
    // Value on a basis tuple in any order (permutation sign; repeats give 0).
    Poly value(std::vector<int> basis_tuple) const;
    // Multilinear alternating evaluation on arbitrary algebra vectors.
    Poly evaluate(std::span<const AlgebraVector> vectors) const;

    const std::map<std::vector<int>, Poly>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    Cochain operator-() const;
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);

    bool operator==(const Cochain& o) const {
        return degree_ == o.degree_ && values_ == o.values_;
    }

    std::string str() const;

  private:
    int degree_;
    ActionMap action_;
    std::map<std::vector<int>, Poly> values_;
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator*(const Rational& c, const Cochain& a);

// Standard Chevalley-Eilenberg coboundary for module coefficients; accepts
// degrees 0..2 (UnsupportedDegree otherwise).
Cochain coboundary(const Cochain& alpha);

struct CocycleCheck {
    bool ok = true;
    std::vector<int> witness_tuple; // basis tuple with nonzero coboundary value
    Poly witness_value;
};
CocycleCheck is_cocycle(const Cochain& alpha);

// Omega(a,b) = omega(X_a, X_b); requires d omega = 0 (NotClosed otherwise).
Cochain canonical_cocycle(const KForm& omega, const ActionMap& action);

// Searches a degree-1 beta with (d beta) = alpha whose values have total degree
// <= degree_bound, by exact linear algebra over the polynomial coefficient
// space. Absence within the bound is a certified answer (rank data retained).
struct CoboundarySolve {
    std::optional<Cochain> beta;
    int degree_bound = 0;
    size_t unknowns = 0;
    size_t rank = 0;
    size_t aug_rank = 0; // > rank certifies unsolvability within the bound
};
CoboundarySolve coboundary_solve(const Cochain& alpha, int degree_bound);

// Witness beta with alpha1 - alpha2 = d beta, when one exists within the bound.
CoboundarySolve cohomologous(const Cochain& alpha1, const Cochain& alpha2, int degree_bound);

// Element (a, f) of the extension Lie(G) x C^inf(M).
struct ExtensionElement {
    AlgebraVector algebra_part;
    Poly function_part;
};

// [(a,f),(b,g)]_alpha = ([a,b], a.g - b.f + alpha(a,b)).
ExtensionElement modified_bracket(const Cochain& alpha, const ExtensionElement& x,
                                  const ExtensionElement& y);

// Function part of [[x,y],z] + [[y,z],x] + [[z,x],y] under the modified
// bracket; vanishes on all triples iff alpha is a cocycle.
Poly jacobi_defect(const Cochain& alpha, const ExtensionElement& x, const ExtensionElement& y,
                   const ExtensionElement& z);

} // namespace cocyclelab
