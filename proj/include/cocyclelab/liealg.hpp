#pragma once

#include <span>
#include <vector>

#include "cocyclelab/forms.hpp"

namespace cocyclelab {

using AlgebraVector = std::vector<Rational>;

// Finite-dimensional Lie algebra given by structure constants C^c_{ab}
// ([e_a, e_b] = sum_c C^c_{ab} e_c). Construction verifies antisymmetry and
// the Jacobi identity exactly.
class LieAlgebra {
  public:
    explicit LieAlgebra(size_t dim) : dim_(dim), c_(dim * dim * dim, Rational(0)) { validate(); }
    LieAlgebra(size_t dim, std::vector<Rational> constants);

    static LieAlgebra abelian(size_t dim) { return LieAlgebra(dim); }

    size_t dimension() const { return dim_; }
    const Rational& structure_constant(size_t a, size_t b, size_t c) const {
        return c_[(a * dim_ + b) * dim_ + c];
    }

    AlgebraVector bracket(std::span<const Rational> a, std::span<const Rational> b) const;
    AlgebraVector basis_bracket(size_t a, size_t b) const;

    bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

  private:
    void validate() const;

    size_t dim_;
    std::vector<Rational> c_; // C^c_{ab} at (a*dim + b)*dim + c
};

// Builder: only the pairs a < b need to be given; the rest follow by
// antisymmetry (omitted pairs default to zero).
class LieAlgebraBuilder {
  public:
    explicit LieAlgebraBuilder(size_t dim) : dim_(dim), c_(dim * dim * dim, Rational(0)) {}
    LieAlgebraBuilder& set_bracket(size_t a, size_t b, const AlgebraVector& value);
    LieAlgebra build() const { return LieAlgebra(dim_, c_); }

  private:
    size_t dim_;
    std::vector<Rational> c_;
};

// Basis-to-generator map a -> X_a on a chart. Construction verifies the
// homomorphism property [X_a, X_b] = X_{[a,b]} exactly; the antihomomorphism
// flag accepts the opposite convention by negating generators internally.
class ActionMap {
  public:
    ActionMap(LieAlgebra algebra, Chart chart, std::vector<VectorField> generators,
              bool antihomomorphism = false);

    const LieAlgebra& algebra() const { return algebra_; }
    const Chart& chart() const { return chart_; }

    const VectorField& basis_generator(size_t i) const { return gens_.at(i); }
    VectorField generator(std::span<const Rational> a) const;

    // a . f = -L_{X_a} f.
    Poly module_action(size_t basis_index, const Poly& f) const;
    Poly module_action(std::span<const Rational> a, const Poly& f) const;

  private:
    LieAlgebra algebra_;
    Chart chart_;
    std::vector<VectorField> gens_;
};

// Lift of a base-chart action to the tangent chart: xi^i d/dq_i lifts to
// xi^i d/dq_i + (d xi^i/d q_j v_j) d/dv_i.
ActionMap tangent_lift(const ActionMap& base_action);

struct SymplecticReport {
    std::vector<bool> per_basis; // L_{X_i} omega == 0, per basis element
    bool all = true;
};
SymplecticReport is_symplectic(const ActionMap& action, const KForm& omega);

} // namespace cocyclelab
