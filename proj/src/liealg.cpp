#include "cocyclelab/liealg.hpp"

namespace cocyclelab {

LieAlgebra::LieAlgebra(size_t dim, std::vector<Rational> constants)
  : dim_(dim), c_(std::move(constants)) {
    if (c_.size() != dim_ * dim_ * dim_)
        throw BadStructureConstants("structure constant table has wrong size");
    validate();
}

void LieAlgebra::validate() const {
    for (size_t a = 0; a < dim_; ++a)
        for (size_t b = 0; b < dim_; ++b)
            for (size_t c = 0; c < dim_; ++c)
                if (structure_constant(a, b, c) != -structure_constant(b, a, c))
                    throw BadStructureConstants("structure constants are not antisymmetric");
    // Jacobi: [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 on all basis triples.
    for (size_t a = 0; a < dim_; ++a) {
        for (size_t b = 0; b < dim_; ++b) {
            for (size_t c = 0; c < dim_; ++c) {
                for (size_t e = 0; e < dim_; ++e) {
                    Rational acc(0);
                    for (size_t d = 0; d < dim_; ++d) {
                        acc += structure_constant(a, b, d) * structure_constant(d, c, e);
                        acc += structure_constant(b, c, d) * structure_constant(d, a, e);
                        acc += structure_constant(c, a, d) * structure_constant(d, b, e);
                    }
                    if (acc != 0) throw BadStructureConstants("structure constants violate the Jacobi identity");
                }
            }
        }
    }
}

AlgebraVector LieAlgebra::bracket(std::span<const Rational> a, std::span<const Rational> b) const {
    if (a.size() != dim_ || b.size() != dim_)
        throw DimensionMismatch("algebra vector length != algebra dimension");
    AlgebraVector out(dim_, Rational(0));
    for (size_t i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            for (size_t c = 0; c < dim_; ++c) out[c] += a[i] * b[j] * structure_constant(i, j, c);
        }
    }
    return out;
}

AlgebraVector LieAlgebra::basis_bracket(size_t a, size_t b) const {
    AlgebraVector out(dim_, Rational(0));
    for (size_t c = 0; c < dim_; ++c) out[c] = structure_constant(a, b, c);
    return out;
}

LieAlgebraBuilder& LieAlgebraBuilder::set_bracket(size_t a, size_t b, const AlgebraVector& value) {
    if (a >= dim_ || b >= dim_ || value.size() != dim_)
        throw BadStructureConstants("bracket entry out of range");
    for (size_t c = 0; c < dim_; ++c) {
        c_[(a * dim_ + b) * dim_ + c] = value[c];
        c_[(b * dim_ + a) * dim_ + c] = -value[c];
    }
    return *this;
}

ActionMap::ActionMap(LieAlgebra algebra, Chart chart, std::vector<VectorField> generators,
                     bool antihomomorphism)
  : algebra_(std::move(algebra)), chart_(std::move(chart)), gens_(std::move(generators)) {
    if (gens_.size() != algebra_.dimension())
        throw DimensionMismatch("one generator per basis element required");
    for (VectorField& g : gens_) {
        require_same_chart(chart_, g.chart());
        if (antihomomorphism) g = -g;
    }
    for (size_t a = 0; a < gens_.size(); ++a) {
        for (size_t b = a + 1; b < gens_.size(); ++b) {
            VectorField lhs = lie_bracket(gens_[a], gens_[b]);
            VectorField rhs(chart_);
            AlgebraVector ab = algebra_.basis_bracket(a, b);
            for (size_t c = 0; c < gens_.size(); ++c)
                if (ab[c] != 0) rhs += ab[c] * gens_[c];
            if (!(lhs == rhs))
                throw NotHomomorphism("generators do not represent the bracket on basis pair (" +
                                      std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
        }
    }
}

VectorField ActionMap::generator(std::span<const Rational> a) const {
    if (a.size() != algebra_.dimension())
        throw DimensionMismatch("algebra vector length != algebra dimension");
    VectorField out(chart_);
    for (size_t i = 0; i < gens_.size(); ++i)
        if (a[i] != 0) out += a[i] * gens_[i];
    return out;
}

Poly ActionMap::module_action(size_t basis_index, const Poly& f) const {
    require_same_chart(chart_, f.chart());
    return -gens_.at(basis_index).apply(f);
}

Poly ActionMap::module_action(std::span<const Rational> a, const Poly& f) const {
    require_same_chart(chart_, f.chart());
    return -generator(a).apply(f);
}

ActionMap tangent_lift(const ActionMap& base_action) {
    const Chart& q = base_action.chart();
    Chart tq = tangent_chart(q);
    const size_t n = q.dimension();

    std::vector<VectorField> lifted;
    lifted.reserve(base_action.algebra().dimension());
    for (size_t g = 0; g < base_action.algebra().dimension(); ++g) {
        const VectorField& xi = base_action.basis_generator(g);
        VectorField lift(tq);
        for (size_t i = 0; i < n; ++i) {
            Poly xi_i = xi.component(i).inject(tq);
            lift.set_component(i, xi_i);
            Poly vel(tq);
            for (size_t j = 0; j < n; ++j) {
                Poly d = xi.component(i).differentiate(j).inject(tq);
                vel += d * Poly::variable(tq, n + j);
            }
            lift.set_component(n + i, vel);
        }
        lifted.push_back(std::move(lift));
    }
    return ActionMap(base_action.algebra(), tq, std::move(lifted));
}

SymplecticReport is_symplectic(const ActionMap& action, const KForm& omega) {
    require_same_chart(action.chart(), omega.chart());
    if (omega.degree() != 2) throw DimensionMismatch("symplectic check requires a 2-form");
    SymplecticReport report;
    for (size_t i = 0; i < action.algebra().dimension(); ++i) {
        bool ok = lie_derivative(action.basis_generator(i), omega).is_zero();
        report.per_basis.push_back(ok);
        report.all = report.all && ok;
    }
    return report;
}

} // namespace cocyclelab
