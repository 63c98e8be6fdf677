#include "cocyclelab/mechanics.hpp"

namespace cocyclelab {

namespace {

size_t base_dimension(const Chart& tangent) { return tangent.dimension() / 2; }

PolyMatrix fiber_hessian(const Chart& tangent, const Poly& lagrangian) {
    const size_t n = base_dimension(tangent);
    PolyMatrix w(n, std::vector<Poly>(n, Poly(tangent)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            w[i][j] = lagrangian.differentiate(n + i).differentiate(n + j);
    return w;
}

void check_tangent_layout(const Chart& tangent) {
    const size_t dim = tangent.dimension();
    if (dim == 0 || dim % 2 != 0)
        throw DimensionMismatch("tangent chart needs an even geometric dimension");
    const size_t n = dim / 2;
    for (size_t i = 0; i < n; ++i)
        if (tangent.var(i).kind != VarKind::Base || tangent.var(n + i).kind != VarKind::Velocity)
            throw DimensionMismatch("tangent chart layout must be q1..qn, v1..vn");
}

} // namespace

Poly substitute_geometric(const Poly& p, std::span<const Rational> geo_point) {
    const Chart& chart = p.chart();
    if (geo_point.size() != chart.dimension())
        throw DimensionMismatch("geometric point length != chart dimension");
    std::vector<Poly> images;
    images.reserve(chart.size());
    for (size_t i = 0; i < chart.size(); ++i) {
        if (i < chart.dimension())
            images.push_back(Poly::constant(chart, geo_point[i]));
        else
            images.push_back(Poly::variable(chart, i));
    }
    return p.substitute(images);
}

LagrangianSystem make_lagrangian_system(const Chart& base, Poly invariant_part, Poly delta_part,
                                        ActionMap base_action) {
    Chart tangent = tangent_chart(base);
    require_same_chart(invariant_part.chart(), tangent);
    require_same_chart(delta_part.chart(), tangent);
    require_same_chart(base_action.chart(), base);
    Poly l = invariant_part + delta_part;
    Poly het = poly_determinant(fiber_hessian(tangent, l));
    if (het.is_zero())
        throw DegenerateLagrangian("fiber Hessian determinant is the zero polynomial");
    return LagrangianSystem{base, std::move(tangent), std::move(invariant_part),
                            std::move(delta_part), std::move(base_action)};
}

PolyMap legendre(const Chart& tangent, const Poly& lagrangian) {
    check_tangent_layout(tangent);
    require_same_chart(lagrangian.chart(), tangent);
    const size_t n = base_dimension(tangent);

    std::vector<Variable> base_vars;
    for (size_t i = 0; i < n; ++i) base_vars.push_back(tangent.var(i));
    for (size_t i = tangent.dimension(); i < tangent.size(); ++i) base_vars.push_back(tangent.var(i));
    Chart cot = cotangent_chart(Chart(std::move(base_vars)));

    std::vector<Poly> comps;
    comps.reserve(2 * n);
    for (size_t i = 0; i < n; ++i) comps.push_back(Poly::variable(tangent, i));
    for (size_t i = 0; i < n; ++i) comps.push_back(lagrangian.differentiate(n + i));
    return PolyMap(tangent, cot, std::move(comps));
}

std::pair<KForm, KForm> lagrangian_two_form_routes(const Chart& tangent, const Poly& lagrangian) {
    check_tangent_layout(tangent);
    const size_t n = base_dimension(tangent);
    if (poly_determinant(fiber_hessian(tangent, lagrangian)).is_zero())
        throw DegenerateLagrangian("fiber Hessian determinant is the zero polynomial");

    // Route 1: pullback of the canonical two-form by the Legendre transform.
    PolyMap fl = legendre(tangent, lagrangian);
    KForm canonical(fl.target(), 2);
    for (size_t i = 0; i < n; ++i)
        canonical.add_term({static_cast<int>(i), static_cast<int>(n + i)},
                           Poly::constant(fl.target(), Rational(1)));
    KForm via_pullback = pullback(fl, canonical);

    // Route 2: second-partials expansion
    //   omega_L = d2L/dq^j dv^i dq^i ^ dq^j + d2L/dv^j dv^i dq^i ^ dv^j.
    KForm via_partials(tangent, 2);
    for (size_t i = 0; i < n; ++i) {
        Poly p_i = lagrangian.differentiate(n + i);
        for (size_t j = 0; j < n; ++j) {
            via_partials.add_term({static_cast<int>(i), static_cast<int>(j)}, p_i.differentiate(j));
            via_partials.add_term({static_cast<int>(i), static_cast<int>(n + j)},
                                  p_i.differentiate(n + j));
        }
    }

    return {std::move(via_pullback), std::move(via_partials)};
}

KForm lagrangian_two_form(const Chart& tangent, const Poly& lagrangian) {
    auto [via_pullback, via_partials] = lagrangian_two_form_routes(tangent, lagrangian);
    if (!(via_pullback == via_partials))
        throw Error("lagrangian two-form routes disagree: " + via_pullback.str() + " vs " +
                    via_partials.str());
    if (!exterior_derivative(via_pullback).is_zero())
        throw NotClosed("lagrangian two-form is not closed");
    return via_pullback;
}

namespace {

void validate_system(const System& sys) {
    require_same_chart(sys.omega.chart(), sys.chart);
    require_same_chart(sys.action.chart(), sys.chart);
    if (sys.base_point.size() != sys.chart.dimension())
        throw DimensionMismatch("base point length != chart dimension");
    if (!exterior_derivative(sys.omega).is_zero()) throw NotClosed("omega is not closed");
    if (!exterior_derivative(sys.delta_omega).is_zero())
        throw NotClosed("delta omega is not closed");
    if (two_form_determinant(sys.omega).is_zero())
        throw SingularForm("omega is degenerate (determinant is the zero polynomial)");
    for (size_t i = 0; i < sys.action.algebra().dimension(); ++i) {
        const VectorField& x = sys.action.basis_generator(i);
        if (!lie_derivative(x, sys.omega_inv).is_zero())
            throw NotInvariant("omega_inv is not invariant under generator e" + std::to_string(i + 1));
        // The equivalent restatement L_X omega = L_X delta_omega, both sides
        // computed independently.
        if (!(lie_derivative(x, sys.omega) == lie_derivative(x, sys.delta_omega)))
            throw NotInvariant("L_X omega != L_X delta_omega for generator e" + std::to_string(i + 1));
    }
}

} // namespace

System decompose(const LagrangianSystem& lagr, SignConvention conv,
                 std::vector<Rational> base_point) {
    ActionMap lifted = tangent_lift(lagr.base_action);
    const Chart& tq = lifted.chart();
    Poly l_inv = lagr.invariant_part;
    require_same_chart(l_inv.chart(), tq);

    for (size_t i = 0; i < lifted.algebra().dimension(); ++i) {
        Poly acted = lifted.module_action(i, l_inv);
        if (!acted.is_zero())
            throw NotInvariant("declared invariant part moves under generator e" +
                               std::to_string(i + 1) + ": " + acted.str());
    }

    KForm omega = lagrangian_two_form(tq, lagr.lagrangian());
    KForm omega_inv = lagrangian_two_form(tq, l_inv);
    KForm delta = omega - omega_inv;
    System sys{tq, std::move(omega), std::move(omega_inv), std::move(delta), std::move(lifted),
               conv, std::move(base_point), lagr};
    validate_system(sys);
    return sys;
}

System make_direct_system(KForm omega, KForm omega_inv, ActionMap action, SignConvention conv,
                          std::vector<Rational> base_point) {
    Chart chart = omega.chart();
    KForm delta = omega - omega_inv;
    System sys{std::move(chart), std::move(omega), std::move(omega_inv), std::move(delta),
               std::move(action), conv, std::move(base_point), std::nullopt};
    validate_system(sys);
    return sys;
}

namespace {

// Exact straight-line (homotopy) primitive of a closed polynomial 1-form:
// J(x) = sum_i (x_i - b_i) * Int_0^1 eta_i(b + t(x - b)) dt, J(b) = 0.
Poly integrate_exact_one_form(const KForm& eta, std::span<const Rational> base) {
    const Chart& chart = eta.chart();
    const size_t n = chart.dimension();
    if (base.size() != n) throw DimensionMismatch("base point length != chart dimension");

    std::string tname = "t";
    while (chart.index_of(tname)) tname += "_";
    std::vector<Variable> vars = chart.vars();
    vars.push_back({tname, VarKind::Param});
    Chart ext(std::move(vars));
    const size_t t_idx = ext.size() - 1;

    std::vector<Poly> images;
    images.reserve(chart.size());
    Poly t = Poly::variable(ext, t_idx);
    for (size_t i = 0; i < chart.size(); ++i) {
        if (i < n) {
            Poly xi = Poly::variable(ext, i);
            Poly bi = Poly::constant(ext, base[i]);
            images.push_back(bi + t * (xi - bi));
        } else {
            images.push_back(Poly::variable(ext, i));
        }
    }

    Poly accum(ext);
    for (size_t i = 0; i < n; ++i) {
        Poly eta_i = eta.coefficient({static_cast<int>(i)});
        if (eta_i.is_zero()) continue;
        Poly xi = Poly::variable(ext, i);
        Poly bi = Poly::constant(ext, base[i]);
        accum += (xi - bi) * eta_i.substitute(images);
    }

    // Integrate t over [0,1]: each t^k picks up 1/(k+1); then drop t.
    Poly out(chart);
    for (const auto& [e, c] : accum.terms()) {
        unsigned k = e[t_idx];
        Exponents stripped(e.begin(), e.end() - 1);
        out.add_term(std::move(stripped), c / Rational(static_cast<long>(k) + 1));
    }
    return out;
}

} // namespace

MomentumFamily momentum_maps(const System& system) {
    const Rational s(orientation(system.convention));
    MomentumFamily family;
    family.base_point = system.base_point;
    for (size_t a = 0; a < system.action.algebra().dimension(); ++a) {
        KForm scaled = s * interior_product(system.action.basis_generator(a), system.omega_inv);
        KForm d_eta = exterior_derivative(scaled);
        if (!d_eta.is_zero())
            throw NotClosedOneForm("i_{X_a} omega_inv is not closed for basis element e" +
                                   std::to_string(a + 1) + ": d = " + d_eta.str());
        Poly j = integrate_exact_one_form(scaled, system.base_point);
        if (!(exterior_derivative(KForm::from_function(j)) == scaled))
            throw Error("momentum integration failed verification for e" + std::to_string(a + 1));
        if (!substitute_geometric(j, system.base_point).is_zero())
            throw Error("momentum map does not vanish at the base point");
        family.basis_momenta.push_back(std::move(j));
    }
    return family;
}

Poly momentum_of(const MomentumFamily& family, std::span<const Rational> a) {
    if (a.size() != family.basis_momenta.size())
        throw DimensionMismatch("algebra vector length != basis momenta count");
    Poly out(family.basis_momenta.at(0).chart());
    for (size_t i = 0; i < a.size(); ++i) out += a[i] * family.basis_momenta[i];
    return out;
}

Cochain momentum_cochain(const System& system, const MomentumFamily& family) {
    Cochain j(1, system.action);
    for (size_t i = 0; i < family.basis_momenta.size(); ++i)
        j.set_value({static_cast<int>(i)}, family.basis_momenta[i]);
    return j;
}

Cochain sigma(const System& system, const MomentumFamily& family) {
    const size_t dim = system.action.algebra().dimension();
    Cochain out(2, system.action);
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i + 1; j < dim; ++j) {
            RatFunc pb = poisson_bracket(system.omega, family.basis_momenta[i],
                                         family.basis_momenta[j], system.convention);
            Poly value = pb.as_poly();
            AlgebraVector br = system.action.algebra().basis_bracket(i, j);
            value -= momentum_of(family, br);
            out.set_value({static_cast<int>(i), static_cast<int>(j)}, value);
        }
    }
    return out;
}

VectorField delta_X(const System& system, const MomentumFamily& family,
                    std::span<const Rational> a) {
    Poly j = momentum_of(family, a);
    HamiltonianField xj = hamiltonian_field(system.omega, j, system.convention);
    return system.action.generator(a) - xj.as_polynomial();
}

Prop2Report verify_prop2(const System& system) {
    const size_t dim = system.action.algebra().dimension();
    const Rational eps(orientation(system.convention));
    MomentumFamily momenta = momentum_maps(system);

    std::vector<VectorField> dx;
    for (size_t a = 0; a < dim; ++a) {
        AlgebraVector basis(dim, Rational(0));
        basis[a] = 1;
        dx.push_back(delta_X(system, momenta, basis));
    }

    Cochain sig = sigma(system, momenta);
    Cochain omega_c = canonical_cocycle(system.omega, system.action);
    Cochain j_cochain = momentum_cochain(system, momenta);
    Cochain dj = coboundary(j_cochain);
    Cochain residual = sig + eps * omega_c - dj;

    Prop2Report report{system.convention, std::move(momenta), std::move(dx),
                       {},    true,  std::move(sig), std::move(omega_c), std::move(dj),
                       std::move(residual), true,  {},  {},   true, {}, true};

    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i + 1; j < dim; ++j) {
            const VectorField pair[2] = {report.delta_fields[i], report.delta_fields[j]};
            Poly v = system.omega.evaluate_on(pair);
            report.hypothesis_ok = report.hypothesis_ok && v.is_zero();
            report.hypothesis.push_back({i, j, std::move(v)});
        }
    }

    report.identity_ok = report.residual.is_zero();

    // Proof intermediates: {J_i,J_j} = e*(omega - 2*delta_omega)(X_i, X_j) and
    // J_{[ij]} = 2e*omega_inv(X_i, X_j) - dJ(i,j).
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i + 1; j < dim; ++j) {
            const std::vector<int> pair{static_cast<int>(i), static_cast<int>(j)};
            AlgebraVector br = system.action.algebra().basis_bracket(i, j);
            Poly j_br = momentum_of(report.momenta, br);
            Poly pb = report.sigma_cochain.value(pair) + j_br; // {J_i, J_j}
            const VectorField gens[2] = {system.action.basis_generator(i),
                                         system.action.basis_generator(j)};
            Poly rhs1 = eps * (system.omega.evaluate_on(gens) -
                               Rational(2) * system.delta_omega.evaluate_on(gens));
            Poly d1 = pb - rhs1;
            report.intermediates_ok = report.intermediates_ok && d1.is_zero();
            report.bracket_identity.push_back({i, j, std::move(d1)});

            Poly rhs2 = Rational(2) * eps * system.omega_inv.evaluate_on(gens) -
                        report.delta_j.value(pair);
            Poly d2 = j_br - rhs2;
            report.intermediates_ok = report.intermediates_ok && d2.is_zero();
            report.momentum_identity.push_back({i, j, std::move(d2)});
        }
    }

    for (size_t a = 0; a < dim; ++a) {
        KForm lhs = interior_product(report.delta_fields[a], system.omega);
        KForm rhs = interior_product(system.action.basis_generator(a), system.delta_omega);
        bool ok = lhs == rhs;
        report.lemma1_per_basis.push_back(ok);
        report.lemma1_ok = report.lemma1_ok && ok;
    }
    return report;
}

void require_prop2(const Prop2Report& report) {
    if (!report.hypothesis_ok) {
        for (const PairValue& h : report.hypothesis)
            if (!h.value.is_zero())
                throw HypothesisFails("omega(DX_" + std::to_string(h.i + 1) + ", DX_" +
                                      std::to_string(h.j + 1) + ") = " + h.value.str());
    }
    if (!report.identity_ok)
        throw IdentityFails("Sigma + e*Omega - dJ = " + report.residual.str());
    if (!report.intermediates_ok || !report.lemma1_ok)
        throw IdentityFails("proof-level intermediate identities failed");
}

Cochain remark2_residual(const System& system) {
    Prop2Report report = verify_prop2(system);
    const Rational eps(orientation(system.convention));
    // h = -e*Omega + dJ; c = Sigma - h.
    Cochain c = report.sigma_cochain + eps * report.omega_cochain - report.delta_j;
    for (const auto& [t, v] : c.values()) {
        bool constant = true;
        for (size_t i = 0; i < system.chart.dimension(); ++i) constant = constant && !v.depends_on(i);
        if (!constant)
            throw IdentityFails("Remark-2 residual is not constant on the chart: " + v.str());
    }
    return c;
}

Remark1Report remark1_reconcile(const System& system, std::span<const Rational> x0) {
    SymplecticReport symp = is_symplectic(system.action, system.omega);
    if (!symp.all) throw NotSymplectic("action does not preserve omega");
    const Rational eps(orientation(system.convention));

    MomentumFamily momenta = momentum_maps(system);
    Cochain sig = sigma(system, momenta);
    Cochain omega_c = canonical_cocycle(system.omega, system.action);

    Remark1Report report;
    const size_t dim = system.action.algebra().dimension();
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i + 1; j < dim; ++j) {
            Remark1Row row;
            row.i = i;
            row.j = j;
            const std::vector<int> pair{static_cast<int>(i), static_cast<int>(j)};
            row.sigma_value = sig.value(pair);
            bool constant = true;
            for (size_t g = 0; g < system.chart.dimension(); ++g)
                constant = constant && !row.sigma_value.depends_on(g);
            report.constant_ok = report.constant_ok && constant;

            row.omega_at_x0 = eps * substitute_geometric(omega_c.value(pair), x0);
            AlgebraVector br = system.action.algebra().basis_bracket(i, j);
            row.j_bracket_at_x0 = substitute_geometric(momentum_of(momenta, br), x0);
            row.ok = (row.sigma_value == row.omega_at_x0 - row.j_bracket_at_x0);
            report.reconcile_ok = report.reconcile_ok && row.ok;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace cocyclelab
