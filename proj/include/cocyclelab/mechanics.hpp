#pragma once

#include <optional>

#include "cocyclelab/cohomology.hpp"
#include "cocyclelab/symplectic.hpp"

namespace cocyclelab {

// Lagrangian L = L^i + dL on the tangent chart of a base chart, together with
// the point action on the base. The fiber Hessian of L must be nonsingular.
struct LagrangianSystem {
    Chart base;
    Chart tangent;
    Poly invariant_part; // L^i, on the tangent chart
    Poly delta_part;     // dL, on the tangent chart
    ActionMap base_action;

    Poly lagrangian() const { return invariant_part + delta_part; }
};

LagrangianSystem make_lagrangian_system(const Chart& base, Poly invariant_part, Poly delta_part,
                                        ActionMap base_action);

// FL: TQ -> T*Q, (q, v) -> (q, dL/dv).
PolyMap legendre(const Chart& tangent, const Poly& lagrangian);

// omega_L computed both as FL^*(sum dq_i ^ dp_i) and from the second-partials
// expansion; the two routes must agree exactly and the result is closed.
KForm lagrangian_two_form(const Chart& tangent, const Poly& lagrangian);
// The two routes separately (pullback first), for independent cross-checks.
std::pair<KForm, KForm> lagrangian_two_form_routes(const Chart& tangent, const Poly& lagrangian);

// Assembled phase data for the cocycle pipeline: a closed nondegenerate omega
// split as omega = omega_inv + delta_omega with omega_inv invariant under the
// (chart-level) action.
struct System {
    Chart chart;
    KForm omega;
    KForm omega_inv;
    KForm delta_omega;
    ActionMap action;
    SignConvention convention = SignConvention::PaperA;
    std::vector<Rational> base_point; // geometric coordinates of the momentum gauge point
    std::optional<LagrangianSystem> lagrangian;
};

// Lagrangian route: omega = omega_L(L), omega_inv = omega_L(L^i). Verifies
// invariance of L^i and omega_inv (NotInvariant), closedness of delta_omega
// (NotClosed) and the restatement L_X omega = L_X delta_omega, all exactly.
System decompose(const LagrangianSystem& lagr, SignConvention conv,
                 std::vector<Rational> base_point);

// Direct (omega, omega_inv, action) input with the same validation.
System make_direct_system(KForm omega, KForm omega_inv, ActionMap action, SignConvention conv,
                          std::vector<Rational> base_point);

// Momentum maps, one per basis element, normalized to vanish at the base
// point: dJ_a = sign * i_{X_a} omega_inv, integrated along straight lines.
struct MomentumFamily {
    std::vector<Poly> basis_momenta;
    std::vector<Rational> base_point;
};

MomentumFamily momentum_maps(const System& system); // NotClosedOneForm when no polynomial J exists
Poly momentum_of(const MomentumFamily& family, std::span<const Rational> a);
// J as a degree-1 cochain.
Cochain momentum_cochain(const System& system, const MomentumFamily& family);

// Sigma(a,b) = {J_a, J_b} - J_{[a,b]}, brackets taken with the FULL omega.
Cochain sigma(const System& system, const MomentumFamily& family);

// Delta X_a = X_a - X_{J_a}.
VectorField delta_X(const System& system, const MomentumFamily& family,
                    std::span<const Rational> a);

struct PairValue {
    size_t i = 0;
    size_t j = 0;
    Poly value;
};

// Full Proposition-2 verification. Under orientation e = +1 (paper-A) /
// -1 (paper-B) the exact cochain identity is Sigma = -e*Omega + dJ, i.e.
// Sigma = Omega(b,a) + dJ under A and Sigma = Omega(a,b) + dJ under B.
struct Prop2Report {
    SignConvention convention;
    MomentumFamily momenta;
    std::vector<VectorField> delta_fields; // per basis element
    std::vector<PairValue> hypothesis;     // omega(DX_i, DX_j), must all vanish
    bool hypothesis_ok = true;
    Cochain sigma_cochain;
    Cochain omega_cochain;
    Cochain delta_j;
    Cochain residual; // Sigma + e*Omega - dJ
    bool identity_ok = true;
    std::vector<PairValue> bracket_identity;  // {J_i,J_j} - e*(omega - 2*delta)(X_i, X_j)
    std::vector<PairValue> momentum_identity; // J_[ij] - (2e*omega_inv(X_i,X_j) - dJ(i,j))
    bool intermediates_ok = true;
    std::vector<bool> lemma1_per_basis; // i_{DX_a} omega == i_{X_a} delta_omega
    bool lemma1_ok = true;

    bool ok() const { return hypothesis_ok && identity_ok && intermediates_ok && lemma1_ok; }
};

Prop2Report verify_prop2(const System& system);
// Raises HypothesisFails / IdentityFails per the report's verdicts.
void require_prop2(const Prop2Report& report);

// Remark-2 residual c(a,b) = Sigma - h with h = -e*Omega + dJ; the values must
// be constant and, with this h, identically zero.
Cochain remark2_residual(const System& system);

// Remark-1 reconciliation for symplectic actions: Sigma is constant and
// Sigma(a,b) = e*Omega(a,b)(x0) - J_{[a,b]}(x0), the difference being the real
// coboundary of beta(a) = J_a(x0).
struct Remark1Row {
    size_t i = 0;
    size_t j = 0;
    Poly sigma_value;     // constant in the geometric variables
    Poly omega_at_x0;     // e*Omega(i,j)(x0)
    Poly j_bracket_at_x0; // J_{[ij]}(x0)
    bool ok = true;
};

struct Remark1Report {
    bool constant_ok = true;
    bool reconcile_ok = true;
    std::vector<Remark1Row> rows;
};

Remark1Report remark1_reconcile(const System& system, std::span<const Rational> x0);

// Evaluates the geometric variables at a point, leaving parameters symbolic.
Poly substitute_geometric(const Poly& p, std::span<const Rational> geo_point);

} // namespace cocyclelab
