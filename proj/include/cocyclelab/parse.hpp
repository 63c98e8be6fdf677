#pragma once

#include "cocyclelab/mechanics.hpp"
#include "cocyclelab/oracle.hpp"

namespace cocyclelab {

// Parsed problem file: either a Lagrangian system (L^i + dL on the tangent
// chart of the declared base variables, velocities auto-declared as v1..vn)
// or a direct (omega, omega_inv) pair on the declared chart.
struct ProblemSpec {
    std::vector<std::string> base_vars;
    std::vector<std::string> params;
    bool lagrangian_mode = true;

    Chart base;  // declared variables (+ params); the manifold chart in direct mode
    Chart phase; // tangent chart in Lagrangian mode, == base in direct mode

    Poly l_invariant; // on phase (Lagrangian mode)
    Poly l_delta;
    KForm omega;     // on phase (direct mode)
    KForm omega_inv;

    LieAlgebra algebra = LieAlgebra::abelian(0);
    std::vector<VectorField> generators; // on base (Lagrangian) / phase (direct)
    bool antihomomorphism = false;

    SignConvention convention = SignConvention::PaperA;
    std::vector<Rational> base_point; // geometric point on phase (defaults to the origin)
    int degree_bound = -1;            // -1: use the per-operation default
    TrialPlan plan;

    System to_system() const;
    std::string render() const;

    bool operator==(const ProblemSpec& o) const;
};

// Parses the line-oriented problem format; positional ParseErrors, plus
// structured liealg errors for bad structure constants or generators.
ProblemSpec parse_problem(std::string_view text);
ProblemSpec parse_problem_file(const std::string& path);

// Expression-level entry points (used by the problem parser and by tests).
Poly parse_polynomial(std::string_view text, const Chart& chart);
VectorField parse_vector_field(std::string_view text, const Chart& chart);
KForm parse_two_form(std::string_view text, const Chart& chart);

} // namespace cocyclelab
