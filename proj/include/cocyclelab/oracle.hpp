#pragma once

#include <cstdint>
#include <random>

#include "cocyclelab/forms.hpp"

namespace cocyclelab {

// Deterministic sampling plan for the pointwise verification tier.
struct TrialPlan {
    std::uint64_t seed = 20020514;
    int trials = 50;
    long coordinate_bound = 10; // numerators and denominators drawn in [1, bound]
    double fd_step = 1e-4;
    double fd_tolerance = 1e-6; // relative

    bool operator==(const TrialPlan&) const = default;
};

struct Verdict {
    bool ok = true;
    std::vector<Rational> counterexample; // first failing sample point, when !ok
    std::string detail;
};

// Random rational chart point: components n/d with |n| <= bound, 1 <= d <= bound.
std::vector<Rational> random_point(std::mt19937_64& rng, size_t size, long bound);

// Exact evaluation of both sides at sampled rational points. Sound refuter:
// never passes a point where the values differ.
Verdict point_check(const Poly& lhs, const Poly& rhs, const TrialPlan& plan);
// Per-coefficient exact point check of two forms of equal degree.
Verdict point_check(const KForm& lhs, const KForm& rhs, const TrialPlan& plan);

// Central finite differences of the coefficient functions approximate the
// symbolic exterior derivative within the plan tolerance (floating point).
Verdict fd_check_d(const KForm& alpha, const TrialPlan& plan);

// (XY - YX)f at sample points matches [X,Y]f for random low-degree test
// polynomials f, within the plan tolerance (nested difference stencils).
Verdict fd_check_bracket(const VectorField& x, const VectorField& y, const TrialPlan& plan);

} // namespace cocyclelab
