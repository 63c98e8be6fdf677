#pragma once

#include <optional>
#include <vector>

#include "cocyclelab/ratfunc.hpp"

namespace cocyclelab {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Determinant by fraction-free (Bareiss) elimination.
Poly poly_determinant(const PolyMatrix& a);

// Solves A x = b exactly for square A with det(A) != 0 as a polynomial.
// Fraction-free forward elimination, back substitution over RatFunc.
// Throws SingularMatrix when det(A) == 0.
std::vector<RatFunc> bareiss_solve(const PolyMatrix& a, const std::vector<Poly>& b);

// Field Gaussian elimination for rational-function right-hand sides.
std::vector<RatFunc> gauss_solve(const std::vector<std::vector<RatFunc>>& a,
                                 const std::vector<RatFunc>& b);

// Exact Gaussian elimination over the rationals for a (possibly rectangular)
// system; returns one solution when consistent, plus rank data either way.
struct RationalSolveResult {
    std::optional<std::vector<Rational>> solution;
    size_t rank = 0;     // rank of the coefficient matrix
    size_t aug_rank = 0; // rank of the augmented matrix (> rank iff inconsistent)
};
RationalSolveResult solve_rational_system(std::vector<std::vector<Rational>> rows,
                                          std::vector<Rational> rhs);

} // namespace cocyclelab
