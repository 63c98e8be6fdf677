#include "cocyclelab/linsolve.hpp"

#include <algorithm>

namespace cocyclelab {

namespace {

// Pivot choice: fewest stored terms, to limit intermediate swell.
std::optional<size_t> pick_pivot(const PolyMatrix& m, size_t col, size_t from) {
    std::optional<size_t> best;
    size_t best_terms = 0;
    for (size_t i = from; i < m.size(); ++i) {
        if (m[i][col].is_zero()) continue;
        size_t t = m[i][col].terms().size();
        if (!best || t < best_terms) {
            best = i;
            best_terms = t;
        }
    }
    return best;
}

void check_square(const PolyMatrix& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw DimensionMismatch("matrix is not square");
}

// Fraction-free forward elimination in place; returns false when a zero pivot
// column certifies det == 0. The last pivot equals det(A) up to row-swap sign.
bool bareiss_forward(PolyMatrix& m, size_t ncols, int& swap_sign) {
    const size_t n = m.size();
    Poly prev;
    for (size_t k = 0; k < n; ++k) {
        auto piv = pick_pivot(m, k, k);
        if (!piv) return false;
        if (*piv != k) {
            std::swap(m[*piv], m[k]);
            swap_sign = -swap_sign;
        }
        if (k + 1 == n) break;
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < ncols; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = (k == 0) ? std::move(num) : divide_exact(num, prev);
            }
            m[i][k] = Poly(m[i][k].chart());
        }
        prev = m[k][k];
    }
    return true;
}

} // namespace

Poly poly_determinant(const PolyMatrix& a) {
    check_square(a);
    if (a.empty()) throw DimensionMismatch("determinant of empty matrix");
    const Chart& chart = a[0][0].chart();
    PolyMatrix m = a;
    int swap_sign = 1;
    if (!bareiss_forward(m, m.size(), swap_sign)) return Poly(chart);
    Poly det = m.back().back();
    if (swap_sign < 0) det = -det;
    return det;
}

std::vector<RatFunc> bareiss_solve(const PolyMatrix& a, const std::vector<Poly>& b) {
    check_square(a);
    const size_t n = a.size();
    if (b.size() != n) throw DimensionMismatch("rhs length != matrix size");
    if (n == 0) return {};

    // Cramer over fraction-free determinants: exact division happens once per
    // component, keeping intermediate arithmetic purely polynomial.
    Poly det = poly_determinant(a);
    if (det.is_zero()) throw SingularMatrix("matrix determinant is zero");
    std::vector<RatFunc> x(n);
    for (size_t col = 0; col < n; ++col) {
        PolyMatrix m = a;
        for (size_t i = 0; i < n; ++i) m[i][col] = b[i];
        x[col] = RatFunc(poly_determinant(m), det);
    }
    return x;
}

std::vector<RatFunc> gauss_solve(const std::vector<std::vector<RatFunc>>& a,
                                 const std::vector<RatFunc>& b) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DimensionMismatch("matrix is not square");
    if (b.size() != n) throw DimensionMismatch("rhs length != matrix size");
    if (n == 0) return {};

    std::vector<std::vector<RatFunc>> m = a;
    for (size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) throw SingularMatrix("matrix determinant is zero");
        std::swap(m[piv], m[k]);
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            RatFunc f = m[i][k] / m[k][k];
            for (size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    std::vector<RatFunc> x(n);
    for (size_t ii = n; ii-- > 0;) {
        RatFunc sum = m[ii][n];
        for (size_t j = ii + 1; j < n; ++j) sum -= m[ii][j] * x[j];
        x[ii] = sum / m[ii][ii];
    }
    return x;
}

RationalSolveResult solve_rational_system(std::vector<std::vector<Rational>> rows,
                                          std::vector<Rational> rhs) {
    const size_t m = rows.size();
    if (rhs.size() != m) throw DimensionMismatch("rhs length != row count");
    const size_t n = m == 0 ? 0 : rows[0].size();
    for (const auto& row : rows)
        if (row.size() != n) throw DimensionMismatch("ragged matrix");

    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t col = 0; col < n && r < m; ++col) {
        size_t piv = r;
        while (piv < m && rows[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(rows[piv], rows[r]);
        std::swap(rhs[piv], rhs[r]);
        for (size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rational f = rows[i][col] / rows[r][col];
            for (size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_cols.push_back(col);
        ++r;
    }

    RationalSolveResult out;
    out.rank = r;
    out.aug_rank = r;
    for (size_t i = r; i < m; ++i) {
        if (rhs[i] != 0) {
            out.aug_rank = r + 1;
            return out;
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = rhs[k] / rows[k][pivot_cols[k]];
    out.solution = std::move(x);
    return out;
}

} // namespace cocyclelab
