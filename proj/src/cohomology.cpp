#include "cocyclelab/cohomology.hpp"

#include "cocyclelab/linsolve.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cocyclelab {

namespace {

std::optional<int> sort_with_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        int v = idx[i];
        size_t j = i;
        while (j > 0 && idx[j - 1] > v) {
            idx[j] = idx[j - 1];
            --j;
            sign = -sign;
        }
        idx[j] = v;
    }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return std::nullopt;
    return sign;
}

void require_compatible(const Cochain& a, const Cochain& b) {
    if (a.degree() != b.degree()) throw DimensionMismatch("cochain degrees differ");
    if (!(a.algebra() == b.algebra())) throw DimensionMismatch("cochain algebras differ");
    require_same_chart(a.chart(), b.chart());
}

std::vector<int> tuple_without(const std::vector<int>& t, size_t skip) {
    std::vector<int> out;
    out.reserve(t.size() - 1);
    for (size_t i = 0; i < t.size(); ++i)
        if (i != skip) out.push_back(t[i]);
    return out;
}

void increasing_tuples(size_t n, size_t k, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& emit, int from = 0) {
    if (cur.size() == k) {
        emit(cur);
        return;
    }
    for (int i = from; i < static_cast<int>(n); ++i) {
        cur.push_back(i);
        increasing_tuples(n, k, cur, emit, i + 1);
        cur.pop_back();
    }
}

void for_each_increasing(size_t n, size_t k, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur;
    increasing_tuples(n, k, cur, emit);
}

} // namespace

Cochain::Cochain(int degree, ActionMap action) : degree_(degree), action_(std::move(action)) {
    if (degree < 0 || degree > 3) throw UnsupportedDegree("cochain degree must be 0..3");
}

Cochain& Cochain::set_value(std::vector<int> basis_tuple, const Poly& value) {
    require_same_chart(chart(), value.chart());
    if (basis_tuple.size() != static_cast<size_t>(degree_))
        throw DimensionMismatch("tuple length != cochain degree");
    for (int i : basis_tuple)
        if (i < 0 || static_cast<size_t>(i) >= algebra().dimension())
            throw DimensionMismatch("basis index out of range");
    auto s = sort_with_sign(basis_tuple);
    if (!s) {
        if (!value.is_zero()) throw DimensionMismatch("alternating cochain needs distinct indices");
        return *this;
    }
    Poly v = (*s > 0) ? value : -value;
    if (v.is_zero())
        values_.erase(basis_tuple);
    else
        values_[basis_tuple] = std::move(v);
    return *this;
}

Poly Cochain::value(std::vector<int> basis_tuple) const {
    auto s = sort_with_sign(basis_tuple);
    if (!s) return Poly(chart());
    auto it = values_.find(basis_tuple);
    if (it == values_.end()) return Poly(chart());
    return (*s > 0) ? it->second : -it->second;
}

Poly Cochain::evaluate(std::span<const AlgebraVector> vectors) const {
    if (vectors.size() != static_cast<size_t>(degree_))
        throw DimensionMismatch("vector count != cochain degree");
    for (const auto& v : vectors)
        if (v.size() != algebra().dimension())
            throw DimensionMismatch("algebra vector length != algebra dimension");
    Poly out(chart());
    for (const auto& [tuple, val] : values_) {
        // Alternating multilinearity: coefficient is det[v_m[tuple_l]].
        const size_t k = tuple.size();
        std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k, Rational(0)));
        for (size_t l = 0; l < k; ++l)
            for (size_t col = 0; col < k; ++col) m[l][col] = vectors[col][tuple[l]];
        // Tiny determinants (k <= 3): Leibniz over permutations via recursion.
        std::function<Rational(std::vector<std::vector<Rational>>)> det =
            [&](std::vector<std::vector<Rational>> mm) -> Rational {
            if (mm.empty()) return Rational(1);
            if (mm.size() == 1) return mm[0][0];
            Rational acc(0);
            for (size_t j = 0; j < mm.size(); ++j) {
                if (mm[0][j] == 0) continue;
                std::vector<std::vector<Rational>> minor;
                for (size_t i = 1; i < mm.size(); ++i) {
                    std::vector<Rational> row;
                    for (size_t l = 0; l < mm.size(); ++l)
                        if (l != j) row.push_back(mm[i][l]);
                    minor.push_back(std::move(row));
                }
                Rational term = mm[0][j] * det(std::move(minor));
                acc += (j % 2 == 0) ? term : -term;
            }
            return acc;
        };
        Rational c = det(m);
        if (c != 0) out += c * val;
    }
    return out;
}

Cochain Cochain::operator-() const {
    Cochain out(degree_, action_);
    for (const auto& [t, v] : values_) out.values_.emplace(t, -v);
    return out;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    require_compatible(*this, o);
    for (const auto& [t, v] : o.values_) {
        auto it = values_.find(t);
        if (it == values_.end()) {
            values_.emplace(t, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) values_.erase(it);
        }
    }
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    *this += -o;
    return *this;
}

std::string Cochain::str() const {
    if (values_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, v] : values_) {
        if (!first) os << "; ";
        os << "(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) os << ",";
            os << "e" << (t[i] + 1);
        }
        os << ") -> " << v.str();
        first = false;
    }
    return os.str();
}

Cochain operator+(const Cochain& a, const Cochain& b) {
    Cochain out = a;
    out += b;
    return out;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
    Cochain out = a;
    out -= b;
    return out;
}

Cochain operator*(const Rational& c, const Cochain& a) {
    Cochain out(a.degree(), a.action());
    for (const auto& [t, v] : a.values()) out.set_value(t, c * v);
    return out;
}

Cochain coboundary(const Cochain& alpha) {
    const int n = alpha.degree();
    if (n > 2) throw UnsupportedDegree("coboundary supported for degrees 0..2");
    const ActionMap& action = alpha.action();
    const size_t dim = alpha.algebra().dimension();
    Cochain out(n + 1, action);

    for_each_increasing(dim, n + 1, [&](const std::vector<int>& t) {
        Poly val(alpha.chart());
        for (size_t k = 0; k < t.size(); ++k) {
            Poly inner = alpha.value(tuple_without(t, k));
            if (inner.is_zero()) continue;
            Poly acted = action.module_action(static_cast<size_t>(t[k]), inner);
            val += (k % 2 == 0) ? acted : -acted;
        }
        for (size_t k = 0; k < t.size(); ++k) {
            for (size_t l = k + 1; l < t.size(); ++l) {
                std::vector<int> rest;
                for (size_t i = 0; i < t.size(); ++i)
                    if (i != k && i != l) rest.push_back(t[i]);
                AlgebraVector br = alpha.algebra().basis_bracket(t[k], t[l]);
                Poly term(alpha.chart());
                for (size_t c = 0; c < dim; ++c) {
                    if (br[c] == 0) continue;
                    std::vector<int> tuple = rest;
                    tuple.insert(tuple.begin(), static_cast<int>(c));
                    term += br[c] * alpha.value(tuple);
                }
                val += ((k + l) % 2 == 0) ? term : -term;
            }
        }
        if (!val.is_zero()) out.set_value(t, val);
    });
    return out;
}

CocycleCheck is_cocycle(const Cochain& alpha) {
    Cochain d = coboundary(alpha);
    CocycleCheck check;
    check.witness_value = Poly(alpha.chart());
    if (!d.is_zero()) {
        check.ok = false;
        const auto& [t, v] = *d.values().begin();
        check.witness_tuple = t;
        check.witness_value = v;
    }
    return check;
}

Cochain canonical_cocycle(const KForm& omega, const ActionMap& action) {
    require_same_chart(omega.chart(), action.chart());
    if (omega.degree() != 2) throw DimensionMismatch("canonical cocycle requires a 2-form");
    if (!exterior_derivative(omega).is_zero())
        throw NotClosed("two-form is not closed: d(omega) = " + exterior_derivative(omega).str());
    Cochain out(2, action);
    const size_t dim = action.algebra().dimension();
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i + 1; j < dim; ++j) {
            const VectorField fields[2] = {action.basis_generator(i), action.basis_generator(j)};
            Poly v = omega.evaluate_on(fields);
            if (!v.is_zero()) out.set_value({static_cast<int>(i), static_cast<int>(j)}, v);
        }
    }
    return out;
}

namespace {

std::vector<Exponents> monomials_up_to(const Chart& chart, int bound) {
    std::vector<Exponents> out;
    Exponents cur(chart.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t var, int left) {
        if (var == chart.size()) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[var] = static_cast<unsigned>(e);
            rec(var + 1, left - e);
        }
        cur[var] = 0;
    };
    rec(0, bound);
    return out;
}

} // namespace

CoboundarySolve coboundary_solve(const Cochain& alpha, int degree_bound) {
    if (alpha.degree() != 2) throw UnsupportedDegree("coboundary_solve expects a degree-2 cochain");
    if (degree_bound < 0) throw DimensionMismatch("degree bound must be nonnegative");
    const ActionMap& action = alpha.action();
    const Chart& chart = alpha.chart();
    const size_t dim = alpha.algebra().dimension();

    const std::vector<Exponents> monos = monomials_up_to(chart, degree_bound);
    const size_t ncols = dim * monos.size();

    // Row index per (basis pair, result monomial), built lazily.
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j) pairs.emplace_back(i, j);
    std::map<std::pair<size_t, Exponents>, size_t> row_of;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    auto row_for = [&](size_t pair_idx, const Exponents& mono) -> size_t {
        auto key = std::make_pair(pair_idx, mono);
        auto it = row_of.find(key);
        if (it != row_of.end()) return it->second;
        size_t idx = rows.size();
        row_of.emplace(std::move(key), idx);
        rows.emplace_back(ncols, Rational(0));
        rhs.emplace_back(0);
        return idx;
    };

    // Columns: contribution of the unit coefficient on monomial m of beta(e_k)
    // to (d beta)(e_i, e_j) = e_i . beta(e_j) - e_j . beta(e_i) - beta([e_i,e_j]).
    for (size_t k = 0; k < dim; ++k) {
        for (size_t mi = 0; mi < monos.size(); ++mi) {
            size_t col = k * monos.size() + mi;
            Poly mono(chart);
            mono.add_term(monos[mi], Rational(1));
            for (size_t p = 0; p < pairs.size(); ++p) {
                auto [i, j] = pairs[p];
                Poly contrib(chart);
                if (k == j) contrib += action.module_action(i, mono);
                if (k == i) contrib -= action.module_action(j, mono);
                const Rational& c = alpha.algebra().structure_constant(i, j, k);
                if (c != 0) contrib -= c * mono;
                for (const auto& [e, coeff] : contrib.terms()) rows[row_for(p, e)][col] = coeff;
            }
        }
    }
    for (size_t p = 0; p < pairs.size(); ++p) {
        Poly target = alpha.value({static_cast<int>(pairs[p].first), static_cast<int>(pairs[p].second)});
        for (const auto& [e, coeff] : target.terms()) rhs[row_for(p, e)] = coeff;
    }

    RationalSolveResult solved = solve_rational_system(std::move(rows), std::move(rhs));
    CoboundarySolve out;
    out.degree_bound = degree_bound;
    out.unknowns = ncols;
    out.rank = solved.rank;
    out.aug_rank = solved.aug_rank;
    if (!solved.solution) return out;

    Cochain beta(1, action);
    for (size_t k = 0; k < dim; ++k) {
        Poly v(chart);
        for (size_t mi = 0; mi < monos.size(); ++mi) {
            const Rational& c = (*solved.solution)[k * monos.size() + mi];
            if (c != 0) v.add_term(monos[mi], c);
        }
        if (!v.is_zero()) beta.set_value({static_cast<int>(k)}, v);
    }
    if (!(coboundary(beta) == alpha)) throw Error("coboundary_solve produced an invalid witness");
    out.beta = std::move(beta);
    return out;
}

CoboundarySolve cohomologous(const Cochain& alpha1, const Cochain& alpha2, int degree_bound) {
    require_compatible(alpha1, alpha2);
    return coboundary_solve(alpha1 - alpha2, degree_bound);
}

ExtensionElement modified_bracket(const Cochain& alpha, const ExtensionElement& x,
                                  const ExtensionElement& y) {
    if (alpha.degree() != 2) throw UnsupportedDegree("modified bracket needs a degree-2 cochain");
    const ActionMap& action = alpha.action();
    ExtensionElement out;
    out.algebra_part = alpha.algebra().bracket(x.algebra_part, y.algebra_part);
    const AlgebraVector ab[2] = {x.algebra_part, y.algebra_part};
    out.function_part = action.module_action(x.algebra_part, y.function_part) -
                        action.module_action(y.algebra_part, x.function_part) +
                        alpha.evaluate(ab);
    return out;
}

Poly jacobi_defect(const Cochain& alpha, const ExtensionElement& x, const ExtensionElement& y,
                   const ExtensionElement& z) {
    ExtensionElement xy_z = modified_bracket(alpha, modified_bracket(alpha, x, y), z);
    ExtensionElement yz_x = modified_bracket(alpha, modified_bracket(alpha, y, z), x);
    ExtensionElement zx_y = modified_bracket(alpha, modified_bracket(alpha, z, x), y);
    return xy_z.function_part + yz_x.function_part + zx_y.function_part;
}

} // namespace cocyclelab
