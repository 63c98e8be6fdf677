#include "cocyclelab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace cocyclelab {

namespace {

// Raw-engine sampling (no std distributions) keeps the sequence identical
// across standard library implementations.
long draw_in(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool within_tolerance(double a, double b, double tol) {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= tol * scale;
}

std::string point_string(const std::vector<Rational>& pt) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < pt.size(); ++i) {
        if (i) os << ", ";
        os << to_string(pt[i]);
    }
    os << ")";
    return os.str();
}

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

} // namespace

std::vector<Rational> random_point(std::mt19937_64& rng, size_t size, long bound) {
    std::vector<Rational> pt;
    pt.reserve(size);
    for (size_t i = 0; i < size; ++i) {
        long num = draw_in(rng, -bound, bound);
        long den = draw_in(rng, 1, bound);
        pt.push_back(make_rational(num, den));
    }
    return pt;
}

Verdict point_check(const Poly& lhs, const Poly& rhs, const TrialPlan& plan) {
    require_same_chart(lhs.chart(), rhs.chart());
    std::mt19937_64 rng(plan.seed);
    for (int t = 0; t < plan.trials; ++t) {
        std::vector<Rational> pt = random_point(rng, lhs.chart().size(), plan.coordinate_bound);
        Rational a = lhs.evaluate(pt);
        Rational b = rhs.evaluate(pt);
        if (a != b) {
            return {false, pt,
                    "lhs = " + to_string(a) + ", rhs = " + to_string(b) + " at " + point_string(pt)};
        }
    }
    return {};
}

Verdict point_check(const KForm& lhs, const KForm& rhs, const TrialPlan& plan) {
    require_same_chart(lhs.chart(), rhs.chart());
    if (lhs.degree() != rhs.degree()) throw DimensionMismatch("form degrees differ");
    std::set<std::vector<int>> tuples;
    for (const auto& [idx, c] : lhs.terms()) tuples.insert(idx);
    for (const auto& [idx, c] : rhs.terms()) tuples.insert(idx);

    std::mt19937_64 rng(plan.seed);
    for (int t = 0; t < plan.trials; ++t) {
        std::vector<Rational> pt = random_point(rng, lhs.chart().size(), plan.coordinate_bound);
        for (const auto& idx : tuples) {
            Rational a = lhs.coefficient(idx).evaluate(pt);
            Rational b = rhs.coefficient(idx).evaluate(pt);
            if (a != b) {
                return {false, pt,
                        "coefficient mismatch " + to_string(a) + " vs " + to_string(b) + " at " +
                            point_string(pt)};
            }
        }
    }
    return {};
}

Verdict fd_check_d(const KForm& alpha, const TrialPlan& plan) {
    const Chart& chart = alpha.chart();
    const size_t dim = chart.dimension();
    KForm sym = exterior_derivative(alpha);

    std::mt19937_64 rng(plan.seed);
    const double h = plan.fd_step;
    for (int t = 0; t < plan.trials; ++t) {
        std::vector<Rational> rpt = random_point(rng, chart.size(), plan.coordinate_bound);
        std::vector<double> x(rpt.size());
        for (size_t i = 0; i < rpt.size(); ++i) x[i] = rpt[i].get_d();

        // Numeric d(alpha) assembled from central differences of coefficients.
        std::map<std::vector<int>, double> numeric;
        for (const auto& [idx, c] : alpha.terms()) {
            for (size_t j = 0; j < dim; ++j) {
                std::vector<double> xp = x, xm = x;
                xp[j] += h;
                xm[j] -= h;
                double partial = (c.evaluate_double(xp) - c.evaluate_double(xm)) / (2.0 * h);
                std::vector<int> ext;
                ext.push_back(static_cast<int>(j));
                ext.insert(ext.end(), idx.begin(), idx.end());
                auto s = sort_with_sign(ext);
                if (!s) continue;
                numeric[ext] += (*s > 0 ? partial : -partial);
            }
        }

        std::set<std::vector<int>> tuples;
        for (const auto& [idx, v] : numeric) tuples.insert(idx);
        for (const auto& [idx, c] : sym.terms()) tuples.insert(idx);
        for (const auto& idx : tuples) {
            auto it = numeric.find(idx);
            double approx = it == numeric.end() ? 0.0 : it->second;
            double exact = sym.coefficient(idx).evaluate_double(x);
            if (!within_tolerance(approx, exact, plan.fd_tolerance)) {
                std::ostringstream os;
                os << "fd " << approx << " vs symbolic " << exact << " at " << point_string(rpt);
                return {false, rpt, os.str()};
            }
        }
    }
    return {};
}

Verdict fd_check_bracket(const VectorField& x, const VectorField& y, const TrialPlan& plan) {
    require_same_chart(x.chart(), y.chart());
    const Chart& chart = x.chart();
    const size_t dim = chart.dimension();
    VectorField bracket = lie_bracket(x, y);

    std::mt19937_64 rng(plan.seed);
    const double h = plan.fd_step;
    for (int t = 0; t < plan.trials; ++t) {
        // Random test polynomial of total degree <= 2.
        Poly f(chart);
        {
            Exponents e(chart.size(), 0);
            std::function<void(size_t, int)> rec = [&](size_t var, int left) {
                if (var == chart.size()) {
                    long num = draw_in(rng, -3, 3);
                    long den = draw_in(rng, 1, 3);
                    f.add_term(e, make_rational(num, den));
                    return;
                }
                for (int k = 0; k <= left; ++k) {
                    e[var] = static_cast<unsigned>(k);
                    rec(var + 1, left - k);
                }
                e[var] = 0;
            };
            rec(0, 2);
        }

        std::vector<Rational> rpt = random_point(rng, chart.size(), plan.coordinate_bound);
        std::vector<double> pt(rpt.size());
        for (size_t i = 0; i < rpt.size(); ++i) pt[i] = rpt[i].get_d();

        auto fd_partial = [&](auto&& fn, const std::vector<double>& at, size_t j) {
            std::vector<double> p = at, m = at;
            p[j] += h;
            m[j] -= h;
            return (fn(p) - fn(m)) / (2.0 * h);
        };
        auto f_at = [&](const std::vector<double>& at) { return f.evaluate_double(at); };
        auto yf_at = [&](const std::vector<double>& at) {
            double acc = 0.0;
            for (size_t j = 0; j < dim; ++j)
                acc += y.component(j).evaluate_double(at) * fd_partial(f_at, at, j);
            return acc;
        };
        auto xf_at = [&](const std::vector<double>& at) {
            double acc = 0.0;
            for (size_t j = 0; j < dim; ++j)
                acc += x.component(j).evaluate_double(at) * fd_partial(f_at, at, j);
            return acc;
        };

        double xyf = 0.0, yxf = 0.0, commutator_f = 0.0;
        for (size_t i = 0; i < dim; ++i) {
            xyf += x.component(i).evaluate_double(pt) * fd_partial(yf_at, pt, i);
            yxf += y.component(i).evaluate_double(pt) * fd_partial(xf_at, pt, i);
            commutator_f += bracket.component(i).evaluate_double(pt) * fd_partial(f_at, pt, i);
        }
        // Second-difference tolerance: the nested stencil loses ~h^2 accuracy.
        double tol = std::max(plan.fd_tolerance, 100.0 * h * h);
        if (!within_tolerance(xyf - yxf, commutator_f, tol)) {
            std::ostringstream os;
            os << "(XY-YX)f = " << (xyf - yxf) << " vs [X,Y]f = " << commutator_f << " at "
               << point_string(rpt);
            return {false, rpt, os.str()};
        }
    }
    return {};
}

} // namespace cocyclelab
