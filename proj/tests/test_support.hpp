#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cocyclelab/mechanics.hpp"

namespace cocyclelab::testsupport {

inline Rational rand_rational(std::mt19937_64& rng, long bound = 5) {
    long num = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    long den = 1 + static_cast<long>(rng() % bound);
    return make_rational(num, den);
}

inline Rational rand_nonzero_rational(std::mt19937_64& rng, long bound = 5) {
    Rational r = rand_rational(rng, bound);
    while (r == 0) r = rand_rational(rng, bound);
    return r;
}

// Sparse random polynomial of total degree <= max_degree.
inline Poly rand_poly(std::mt19937_64& rng, const Chart& chart, unsigned max_degree,
                      long coeff_bound = 5) {
    Poly p(chart);
    size_t terms = 1 + rng() % 4;
    for (size_t t = 0; t < terms; ++t) {
        Exponents e(chart.size(), 0);
        unsigned left = max_degree;
        for (size_t i = 0; i < chart.size() && left > 0; ++i) {
            unsigned k = rng() % (left + 1);
            e[i] = k;
            left -= k;
        }
        p.add_term(std::move(e), rand_rational(rng, coeff_bound));
    }
    return p;
}

inline VectorField rand_field(std::mt19937_64& rng, const Chart& chart, unsigned coeff_degree = 2) {
    VectorField x(chart);
    for (size_t i = 0; i < chart.dimension(); ++i) x.set_component(i, rand_poly(rng, chart, coeff_degree));
    return x;
}

inline KForm rand_form(std::mt19937_64& rng, const Chart& chart, int degree,
                       unsigned coeff_degree = 2) {
    KForm a(chart, degree);
    const size_t n = chart.dimension();
    std::vector<int> idx(degree);
    std::function<void(size_t, int)> rec = [&](size_t pos, int from) {
        if (pos == idx.size()) {
            if (rng() % 2 == 0) a.add_term(idx, rand_poly(rng, chart, coeff_degree));
            return;
        }
        for (int i = from; i < static_cast<int>(n); ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return a;
}

// omega_std + d(theta) for random polynomial theta, resampled until the
// coefficient determinant is a nonzero polynomial. Requires even dimension.
inline KForm rand_closed_nondegenerate(std::mt19937_64& rng, const Chart& chart,
                                       unsigned theta_degree = 2) {
    const size_t n = chart.dimension();
    KForm omega_std(chart, 2);
    for (size_t i = 0; i + 1 < n; i += 2)
        omega_std.add_term({static_cast<int>(i), static_cast<int>(i + 1)},
                           Poly::constant(chart, Rational(1)));
    while (true) {
        KForm theta = rand_form(rng, chart, 1, theta_degree);
        KForm omega = omega_std + exterior_derivative(theta);
        if (!two_form_determinant(omega).is_zero()) return omega;
    }
}

struct Fixture {
    std::string name;
    Chart chart;
    ActionMap action;
};

// The four property-suite fixtures: abelian-2 and abelian-3 translations,
// an sl2-type linear action, and the affine line acting on a plane.
inline std::vector<Fixture> cohomology_fixtures() {
    std::vector<Fixture> out;
    {
        Chart c = Chart::base({"x", "y"});
        ActionMap a(LieAlgebra::abelian(2), c, {VectorField::basis(c, 0), VectorField::basis(c, 1)});
        out.push_back({"abelian-2", c, std::move(a)});
    }
    {
        Chart c = Chart::base({"x1", "x2", "x3", "x4"});
        ActionMap a(LieAlgebra::abelian(3), c,
                    {VectorField::basis(c, 0), VectorField::basis(c, 1), VectorField::basis(c, 2)});
        out.push_back({"abelian-3", c, std::move(a)});
    }
    {
        // [e1,e2] = 2 e2, [e1,e3] = -2 e3, [e2,e3] = e1.
        LieAlgebraBuilder b(3);
        b.set_bracket(0, 1, {Rational(0), Rational(2), Rational(0)});
        b.set_bracket(0, 2, {Rational(0), Rational(0), Rational(-2)});
        b.set_bracket(1, 2, {Rational(1), Rational(0), Rational(0)});
        Chart c = Chart::base({"x", "y"});
        Poly x = Poly::variable(c, 0), y = Poly::variable(c, 1);
        VectorField h(c), e(c), f(c);
        h.set_component(0, -x);
        h.set_component(1, y);
        e.set_component(0, -y);
        f.set_component(1, -x);
        ActionMap a(b.build(), c, {h, e, f});
        out.push_back({"sl2", c, std::move(a)});
    }
    {
        // Affine line: [e1,e2] = e2, acting on the (x, y) plane along x.
        LieAlgebraBuilder b(2);
        b.set_bracket(0, 1, {Rational(0), Rational(1)});
        Chart c = Chart::base({"x", "y"});
        Poly x = Poly::variable(c, 0);
        VectorField scale(c), shift(c);
        scale.set_component(0, -x);
        shift.set_component(0, -Poly::constant(c, Rational(1)));
        ActionMap a(b.build(), c, {scale, shift});
        out.push_back({"affine-line", c, std::move(a)});
    }
    return out;
}

// Worked-example Lagrangian system (translations on the plane).
inline LagrangianSystem worked_example() {
    Chart q = Chart::base({"q1", "q2"});
    Chart tq = tangent_chart(q);
    Poly v1 = Poly::variable(tq, "v1"), v2 = Poly::variable(tq, "v2"), q1 = Poly::variable(tq, "q1");
    Poly l_inv = make_rational(1, 2) * (v1 * v1 + v2 * v2);
    Poly l_delta = q1 * q1 * v2;
    ActionMap action(LieAlgebra::abelian(2), q, {VectorField::basis(q, 0), VectorField::basis(q, 1)});
    return make_lagrangian_system(q, l_inv, l_delta, action);
}

inline LagrangianSystem free_particle() {
    Chart q = Chart::base({"q1", "q2"});
    Chart tq = tangent_chart(q);
    Poly v1 = Poly::variable(tq, "v1"), v2 = Poly::variable(tq, "v2");
    Poly l_inv = make_rational(1, 2) * (v1 * v1 + v2 * v2);
    ActionMap action(LieAlgebra::abelian(2), q, {VectorField::basis(q, 0), VectorField::basis(q, 1)});
    return make_lagrangian_system(q, l_inv, Poly(tq), action);
}

inline std::vector<Rational> origin(size_t n) { return std::vector<Rational>(n, Rational(0)); }

} // namespace cocyclelab::testsupport
