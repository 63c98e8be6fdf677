#include "cocyclelab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cocyclelab {

Poly Poly::constant(const Chart& chart, const Rational& c) {
    Poly p(chart);
    p.add_term(Exponents(chart.size(), 0), c);
    return p;
}

Poly Poly::variable(const Chart& chart, size_t index) {
    if (index >= chart.size()) throw UnknownVariable("variable index out of range");
    Poly p(chart);
    Exponents e(chart.size(), 0);
    e[index] = 1;
    p.add_term(std::move(e), Rational(1));
    return p;
}

Poly Poly::variable(const Chart& chart, std::string_view name) {
    return variable(chart, chart.require(name));
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned Poly::total_degree() const {
    if (terms_.empty()) return 0;
    const Exponents& lead = terms_.rbegin()->first;
    unsigned d = 0;
    for (unsigned e : lead) d += e;
    return d;
}

unsigned Poly::degree_in(size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        if (var < e.size()) d = std::max(d, e[var]);
    return d;
}

Rational Poly::leading_coefficient() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

Poly& Poly::add_term(Exponents exps, const Rational& c) {
    if (exps.size() != chart_.size()) throw DimensionMismatch("exponent vector length != chart size");
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly out(chart_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& other) {
    require_same_chart(chart_, other.chart_);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    require_same_chart(chart_, other.chart_);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    out += b;
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    out -= b;
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_chart(a.chart(), b.chart());
    Poly out(a.chart());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    }
    return out;
}

Poly operator*(const Rational& c, const Poly& p) {
    Poly out = p;
    out *= c;
    return out;
}

Poly operator*(const Poly& p, const Rational& c) { return c * p; }

Poly pow(const Poly& p, unsigned e) {
    Poly out = Poly::constant(p.chart(), Rational(1));
    for (unsigned i = 0; i < e; ++i) out = out * p;
    return out;
}

Poly Poly::differentiate(size_t var) const {
    if (var >= chart_.size()) throw UnknownVariable("variable index out of range");
    Poly out(chart_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        out.add_term(std::move(d), c * Rational(static_cast<long>(e[var])));
    }
    return out;
}

Poly Poly::differentiate(std::string_view var) const { return differentiate(chart_.require(var)); }

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (point.size() != chart_.size()) throw DimensionMismatch("point length != chart size");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= rational_pow(point[i], e[i]);
        total += term;
    }
    return total;
}

double Poly::evaluate_double(std::span<const double> point) const {
    if (point.size() != chart_.size()) throw DimensionMismatch("point length != chart size");
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= std::pow(point[i], static_cast<int>(e[i]));
        total += term;
    }
    return total;
}

Poly Poly::substitute(std::span<const Poly> images) const {
    if (images.size() != chart_.size()) throw DimensionMismatch("one image per chart variable required");
    if (images.empty()) throw DimensionMismatch("substitution into an empty chart");
    const Chart& target = images[0].chart();
    for (const Poly& im : images) require_same_chart(target, im.chart());
    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * pow(images[i], e[i]);
        out += term;
    }
    return out;
}

Poly Poly::inject(const Chart& super) const {
    std::vector<Poly> images;
    images.reserve(chart_.size());
    for (const Variable& v : chart_.vars()) images.push_back(Poly::variable(super, v.name));
    return substitute(images);
}

bool Poly::operator==(const Poly& other) const {
    return chart_.same(other.chart_) && terms_ == other.terms_;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending graded-lex: leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (sign(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sign(a) < 0 ? " - " : " + ");
            if (sign(a) < 0) a = -a;
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x != 0; });
        if (!any_var) {
            os << to_string(a);
        } else {
            bool printed = false;
            if (a != 1) {
                os << to_string(a);
                printed = true;
            }
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (printed) os << "*";
                os << chart_.var(i).name;
                if (e[i] > 1) os << "^" << e[i];
                printed = true;
            }
        }
        first = false;
    }
    return os.str();
}

//--------------------------------------------------------------------------
// Exact division and gcd
//--------------------------------------------------------------------------

namespace {

bool exponents_divide(const Exponents& den, const Exponents& num) {
    for (size_t i = 0; i < den.size(); ++i)
        if (den[i] > num[i]) return false;
    return true;
}

} // namespace

std::optional<Poly> try_divide(const Poly& p, const Poly& d) {
    require_same_chart(p.chart(), d.chart());
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly r = p;
    Poly q(p.chart());
    const auto& dlead = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        if (!exponents_divide(dlead.first, rlead.first)) return std::nullopt;
        Exponents e(rlead.first.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = rlead.first[i] - dlead.first[i];
        Rational c = rlead.second / dlead.second;
        Poly t(p.chart());
        t.add_term(std::move(e), c);
        q += t;
        r -= t * d;
    }
    return q;
}

Poly divide_exact(const Poly& p, const Poly& d) {
    auto q = try_divide(p, d);
    if (!q) throw Error("inexact polynomial division");
    return *q;
}

namespace {

Poly normalize_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_coefficient());
}

// gcd of the coefficients as a positive rational (coefficient-size control for
// the pseudo-remainder sequences; any rational unit is irrelevant to the gcd).
Rational rational_content(const Poly& p) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    if (num_gcd == 0) return Rational(1);
    Rational out(abs(num_gcd), den_lcm);
    out.canonicalize();
    return out;
}

Poly rational_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / rational_content(p));
}

// Univariate view of p in the main variable: coefficient polynomials (with the
// main exponent stripped to zero) indexed by main-variable degree.
std::map<unsigned, Poly> univariate_view(const Poly& p, size_t main) {
    std::map<unsigned, Poly> view;
    for (const auto& [e, c] : p.terms()) {
        Exponents stripped = e;
        unsigned k = stripped[main];
        stripped[main] = 0;
        auto it = view.find(k);
        if (it == view.end()) it = view.emplace(k, Poly(p.chart())).first;
        it->second.add_term(std::move(stripped), c);
    }
    return view;
}

Poly content_in(const Poly& p, size_t main) {
    Poly c(p.chart());
    for (const auto& [k, coeff] : univariate_view(p, main)) c = poly_gcd(c, coeff);
    return c;
}

// Substitutes every variable except `main` with the given rational values
// (indexed by chart position; the entry at `main` is ignored).
Poly specialize_except(const Poly& p, size_t main, const std::vector<Rational>& vals) {
    Poly out(p.chart());
    for (const auto& [e, c] : p.terms()) {
        Rational coeff = c;
        Exponents kept(e.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (i == main) {
                kept[i] = e[i];
            } else if (e[i] != 0) {
                coeff *= rational_pow(vals[i], e[i]);
            }
        }
        out.add_term(std::move(kept), coeff);
    }
    return out;
}

// Upper bound for the main-variable degree of gcd(pp_a, pp_b) via a random
// specialization of the remaining variables. Sound whenever the leading
// coefficients survive the specialization (an unlucky point can only
// overestimate). nullopt when no usable point was found.
std::optional<unsigned> specialized_gcd_degree(const Poly& pa, const Poly& pb, size_t main) {
    auto lead_coeff_in = [&](const Poly& p) {
        return univariate_view(p, main).rbegin()->second;
    };
    Poly lca = lead_coeff_in(pa);
    Poly lcb = lead_coeff_in(pb);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int attempt = 0; attempt < 12; ++attempt) {
        std::vector<Rational> vals(pa.chart().size(), Rational(0));
        for (size_t i = 0; i < vals.size(); ++i) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            vals[i] = Rational(static_cast<long>(state % 19) - 9);
        }
        if (lca.evaluate(vals) == 0 || lcb.evaluate(vals) == 0) continue;
        Poly ua = specialize_except(pa, main, vals);
        Poly ub = specialize_except(pb, main, vals);
        return poly_gcd(ua, ub).degree_in(main);
    }
    return std::nullopt;
}

// Substitutes a single variable with a rational value.
Poly specialize_one(const Poly& p, size_t var, const Rational& value) {
    Poly out(p.chart());
    for (const auto& [e, c] : p.terms()) {
        Exponents kept = e;
        Rational coeff = c;
        if (kept[var] != 0) {
            coeff *= rational_pow(value, kept[var]);
            kept[var] = 0;
        }
        out.add_term(std::move(kept), coeff);
    }
    return out;
}

// Dense evaluation-interpolation gcd for the bivariate case (variables `main`
// and `other` only). Returns the verified gcd of the primitive parts, or
// nullopt when interpolation fails (caller falls back to the remainder
// sequence). Trial division keeps the result sound regardless of point luck.
std::optional<Poly> bivariate_interpolation_gcd(const Poly& f, const Poly& g, size_t main,
                                                size_t other) {
    const Chart& chart = f.chart();
    auto lc_in_main = [&](const Poly& p) { return univariate_view(p, main).rbegin()->second; };
    Poly lcf = lc_in_main(f);
    Poly lcg = lc_in_main(g);
    Poly gamma = poly_gcd(lcf, lcg); // univariate in `other`

    unsigned points_needed =
        std::min(f.degree_in(other), g.degree_in(other)) + gamma.degree_in(other) + 1;
    unsigned d_min = std::min(f.degree_in(main), g.degree_in(main));

    std::vector<Rational> xs;
    std::vector<Poly> images; // gamma(t) * monic univariate gcd at y = t
    long t_raw = 0;
    for (int attempts = 0; attempts < 200 && images.size() < points_needed; ++attempts) {
        Rational t(t_raw);
        t_raw = t_raw <= 0 ? -t_raw + 1 : -t_raw; // 0, 1, -1, 2, -2, ...
        std::vector<Rational> probe(chart.size(), Rational(0));
        probe[other] = t;
        if (lcf.evaluate(probe) == 0 || lcg.evaluate(probe) == 0) continue;

        Poly ft = specialize_one(f, other, t);
        Poly gt = specialize_one(g, other, t);
        Poly wt = poly_gcd(ft, gt); // univariate in `main`, monic
        unsigned dt = wt.degree_in(main);
        if (dt == 0) return Poly::constant(chart, Rational(1));
        if (dt > d_min) continue; // unlucky point
        if (dt < d_min) {
            d_min = dt;
            xs.clear();
            images.clear();
        }
        Rational scale = gamma.evaluate(probe);
        xs.push_back(t);
        images.push_back(scale * wt);
    }
    if (images.size() < points_needed) return std::nullopt;

    // Lagrange interpolation in `other` of each main-power coefficient.
    Poly yvar = Poly::variable(chart, other);
    Poly candidate(chart);
    for (size_t i = 0; i < images.size(); ++i) {
        Poly basis = Poly::constant(chart, Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < images.size(); ++j) {
            if (j == i) continue;
            basis = basis * (yvar - Poly::constant(chart, xs[j]));
            denom *= xs[i] - xs[j];
        }
        candidate += (Rational(1) / denom) * basis * images[i];
    }
    if (candidate.is_zero()) return std::nullopt;
    candidate = rational_primitive(divide_exact(candidate, content_in(candidate, main)));
    if (!try_divide(f, candidate) || !try_divide(g, candidate)) return std::nullopt;
    return candidate;
}

// Pseudo-remainder of f by g as univariates in `main`.
Poly pseudo_remainder(const Poly& f, const Poly& g, size_t main) {
    auto gview = univariate_view(g, main);
    unsigned dg = gview.rbegin()->first;
    const Poly& lcg = gview.rbegin()->second;
    Poly r = f;
    Poly xk = Poly::variable(f.chart(), main);
    while (!r.is_zero()) {
        auto rview = univariate_view(r, main);
        unsigned dr = rview.rbegin()->first;
        if (dr < dg) break;
        const Poly lcr = rview.rbegin()->second;
        // Rational renormalization each step; units do not affect the gcd.
        r = rational_primitive(lcg * r - lcr * pow(xk, dr - dg) * g);
    }
    return r;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same_chart(a.chart(), b.chart());
    if (a.is_zero()) return normalize_monic(b);
    if (b.is_zero()) return normalize_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.chart(), Rational(1));

    size_t main = 0;
    while (main < a.chart().size() && !a.depends_on(main) && !b.depends_on(main)) ++main;

    Poly ca = content_in(a, main);
    Poly cb = content_in(b, main);
    Poly c = poly_gcd(ca, cb);
    Poly f = rational_primitive(divide_exact(a, ca));
    Poly g = rational_primitive(divide_exact(b, cb));

    // Coprime primitive parts are the generic case; a specialization bound of
    // zero certifies them without running the remainder sequence.
    std::vector<size_t> others;
    for (size_t i = 0; i < a.chart().size(); ++i)
        if (i != main && (f.depends_on(i) || g.depends_on(i))) others.push_back(i);
    if (!others.empty()) {
        auto bound = specialized_gcd_degree(f, g, main);
        if (bound && *bound == 0) return normalize_monic(c);
    }
    if (others.size() == 1) {
        auto interpolated = bivariate_interpolation_gcd(f, g, main, others[0]);
        if (interpolated) return normalize_monic(c * *interpolated);
    }

    // Primitive PRS in the main variable.
    if (f.degree_in(main) < g.degree_in(main)) std::swap(f, g);
    while (true) {
        Poly r = pseudo_remainder(f, g, main);
        if (r.is_zero()) break;
        if (r.degree_in(main) == 0) {
            g = Poly::constant(a.chart(), Rational(1));
            break;
        }
        f = g;
        g = rational_primitive(divide_exact(r, content_in(r, main)));
    }
    return normalize_monic(c * g);
}

} // namespace cocyclelab
