#include "cocyclelab/forms.hpp"

#include <algorithm>
#include <sstream>

namespace cocyclelab {

namespace {

// Sorts an index tuple ascending; returns the permutation sign, or nullopt
// when an index repeats (alternating: the term is zero).
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

// Renders a coefficient in front of a basis blade.
std::string coeff_prefix(const Poly& c) {
    if (c.terms().size() == 1) {
        std::string s = c.str();
        if (s == "1") return "";
        if (s == "-1") return "-";
        return s + "*";
    }
    return "(" + c.str() + ")*";
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
        if (!parts[i].empty() && parts[i][0] == '-')
            out += " - " + parts[i].substr(1);
        else
            out += " + " + parts[i];
    }
    return out;
}

} // namespace

//--------------------------------------------------------------------------
// VectorField
//--------------------------------------------------------------------------

VectorField::VectorField(Chart chart, std::vector<Poly> comps)
  : chart_(std::move(chart)), comps_(std::move(comps)) {
    if (comps_.size() != chart_.dimension())
        throw DimensionMismatch("vector field needs one component per geometric direction");
    for (const Poly& p : comps_) require_same_chart(chart_, p.chart());
}

VectorField VectorField::basis(const Chart& chart, size_t direction) {
    VectorField x(chart);
    if (direction >= chart.dimension()) throw UnknownVariable("direction out of range");
    x.comps_[direction] = Poly::constant(chart, Rational(1));
    return x;
}

void VectorField::set_component(size_t i, Poly p) {
    require_same_chart(chart_, p.chart());
    comps_.at(i) = std::move(p);
}

bool VectorField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly VectorField::apply(const Poly& f) const {
    require_same_chart(chart_, f.chart());
    Poly out(chart_);
    for (size_t i = 0; i < comps_.size(); ++i) out += comps_[i] * f.differentiate(i);
    return out;
}

VectorField VectorField::operator-() const {
    VectorField out = *this;
    for (Poly& p : out.comps_) p = -p;
    return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
    require_same_chart(chart_, o.chart_);
    for (size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    require_same_chart(chart_, o.chart_);
    for (size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
}

std::string VectorField::str() const {
    std::vector<std::string> parts;
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (comps_[i].is_zero()) continue;
        parts.push_back(coeff_prefix(comps_[i]) + "d/d" + chart_.var(i).name);
    }
    return join_terms(parts);
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField out = a;
    out += b;
    return out;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField out = a;
    out -= b;
    return out;
}

VectorField operator*(const Rational& c, const VectorField& x) {
    VectorField out = x;
    for (size_t i = 0; i < out.dimension(); ++i) out.set_component(i, c * out.component(i));
    return out;
}

VectorField operator*(const Poly& f, const VectorField& x) {
    VectorField out = x;
    for (size_t i = 0; i < out.dimension(); ++i) out.set_component(i, f * out.component(i));
    return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    require_same_chart(x.chart(), y.chart());
    VectorField out(x.chart());
    for (size_t i = 0; i < out.dimension(); ++i)
        out.set_component(i, x.apply(y.component(i)) - y.apply(x.component(i)));
    return out;
}

//--------------------------------------------------------------------------
// KForm
//--------------------------------------------------------------------------

KForm::KForm(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
    if (degree < 0) throw UnsupportedDegree("negative form degree");
}

KForm KForm::from_function(Poly f) {
    KForm a(f.chart(), 0);
    if (!f.is_zero()) a.coeffs_.emplace(std::vector<int>{}, std::move(f));
    return a;
}

KForm KForm::basis(const Chart& chart, std::vector<int> indices) {
    KForm a(chart, static_cast<int>(indices.size()));
    a.add_term(std::move(indices), Poly::constant(chart, Rational(1)));
    return a;
}

KForm& KForm::add_term(std::vector<int> indices, const Poly& coeff) {
    require_same_chart(chart_, coeff.chart());
    if (static_cast<int>(indices.size()) != degree_)
        throw DimensionMismatch("index tuple length != form degree");
    for (int i : indices)
        if (i < 0 || static_cast<size_t>(i) >= chart_.dimension())
            throw UnknownVariable("form index out of range");
    if (coeff.is_zero()) return *this;
    auto s = sort_with_sign(indices);
    if (!s) return *this;
    Poly signed_coeff = (*s > 0) ? coeff : -coeff;
    auto [it, inserted] = coeffs_.emplace(std::move(indices), signed_coeff);
    if (!inserted) {
        it->second += signed_coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

Poly KForm::coefficient(std::vector<int> indices) const {
    auto s = sort_with_sign(indices);
    if (!s) return Poly(chart_);
    auto it = coeffs_.find(indices);
    if (it == coeffs_.end()) return Poly(chart_);
    return (*s > 0) ? it->second : -it->second;
}

KForm KForm::operator-() const {
    KForm out(chart_, degree_);
    for (const auto& [idx, c] : coeffs_) out.coeffs_.emplace(idx, -c);
    return out;
}

KForm& KForm::operator+=(const KForm& o) {
    require_same_chart(chart_, o.chart_);
    if (degree_ != o.degree_) throw DimensionMismatch("adding forms of different degree");
    for (const auto& [idx, c] : o.coeffs_) add_term(idx, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) {
    require_same_chart(chart_, o.chart_);
    if (degree_ != o.degree_) throw DimensionMismatch("subtracting forms of different degree");
    for (const auto& [idx, c] : o.coeffs_) add_term(idx, -c);
    return *this;
}

namespace {

Poly small_determinant(const std::vector<std::vector<Poly>>& m, const Chart& chart) {
    const size_t n = m.size();
    if (n == 0) return Poly::constant(chart, Rational(1));
    if (n == 1) return m[0][0];
    Poly out(chart);
    // Cofactor expansion along the first row; tuples here are tiny (k <= 4).
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (size_t l = 0; l < n; ++l)
                if (l != j) row.push_back(m[i][l]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * small_determinant(minor, chart);
        if (j % 2 == 1) term = -term;
        out += term;
    }
    return out;
}

} // namespace

Poly KForm::evaluate_on(std::span<const VectorField> fields) const {
    if (fields.size() != static_cast<size_t>(degree_))
        throw DimensionMismatch("field count != form degree");
    for (const VectorField& x : fields) require_same_chart(chart_, x.chart());
    Poly out(chart_);
    for (const auto& [idx, c] : coeffs_) {
        std::vector<std::vector<Poly>> m(idx.size(), std::vector<Poly>());
        for (size_t l = 0; l < idx.size(); ++l)
            for (size_t col = 0; col < fields.size(); ++col)
                m[l].push_back(fields[col].component(idx[l]));
        out += c * small_determinant(m, chart_);
    }
    return out;
}

std::string KForm::str() const {
    if (degree_ == 0) return coefficient({}).str();
    std::vector<std::string> parts;
    for (const auto& [idx, c] : coeffs_) {
        std::string blade;
        for (size_t i = 0; i < idx.size(); ++i) {
            if (i) blade += "^";
            blade += "d" + chart_.var(idx[i]).name;
        }
        parts.push_back(coeff_prefix(c) + blade);
    }
    return join_terms(parts);
}

KForm operator+(const KForm& a, const KForm& b) {
    KForm out = a;
    out += b;
    return out;
}

KForm operator-(const KForm& a, const KForm& b) {
    KForm out = a;
    out -= b;
    return out;
}

KForm operator*(const Poly& f, const KForm& a) {
    KForm out(a.chart(), a.degree());
    for (const auto& [idx, c] : a.terms()) out.add_term(idx, f * c);
    return out;
}

KForm operator*(const Rational& c, const KForm& a) {
    return Poly::constant(a.chart(), c) * a;
}

KForm wedge(const KForm& a, const KForm& b) {
    require_same_chart(a.chart(), b.chart());
    KForm out(a.chart(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add_term(std::move(idx), ca * cb);
        }
    }
    return out;
}

KForm exterior_derivative(const KForm& a) {
    KForm out(a.chart(), a.degree() + 1);
    for (const auto& [idx, c] : a.terms()) {
        for (size_t j = 0; j < a.chart().dimension(); ++j) {
            Poly dc = c.differentiate(j);
            if (dc.is_zero()) continue;
            std::vector<int> ext;
            ext.reserve(idx.size() + 1);
            ext.push_back(static_cast<int>(j));
            ext.insert(ext.end(), idx.begin(), idx.end());
            out.add_term(std::move(ext), dc);
        }
    }
    return out;
}

KForm interior_product(const VectorField& x, const KForm& a) {
    require_same_chart(x.chart(), a.chart());
    if (a.degree() < 1) throw DegreeTooLow("interior product of a 0-form");
    KForm out(a.chart(), a.degree() - 1);
    for (const auto& [idx, c] : a.terms()) {
        for (size_t m = 0; m < idx.size(); ++m) {
            Poly factor = x.component(idx[m]) * c;
            if (factor.is_zero()) continue;
            if (m % 2 == 1) factor = -factor;
            std::vector<int> rest;
            rest.reserve(idx.size() - 1);
            for (size_t l = 0; l < idx.size(); ++l)
                if (l != m) rest.push_back(idx[l]);
            out.add_term(std::move(rest), factor);
        }
    }
    return out;
}

KForm lie_derivative(const VectorField& x, const KForm& a) {
    require_same_chart(x.chart(), a.chart());
    if (a.degree() == 0) return interior_product(x, exterior_derivative(a));
    return interior_product(x, exterior_derivative(a)) + exterior_derivative(interior_product(x, a));
}

//--------------------------------------------------------------------------
// PolyMap and pullback
//--------------------------------------------------------------------------

PolyMap::PolyMap(Chart source, Chart target, std::vector<Poly> comps)
  : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
    if (comps_.size() != target_.dimension())
        throw DimensionMismatch("polynomial map needs one component per target direction");
    for (const Poly& p : comps_) require_same_chart(source_, p.chart());
}

PolyMap PolyMap::identity(const Chart& chart) {
    std::vector<Poly> comps;
    for (size_t i = 0; i < chart.dimension(); ++i) comps.push_back(Poly::variable(chart, i));
    return PolyMap(chart, chart, std::move(comps));
}

std::vector<Poly> PolyMap::images() const {
    std::vector<Poly> images = comps_;
    for (size_t i = target_.dimension(); i < target_.size(); ++i)
        images.push_back(Poly::variable(source_, target_.var(i).name));
    return images;
}

Poly pullback(const PolyMap& phi, const Poly& f) {
    require_same_chart(phi.target(), f.chart());
    return f.substitute(phi.images());
}

KForm pullback(const PolyMap& phi, const KForm& a) {
    require_same_chart(phi.target(), a.chart());
    const Chart& src = phi.source();
    // d(phi^i) as 1-forms on the source chart.
    std::vector<KForm> dphi;
    dphi.reserve(phi.components().size());
    for (const Poly& comp : phi.components())
        dphi.push_back(exterior_derivative(KForm::from_function(comp)));

    KForm out(src, a.degree());
    for (const auto& [idx, c] : a.terms()) {
        KForm blade = KForm::from_function(pullback(phi, c));
        for (int i : idx) blade = wedge(blade, dphi[i]);
        out += blade;
    }
    return out;
}

std::vector<std::vector<Poly>> two_form_matrix(const KForm& omega) {
    if (omega.degree() != 2) throw DimensionMismatch("coefficient matrix requires a 2-form");
    const size_t n = omega.chart().dimension();
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(omega.chart())));
    for (const auto& [idx, c] : omega.terms()) {
        a[idx[0]][idx[1]] = c;
        a[idx[1]][idx[0]] = -c;
    }
    return a;
}

KForm two_form_from_matrix(const Chart& chart, const std::vector<std::vector<Poly>>& a) {
    KForm out(chart, 2);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a[i].size(); ++j)
            out.add_term({static_cast<int>(i), static_cast<int>(j)}, a[i][j]);
    return out;
}

} // namespace cocyclelab
