#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cocyclelab/errors.hpp"

namespace cocyclelab {

// Base coordinates q^i, fiber velocities, and formal rational parameters.
// Parameters take part in polynomial arithmetic but are not directions of the
// chart: forms and vector fields only index the geometric variables.
enum class VarKind { Base, Velocity, Param };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Base;

    bool operator==(const Variable& other) const = default;
};

// Immutable ordered variable list shared by everything built on it. Geometric
// variables (base + velocity) must precede parameters so that form indices are
// the contiguous range [0, dimension).
class Chart {
  public:
    Chart() : data_(std::make_shared<Data>()) {}

    explicit Chart(std::vector<Variable> vars) {
        auto data = std::make_shared<Data>();
        bool seen_param = false;
        for (size_t i = 0; i < vars.size(); ++i) {
            const Variable& v = vars[i];
            if (v.name.empty()) throw UnknownVariable("empty variable name");
            for (size_t j = 0; j < i; ++j)
                if (vars[j].name == v.name)
                    throw ChartMismatch("duplicate variable name: " + v.name);
            if (v.kind == VarKind::Param)
                seen_param = true;
            else if (seen_param)
                throw ChartMismatch("geometric variable after parameter: " + v.name);
        }
        data->vars = std::move(vars);
        for (const Variable& v : data->vars)
            if (v.kind != VarKind::Param) ++data->dimension;
        data_ = std::move(data);
    }

    static Chart base(const std::vector<std::string>& names) {
        std::vector<Variable> vars;
        vars.reserve(names.size());
        for (const auto& n : names) vars.push_back({n, VarKind::Base});
        return Chart(std::move(vars));
    }

    size_t size() const { return data_->vars.size(); }
    // Number of geometric directions (forms and fields have this many slots).
    size_t dimension() const { return data_->dimension; }

    const Variable& var(size_t i) const { return data_->vars.at(i); }
    const std::vector<Variable>& vars() const { return data_->vars; }

    std::optional<size_t> index_of(std::string_view name) const {
        for (size_t i = 0; i < data_->vars.size(); ++i)
            if (data_->vars[i].name == name) return i;
        return std::nullopt;
    }

    size_t require(std::string_view name) const {
        auto idx = index_of(name);
        if (!idx) throw UnknownVariable("unknown variable: " + std::string(name));
        return *idx;
    }

    bool same(const Chart& other) const {
        return data_ == other.data_ || data_->vars == other.data_->vars;
    }

    bool operator==(const Chart& other) const { return same(other); }

  private:
    struct Data {
        std::vector<Variable> vars;
        size_t dimension = 0;
    };
    std::shared_ptr<const Data> data_;
};

inline void require_same_chart(const Chart& a, const Chart& b) {
    if (!a.same(b)) throw ChartMismatch("values live on different charts");
}

// TQ chart for a base chart: q1..qn followed by velocities v1..vn (positional
// names), parameters carried over at the end.
inline Chart tangent_chart(const Chart& base) {
    std::vector<Variable> vars;
    std::vector<Variable> params;
    size_t n = 0;
    for (const Variable& v : base.vars()) {
        if (v.kind == VarKind::Param) {
            params.push_back(v);
            continue;
        }
        if (v.kind != VarKind::Base)
            throw ChartMismatch("tangent chart requires a base chart, got fiber variable " + v.name);
        vars.push_back(v);
        ++n;
    }
    for (size_t i = 0; i < n; ++i) vars.push_back({"v" + std::to_string(i + 1), VarKind::Velocity});
    for (auto& p : params) vars.push_back(p);
    return Chart(std::move(vars));
}

// T*Q chart: q1..qn, p1..pn.
inline Chart cotangent_chart(const Chart& base) {
    std::vector<Variable> vars;
    std::vector<Variable> params;
    size_t n = 0;
    for (const Variable& v : base.vars()) {
        if (v.kind == VarKind::Param) {
            params.push_back(v);
            continue;
        }
        if (v.kind != VarKind::Base)
            throw ChartMismatch("cotangent chart requires a base chart, got fiber variable " + v.name);
        vars.push_back(v);
        ++n;
    }
    for (size_t i = 0; i < n; ++i) vars.push_back({"p" + std::to_string(i + 1), VarKind::Velocity});
    for (auto& p : params) vars.push_back(p);
    return Chart(std::move(vars));
}

} // namespace cocyclelab
