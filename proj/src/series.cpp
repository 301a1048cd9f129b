#include "hsq/series.hpp"

#include <sstream>

namespace hsq {

TruncatedMultiSeries::TruncatedMultiSeries(Var coeff_var, MultiDegree box)
    : var_(coeff_var), box_(std::move(box)) {
    if (box_.empty()) throw validation_error("series box must have at least one variable");
    for (int b : box_)
        if (b < 0) throw validation_error("series box entries must be nonnegative");
}

TruncatedMultiSeries TruncatedMultiSeries::one(Var coeff_var, MultiDegree box) {
    TruncatedMultiSeries s(coeff_var, std::move(box));
    s.set_coeff(MultiDegree(s.box_.size(), 0), RationalFunction::one(coeff_var));
    return s;
}

bool TruncatedMultiSeries::in_box(const MultiDegree& v) const {
    if (v.size() != box_.size()) return false;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0 || v[i] > box_[i]) return false;
    return true;
}

RationalFunction TruncatedMultiSeries::coeff(const MultiDegree& v) const {
    if (!in_box(v)) throw validation_error("series coefficient outside the truncation box");
    auto it = coeffs_.find(v);
    return it == coeffs_.end() ? RationalFunction::zero(var_) : it->second;
}

void TruncatedMultiSeries::set_coeff(const MultiDegree& v, RationalFunction c) {
    if (!in_box(v)) throw validation_error("series coefficient outside the truncation box");
    if (c.var() != var_) throw validation_error("series coefficient variable-tag mismatch");
    if (c.is_zero())
        coeffs_.erase(v);
    else
        coeffs_[v] = std::move(c);
}

std::string TruncatedMultiSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, c] : coeffs_) {
        if (!first) out << " + ";
        out << "(" << c.to_string() << ")*T^[";
        for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << "]";
        first = false;
    }
    return first ? "0" : out.str();
}

namespace {

void check_compatible(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
    if (a.box() != b.box() || a.coeff_var() != b.coeff_var())
        throw validation_error("series box or coefficient-variable mismatch");
}

} // namespace

TruncatedMultiSeries series_mul(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
    check_compatible(a, b);
    TruncatedMultiSeries r(a.coeff_var(), a.box());
    std::map<MultiDegree, RationalFunction> acc;
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [w, cw] : b.terms()) {
            MultiDegree v(u.size());
            bool inside = true;
            for (size_t i = 0; i < u.size(); ++i) {
                v[i] = u[i] + w[i];
                if (v[i] > a.box()[i]) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            auto it = acc.find(v);
            if (it == acc.end())
                acc.emplace(std::move(v), cu * cw);
            else
                it->second += cu * cw;
        }
    }
    for (auto& [v, c] : acc) r.set_coeff(v, std::move(c));
    return r;
}

TruncatedMultiSeries series_invert(const TruncatedMultiSeries& a) {
    const MultiDegree origin(a.box().size(), 0);
    if (!a.coeff(origin).is_one())
        throw validation_error("series_invert requires constant coefficient 1");

    TruncatedMultiSeries r(a.coeff_var(), a.box());
    r.set_coeff(origin, RationalFunction::one(a.coeff_var()));

    // Lexicographic enumeration is a linear extension of the componentwise
    // order, so every u <= v needed below is already computed.
    MultiDegree v = origin;
    auto next = [&]() {
        for (size_t i = v.size(); i-- > 0;) {
            if (v[i] < a.box()[i]) {
                ++v[i];
                for (size_t j = i + 1; j < v.size(); ++j) v[j] = 0;
                return true;
            }
        }
        return false;
    };
    while (next()) {
        RationalFunction s = RationalFunction::zero(a.coeff_var());
        for (const auto& [u, cu] : a.terms()) {
            if (u == origin) continue;
            MultiDegree d(v.size());
            bool ok = true;
            for (size_t i = 0; i < v.size(); ++i) {
                d[i] = v[i] - u[i];
                if (d[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            const RationalFunction bc = r.coeff(d);
            if (!bc.is_zero()) s += cu * bc;
        }
        if (!s.is_zero()) r.set_coeff(v, -s);
    }
    return r;
}

} // namespace hsq
