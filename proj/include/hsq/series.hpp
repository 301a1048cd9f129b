#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsq/rational_fn.hpp"

namespace hsq {

using MultiDegree = std::vector<int>;

// Power series in T_1..T_arity truncated to a fixed degree box, with
// rational-function coefficients.  Every operation stays inside the box;
// degrees outside it are silently unrepresentable, never grown into.
class TruncatedMultiSeries {
public:
    TruncatedMultiSeries(Var coeff_var, MultiDegree box);

    static TruncatedMultiSeries one(Var coeff_var, MultiDegree box);

    int arity() const { return static_cast<int>(box_.size()); }
    const MultiDegree& box() const { return box_; }
    Var coeff_var() const { return var_; }
    const std::map<MultiDegree, RationalFunction>& terms() const { return coeffs_; }

    RationalFunction coeff(const MultiDegree& v) const;
    void set_coeff(const MultiDegree& v, RationalFunction c);
    bool in_box(const MultiDegree& v) const;

    bool operator==(const TruncatedMultiSeries& o) const = default;

    std::string to_string() const;

private:
    Var var_;
    MultiDegree box_;
    std::map<MultiDegree, RationalFunction> coeffs_;
};

// Exact convolution within the shared box; throws on arity/box mismatch.
TruncatedMultiSeries series_mul(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b);

// Inverse to the truncation box; requires constant coefficient 1.
TruncatedMultiSeries series_invert(const TruncatedMultiSeries& a);

} // namespace hsq
