#pragma once

#include <utility>
#include <vector>

#include "hsq/laurent.hpp"
#include "hsq/partitions.hpp"
#include "hsq/series.hpp"

namespace hsq {

// Directed multigraph on 0-based vertices; loops and repeated edges allowed
// and meaningful (each copy contributes separately).
struct Quiver {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    Quiver(int vertices, std::vector<std::pair<int, int>> edge_list);
};

// Gauge dimensions v and framing dimensions w, one entry per vertex.
struct DimensionData {
    std::vector<int> v;
    std::vector<int> w;
};

struct QuiverQuery {
    Quiver quiver;
    std::vector<int> w;
    std::vector<int> v_max;

    QuiverQuery(Quiver q, std::vector<int> framing, std::vector<int> box);
};

// log_q of the kernel size of the adjoint-plus-framing action of a tuple of
// nilpotents of types lambdas: sum over edges of n(lambda^i, lambda^j) plus
// sum over vertices of w_i * length(lambda^i).
int kernel_exponent(const Quiver& quiver, const std::vector<int>& w,
                    const std::vector<Partition>& lambdas);

// Multi-variable nilpotent generating series over the v_max box: the
// coefficient of T^v sums q^kernel_exponent / prod |C_{lambda^i}| over all
// partition tuples with |lambda^i| = v_i.
TruncatedMultiSeries quiver_phi_nil(const QuiverQuery& query);

// Point count of the quiver variety at gauge dimension v:
// [T^v] (Phi_nil(w)/Phi_nil(0)) * q^(sum_E v_i v_j + sum_i v_i w_i - sum_i v_i^2),
// asserted to collapse to a polynomial.
LaurentPolynomial quiver_count(const QuiverQuery& query, const std::vector<int>& v);

// t^(2 d(v,w)) * quiver_count at q = t^-2, a polynomial in t^2 with
// nonnegative coefficients (d is the complex dimension).
LaurentPolynomial quiver_poincare(const QuiverQuery& query, const std::vector<int>& v);

// d(v,w) = 2 sum_{(i,j) in E} v_i v_j + 2 sum_i v_i (w_i - v_i).
int quiver_dimension(const Quiver& quiver, const std::vector<int>& v,
                     const std::vector<int>& w);

} // namespace hsq
