#include "hsq/quiver.hpp"

#include <algorithm>
#include <string>

#include "hsq/errors.hpp"

namespace hsq {

namespace {

void check_vertex_vector(const std::vector<int>& x, int n, const char* what) {
    if (static_cast<int>(x.size()) != n)
        throw validation_error(std::string(what) + " length must equal the vertex count");
    for (int e : x)
        if (e < 0) throw validation_error(std::string(what) + " entries must be nonnegative");
}

// Advance v through the box in lexicographic order; false once exhausted.
bool next_in_box(MultiDegree& v, const MultiDegree& box) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
        if (v[static_cast<size_t>(i)] < box[static_cast<size_t>(i)]) {
            ++v[static_cast<size_t>(i)];
            return true;
        }
        v[static_cast<size_t>(i)] = 0;
    }
    return false;
}

} // namespace

Quiver::Quiver(int vertices, std::vector<std::pair<int, int>> edge_list)
    : vertex_count(vertices), edges(std::move(edge_list)) {
    if (vertex_count < 1) throw validation_error("quiver needs at least one vertex");
    for (const auto& [i, j] : edges)
        if (i < 0 || i >= vertex_count || j < 0 || j >= vertex_count)
            throw validation_error("quiver edge endpoint out of range");
}

QuiverQuery::QuiverQuery(Quiver q, std::vector<int> framing, std::vector<int> box)
    : quiver(std::move(q)), w(std::move(framing)), v_max(std::move(box)) {
    check_vertex_vector(w, quiver.vertex_count, "framing vector");
    check_vertex_vector(v_max, quiver.vertex_count, "v_max");
}

int kernel_exponent(const Quiver& quiver, const std::vector<int>& w,
                    const std::vector<Partition>& lambdas) {
    check_vertex_vector(w, quiver.vertex_count, "framing vector");
    if (static_cast<int>(lambdas.size()) != quiver.vertex_count)
        throw validation_error("partition tuple length must equal the vertex count");
    int e = 0;
    for (const auto& [i, j] : quiver.edges)
        e += pairing_n(lambdas[static_cast<size_t>(i)], lambdas[static_cast<size_t>(j)]);
    for (int i = 0; i < quiver.vertex_count; ++i)
        e += w[static_cast<size_t>(i)] * lambdas[static_cast<size_t>(i)].length();
    return e;
}

TruncatedMultiSeries quiver_phi_nil(const QuiverQuery& query) {
    const int n = query.quiver.vertex_count;
    const int max_part = *std::max_element(query.v_max.begin(), query.v_max.end());
    std::vector<std::vector<Partition>> parts_of(static_cast<size_t>(max_part) + 1);
    std::vector<std::vector<RationalFunction>> centralizers(static_cast<size_t>(max_part) + 1);
    for (int s = 0; s <= max_part; ++s) {
        parts_of[static_cast<size_t>(s)] = enumerate_partitions(s);
        for (const Partition& lam : parts_of[static_cast<size_t>(s)])
            centralizers[static_cast<size_t>(s)].push_back(centralizer_order(lam));
    }

    TruncatedMultiSeries series(Var::q, query.v_max);
    MultiDegree v(static_cast<size_t>(n), 0);
    do {
        RationalFunction coeff = RationalFunction::zero(Var::q);
        std::vector<size_t> choice(static_cast<size_t>(n), 0);
        std::vector<Partition> lambdas(static_cast<size_t>(n));
        while (true) {
            RationalFunction term = RationalFunction::one(Var::q);
            for (int i = 0; i < n; ++i) {
                const int s = v[static_cast<size_t>(i)];
                lambdas[static_cast<size_t>(i)] = parts_of[static_cast<size_t>(s)][choice[static_cast<size_t>(i)]];
                term /= centralizers[static_cast<size_t>(s)][choice[static_cast<size_t>(i)]];
            }
            const int e = kernel_exponent(query.quiver, query.w, lambdas);
            coeff += RationalFunction(LaurentPolynomial::monomial(Var::q, e)) * term;

            int pos = n - 1;
            while (pos >= 0) {
                const int s = v[static_cast<size_t>(pos)];
                if (++choice[static_cast<size_t>(pos)] < parts_of[static_cast<size_t>(s)].size()) break;
                choice[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        series.set_coeff(v, std::move(coeff));
    } while (next_in_box(v, query.v_max));
    return series;
}

LaurentPolynomial quiver_count(const QuiverQuery& query, const std::vector<int>& v) {
    const int n = query.quiver.vertex_count;
    check_vertex_vector(v, n, "dimension vector");
    for (int i = 0; i < n; ++i)
        if (v[static_cast<size_t>(i)] > query.v_max[static_cast<size_t>(i)])
            throw validation_error("dimension vector exceeds v_max");

    const QuiverQuery zero_framing(query.quiver, std::vector<int>(static_cast<size_t>(n), 0),
                                   query.v_max);
    const TruncatedMultiSeries ratio =
        series_mul(quiver_phi_nil(query), series_invert(quiver_phi_nil(zero_framing)));

    int shift = 0;
    for (const auto& [i, j] : query.quiver.edges)
        shift += v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    for (int i = 0; i < n; ++i)
        shift += v[static_cast<size_t>(i)] * (query.w[static_cast<size_t>(i)] - v[static_cast<size_t>(i)]);

    const RationalFunction scaled =
        RationalFunction(LaurentPolynomial::monomial(Var::q, shift)) * ratio.coeff(v);
    if (!scaled.is_zero() && !scaled.is_polynomial())
        throw internal_error("quiver count did not collapse to a polynomial: " + scaled.to_string());
    return scaled.as_laurent();
}

LaurentPolynomial quiver_poincare(const QuiverQuery& query, const std::vector<int>& v) {
    const int d = quiver_dimension(query.quiver, v, query.w);
    const LaurentPolynomial count = quiver_count(query, v);
    if (count.is_zero()) return LaurentPolynomial::zero(Var::t);
    const LaurentPolynomial p = count.substitute_power(Var::t, -2).shifted(2 * d);
    for (const auto& [e, c] : p.terms())
        if (e < 0 || e % 2 != 0 || c < 0)
            throw internal_error("Poincare polynomial failed positivity check: " + p.to_string());
    return p;
}

int quiver_dimension(const Quiver& quiver, const std::vector<int>& v,
                     const std::vector<int>& w) {
    check_vertex_vector(v, quiver.vertex_count, "dimension vector");
    check_vertex_vector(w, quiver.vertex_count, "framing vector");
    int d = 0;
    for (const auto& [i, j] : quiver.edges)
        d += 2 * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    for (int i = 0; i < quiver.vertex_count; ++i)
        d += 2 * v[static_cast<size_t>(i)] * (w[static_cast<size_t>(i)] - v[static_cast<size_t>(i)]);
    return d;
}

} // namespace hsq
