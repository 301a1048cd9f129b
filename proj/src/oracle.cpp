#include "hsq/oracle.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <thread>

#include "hsq/cyclotomic.hpp"
#include "hsq/errors.hpp"
#include "hsq/prime_field.hpp"

namespace hsq {

namespace {

constexpr std::int64_t kHardPointCap = 4000000000000000000LL;

void check_prime(std::int64_t p) {
    if (!is_prime(p))
        throw validation_error(std::to_string(p) + " is not prime");
}

// p^dims as an enumeration cost, checked against the budget before any
// work starts.
std::int64_t checked_point_count(std::int64_t p, int dims, const BigInt& budget,
                                 const char* what) {
    BigInt cost = big_pow(BigInt(p), static_cast<unsigned>(dims));
    if (cost > budget || cost > kHardPointCap)
        throw validation_error(std::string(what) + " enumeration cost " + cost.str() +
                               " exceeds the budget " + budget.str());
    return cost.convert_to<std::int64_t>();
}

std::vector<std::int64_t> decode_point(std::int64_t index, std::int64_t p, int dims) {
    std::vector<std::int64_t> digits(static_cast<size_t>(dims), 0);
    for (int k = dims - 1; k >= 0; --k) {
        digits[static_cast<size_t>(k)] = index % p;
        index /= p;
    }
    return digits;
}

bool advance_point(std::vector<std::int64_t>& digits, std::int64_t p) {
    for (int k = static_cast<int>(digits.size()) - 1; k >= 0; --k) {
        if (++digits[static_cast<size_t>(k)] < p) return true;
        digits[static_cast<size_t>(k)] = 0;
    }
    return false;
}

// Deterministic fan-out: contiguous chunks merged in index order.
BigInt sum_over_points(std::int64_t p, int dims, std::int64_t total, int workers,
                       const std::function<BigInt(const std::vector<std::int64_t>&)>& body) {
    const int chunks = static_cast<int>(
        std::max<std::int64_t>(1, std::min<std::int64_t>(workers, total)));
    auto run_range = [&](std::int64_t lo, std::int64_t hi, BigInt& out) {
        std::vector<std::int64_t> digits = decode_point(lo, p, dims);
        BigInt acc = 0;
        for (std::int64_t i = lo; i < hi; ++i) {
            acc += body(digits);
            advance_point(digits, p);
        }
        out = std::move(acc);
    };

    if (chunks == 1) {
        BigInt acc;
        run_range(0, total, acc);
        return acc;
    }

    std::vector<BigInt> partial(static_cast<size_t>(chunks));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(chunks));
    std::vector<std::thread> pool;
    for (int c = 0; c < chunks; ++c) {
        const std::int64_t lo = total * c / chunks;
        const std::int64_t hi = total * (c + 1) / chunks;
        pool.emplace_back([&, c, lo, hi] {
            try {
                run_range(lo, hi, partial[static_cast<size_t>(c)]);
            } catch (...) {
                errors[static_cast<size_t>(c)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    BigInt acc = 0;
    for (const auto& x : partial) acc += x;
    return acc;
}

std::vector<std::int64_t> resolved_toric_xi(const ToricInstance& t, std::int64_t p) {
    if (t.xi) {
        std::vector<std::int64_t> out;
        for (const BigRat& x : *t.xi) {
            const auto r = reduce_mod(x, p);
            if (!r)
                throw validation_error("xi has a denominator divisible by " + std::to_string(p));
            out.push_back(*r);
        }
        return out;
    }
    const FlatLattice lattice(t);
    if (auto xi = find_generic_xi_mod_p(t, lattice, p)) return *xi;
    // No generic level exists mod p.  The brute-force and character-sum
    // routes still share this deterministic fallback; interpolation
    // rejects such primes anyway.
    std::vector<std::int64_t> out(static_cast<size_t>(t.rows()), 0);
    out.back() = 1;
    return out;
}

FpMatrix reduced_matrix(const IntMatrix& a, std::int64_t p) {
    FpMatrix out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (const BigInt& x : a[i]) out[i].push_back(reduce_mod(x, p));
    return out;
}

// Offsets of the flattened components on both sides of a framed quiver
// representation space.  x side: edge maps V_i -> V_j then framings
// W_m -> V_m; y side: the dual partners V_j -> V_i and V_m -> W_m.
// All matrices are stored row-major.
struct QuiverLayout {
    const Quiver& quiver;
    const std::vector<int>& v;
    const std::vector<int>& w;
    std::vector<int> x_edge_off, x_frame_off, y_edge_off, y_frame_off, eq_off;
    int total = 0;
    int equations = 0;

    QuiverLayout(const Quiver& q, const DimensionData& dims)
        : quiver(q), v(dims.v), w(dims.w) {
        int off = 0;
        for (const auto& [i, j] : quiver.edges) {
            x_edge_off.push_back(off);
            off += v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
        }
        for (int m = 0; m < quiver.vertex_count; ++m) {
            x_frame_off.push_back(off);
            off += v[static_cast<size_t>(m)] * w[static_cast<size_t>(m)];
        }
        total = off;
        y_edge_off = x_edge_off;
        y_frame_off = x_frame_off;
        int eq = 0;
        for (int m = 0; m < quiver.vertex_count; ++m) {
            eq_off.push_back(eq);
            eq += v[static_cast<size_t>(m)] * v[static_cast<size_t>(m)];
        }
        equations = eq;
    }

    int vdim(int m) const { return v[static_cast<size_t>(m)]; }
    int wdim(int m) const { return w[static_cast<size_t>(m)]; }
};

// Coefficient matrix of the moment-map equations, linear in the y side for a
// fixed x-side point: at each vertex m,
//   sum_{e=(i,m)} x_e y_e - sum_{e=(m,j)} y_e x_e + I_m J_m = Id.
void fill_quiver_system(const QuiverLayout& lay, const std::vector<std::int64_t>& x,
                        std::int64_t p, FpMatrix& mat, std::vector<std::int64_t>& rhs) {
    for (auto& row : mat) std::fill(row.begin(), row.end(), 0);
    std::fill(rhs.begin(), rhs.end(), 0);

    for (size_t e = 0; e < lay.quiver.edges.size(); ++e) {
        const auto [i, j] = lay.quiver.edges[e];
        const int vi = lay.vdim(i), vj = lay.vdim(j);
        // x_e is vj x vi at x_edge_off, y_e is vi x vj at y_edge_off.
        const int xo = lay.x_edge_off[e], yo = lay.y_edge_off[e];
        // in-edge at vertex j: +(x_e y_e)[r][c]
        for (int r = 0; r < vj; ++r)
            for (int s = 0; s < vi; ++s) {
                const std::int64_t xv = x[static_cast<size_t>(xo + r * vi + s)];
                if (!xv) continue;
                for (int c = 0; c < vj; ++c) {
                    auto& cell = mat[static_cast<size_t>(lay.eq_off[static_cast<size_t>(j)] + r * vj + c)]
                                    [static_cast<size_t>(yo + s * vj + c)];
                    cell = (cell + xv) % p;
                }
            }
        // out-edge at vertex i: -(y_e x_e)[r][c]
        for (int s = 0; s < vj; ++s)
            for (int c = 0; c < vi; ++c) {
                const std::int64_t xv = x[static_cast<size_t>(xo + s * vi + c)];
                if (!xv) continue;
                for (int r = 0; r < vi; ++r) {
                    auto& cell = mat[static_cast<size_t>(lay.eq_off[static_cast<size_t>(i)] + r * vi + c)]
                                    [static_cast<size_t>(yo + r * vj + s)];
                    cell = ((cell - xv) % p + p) % p;
                }
            }
    }
    for (int m = 0; m < lay.quiver.vertex_count; ++m) {
        const int vm = lay.vdim(m), wm = lay.wdim(m);
        const int xo = lay.x_frame_off[static_cast<size_t>(m)];
        const int yo = lay.y_frame_off[static_cast<size_t>(m)];
        // +(I_m J_m)[r][c]; I_m is vm x wm, J_m is wm x vm.
        for (int r = 0; r < vm; ++r)
            for (int s = 0; s < wm; ++s) {
                const std::int64_t xv = x[static_cast<size_t>(xo + r * wm + s)];
                if (!xv) continue;
                for (int c = 0; c < vm; ++c) {
                    auto& cell = mat[static_cast<size_t>(lay.eq_off[static_cast<size_t>(m)] + r * vm + c)]
                                    [static_cast<size_t>(yo + s * vm + c)];
                    cell = (cell + xv) % p;
                }
            }
        for (int r = 0; r < vm; ++r)
            rhs[static_cast<size_t>(lay.eq_off[static_cast<size_t>(m)] + r * vm + r)] = 1;
    }
}

BigInt gl_order_at(int s, std::int64_t p) {
    BigInt r = 1;
    const BigInt ps = big_pow(BigInt(p), static_cast<unsigned>(s));
    for (int i = 0; i < s; ++i) r *= ps - big_pow(BigInt(p), static_cast<unsigned>(i));
    return r;
}

} // namespace

RepresentationInstance RepresentationInstance::make_toric(ToricInstance inst) {
    return RepresentationInstance(std::variant<ToricInstance, QuiverInstance>(std::move(inst)));
}

RepresentationInstance RepresentationInstance::make_quiver(Quiver q, DimensionData dims) {
    if (static_cast<int>(dims.v.size()) != q.vertex_count ||
        static_cast<int>(dims.w.size()) != q.vertex_count)
        throw validation_error("dimension data length must equal the vertex count");
    for (int x : dims.v)
        if (x < 0) throw validation_error("gauge dimensions must be nonnegative");
    for (int x : dims.w)
        if (x < 0) throw validation_error("framing dimensions must be nonnegative");
    return RepresentationInstance(
        std::variant<ToricInstance, QuiverInstance>(QuiverInstance{std::move(q), std::move(dims)}));
}

int RepresentationInstance::dim_v() const {
    if (is_toric()) return toric_payload().cols();
    const QuiverInstance& qi = quiver_payload();
    const QuiverLayout lay(qi.quiver, qi.dims);
    return lay.total;
}

int RepresentationInstance::dim_g() const {
    if (is_toric()) return toric_payload().rows();
    int s = 0;
    for (int x : quiver_payload().dims.v) s += x * x;
    return s;
}

BigInt RepresentationInstance::group_order(std::int64_t p) const {
    if (is_toric())
        return big_pow(BigInt(p) - 1, static_cast<unsigned>(toric_payload().rows()));
    BigInt r = 1;
    for (int x : quiver_payload().dims.v) r *= gl_order_at(x, p);
    return r;
}

int RepresentationInstance::count_degree() const {
    if (is_toric()) return 2 * (toric_payload().cols() - toric_payload().rows());
    const QuiverInstance& qi = quiver_payload();
    return std::max(0, quiver_dimension(qi.quiver, qi.dims.v, qi.dims.w));
}

BigInt brute_force_count(const RepresentationInstance& inst, std::int64_t p,
                         const OracleOptions& opts) {
    check_prime(p);
    const int dims = inst.dim_v();
    const std::int64_t total = checked_point_count(p, dims, opts.budget, "moment map");

    if (inst.is_toric()) {
        const ToricInstance& t = inst.toric_payload();
        const int d = t.rows(), n = t.cols();
        const FpMatrix a = reduced_matrix(t.matrix, p);
        const std::vector<std::int64_t> xi = resolved_toric_xi(t, p);
        return sum_over_points(p, dims, total, opts.workers,
                               [&](const std::vector<std::int64_t>& x) -> BigInt {
            FpMatrix sys(static_cast<size_t>(d), std::vector<std::int64_t>(static_cast<size_t>(n)));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < n; ++j)
                    sys[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        a[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)] % p;
            const auto free_dims = fp_affine_solve_free_dims(std::move(sys), xi, p);
            return free_dims ? big_pow(BigInt(p), static_cast<unsigned>(*free_dims)) : BigInt(0);
        });
    }

    const QuiverInstance& qi = inst.quiver_payload();
    const QuiverLayout lay(qi.quiver, qi.dims);
    return sum_over_points(p, dims, total, opts.workers,
                           [&, lay](const std::vector<std::int64_t>& x) -> BigInt {
        FpMatrix sys(static_cast<size_t>(lay.equations),
                     std::vector<std::int64_t>(static_cast<size_t>(lay.total)));
        std::vector<std::int64_t> rhs(static_cast<size_t>(lay.equations));
        fill_quiver_system(lay, x, p, sys, rhs);
        const auto free_dims = fp_affine_solve_free_dims(std::move(sys), std::move(rhs), p);
        return free_dims ? big_pow(BigInt(p), static_cast<unsigned>(*free_dims)) : BigInt(0);
    });
}

BigInt character_sum_count(const RepresentationInstance& inst, std::int64_t p,
                           const OracleOptions& opts) {
    check_prime(p);
    if (opts.character_twist % p == 0)
        throw validation_error("character twist must be nonzero mod p");
    const int dim_g = inst.dim_g();
    const int dim_v = inst.dim_v();
    const std::int64_t total = checked_point_count(p, dim_g, opts.budget, "character sum");

    // One pass accumulating, per character phase, the total kernel mass.
    std::vector<BigInt> weight(static_cast<size_t>(p), BigInt(0));

    if (inst.is_toric()) {
        const ToricInstance& t = inst.toric_payload();
        const int d = t.rows(), n = t.cols();
        const FpMatrix a = reduced_matrix(t.matrix, p);
        const std::vector<std::int64_t> xi = resolved_toric_xi(t, p);
        std::vector<std::int64_t> x(static_cast<size_t>(d), 0);
        for (std::int64_t it = 0; it < total; ++it) {
            int zeros = 0;
            for (int j = 0; j < n; ++j) {
                std::int64_t dot = 0;
                for (int i = 0; i < d; ++i)
                    dot += a[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(i)] % p;
                if (dot % p == 0) ++zeros;
            }
            std::int64_t phase = 0;
            for (int i = 0; i < d; ++i)
                phase += x[static_cast<size_t>(i)] * xi[static_cast<size_t>(i)] % p;
            weight[static_cast<size_t>(phase % p)] += big_pow(BigInt(p), static_cast<unsigned>(zeros));
            advance_point(x, p);
        }
    } else {
        const QuiverInstance& qi = inst.quiver_payload();
        const QuiverLayout lay(qi.quiver, qi.dims);
        const int nverts = qi.quiver.vertex_count;
        std::vector<int> g_off(static_cast<size_t>(nverts), 0);
        for (int m = 1; m < nverts; ++m)
            g_off[static_cast<size_t>(m)] =
                g_off[static_cast<size_t>(m - 1)] + lay.vdim(m - 1) * lay.vdim(m - 1);

        std::vector<std::int64_t> x(static_cast<size_t>(dim_g), 0);
        FpMatrix action(static_cast<size_t>(dim_v),
                        std::vector<std::int64_t>(static_cast<size_t>(dim_v)));
        for (std::int64_t it = 0; it < total; ++it) {
            for (auto& row : action) std::fill(row.begin(), row.end(), 0);
            auto X = [&](int m, int r, int c) {
                return x[static_cast<size_t>(g_off[static_cast<size_t>(m)] + r * lay.vdim(m) + c)];
            };
            // rho(X) on an edge map phi: V_i -> V_j is X_j phi - phi X_i.
            for (size_t e = 0; e < qi.quiver.edges.size(); ++e) {
                const auto [i, j] = qi.quiver.edges[e];
                const int vi = lay.vdim(i), vj = lay.vdim(j);
                const int off = lay.x_edge_off[e];
                for (int r = 0; r < vj; ++r)
                    for (int s = 0; s < vi; ++s) {
                        const size_t row = static_cast<size_t>(off + r * vi + s);
                        for (int u = 0; u < vj; ++u) {
                            auto& cell = action[row][static_cast<size_t>(off + u * vi + s)];
                            cell = (cell + X(j, r, u)) % p;
                        }
                        for (int u = 0; u < vi; ++u) {
                            auto& cell = action[row][static_cast<size_t>(off + r * vi + u)];
                            cell = ((cell - X(i, u, s)) % p + p) % p;
                        }
                    }
            }
            // rho(X) on a framing map psi: W_m -> V_m is X_m psi.
            for (int m = 0; m < nverts; ++m) {
                const int vm = lay.vdim(m), wm = lay.wdim(m);
                const int off = lay.x_frame_off[static_cast<size_t>(m)];
                for (int r = 0; r < vm; ++r)
                    for (int s = 0; s < wm; ++s) {
                        const size_t row = static_cast<size_t>(off + r * wm + s);
                        for (int u = 0; u < vm; ++u) {
                            auto& cell = action[row][static_cast<size_t>(off + u * wm + s)];
                            cell = (cell + X(m, r, u)) % p;
                        }
                    }
            }
            const int kernel_dim = dim_v - fp_rank(action, p);
            std::int64_t phase = 0;
            for (int m = 0; m < nverts; ++m)
                for (int r = 0; r < lay.vdim(m); ++r) phase += X(m, r, r);
            weight[static_cast<size_t>(phase % p)] += big_pow(BigInt(p), static_cast<unsigned>(kernel_dim));
            advance_point(x, p);
        }
    }

    CyclotomicInteger sum(p);
    for (std::int64_t e = 0; e < p; ++e)
        sum += CyclotomicInteger::zeta_power(p, e * (opts.character_twist % p)) *
               weight[static_cast<size_t>(e)];

    const BigInt vol_v = big_pow(BigInt(p), static_cast<unsigned>(dim_v));
    const BigInt vol_g = big_pow(BigInt(p), static_cast<unsigned>(dim_g));
    const CyclotomicInteger scaled = sum * vol_v;
    std::vector<BigInt> coords = scaled.coords();
    CyclotomicInteger result(p);
    {
        CyclotomicInteger acc(p);
        for (std::int64_t e = 0; e < p - 1; ++e) {
            if (coords[static_cast<size_t>(e)] % vol_g != 0)
                throw internal_error("character sum is not divisible by |g|");
            acc += CyclotomicInteger::zeta_power(p, e) * (coords[static_cast<size_t>(e)] / vol_g);
        }
        result = acc;
    }
    const auto as_int = result.as_integer();
    if (!as_int)
        throw internal_error("character sum is not a rational integer: " + result.to_string());
    return *as_int;
}

bool is_good_prime(const RepresentationInstance& inst, std::int64_t p) {
    if (!is_prime(p)) return false;
    if (!inst.is_toric()) {
        const auto& v = inst.quiver_payload().dims.v;
        const int s = std::accumulate(v.begin(), v.end(), 0);
        return s == 0 || s % p != 0;
    }
    const ToricInstance& t = inst.toric_payload();
    for (const BigInt& m : maximal_minors(t.matrix))
        if (m != 0 && m % p == 0) return false;
    const FlatLattice lattice(t);
    if (t.xi) {
        std::vector<std::int64_t> xi;
        for (const BigRat& x : *t.xi) {
            const auto r = reduce_mod(x, p);
            if (!r) return false;
            xi.push_back(*r);
        }
        return xi_is_generic_mod_p(t, lattice, xi, p);
    }
    return find_generic_xi_mod_p(t, lattice, p).has_value();
}

LaurentPolynomial interpolate_count(const RepresentationInstance& inst,
                                    const std::vector<std::int64_t>& primes,
                                    int degree_bound, const OracleOptions& opts) {
    if (degree_bound < 0) throw validation_error("degree bound must be nonnegative");
    for (size_t i = 0; i < primes.size(); ++i) {
        check_prime(primes[i]);
        for (size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j])
                throw validation_error("duplicate prime " + std::to_string(primes[i]));
    }

    std::vector<std::int64_t> good;
    for (std::int64_t p : primes)
        if (is_good_prime(inst, p)) good.push_back(p);
    const size_t need = static_cast<size_t>(degree_bound) + 1;
    if (good.size() < need)
        throw validation_error("need " + std::to_string(need) + " good primes, have " +
                               std::to_string(good.size()));

    auto quotient_at = [&](std::int64_t p) -> BigInt {
        const BigInt raw = brute_force_count(inst, p, opts);
        const BigInt g = inst.group_order(p);
        if (raw % g != 0)
            throw internal_error("solution count " + raw.str() + " at p=" + std::to_string(p) +
                                 " is not divisible by |G| = " + g.str());
        return raw / g;
    };

    // Lagrange through the first degree_bound+1 good primes.
    std::vector<BigRat> coeffs(need, BigRat(0));
    for (size_t i = 0; i < need; ++i) {
        std::vector<BigRat> basis{BigRat(1)};
        BigRat denom(1);
        for (size_t j = 0; j < need; ++j) {
            if (j == i) continue;
            std::vector<BigRat> next(basis.size() + 1, BigRat(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * BigInt(good[j]);
            }
            basis = std::move(next);
            denom *= BigRat(good[i] - good[j]);
        }
        const BigRat y = BigRat(quotient_at(good[i])) / denom;
        for (size_t k = 0; k < basis.size(); ++k) coeffs[k] += y * basis[k];
    }

    LaurentPolynomial result(Var::q);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (boost::multiprecision::denominator(coeffs[k]) != 1)
            throw internal_error("interpolant has a non-integer coefficient");
        result.set_coeff(static_cast<int>(k), BigInt(boost::multiprecision::numerator(coeffs[k])));
    }

    for (size_t i = need; i < good.size(); ++i) {
        const BigRat predicted = result.evaluate(BigRat(good[i]));
        if (predicted != BigRat(quotient_at(good[i])))
            throw internal_error("interpolant fails at held-out prime " + std::to_string(good[i]));
    }
    return result;
}

LaurentPolynomial interpolate_count(const RepresentationInstance& inst,
                                    const std::vector<std::int64_t>& primes,
                                    const OracleOptions& opts) {
    return interpolate_count(inst, primes, inst.count_degree(), opts);
}

} // namespace hsq
