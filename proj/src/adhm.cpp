#include "hsq/adhm.hpp"

#include <string>

#include "hsq/errors.hpp"
#include "hsq/partitions.hpp"

namespace hsq {

namespace {

void check_query(int k, int n_max) {
    if (k < 0) throw validation_error("framing rank k must be nonnegative");
    if (n_max < 1) throw validation_error("n_max must be positive");
}

} // namespace

TruncatedMultiSeries phi_nil(int k, int n_max) {
    check_query(k, n_max);
    TruncatedMultiSeries s(Var::q, {n_max});
    s.set_coeff({0}, RationalFunction::one(Var::q));
    for (int deg = 1; deg <= n_max; ++deg) {
        RationalFunction c = RationalFunction::zero(Var::q);
        for (const Partition& lam : enumerate_partitions(deg)) {
            const int e = pairing_n(lam, lam) + k * lam.length();
            c += RationalFunction(LaurentPolynomial::monomial(Var::q, e)) / centralizer_order(lam);
        }
        s.set_coeff({deg}, std::move(c));
    }
    return s;
}

TruncatedMultiSeries feit_fine_product(int k, int n_max) {
    check_query(k, n_max);
    TruncatedMultiSeries result = TruncatedMultiSeries::one(Var::q, {n_max});
    for (int i = 1; i <= n_max; ++i) {
        // prod_{j>=1} 1/(1 - T^i q^{k+1-j}) = sum_m T^{im} q^{km} / prod_{l=1}^m (1 - q^-l)
        TruncatedMultiSeries factor(Var::q, {n_max});
        RationalFunction denom = RationalFunction::one(Var::q);
        for (int m = 0; i * m <= n_max; ++m) {
            if (m > 0)
                denom *= RationalFunction(LaurentPolynomial::one(Var::q) -
                                          LaurentPolynomial::monomial(Var::q, -m));
            factor.set_coeff({i * m},
                             RationalFunction(LaurentPolynomial::monomial(Var::q, k * m)) / denom);
        }
        result = series_mul(result, factor);
    }
    return result;
}

LaurentPolynomial adhm_count(int n, int k) {
    if (n < 1) throw validation_error("gauge rank n must be positive");
    if (k < 0) throw validation_error("framing rank k must be nonnegative");
    const TruncatedMultiSeries grand = series_mul(phi_nil(k, n), series_invert(phi_nil(0, n)));
    const RationalFunction scaled =
        RationalFunction(LaurentPolynomial::monomial(Var::q, k * n)) * grand.coeff({n});
    if (!scaled.is_zero() && !scaled.is_polynomial())
        throw internal_error("ADHM count did not collapse to a polynomial: " + scaled.to_string());
    return scaled.as_laurent();
}

TruncatedMultiSeries adhm_poincare_series(int k, int n_max) {
    if (k < 1) throw validation_error("framing rank k must be positive");
    if (n_max < 1) throw validation_error("n_max must be positive");
    TruncatedMultiSeries prod = TruncatedMultiSeries::one(Var::t, {n_max});
    for (int i = 1; i <= n_max; ++i)
        for (int b = 1; b <= k; ++b) {
            const int a = 2 * (k * (i - 1) + b - 1);
            TruncatedMultiSeries factor(Var::t, {n_max});
            for (int m = 0; i * m <= n_max; ++m)
                factor.set_coeff({i * m},
                                 RationalFunction(LaurentPolynomial::monomial(Var::t, a * m)));
            prod = series_mul(prod, factor);
        }
    for (int n = 1; n <= n_max; ++n) {
        const LaurentPolynomial via_count =
            adhm_count(n, k).substitute_power(Var::t, -2).shifted(4 * k * n);
        if (!(prod.coeff({n}) == RationalFunction(via_count)))
            throw internal_error("Poincare series disagrees with the count route at T^" +
                                 std::to_string(n));
    }
    return prod;
}

} // namespace hsq
