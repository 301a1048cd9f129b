#pragma once

#include "hsq/laurent.hpp"
#include "hsq/series.hpp"

namespace hsq {

// Nilpotent-type generating series: the coefficient of T^s is
// sum over partitions lambda of s of q^{n(lambda,lambda) + k*l(lambda)} / |C_lambda|.
TruncatedMultiSeries phi_nil(int k, int n_max);

// Product form prod_{i>=1} prod_{j>=1} 1/(1 - T^i q^{k+1-j}); the infinite
// j-product is resummed per T-degree via geometric series in 1/q, so each
// coefficient is a closed rational function.  Coefficientwise equal to phi_nil.
TruncatedMultiSeries feit_fine_product(int k, int n_max);

// Point count of the rank-k twisted ADHM space at gauge rank n:
// q^{kn} [T^n] (phi_nil(k) / phi_nil(0)), asserted to collapse to a polynomial.
LaurentPolynomial adhm_count(int n, int k);

// Betti series prod_{i>=1} prod_{b=1}^k 1/(1 - t^{2(k(i-1)+b-1)} T^i) through
// T^n_max.  Each coefficient is cross-checked against the count route,
// t^{4kn} * adhm_count(n,k) at q = t^-2 (2nk is the complex dimension).
TruncatedMultiSeries adhm_poincare_series(int k, int n_max);

} // namespace hsq
