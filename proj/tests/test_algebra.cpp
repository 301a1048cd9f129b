#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hsq/cyclotomic.hpp"
#include "hsq/laurent.hpp"
#include "hsq/prime_field.hpp"
#include "hsq/rational_fn.hpp"
#include "hsq/series.hpp"

using namespace hsq;

namespace {

LaurentPolynomial q_poly(std::initializer_list<std::pair<int, int>> terms) {
    LaurentPolynomial p(Var::q);
    for (auto [e, c] : terms) p.set_coeff(e, BigInt(c));
    return p;
}

LaurentPolynomial random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-9, 9);
    LaurentPolynomial p(Var::q);
    int d = deg(rng);
    for (int e = 0; e <= d; ++e) p.set_coeff(e, BigInt(coeff(rng)));
    return p;
}

}  // namespace

TEST_CASE("laurent arithmetic and rendering") {
    auto p = q_poly({{0, 1}, {1, 1}, {2, 3}});
    CHECK(p.to_string() == "1 + q^1 + 3*q^2");
    CHECK(q_poly({{-2, 1}, {0, 1}}).to_string() == "q^-2 + 1");
    CHECK(LaurentPolynomial::zero(Var::q).to_string() == "0");

    auto a = q_poly({{0, 1}, {1, 1}});
    auto b = q_poly({{0, -1}, {1, 1}});
    CHECK(a * b == q_poly({{0, -1}, {2, 1}}));
    CHECK(a + b == q_poly({{1, 2}}));
    CHECK(a - a == LaurentPolynomial::zero(Var::q));
    CHECK(pow(a, 2) == q_poly({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(a.evaluate(BigRat(3)) == BigRat(4));

    CHECK(q_poly({{1, 1}, {2, 1}}).shifted(-1) == q_poly({{0, 1}, {1, 1}}));
    CHECK(q_poly({{1, 1}, {2, 1}}).min_exponent() == 1);
    CHECK(q_poly({{1, 1}, {2, 1}}).max_exponent() == 2);
    CHECK(q_poly({{2, 5}}).leading_coeff() == BigInt(5));
}

TEST_CASE("substitute_power maps count variables to Poincare variables") {
    // q -> t^-2 then shift by the real dimension: the count q^2 + q of a
    // hypertoric with (n - d) = 1 becomes 1 + t^2.
    auto count = q_poly({{1, 1}, {2, 1}});
    auto poincare = count.substitute_power(Var::t, -2).shifted(4);
    LaurentPolynomial expected(Var::t);
    expected.set_coeff(0, 1);
    expected.set_coeff(2, 1);
    CHECK(poincare == expected);
    CHECK(poincare.var() == Var::t);
    CHECK_THROWS_AS(count.substitute_power(Var::t, 0), validation_error);
}

TEST_CASE("variable tags do not mix") {
    LaurentPolynomial qv = LaurentPolynomial::one(Var::q);
    LaurentPolynomial tv = LaurentPolynomial::one(Var::t);
    CHECK_THROWS_AS(qv + tv, validation_error);
    CHECK_THROWS_AS(qv * tv, validation_error);
}

TEST_CASE("exact division") {
    auto q = LaurentPolynomial::monomial(Var::q, 1);
    auto one = LaurentPolynomial::one(Var::q);
    CHECK(exact_divide(q_poly({{1, 1}, {2, 1}}), q + one) == q);
    CHECK(exact_divide(q_poly({{0, -1}, {3, 1}}), q - one) ==
          q_poly({{0, 1}, {1, 1}, {2, 1}}));
    // Unit shifts divide exactly too.
    CHECK(exact_divide(q_poly({{-1, 1}, {0, 1}}), q + one) ==
          LaurentPolynomial::monomial(Var::q, -1));
    CHECK_THROWS_AS(exact_divide(q_poly({{0, 1}, {2, 1}}), q + one),
                    internal_error);
    CHECK_THROWS_AS(exact_divide(one, LaurentPolynomial::zero(Var::q)),
                    validation_error);
}

TEST_CASE("exact division round trips on random products") {
    std::mt19937 rng(20240811);
    int tried = 0;
    for (int i = 0; i < 200; ++i) {
        auto a = random_poly(rng, 5);
        auto b = random_poly(rng, 4);
        if (b.is_zero()) continue;
        ++tried;
        CHECK(exact_divide(a * b, b) == a);
    }
    CHECK(tried > 100);
}

TEST_CASE("poly_gcd normalizes sign and content") {
    auto q = LaurentPolynomial::monomial(Var::q, 1);
    auto one = LaurentPolynomial::one(Var::q);
    CHECK(poly_gcd(q * q - one, (q + one) * (q + one)) == q + one);
    CHECK(poly_gcd(q - one, one - q) == q - one);
    CHECK(poly_gcd((q - one) * (q + one), (q - one) * q) == q - one);
}

TEST_CASE("rational functions reduce to canonical form") {
    auto q = LaurentPolynomial::monomial(Var::q, 1);
    auto one = LaurentPolynomial::one(Var::q);

    RationalFunction f(q_poly({{1, 1}, {2, 1}}), q + one);
    CHECK(f.is_laurent());
    CHECK(f.as_laurent() == q);

    // Common factors cancel regardless of how the quotient is written.
    RationalFunction g(q + one, q - one);
    RationalFunction h((q + one) * (q + q), (q - one) * (q + q));
    CHECK(g == h);

    // Denominator shifts migrate into the numerator.
    RationalFunction s(one, q);
    CHECK(s.is_laurent());
    CHECK(s.as_laurent() == LaurentPolynomial::monomial(Var::q, -1));

    RationalFunction r = RationalFunction(q) / RationalFunction(q - one);
    CHECK(r.reciprocal().as_laurent() == one - LaurentPolynomial::monomial(Var::q, -1));

    CHECK((RationalFunction(one, q - one) + RationalFunction(one)) ==
          RationalFunction(q, q - one));
    CHECK((RationalFunction(one, q - one) * RationalFunction(q - one)).is_one());
    CHECK(RationalFunction(q_poly({{1, 2}, {2, 1}}), q + one).evaluate(BigRat(3)) ==
          BigRat(15, 4));
    CHECK(RationalFunction(q, q + one).is_polynomial() == false);
    CHECK(RationalFunction(q * q + q, q + one).is_polynomial());
}

TEST_CASE("truncated series multiply and invert") {
    auto one_rf = RationalFunction::one(Var::q);
    TruncatedMultiSeries f(Var::q, {4});
    f.set_coeff({0}, one_rf);
    f.set_coeff({1}, RationalFunction(LaurentPolynomial::monomial(Var::q, 1)));
    f.set_coeff({3}, RationalFunction(q_poly({{0, 1}, {1, 1}})));

    auto inv = series_invert(f);
    CHECK(series_mul(f, inv) == TruncatedMultiSeries::one(Var::q, {4}));
    CHECK(series_mul(f, TruncatedMultiSeries::one(Var::q, {4})) == f);

    TruncatedMultiSeries bad(Var::q, {2});
    bad.set_coeff({0}, RationalFunction(q_poly({{0, 2}})));
    CHECK_THROWS_AS(series_invert(bad), validation_error);
    CHECK_THROWS_AS(f.coeff({5}), validation_error);
}

TEST_CASE("series inversion round trips on random unit series") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        TruncatedMultiSeries f(Var::q, {5});
        f.set_coeff({0}, RationalFunction::one(Var::q));
        for (int d = 1; d <= 5; ++d) {
            auto num = random_poly(rng, 3);
            auto den = random_poly(rng, 2);
            if (den.is_zero()) den = LaurentPolynomial::one(Var::q);
            f.set_coeff({d}, RationalFunction(num, den));
        }
        CHECK(series_mul(f, series_invert(f)) ==
              TruncatedMultiSeries::one(Var::q, {5}));
    }
}

TEST_CASE("two-variable series boxes convolve within the box") {
    TruncatedMultiSeries f(Var::q, {2, 2});
    f.set_coeff({0, 0}, RationalFunction::one(Var::q));
    f.set_coeff({1, 0}, RationalFunction::one(Var::q));
    f.set_coeff({0, 1}, RationalFunction::one(Var::q));
    auto sq = series_mul(f, f);
    CHECK(sq.coeff({1, 1}) == RationalFunction(q_poly({{0, 2}})));
    CHECK(sq.coeff({2, 0}) == RationalFunction::one(Var::q));
    CHECK(series_mul(f, series_invert(f)) ==
          TruncatedMultiSeries::one(Var::q, {2, 2}));
}

TEST_CASE("prime field arithmetic") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));

    CHECK(Fp(-3, 5).value() == 2);
    for (std::int64_t p : {2, 3, 5, 7, 13}) {
        for (std::int64_t a = 1; a < p; ++a) {
            CHECK((Fp(a, p) * Fp(a, p).inverse()).value() == 1);
        }
    }
    CHECK((Fp(3, 7) / Fp(5, 7)).value() == 2);

    CHECK(reduce_mod(BigInt(-7), 5) == 3);
    CHECK(reduce_mod(BigRat(1, 3), 5) == 2);
    CHECK(!reduce_mod(BigRat(1, 5), 5).has_value());
    CHECK(reduce_mod(BigRat(7, 2), 3) == 2);
}

TEST_CASE("f_p linear solving counts solutions") {
    FpMatrix id = {{1, 0}, {0, 1}};
    CHECK(fp_rank(id, 5) == 2);
    CHECK(fp_rank({{1, 2}, {2, 4}}, 5) == 1);
    CHECK(fp_rank({{0, 0}, {0, 0}}, 2) == 0);
    CHECK(fp_rank({{1, 1}, {1, 1}}, 2) == 1);

    auto free_dims = fp_affine_solve_free_dims({{1, 1}, {2, 2}}, {1, 2}, 5);
    REQUIRE(free_dims.has_value());
    CHECK(*free_dims == 1);
    CHECK(!fp_affine_solve_free_dims({{1, 1}, {2, 2}}, {1, 3}, 5).has_value());
    auto full = fp_affine_solve_free_dims({{1, 0}, {0, 1}}, {3, 4}, 5);
    REQUIRE(full.has_value());
    CHECK(*full == 0);
}

TEST_CASE("cyclotomic integers obey the vanishing sum relation") {
    for (std::int64_t p : {2, 3, 5, 7}) {
        CyclotomicInteger sum(p);
        for (std::int64_t e = 0; e < p; ++e)
            sum += CyclotomicInteger::zeta_power(p, e);
        CHECK(sum == CyclotomicInteger(p));
        CHECK(sum.as_integer() == BigInt(0));
    }
    // zeta^a * zeta^b = zeta^(a+b), including wraparound.
    CHECK(CyclotomicInteger::zeta_power(5, 2) * CyclotomicInteger::zeta_power(5, 3) ==
          CyclotomicInteger::from_integer(5, 1));
    CHECK(CyclotomicInteger::zeta_power(7, -1) ==
          CyclotomicInteger::zeta_power(7, 6));
    CHECK(CyclotomicInteger::from_integer(3, 42).as_integer() == BigInt(42));
    CHECK(!CyclotomicInteger::zeta_power(3, 1).as_integer().has_value());

    auto z = CyclotomicInteger::zeta_power(5, 1);
    auto one = CyclotomicInteger::from_integer(5, 1);
    CHECK((z + one) * (z - one) == z * z - one);
}

TEST_CASE("additive character sums detect the trivial twist") {
    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t c = 0; c < p; ++c) {
            CyclotomicInteger sum(p);
            for (std::int64_t x = 0; x < p; ++x)
                sum += character(Fp(c, p) * Fp(x, p));
            auto val = sum.as_integer();
            REQUIRE(val.has_value());
            CHECK(*val == (c == 0 ? BigInt(p) : BigInt(0)));
        }
    }
}
