#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hsq/oracle.hpp"
#include "hsq/quiver.hpp"
#include "hsq/toric.hpp"

using namespace hsq;

namespace {

IntMatrix rows(std::initializer_list<std::initializer_list<int>> data) {
    IntMatrix m;
    for (const auto& r : data) {
        m.emplace_back();
        for (int v : r) m.back().emplace_back(v);
    }
    return m;
}

RepresentationInstance toric(IntMatrix m) {
    return RepresentationInstance::make_toric(ToricInstance(std::move(m)));
}

RepresentationInstance toric_xi(IntMatrix m, std::vector<BigRat> xi) {
    return RepresentationInstance::make_toric(
        ToricInstance(std::move(m), std::move(xi)));
}

RepresentationInstance jordan(int v, int w) {
    return RepresentationInstance::make_quiver(Quiver(1, {{0, 0}}),
                                               DimensionData{{v}, {w}});
}

RepresentationInstance a2(std::vector<int> v, std::vector<int> w) {
    return RepresentationInstance::make_quiver(Quiver(2, {{0, 1}}),
                                               DimensionData{std::move(v), std::move(w)});
}

RepresentationInstance star(int v, int w) {
    return RepresentationInstance::make_quiver(Quiver(1, {}),
                                               DimensionData{{v}, {w}});
}

LaurentPolynomial q_poly(std::initializer_list<std::pair<int, int>> terms) {
    LaurentPolynomial p(Var::q);
    for (auto [e, c] : terms) p.set_coeff(e, BigInt(c));
    return p;
}

}  // namespace

TEST_CASE("instance dimensions and group orders") {
    auto line = toric_xi(rows({{1}}), {BigRat(1)});
    CHECK(line.dim_v() == 1);
    CHECK(line.dim_g() == 1);
    CHECK(line.group_order(3) == BigInt(2));
    CHECK(line.count_degree() == 0);

    auto pair = toric(rows({{1, 1}}));
    CHECK(pair.dim_v() == 2);
    CHECK(pair.count_degree() == 2);
    CHECK(pair.group_order(5) == BigInt(4));

    auto j11 = jordan(1, 1);
    CHECK(j11.dim_v() == 2);  // the loop map and the framing vector
    CHECK(j11.dim_g() == 1);
    CHECK(j11.group_order(5) == BigInt(4));
    CHECK(j11.count_degree() == 2);

    auto j21 = jordan(2, 1);
    CHECK(j21.dim_v() == 6);
    CHECK(j21.dim_g() == 4);
    CHECK(j21.group_order(2) == BigInt(6));
    CHECK(j21.count_degree() == 4);

    // Empty varieties still have a well-defined nonnegative degree bound.
    CHECK(star(2, 1).count_degree() == 0);
}

TEST_CASE("brute-force reference counts") {
    CHECK(brute_force_count(toric_xi(rows({{1}}), {BigRat(1)}), 3) == BigInt(2));
    CHECK(brute_force_count(jordan(1, 1), 2) == BigInt(4));
    CHECK(brute_force_count(jordan(1, 1), 3) == BigInt(18));
    // Unframed commutator equations have no solutions when p does not
    // divide the trace of the identity.
    CHECK(brute_force_count(jordan(1, 0), 3) == BigInt(0));
    CHECK(brute_force_count(jordan(2, 0), 3) == BigInt(0));
    // ... but can have some when it does; such primes are flagged bad.
    CHECK(brute_force_count(jordan(2, 0), 2) > 0);
    CHECK(!is_good_prime(jordan(2, 0), 2));
}

TEST_CASE("counts divided by the group order match the closed form") {
    struct Case {
        RepresentationInstance inst;
        LaurentPolynomial expect;
    };
    std::vector<Case> cases = {
        {toric(rows({{1, 1}})), q_poly({{1, 1}, {2, 1}})},
        {toric_xi(rows({{1, 0, 1}, {0, 1, 1}}), {BigRat(1), BigRat(2)}),
         q_poly({{1, 2}, {2, 1}})},
        {jordan(1, 1), q_poly({{2, 1}})},
        {star(1, 2), q_poly({{1, 1}, {2, 1}})},
    };
    for (const auto& c : cases) {
        for (std::int64_t p : {3, 5}) {
            if (!is_good_prime(c.inst, p)) continue;
            BigInt raw = brute_force_count(c.inst, p);
            BigInt order = c.inst.group_order(p);
            CHECK(raw % order == 0);
            CHECK(raw / order == BigInt(c.expect.evaluate(BigRat(p))));
        }
    }
}

TEST_CASE("the character sum equals the brute-force count") {
    std::vector<RepresentationInstance> instances = {
        toric_xi(rows({{1}}), {BigRat(1)}),
        toric(rows({{1, 1}})),
        toric(rows({{1, 0}})),
        toric_xi(rows({{1, 0, 1}, {0, 1, 1}}), {BigRat(1), BigRat(2)}),
        toric(rows({{1, 0, 1, 1}, {0, 1, 1, 2}})),
        jordan(1, 1),
        jordan(1, 2),
        a2({1, 1}, {1, 1}),
        star(1, 2),
        star(2, 2),
    };
    for (const auto& inst : instances) {
        for (std::int64_t p : {2, 3, 5}) {
            CHECK(character_sum_count(inst, p) == brute_force_count(inst, p));
        }
    }
    // A larger one, at the small primes only.
    for (std::int64_t p : {2, 3}) {
        CHECK(character_sum_count(jordan(2, 1), p) ==
              brute_force_count(jordan(2, 1), p));
    }
}

TEST_CASE("the equality holds at bad primes too") {
    auto triangle = toric_xi(rows({{1, 0, 1}, {0, 1, 1}}), {BigRat(1), BigRat(2)});
    CHECK(!is_good_prime(triangle, 2));
    CHECK(character_sum_count(triangle, 2) == brute_force_count(triangle, 2));
    CHECK(brute_force_count(triangle, 2) == BigInt(12));
}

TEST_CASE("character sums do not depend on the twist") {
    OracleOptions twisted;
    twisted.character_twist = 2;
    for (std::int64_t p : {3, 5}) {
        CHECK(character_sum_count(jordan(1, 1), p, twisted) ==
              character_sum_count(jordan(1, 1), p));
        CHECK(character_sum_count(toric(rows({{1, 1}})), p, twisted) ==
              character_sum_count(toric(rows({{1, 1}})), p));
    }
    CHECK_THROWS_AS(character_sum_count(jordan(1, 1), 2, twisted),
                    validation_error);
}

TEST_CASE("solution counts respect obvious symmetries") {
    auto base = toric_xi(rows({{1, 0, 1}, {0, 1, 1}}), {BigRat(1), BigRat(2)});
    auto permuted = toric_xi(rows({{0, 1, 1}, {1, 0, 1}}), {BigRat(2), BigRat(1)});
    auto negated = toric_xi(rows({{1, 0, -1}, {0, 1, -1}}), {BigRat(1), BigRat(2)});
    for (std::int64_t p : {3, 5, 7}) {
        BigInt reference = brute_force_count(base, p);
        CHECK(brute_force_count(permuted, p) == reference);
        CHECK(brute_force_count(negated, p) == reference);
    }
}

TEST_CASE("good primes") {
    auto triangle = toric(rows({{1, 0, 1}, {0, 1, 1}}));
    CHECK(!is_good_prime(triangle, 2));
    CHECK(is_good_prime(triangle, 3));
    CHECK(is_good_prime(triangle, 5));
    CHECK(!is_good_prime(triangle, 4));

    // A vanishing maximal minor changes the matroid mod 2.
    auto scaled = toric(rows({{1, 2}}));
    CHECK(!is_good_prime(scaled, 2));
    CHECK(is_good_prime(scaled, 3));

    // xi with a denominator divisible by p cannot be reduced.
    auto half = toric_xi(rows({{1, 1}}), {BigRat(1, 2)});
    CHECK(!is_good_prime(half, 2));
    CHECK(is_good_prime(half, 3));
    // A non-generic user xi stays non-generic mod every p.
    auto zero_xi = toric_xi(rows({{1, 1}}), {BigRat(0)});
    CHECK(!is_good_prime(zero_xi, 3));

    CHECK(!is_good_prime(jordan(2, 1), 2));
    CHECK(is_good_prime(jordan(2, 1), 3));
    CHECK(is_good_prime(jordan(1, 1), 5));
    CHECK(!is_good_prime(jordan(3, 1), 3));
    // The empty dimension vector accepts every prime.
    CHECK(is_good_prime(star(0, 1), 2));
}

TEST_CASE("interpolation reconstructs the count polynomial") {
    CHECK(interpolate_count(jordan(1, 1), {2, 3, 5}) == q_poly({{2, 1}}));
    CHECK(interpolate_count(toric(rows({{1, 1}})), {2, 3, 5}) ==
          q_poly({{1, 1}, {2, 1}}));
    // Extra primes are held out and verified internally.
    CHECK(interpolate_count(toric(rows({{1, 1}})), {2, 3, 5, 7}) ==
          q_poly({{1, 1}, {2, 1}}));
    // Bad primes are skipped: 2 contributes nothing here.
    CHECK(interpolate_count(toric(rows({{1, 0, 1}, {0, 1, 1}})), {2, 3, 5, 7}) ==
          q_poly({{1, 2}, {2, 1}}));
    // A degree-0 instance needs a single good prime.
    CHECK(interpolate_count(toric_xi(rows({{1}}), {BigRat(1)}), {3}) ==
          q_poly({{0, 1}}));
}

TEST_CASE("interpolation validates its inputs") {
    CHECK_THROWS_AS(interpolate_count(jordan(1, 1), {2, 3}), validation_error);
    CHECK_THROWS_AS(interpolate_count(jordan(1, 1), {2, 3, 3, 5}),
                    validation_error);
    CHECK_THROWS_AS(interpolate_count(jordan(1, 1), {2, 3, 4, 5}),
                    validation_error);
    CHECK_THROWS_AS(interpolate_count(jordan(1, 1), {2, 3, 5}, -1),
                    validation_error);
    // All listed primes bad: nothing to interpolate through.
    CHECK_THROWS_AS(interpolate_count(toric_xi(rows({{1, 1}}), {BigRat(0)}),
                                      {3, 5, 7}),
                    validation_error);
}

TEST_CASE("enumeration budgets cap the exponential cost") {
    OracleOptions tight;
    tight.budget = 100;
    CHECK_THROWS_AS(brute_force_count(jordan(2, 1), 3, tight), validation_error);
    try {
        brute_force_count(jordan(2, 1), 3, tight);
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("729") != std::string::npos);
    }
    OracleOptions exact;
    exact.budget = 729;
    CHECK(brute_force_count(jordan(2, 1), 3, exact) ==
          character_sum_count(jordan(2, 1), 3));
}

TEST_CASE("threaded enumeration agrees with the serial one") {
    OracleOptions threaded;
    threaded.workers = 4;
    for (std::int64_t p : {3, 5}) {
        CHECK(brute_force_count(jordan(2, 1), p, threaded) ==
              brute_force_count(jordan(2, 1), p));
        CHECK(brute_force_count(toric(rows({{1, 0, 1, 1}, {0, 1, 1, 2}})), p,
                                threaded) ==
              brute_force_count(toric(rows({{1, 0, 1, 1}, {0, 1, 1, 2}}))
                                    , p));
    }
}

TEST_CASE("non-prime moduli are rejected") {
    CHECK_THROWS_AS(brute_force_count(jordan(1, 1), 4), validation_error);
    CHECK_THROWS_AS(character_sum_count(jordan(1, 1), 1), validation_error);
}
