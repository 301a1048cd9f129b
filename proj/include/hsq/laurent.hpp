#pragma once

#include <map>
#include <string>

#include "hsq/bigint.hpp"
#include "hsq/errors.hpp"

namespace hsq {

// Variable tag: q is the point-count variable (field size), t the
// Poincare variable.  Mixing the two in one expression is a bug.
enum class Var { q, t };

const char* var_name(Var v);

// Univariate Laurent polynomial with big-integer coefficients.
// Invariants: no stored zero coefficients; exponents may be negative.
class LaurentPolynomial {
public:
    LaurentPolynomial() : var_(Var::q) {}
    explicit LaurentPolynomial(Var v) : var_(v) {}

    static LaurentPolynomial constant(Var v, BigInt c);
    static LaurentPolynomial monomial(Var v, int exponent, BigInt coeff = BigInt(1));
    static LaurentPolynomial zero(Var v) { return LaurentPolynomial(v); }
    static LaurentPolynomial one(Var v) { return constant(v, 1); }

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    const std::map<int, BigInt>& terms() const { return coeffs_; }
    BigInt coeff(int exponent) const;

    // Undefined on the zero polynomial (throws).
    int min_exponent() const;
    int max_exponent() const;
    const BigInt& leading_coeff() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
    LaurentPolynomial operator*(const BigInt& c) const;
    bool operator==(const LaurentPolynomial& o) const = default;

    // Multiply by x^k (unit shift).
    LaurentPolynomial shifted(int k) const;

    // x -> y^k with k != 0; e.g. substitute_power(Var::t, -2) maps q to 1/t^2.
    LaurentPolynomial substitute_power(Var new_var, int k) const;

    BigRat evaluate(const BigRat& x) const;

    // Ascending exponents, explicit tokens: "1 + q^1 + 3*q^2".
    std::string to_string() const;

    void set_coeff(int exponent, BigInt c);

private:
    void check_same_var(const LaurentPolynomial& o) const;

    Var var_;
    std::map<int, BigInt> coeffs_;
};

// Exact quotient a / b; throws internal_error when the division leaves a
// remainder or a non-integer coefficient.
LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b);

// gcd over the integers of the ordinary-polynomial parts (unit q-shifts
// ignored), normalized primitive-ish: positive leading coefficient, the
// integer content gcd included.
LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

LaurentPolynomial pow(const LaurentPolynomial& base, unsigned exp);

} // namespace hsq
