#pragma once

#include <string>

#include "hsq/laurent.hpp"

namespace hsq {

// Quotient of Laurent polynomials, stored reduced: the denominator is an
// ordinary polynomial with nonzero constant term and positive leading
// coefficient, all unit q-shifts live in the numerator, and numerator and
// denominator share no polynomial or integer-content factor.  Equality is
// coefficientwise.
class RationalFunction {
public:
    RationalFunction() : num_(Var::q), den_(LaurentPolynomial::one(Var::q)) {}
    explicit RationalFunction(LaurentPolynomial num);
    RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

    static RationalFunction zero(Var v) { return RationalFunction(LaurentPolynomial::zero(v)); }
    static RationalFunction one(Var v) { return RationalFunction(LaurentPolynomial::one(v)); }

    Var var() const { return num_.var(); }
    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    // True when the reduced denominator is 1 (the value is a Laurent
    // polynomial); as_laurent throws otherwise.
    bool is_laurent() const { return den_.is_one(); }
    const LaurentPolynomial& as_laurent() const;
    // Laurent and without negative exponents.
    bool is_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    bool operator==(const RationalFunction& o) const = default;

    RationalFunction reciprocal() const;

    BigRat evaluate(const BigRat& x) const;

    std::string to_string() const;

private:
    void canonicalize();

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

} // namespace hsq
