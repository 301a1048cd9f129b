#include "hsq/rational_fn.hpp"

namespace hsq {

RationalFunction::RationalFunction(LaurentPolynomial num)
    : num_(std::move(num)), den_(LaurentPolynomial::one(num_.var())) {}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.var() != den_.var())
        throw validation_error("RationalFunction: variable-tag mismatch");
    if (den_.is_zero()) throw validation_error("RationalFunction: zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPolynomial::one(den_.var());
        return;
    }
    // Move all unit shifts into the numerator.
    const int db = den_.min_exponent();
    if (db != 0) {
        den_ = den_.shifted(-db);
        num_ = num_.shifted(-db);
    }
    const LaurentPolynomial g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        const int na = num_.min_exponent();
        num_ = exact_divide(num_.shifted(-na), g).shifted(na);
        den_ = exact_divide(den_, g);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

const LaurentPolynomial& RationalFunction::as_laurent() const {
    if (!is_laurent())
        throw internal_error("rational function is not a Laurent polynomial: " + to_string());
    return num_;
}

bool RationalFunction::is_polynomial() const {
    return is_laurent() && (num_.is_zero() || num_.min_exponent() >= 0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw validation_error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw validation_error("reciprocal of zero");
    return RationalFunction(den_, num_);
}

BigRat RationalFunction::evaluate(const BigRat& x) const {
    const BigRat d = den_.evaluate(x);
    if (d == 0) throw validation_error("rational function evaluated at a pole");
    return num_.evaluate(x) / d;
}

std::string RationalFunction::to_string() const {
    if (is_laurent()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace hsq
