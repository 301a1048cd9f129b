#include "hsq/laurent.hpp"

#include <sstream>
#include <vector>

namespace hsq {

const char* var_name(Var v) { return v == Var::q ? "q" : "t"; }

LaurentPolynomial LaurentPolynomial::constant(Var v, BigInt c) {
    LaurentPolynomial p(v);
    p.set_coeff(0, std::move(c));
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Var v, int exponent, BigInt coeff) {
    LaurentPolynomial p(v);
    p.set_coeff(exponent, std::move(coeff));
    return p;
}

bool LaurentPolynomial::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

BigInt LaurentPolynomial::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

int LaurentPolynomial::min_exponent() const {
    if (is_zero()) throw validation_error("min_exponent of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
    if (is_zero()) throw validation_error("max_exponent of zero polynomial");
    return coeffs_.rbegin()->first;
}

const BigInt& LaurentPolynomial::leading_coeff() const {
    if (is_zero()) throw validation_error("leading_coeff of zero polynomial");
    return coeffs_.rbegin()->second;
}

void LaurentPolynomial::set_coeff(int exponent, BigInt c) {
    if (c == 0)
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = std::move(c);
}

void LaurentPolynomial::check_same_var(const LaurentPolynomial& o) const {
    if (var_ != o.var_)
        throw validation_error(std::string("variable-tag mismatch: ") + var_name(var_) +
                               " vs " + var_name(o.var_));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(var_);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    check_same_var(o);
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    check_same_var(o);
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) - c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    check_same_var(o);
    LaurentPolynomial r(var_);
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const BigInt& c) const {
    LaurentPolynomial r(var_);
    if (c == 0) return r;
    for (const auto& [e, k] : coeffs_) r.coeffs_.emplace(e, k * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial r(var_);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::substitute_power(Var new_var, int k) const {
    if (k == 0) throw validation_error("substitute_power with zero exponent");
    LaurentPolynomial r(new_var);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e * k, c);
    return r;
}

BigRat LaurentPolynomial::evaluate(const BigRat& x) const {
    if (x == 0) {
        if (!is_zero() && min_exponent() < 0)
            throw validation_error("evaluation at 0 with negative exponents");
        return coeff(0);
    }
    BigRat acc = 0;
    for (const auto& [e, c] : coeffs_) {
        BigRat p = 1;
        const BigRat base = e >= 0 ? x : BigRat(1) / x;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
        acc += BigRat(c) * p;
    }
    return acc;
}

std::string LaurentPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        BigInt a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << var_name(var_) << "^" << e;
        }
        first = false;
    }
    return out.str();
}

namespace {

// Dense coefficient vector of the ordinary part, ascending from exponent 0.
std::vector<BigInt> dense_ordinary(const LaurentPolynomial& p, int& shift) {
    shift = p.min_exponent();
    std::vector<BigInt> v(static_cast<size_t>(p.max_exponent() - shift) + 1, BigInt(0));
    for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e - shift)] = c;
    return v;
}

void trim(std::vector<BigInt>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

BigInt content(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& c : v) g = boost::multiprecision::gcd(g, c);
    return g;
}

void divide_by(std::vector<BigInt>& v, const BigInt& d) {
    for (auto& c : v) c /= d;
}

// Pseudo-remainder of a by b (b nonzero), up to a scalar multiple; only
// used inside the primitive PRS so the scaling is irrelevant.
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const BigInt lead_a = a.back();
        const BigInt lead_b = b.back();
        const size_t k = a.size() - b.size();
        for (auto& c : a) c *= lead_b;
        for (size_t i = 0; i < b.size(); ++i) a[i + k] -= lead_a * b[i];
        trim(a);
    }
    return a;
}

std::vector<BigInt> primitive(std::vector<BigInt> v) {
    const BigInt g = content(v);
    if (g > 1) divide_by(v, g);
    if (!v.empty() && v.back() < 0)
        for (auto& c : v) c = -c;
    return v;
}

std::vector<BigInt> dense_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
    trim(a);
    trim(b);
    if (a.empty()) return primitive(std::move(b));
    if (b.empty()) return primitive(std::move(a));
    const BigInt cont = boost::multiprecision::gcd(content(a), content(b));
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = primitive(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    for (auto& c : a) c *= cont;
    return a;
}

LaurentPolynomial from_dense(Var var, const std::vector<BigInt>& v, int shift) {
    LaurentPolynomial p(var);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p.set_coeff(static_cast<int>(i) + shift, v[i]);
    return p;
}

} // namespace

LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.var() != b.var()) throw validation_error("exact_divide: variable-tag mismatch");
    if (b.is_zero()) throw validation_error("exact_divide by zero");
    if (a.is_zero()) return LaurentPolynomial::zero(a.var());

    int sa = 0, sb = 0;
    const auto da = dense_ordinary(a, sa);
    const auto db = dense_ordinary(b, sb);
    if (da.size() < db.size())
        throw internal_error("exact_divide: nonzero remainder dividing (" + a.to_string() +
                             ") by (" + b.to_string() + ")");

    // Long division over the rationals; exactness demands a zero remainder
    // and integer quotient coefficients.
    std::vector<BigRat> rem(da.begin(), da.end());
    std::vector<BigRat> quot(da.size() - db.size() + 1, BigRat(0));
    const BigRat lead_b(db.back());
    for (size_t i = rem.size(); i-- >= db.size();) {
        if (rem[i] == 0) {
            if (i == 0) break;
            continue;
        }
        const BigRat f = rem[i] / lead_b;
        quot[i - (db.size() - 1)] = f;
        for (size_t j = 0; j < db.size(); ++j) rem[i - (db.size() - 1) + j] -= f * BigRat(db[j]);
        if (i == 0) break;
    }
    for (const auto& r : rem)
        if (r != 0)
            throw internal_error("exact_divide: nonzero remainder dividing (" + a.to_string() +
                                 ") by (" + b.to_string() + ")");
    LaurentPolynomial result(a.var());
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] == 0) continue;
        if (boost::multiprecision::denominator(quot[i]) != 1)
            throw internal_error("exact_divide: non-integer quotient coefficient dividing (" +
                                 a.to_string() + ") by (" + b.to_string() + ")");
        result.set_coeff(static_cast<int>(i) + sa - sb, boost::multiprecision::numerator(quot[i]));
    }
    return result;
}

LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.var() != b.var()) throw validation_error("poly_gcd: variable-tag mismatch");
    if (a.is_zero() && b.is_zero()) return LaurentPolynomial::zero(a.var());
    if (a.is_zero() || b.is_zero()) {
        int s = 0;
        auto v = dense_ordinary(a.is_zero() ? b : a, s);
        return from_dense(a.var(), primitive(std::move(v)), 0);
    }
    int sa = 0, sb = 0;
    const auto g = dense_gcd(dense_ordinary(a, sa), dense_ordinary(b, sb));
    return from_dense(a.var(), g, 0);
}

LaurentPolynomial pow(const LaurentPolynomial& base, unsigned exp) {
    LaurentPolynomial r = LaurentPolynomial::one(base.var());
    LaurentPolynomial b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

} // namespace hsq
