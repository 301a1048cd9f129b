#include "hsq/cyclotomic.hpp"

#include <sstream>

namespace hsq {

CyclotomicInteger::CyclotomicInteger(std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw validation_error("cyclotomic modulus must be prime");
    coords_.assign(static_cast<size_t>(p - 1), BigInt(0));
}

CyclotomicInteger CyclotomicInteger::from_integer(std::int64_t p, BigInt n) {
    CyclotomicInteger z(p);
    z.coords_[0] = std::move(n);
    return z;
}

CyclotomicInteger CyclotomicInteger::zeta_power(std::int64_t p, std::int64_t e) {
    CyclotomicInteger z(p);
    e %= p;
    if (e < 0) e += p;
    if (e <= p - 2) {
        z.coords_[static_cast<size_t>(e)] = 1;
    } else {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& c : z.coords_) c = -1;
    }
    return z;
}

void CyclotomicInteger::check_same(const CyclotomicInteger& o) const {
    if (p_ != o.p_) throw validation_error("cyclotomic modulus mismatch");
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
    check_same(o);
    CyclotomicInteger r = *this;
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
    return r;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
    check_same(o);
    CyclotomicInteger r = *this;
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
    return r;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
    check_same(o);
    // Convolve with exponents folded mod p, then reduce zeta^{p-1}.
    std::vector<BigInt> folded(static_cast<size_t>(p_), BigInt(0));
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        for (size_t j = 0; j < o.coords_.size(); ++j) {
            if (o.coords_[j] == 0) continue;
            folded[(i + j) % static_cast<size_t>(p_)] += coords_[i] * o.coords_[j];
        }
    }
    CyclotomicInteger r(p_);
    const BigInt& top = folded[static_cast<size_t>(p_ - 1)];
    for (size_t e = 0; e + 1 < static_cast<size_t>(p_); ++e) r.coords_[e] = folded[e] - top;
    return r;
}

CyclotomicInteger CyclotomicInteger::operator*(const BigInt& c) const {
    CyclotomicInteger r = *this;
    for (auto& x : r.coords_) x *= c;
    return r;
}

std::optional<BigInt> CyclotomicInteger::as_integer() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return std::nullopt;
    return coords_[0];
}

std::string CyclotomicInteger::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < coords_.size(); ++i) out << (i ? "," : "") << coords_[i];
    out << "]_zeta" << p_;
    return out.str();
}

CyclotomicInteger character(const Fp& x) {
    return CyclotomicInteger::zeta_power(x.modulus(), x.value());
}

} // namespace hsq
