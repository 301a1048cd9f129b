#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsq/bigint.hpp"
#include "hsq/prime_field.hpp"

namespace hsq {

// Element of Z[zeta_p] in the basis {1, zeta, ..., zeta^{p-2}}, reduced
// via 1 + zeta + ... + zeta^{p-1} = 0.  Reduced coordinates are canonical:
// equality is coordinatewise.
class CyclotomicInteger {
public:
    explicit CyclotomicInteger(std::int64_t p);
    static CyclotomicInteger from_integer(std::int64_t p, BigInt n);
    static CyclotomicInteger zeta_power(std::int64_t p, std::int64_t e);

    std::int64_t modulus() const { return p_; }
    const std::vector<BigInt>& coords() const { return coords_; }

    CyclotomicInteger operator+(const CyclotomicInteger& o) const;
    CyclotomicInteger operator-(const CyclotomicInteger& o) const;
    CyclotomicInteger operator*(const CyclotomicInteger& o) const;
    CyclotomicInteger operator*(const BigInt& c) const;
    CyclotomicInteger& operator+=(const CyclotomicInteger& o) { return *this = *this + o; }
    bool operator==(const CyclotomicInteger& o) const = default;

    // The integer value when all coordinates beyond the constant vanish
    // (the canonical form of a rational element), nullopt otherwise.
    std::optional<BigInt> as_integer() const;

    std::string to_string() const;

private:
    void check_same(const CyclotomicInteger& o) const;

    std::int64_t p_;
    std::vector<BigInt> coords_; // length p-1
};

// The fixed additive character x -> zeta_p^x.
CyclotomicInteger character(const Fp& x);

} // namespace hsq
