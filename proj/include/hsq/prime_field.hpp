#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hsq/bigint.hpp"
#include "hsq/errors.hpp"

namespace hsq {

bool is_prime(std::int64_t n);

// Representative in [0, p).  The rational form is empty when the reduced
// denominator vanishes mod p.
std::int64_t reduce_mod(const BigInt& x, std::int64_t p);
std::optional<std::int64_t> reduce_mod(const BigRat& x, std::int64_t p);

// Element of F_p, p a (small) prime.  Arithmetic is mod-p exact.
class Fp {
public:
    Fp(std::int64_t value, std::int64_t p);

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    Fp operator+(const Fp& o) const { return Fp(v_ + o.checked(p_), p_); }
    Fp operator-(const Fp& o) const { return Fp(v_ - o.checked(p_), p_); }
    Fp operator*(const Fp& o) const { return Fp(v_ * o.checked(p_), p_); }
    Fp operator-() const { return Fp(-v_, p_); }
    Fp inverse() const;
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    bool operator==(const Fp& o) const = default;

private:
    std::int64_t checked(std::int64_t p) const;

    std::int64_t v_;
    std::int64_t p_;
};

// Dense matrices over F_p, entries already reduced to [0, p).
using FpMatrix = std::vector<std::vector<std::int64_t>>;

int fp_rank(FpMatrix m, std::int64_t p);

// Number of free variables of A x = b, or nullopt when inconsistent.
// The solution count is p^free.
std::optional<int> fp_affine_solve_free_dims(FpMatrix a, std::vector<std::int64_t> b,
                                             std::int64_t p);

} // namespace hsq
