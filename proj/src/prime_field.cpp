#include "hsq/prime_field.hpp"

#include <string>

namespace hsq {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t reduce_mod(const BigInt& x, std::int64_t p) {
    BigInt r = x % p;
    if (r < 0) r += p;
    return r.convert_to<std::int64_t>();
}

std::optional<std::int64_t> reduce_mod(const BigRat& x, std::int64_t p) {
    const std::int64_t den = reduce_mod(BigInt(boost::multiprecision::denominator(x)), p);
    if (den == 0) return std::nullopt;
    const std::int64_t num = reduce_mod(BigInt(boost::multiprecision::numerator(x)), p);
    return (Fp(num, p) / Fp(den, p)).value();
}

Fp::Fp(std::int64_t value, std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw validation_error("Fp modulus " + std::to_string(p) + " is not prime");
    v_ = value % p;
    if (v_ < 0) v_ += p;
}

std::int64_t Fp::checked(std::int64_t p) const {
    if (p_ != p) throw validation_error("Fp modulus mismatch");
    return v_;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw validation_error("Fp inverse of zero");
    // extended Euclid
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b) {
        const std::int64_t t = a / b;
        a -= t * b;
        std::swap(a, b);
        x0 -= t * x1;
        std::swap(x0, x1);
    }
    return Fp(x0, p_);
}

namespace {

// Row-reduce in place; returns rank.  Columns [0, cols) are eliminated,
// rows may be longer (augmented systems).
int eliminate(FpMatrix& m, std::size_t cols, std::int64_t p) {
    int rank = 0;
    const std::size_t rows = m.size();
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const std::int64_t inv = Fp(m[rank][col], p).inverse().value();
        for (auto& x : m[rank]) x = (x % p) * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (static_cast<int>(r) == rank) continue;
            const std::int64_t f = m[r][col] % p;
            if (f == 0) continue;
            for (std::size_t c = col; c < m[r].size(); ++c) {
                m[r][c] = (m[r][c] - f * m[rank][c]) % p;
                if (m[r][c] < 0) m[r][c] += p;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

int fp_rank(FpMatrix m, std::int64_t p) {
    if (m.empty()) return 0;
    for (auto& row : m)
        for (auto& x : row) {
            x %= p;
            if (x < 0) x += p;
        }
    return eliminate(m, m[0].size(), p);
}

std::optional<int> fp_affine_solve_free_dims(FpMatrix a, std::vector<std::int64_t> b,
                                             std::int64_t p) {
    const std::size_t rows = a.size();
    if (rows != b.size()) throw validation_error("fp solve: shape mismatch");
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t r = 0; r < rows; ++r) {
        a[r].push_back(b[r]);
        for (auto& x : a[r]) {
            x %= p;
            if (x < 0) x += p;
        }
    }
    const int rank = eliminate(a, cols, p);
    for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r)
        if (a[r][cols] % p != 0) return std::nullopt;
    return static_cast<int>(cols) - rank;
}

} // namespace hsq
