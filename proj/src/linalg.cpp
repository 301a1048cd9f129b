#include "hsq/linalg.hpp"

#include <numeric>

#include "hsq/errors.hpp"

namespace hsq {

namespace {

// Reduced row echelon over Q; returns pivot columns.
std::vector<int> rref(RatMatrix& m, int cols) {
    std::vector<int> pivots;
    int row = 0;
    const int rows = static_cast<int>(m.size());
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[static_cast<size_t>(row)], m[static_cast<size_t>(p)]);
        const BigRat inv = BigRat(1) / m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (auto& x : m[static_cast<size_t>(row)]) x *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            const BigRat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < cols; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * m[static_cast<size_t>(row)][static_cast<size_t>(c)];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rat_rank(RatMatrix m) {
    if (m.empty()) return 0;
    return static_cast<int>(rref(m, static_cast<int>(m[0].size())).size());
}

int int_rank(const IntMatrix& m) {
    RatMatrix r;
    r.reserve(m.size());
    for (const auto& row : m) r.emplace_back(row.begin(), row.end());
    return rat_rank(std::move(r));
}

BigInt int_determinant(IntMatrix m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw validation_error("determinant of non-square matrix");
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = n;
            for (size_t r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

IntMatrix int_kernel_basis(const IntMatrix& m, int cols) {
    RatMatrix r;
    r.reserve(m.size());
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != cols) throw validation_error("kernel: ragged matrix");
        r.emplace_back(row.begin(), row.end());
    }
    const std::vector<int> pivots = rref(r, cols);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    IntMatrix basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        std::vector<BigRat> v(static_cast<size_t>(cols), BigRat(0));
        v[static_cast<size_t>(free_col)] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<size_t>(pivots[i])] = -r[i][static_cast<size_t>(free_col)];
        // clear denominators, divide by content
        BigInt lcm = 1;
        for (const auto& x : v)
            lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
        std::vector<BigInt> w;
        w.reserve(v.size());
        for (const auto& x : v)
            w.push_back(boost::multiprecision::numerator(x) *
                        (lcm / boost::multiprecision::denominator(x)));
        BigInt g = 0;
        for (const auto& x : w) g = boost::multiprecision::gcd(g, x);
        if (g > 1)
            for (auto& x : w) x /= g;
        basis.push_back(std::move(w));
    }
    return basis;
}

std::vector<BigInt> maximal_minors(const IntMatrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<BigInt> out;
    if (rows == 0 || rows > cols) return out;
    std::vector<int> idx(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        IntMatrix sub(static_cast<size_t>(rows), std::vector<BigInt>(static_cast<size_t>(rows)));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < rows; ++c)
                sub[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    m[static_cast<size_t>(r)][static_cast<size_t>(idx[static_cast<size_t>(c)])];
        out.push_back(int_determinant(std::move(sub)));
        int i = rows - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == cols - rows + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < rows; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

} // namespace hsq
