#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hsq/rational_fn.hpp"

namespace hsq {

// Weakly decreasing sequence of positive parts; indexes nilpotent adjoint
// orbits by Jordan type.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // part value -> multiplicity
    std::map<int, int> multiplicities() const;
    Partition conjugate() const;

    bool operator==(const Partition& o) const = default;
    auto operator<=>(const Partition& o) const = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

// All partitions of s in descending lexicographic order; s = 0 gives the
// single empty partition.
std::vector<Partition> enumerate_partitions(int s);

// n(lambda, mu) = sum over part pairs of min(lambda_i, mu_j).
int pairing_n(const Partition& lambda, const Partition& mu);

// |C_lambda|: order of the GL centralizer of a nilpotent of Jordan type
// lambda, as q^{n(l,l)} * prod_k prod_{j=1}^{m_k} (1 - q^{-j}).  The
// product collapses to an ordinary polynomial in q.
RationalFunction centralizer_order(const Partition& lambda);

// |c_lambda| = q^{n(lambda,lambda)}: the Lie-algebra centralizer order,
// equally the kernel size of ad X_lambda.
LaurentPolynomial lie_centralizer_order(const Partition& lambda);

// |GL_s(F_q)| as a polynomial in q.
LaurentPolynomial gl_order(int s);

} // namespace hsq
