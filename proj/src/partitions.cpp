#include "hsq/partitions.hpp"

#include <numeric>
#include <sstream>

namespace hsq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw validation_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw validation_error("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int i = 0; i < p; ++i) ++conj[static_cast<size_t>(i)];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    out << ")";
    return out.str();
}

namespace {

void extend(std::vector<Partition>& out, std::vector<int>& prefix, int remaining, int bound) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(bound, remaining); part >= 1; --part) {
        prefix.push_back(part);
        extend(out, prefix, remaining - part, part);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int s) {
    if (s < 0) throw validation_error("enumerate_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend(out, prefix, s, s == 0 ? 1 : s);
    return out;
}

int pairing_n(const Partition& lambda, const Partition& mu) {
    int n = 0;
    for (int a : lambda.parts())
        for (int b : mu.parts()) n += std::min(a, b);
    return n;
}

RationalFunction centralizer_order(const Partition& lambda) {
    LaurentPolynomial acc = LaurentPolynomial::monomial(Var::q, pairing_n(lambda, lambda));
    for (const auto& [part, mult] : lambda.multiplicities()) {
        (void)part;
        for (int j = 1; j <= mult; ++j) {
            // 1 - q^{-j}
            LaurentPolynomial f = LaurentPolynomial::one(Var::q);
            f.set_coeff(-j, BigInt(-1));
            acc *= f;
        }
    }
    return RationalFunction(std::move(acc));
}

LaurentPolynomial lie_centralizer_order(const Partition& lambda) {
    return LaurentPolynomial::monomial(Var::q, pairing_n(lambda, lambda));
}

LaurentPolynomial gl_order(int s) {
    LaurentPolynomial acc = LaurentPolynomial::one(Var::q);
    const LaurentPolynomial qs = LaurentPolynomial::monomial(Var::q, s);
    for (int i = 0; i < s; ++i) acc *= qs - LaurentPolynomial::monomial(Var::q, i);
    return acc;
}

} // namespace hsq
