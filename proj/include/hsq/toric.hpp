#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsq/bigint.hpp"
#include "hsq/laurent.hpp"
#include "hsq/linalg.hpp"

namespace hsq {

// Integer vector configuration: the columns of `matrix` are the weights of a
// rank-d torus acting on affine n-space. `xi` is an optional moment-map level.
struct ToricInstance {
    IntMatrix matrix;
    std::optional<std::vector<BigRat>> xi;

    explicit ToricInstance(IntMatrix m,
                           std::optional<std::vector<BigRat>> level = std::nullopt);

    int rows() const { return static_cast<int>(matrix.size()); }
    int cols() const { return static_cast<int>(matrix[0].size()); }
};

// One flat of the arrangement of column hyperplanes: the closed set of column
// indices whose hyperplanes contain it. Ordering is by reverse inclusion of
// subspaces, so the origin (all hyperplanes) is the top element.
struct Flat {
    std::vector<int> indices;
    int rank = 0;
    BigInt mobius_to_top = 0;

    int size() const { return static_cast<int>(indices.size()); }
};

class FlatLattice {
public:
    explicit FlatLattice(const ToricInstance& inst);

    const std::vector<Flat>& flats() const { return flats_; }
    int ambient_rank() const { return ambient_rank_; }

private:
    std::vector<Flat> flats_;
    int ambient_rank_ = 0;
};

// Matroid of the columns of an integer matrix. Rank queries are cached by
// column subset; intended scale is ground sets of a dozen elements or so.
class Matroid {
public:
    explicit Matroid(IntMatrix realization, int ground_size);

    int ground_size() const { return ground_size_; }
    int rank() const;
    int rank_of(const std::vector<int>& subset) const;
    const IntMatrix& realization() const { return realization_; }

private:
    friend class TutteContext;
    int rank_of_mask(std::uint64_t mask) const;

    IntMatrix realization_;
    int ground_size_ = 0;
    mutable std::map<std::uint64_t, int> rank_cache_;
};

// Bivariate polynomial with integer coefficients, sparse in (x-exp, y-exp).
class TuttePolynomial {
public:
    TuttePolynomial() = default;

    static TuttePolynomial zero() { return TuttePolynomial{}; }
    static TuttePolynomial one();

    const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }
    BigInt coeff(int x_exp, int y_exp) const;
    bool operator==(const TuttePolynomial& other) const { return terms_ == other.terms_; }

    TuttePolynomial operator+(const TuttePolynomial& other) const;
    TuttePolynomial times_x() const;
    TuttePolynomial times_y() const;

    BigInt evaluate_at_integers(const BigInt& x, const BigInt& y) const;
    std::string to_string() const;

private:
    void set_coeff(int x_exp, int y_exp, BigInt c);

    std::map<std::pair<int, int>, BigInt> terms_;
};

FlatLattice build_flat_lattice(const ToricInstance& inst);

// q^(n-d)/(q-1)^d * sum over flats of mobius_to_top * q^size(flat).
// The division is exact; a nonzero remainder means the lattice is wrong.
LaurentPolynomial toric_count_polynomial(const ToricInstance& inst);

// t^(4(n-d)) * count(q -> t^-2); checked to be a polynomial in t^2 with
// nonnegative coefficients.
LaurentPolynomial toric_poincare(const ToricInstance& inst);

// Matroid of an integer matrix whose rows span ker(A).
Matroid gale_dual(const ToricInstance& inst);

TuttePolynomial tutte_polynomial(const Matroid& m);
TuttePolynomial tutte_polynomial(const Matroid& m, const std::vector<int>& element_order);

// h-polynomial of the independence complex: q^rank * T(1/q, 1).
LaurentPolynomial h_polynomial(const Matroid& m);

// xi avoids the span of every flat of rank < d. The rational form requires
// inst.xi; the mod-p forms take an explicit vector with entries in [0, p).
bool xi_is_generic(const ToricInstance& inst);
bool xi_is_generic_mod_p(const ToricInstance& inst, const FlatLattice& lattice,
                         const std::vector<std::int64_t>& xi, std::int64_t p);
std::optional<std::vector<std::int64_t>>
find_generic_xi_mod_p(const ToricInstance& inst, const FlatLattice& lattice,
                      std::int64_t p);

}  // namespace hsq
