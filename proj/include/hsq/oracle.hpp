#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "hsq/bigint.hpp"
#include "hsq/laurent.hpp"
#include "hsq/quiver.hpp"
#include "hsq/toric.hpp"

namespace hsq {

struct QuiverInstance {
    Quiver quiver;
    DimensionData dims;
};

// A concrete moment-map counting problem over prime fields: either a torus
// acting through the columns of an integer matrix, or a framed quiver
// representation space with level Id.  "V" below is the half of the doubled
// space that gets enumerated; the other half is solved for linearly.
class RepresentationInstance {
public:
    static RepresentationInstance make_toric(ToricInstance inst);
    static RepresentationInstance make_quiver(Quiver q, DimensionData dims);

    bool is_toric() const { return std::holds_alternative<ToricInstance>(payload_); }
    const ToricInstance& toric_payload() const { return std::get<ToricInstance>(payload_); }
    const QuiverInstance& quiver_payload() const { return std::get<QuiverInstance>(payload_); }

    int dim_v() const;
    int dim_g() const;
    BigInt group_order(std::int64_t p) const;

    // Complex dimension of the quotient (clamped at zero); the default
    // interpolation degree bound.
    int count_degree() const;

private:
    explicit RepresentationInstance(std::variant<ToricInstance, QuiverInstance> payload)
        : payload_(std::move(payload)) {}

    std::variant<ToricInstance, QuiverInstance> payload_;
};

struct OracleOptions {
    BigInt budget = BigInt(100000000); // cap on the p^dimV (resp. p^dimg) enumeration cost
    int workers = 1;
    std::int64_t character_twist = 1;  // Psi(x) = zeta_p^(twist * x)
};

// Number of (v, w) in V x V* over F_p with mu(v, w) equal to the level.
// Enumerates the V side and counts affine solution spaces on the other.
BigInt brute_force_count(const RepresentationInstance& inst, std::int64_t p,
                         const OracleOptions& opts = {});

// |V|/|g| * sum over X in g of |ker rho(X)| Psi(<X, xi>), evaluated in
// cyclotomic integers; the result is asserted to be a rational integer.
BigInt character_sum_count(const RepresentationInstance& inst, std::int64_t p,
                           const OracleOptions& opts = {});

// Primes the counting formulas trust: for quivers p must not divide
// sum(v) (when nonzero); for toric instances p must preserve the matroid
// (no nonzero maximal minor vanishes mod p) and admit a generic level.
bool is_good_prime(const RepresentationInstance& inst, std::int64_t p);

// Reconstructs the count polynomial through (p, brute_force_count(p)/|G(F_p)|)
// at the first degree_bound+1 good primes; any remaining good primes are
// held out and verified against the interpolant.
LaurentPolynomial interpolate_count(const RepresentationInstance& inst,
                                    const std::vector<std::int64_t>& primes,
                                    int degree_bound, const OracleOptions& opts = {});

// Degree bound defaulted to count_degree().
LaurentPolynomial interpolate_count(const RepresentationInstance& inst,
                                    const std::vector<std::int64_t>& primes,
                                    const OracleOptions& opts = {});

} // namespace hsq
