#pragma once

#include <vector>

#include "hsq/bigint.hpp"

namespace hsq {

using IntMatrix = std::vector<std::vector<BigInt>>; // row-major
using RatMatrix = std::vector<std::vector<BigRat>>;

int rat_rank(RatMatrix m);
int int_rank(const IntMatrix& m);

BigInt int_determinant(IntMatrix m); // square input

// Rows form an integer basis of the rational kernel of m (primitive, with
// deterministic ordering from the reduced echelon form).
IntMatrix int_kernel_basis(const IntMatrix& m, int cols);

// All maximal (rows x rows) minors of a rows x cols matrix.
std::vector<BigInt> maximal_minors(const IntMatrix& m);

} // namespace hsq
