#pragma once

#include <cstddef>
#include <vector>

#include "ribbon/matrix.hpp"

namespace ribbon {

class FiniteAbelianGroup;

/// U * M * V == D with U, V unimodular and the diagonal of D a
/// nonnegative divisibility chain.
struct SnfResult {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    /// The min(rows, cols) diagonal entries of D, zeros included.
    std::vector<Integer> diagonal() const;
    std::size_t rank() const;
};

/// Smith normal form with transforms. Pivots on the entry of least
/// absolute value in the trailing submatrix.
SnfResult smith_normal_form(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination). Throws
/// DimensionError for non-square input; det of 0x0 is 1.
Integer determinant(const IntMatrix& m);

struct Cokernel {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion; // invariant factors >= 2
};

/// Z^rows / (column span of m).
Cokernel cokernel(const IntMatrix& m);

/// Signature of a symmetric form by congruence diagonalization over Q.
/// Throws FormError if q is not symmetric.
Integer signature(const IntMatrix& q);

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

} // namespace ribbon
