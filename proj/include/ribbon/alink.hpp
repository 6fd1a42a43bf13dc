#pragma once

#include "ribbon/matrix.hpp"

namespace ribbon {

/// The map H^1(S^4 - L_S) -> H^1(L_T) ≅ Z^2 of an (S^2, T^2)-link, as a
/// 2 x c integer matrix.
class InducedMap {
public:
    /// Throws DimensionError unless m has exactly 2 rows.
    explicit InducedMap(IntMatrix m);
    const IntMatrix& matrix() const noexcept { return m_; }

private:
    IntMatrix m_;
};

/// 0 if the cokernel is Z ⊕ Z, 1 if Z, n if Z ⊕ Z/n (n >= 2). Any
/// other cokernel throws ClassificationError.
Integer alinking(const InducedMap& iota);

/// alinking mod 2.
int mod2_alinking(const InducedMap& iota);

} // namespace ribbon
