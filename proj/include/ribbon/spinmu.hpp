#pragma once

#include <span>
#include <string>

#include "ribbon/abelian.hpp"
#include "ribbon/matrix.hpp"

namespace ribbon {

/// Residue class mod 16, stored as 0..15.
class Mu {
public:
    constexpr Mu() = default;
    explicit Mu(const Integer& any);
    constexpr static Mu from_residue(int r) { return Mu(Residue{((r % 16) + 16) % 16}); }

    constexpr int value() const noexcept { return value_; }
    /// "14 mod 16"
    std::string to_string() const;

    friend constexpr Mu operator+(Mu a, Mu b) { return from_residue(a.value_ + b.value_); }
    friend constexpr bool operator==(Mu, Mu) = default;

private:
    struct Residue {
        int r;
    };
    constexpr explicit Mu(Residue r) : value_(r.r) {}
    int value_ = 0;
};

/// Square integer matrix S with det(S - S^T) = ±1. Only constructible
/// through validate_seifert.
class SeifertMatrix {
public:
    SeifertMatrix() = default; // unknot
    const IntMatrix& matrix() const noexcept { return s_; }
    std::size_t size() const noexcept { return s_.rows(); }

private:
    explicit SeifertMatrix(IntMatrix s) : s_(std::move(s)) {}
    friend SeifertMatrix validate_seifert(IntMatrix s);
    IntMatrix s_;
};

/// Throws DimensionError if not square, NotAKnotError if
/// det(S - S^T) != ±1.
SeifertMatrix validate_seifert(IntMatrix s);

/// S + S^T. Symmetric with even diagonal.
IntMatrix intersection_form(const SeifertMatrix& s);

/// H1 of the 2-fold branched cover, presented by S + S^T.
FiniteAbelianGroup branched_double_cover_h1(const SeifertMatrix& s);

/// mu of the 2-twist spin: signature(S + S^T) mod 16.
/// Throws SpinStructureError if det(S + S^T) is even.
Mu mu_two_twist_spin(const SeifertMatrix& s);

/// mu of the boundary of a spin 4-manifold with even intersection form q.
/// Throws FormError (not symmetric, odd diagonal) or SpinStructureError
/// (even determinant).
Mu mu_from_even_form(const IntMatrix& q);

/// Sum of component mu values; cross-checked against the mu of the
/// block-diagonal form of the whole link.
Mu mu_boundary_link_sum(std::span<const SeifertMatrix> components);

/// Everything the obstructions need about one 2-knot: mu and the
/// torsion of H1 of a chosen Seifert hypersurface, with the form they
/// were read from.
struct TwoKnot {
    enum class Route { TwoTwistSpin, EvenForm };

    Route route = Route::TwoTwistSpin;
    IntMatrix form;
    Integer signature;
    Integer determinant = 1;
    Mu mu;
    FiniteAbelianGroup h1;
};

/// 2-twist spin of the knot with Seifert matrix s.
TwoKnot two_twist_spin(const SeifertMatrix& s);

/// 2-knot with a Seifert hypersurface bounding a spin 4-manifold whose
/// (even, odd-determinant) intersection form is q.
TwoKnot from_even_form(const IntMatrix& q);

} // namespace ribbon
