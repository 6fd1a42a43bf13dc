#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ribbon/abelian.hpp"
#include "ribbon/spinmu.hpp"

namespace ribbon {

enum class Conclusion { ObstructedByMu, ObstructedByTorsion, NoObstructionFound };

std::string_view to_string(Conclusion c);

/// Outcome of the ribbon-move obstruction tests. Verdicts are one-sided:
/// NoObstructionFound does not mean the knots are ribbon-move equivalent.
struct Verdict {
    Conclusion conclusion = Conclusion::NoObstructionFound;
    /// Set for ObstructedByMu: the two unequal values.
    std::optional<std::pair<Mu, Mu>> mu_witness;
    /// Set for ObstructedByTorsion: the group that is not of the form G ⊕ G.
    std::optional<FiniteAbelianGroup> torsion_witness;
    /// Which invariant fired: "mu-invariant", "torsion-doubling" or "none".
    std::string theorem_tag;

    bool obstructed() const noexcept { return conclusion != Conclusion::NoObstructionFound; }
    /// One-line human explanation.
    std::string explanation() const;
};

/// Ribbon-move invariants: mu must agree, and the torsion of
/// H1(V1) ⊕ H1(V2) must be a double.
Verdict obstruct_ribbon_equivalent(const TwoKnot& a, const TwoKnot& b);
Verdict obstruct_ribbon_equivalent(const SeifertMatrix& s1, const SeifertMatrix& s2);

/// Compare against the trivial 2-knot.
Verdict obstruct_ribbon_trivial(const TwoKnot& k);
Verdict obstruct_ribbon_trivial(const SeifertMatrix& s);

} // namespace ribbon
