#include "ribbon/obstruct.hpp"

namespace ribbon {

std::string_view to_string(Conclusion c) {
    switch (c) {
    case Conclusion::ObstructedByMu:
        return "ObstructedByMu";
    case Conclusion::ObstructedByTorsion:
        return "ObstructedByTorsion";
    case Conclusion::NoObstructionFound:
        return "NoObstructionFound";
    }
    return "?";
}

std::string Verdict::explanation() const {
    switch (conclusion) {
    case Conclusion::ObstructedByMu:
        return "not ribbon-move equivalent: mu differs (" + std::to_string(mu_witness->first.value()) +
               " vs " + std::to_string(mu_witness->second.value()) +
               " mod 16), and mu is preserved by ribbon-moves";
    case Conclusion::ObstructedByTorsion:
        return "not ribbon-move equivalent: torsion of H1(V1) ⊕ H1(V2) is " + torsion_witness->to_string() +
               ", which is not of the form G ⊕ G";
    case Conclusion::NoObstructionFound:
        break;
    }
    return "no obstruction found: mu agrees and the torsion is a double (equivalence is not claimed)";
}

Verdict obstruct_ribbon_equivalent(const TwoKnot& a, const TwoKnot& b) {
    Verdict v;
    if (a.mu != b.mu) {
        v.conclusion = Conclusion::ObstructedByMu;
        v.mu_witness = {a.mu, b.mu};
        v.theorem_tag = "mu-invariant";
        return v;
    }
    FiniteAbelianGroup sum = direct_sum(a.h1, b.h1);
    if (!is_double(sum)) {
        v.conclusion = Conclusion::ObstructedByTorsion;
        v.torsion_witness = std::move(sum);
        v.theorem_tag = "torsion-doubling";
        return v;
    }
    v.conclusion = Conclusion::NoObstructionFound;
    v.theorem_tag = "none";
    return v;
}

Verdict obstruct_ribbon_equivalent(const SeifertMatrix& s1, const SeifertMatrix& s2) {
    return obstruct_ribbon_equivalent(two_twist_spin(s1), two_twist_spin(s2));
}

// The trivial 2-knot bounds a 3-ball: mu = 0 and H1 = 0.
Verdict obstruct_ribbon_trivial(const TwoKnot& k) { return obstruct_ribbon_equivalent(k, TwoKnot{}); }

Verdict obstruct_ribbon_trivial(const SeifertMatrix& s) { return obstruct_ribbon_trivial(two_twist_spin(s)); }

} // namespace ribbon
