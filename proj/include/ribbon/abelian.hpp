#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/matrix.hpp"

namespace ribbon {

/// A prime power p^k, keyed as (p, k).
using PrimePower = std::pair<Integer, unsigned>;

/// Multiset of elementary divisors: prime power -> multiplicity.
using ElementaryDivisors = std::map<PrimePower, std::size_t>;

/// Finite abelian group in invariant-factor form d1 | d2 | ... | dk, every
/// di >= 2. The empty chain is the trivial group.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;

    /// Accepts any list of positive integers (1s allowed, any order) and
    /// normalizes it. Zero or negative entries throw ValidationError.
    static FiniteAbelianGroup from_orders(std::vector<Integer> cyclic_orders);
    static FiniteAbelianGroup cyclic(const Integer& n) { return from_orders({n}); }
    static FiniteAbelianGroup from_elementary_divisors(const ElementaryDivisors& ed);

    const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
    bool is_trivial() const noexcept { return factors_.empty(); }
    Integer order() const;

    /// Factors every invariant factor into prime powers.
    ElementaryDivisors elementary_divisors() const;

    /// "Z2 ⊕ Z4 ⊕ Z8", or "0" for the trivial group.
    std::string to_string() const;

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    std::vector<Integer> factors_;
};

/// Abelian group given by a presentation matrix: torsion part plus the
/// rank of the free part.
struct PresentedGroup {
    FiniteAbelianGroup torsion;
    std::size_t free_rank = 0;

    bool is_finite() const noexcept { return free_rank == 0; }
};

/// Cokernel of m read as a presentation (relations are columns).
PresentedGroup from_presentation(const IntMatrix& m);

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h);

bool is_isomorphic(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h);

/// Returns H with G ≅ H ⊕ H when such H exists.
std::optional<FiniteAbelianGroup> is_double(const FiniteAbelianGroup& g);

/// Given A ⊕ B and B ⊕ C both doubles, returns P with A ⊕ C ≅ P ⊕ P.
/// Throws PreconditionError naming the hypothesis that fails.
FiniteAbelianGroup combine_doubles(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b,
                                  const FiniteAbelianGroup& c);

/// Prime factorization, primes ascending. n must be positive.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

} // namespace ribbon
