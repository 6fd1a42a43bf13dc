#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/matrix.hpp"
#include "ribbon/spinmu.hpp"

namespace ribbon {

/// Braid word on `strands` strands. Letter k > 0 is the right-handed
/// crossing sigma_k, -k its inverse.
struct BraidWord {
    std::size_t strands = 1;
    std::vector<int> letters;

    /// Throws ValidationError unless strands >= 1 and 0 < |k| < strands.
    void validate() const;
    /// Number of components of the closure.
    std::size_t closure_components() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Parses "1 -2 1 -2". Throws ParseError on bad tokens.
BraidWord parse_braid(std::string_view letters, std::size_t strands);

/// Cancels adjacent inverse pairs (cyclically) and removes extreme
/// generators that occur exactly once by Markov destabilization.
BraidWord reduce(BraidWord w);

/// Seifert matrix of the braid closure via Seifert's algorithm. Entry
/// (i, j) is lk(loop i, positive pushoff of loop j). The word is reduced
/// first. Throws NotAKnotError if the closure has several components.
SeifertMatrix seifert_matrix_from_braid(const BraidWord& w);

/// det(S - t S^T).
Integer alexander_at(const SeifertMatrix& s, const Integer& t);

struct CatalogEntry {
    std::string name;
    std::string description;
    SeifertMatrix seifert;
    std::optional<BraidWord> braid;
    /// Even bounding form, when the 2-knot's mu is read from it instead of
    /// from the 2-twist-spin route.
    std::optional<IntMatrix> bounding_form;
};

/// Known entries: unknot, trefoil, figure8, poincare. Throws LookupError
/// listing the available names.
const CatalogEntry& catalog(std::string_view name);
std::vector<std::string> catalog_names();

/// The E8 form (positive definite, even, unimodular).
IntMatrix e8_form();

} // namespace ribbon
