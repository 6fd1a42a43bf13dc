#pragma once

#include <optional>
#include <string>

#include "ribbon/braid.hpp"
#include "ribbon/matrix.hpp"
#include "ribbon/obstruct.hpp"
#include "ribbon/spinmu.hpp"

namespace ribbon {

/// One knot as read from a knot file or the command line. At most one of
/// seifert / braid / catalog is set; a record with none of them must carry
/// a bounding form.
struct KnotRecord {
    enum class Source { SeifertMatrix, Braid, Catalog, FormOnly };

    std::string name;
    std::optional<IntMatrix> seifert;
    std::optional<BraidWord> braid;
    std::optional<std::string> catalog;
    std::optional<IntMatrix> bounding_form;

    /// Throws ValidationError if the populated fields do not identify a
    /// single source.
    Source source() const;
};

std::string_view to_string(KnotRecord::Source s);

/// Record resolved to matrices: the Seifert matrix of the underlying
/// 1-knot (when known) and the even form (when given).
struct ResolvedKnot {
    std::string name;
    std::optional<SeifertMatrix> seifert;
    std::optional<IntMatrix> bounding_form;
};

ResolvedKnot resolve(const KnotRecord& record);

/// The 2-knot a resolved record describes: the even-form route when a
/// bounding form is present, otherwise the 2-twist spin.
TwoKnot two_knot(const ResolvedKnot& k);

/// Invariants of one record.
struct InvariantsReport {
    ResolvedKnot knot;
    TwoKnot invariants;
    bool doubling = false;
};

InvariantsReport compute_invariants(const KnotRecord& record);

Verdict compute_obstruction(const KnotRecord& a, const std::optional<KnotRecord>& b);

} // namespace ribbon
