#include "ribbon/record.hpp"

#include "ribbon/errors.hpp"

namespace ribbon {

KnotRecord::Source KnotRecord::source() const {
    const int populated = int(seifert.has_value()) + int(braid.has_value()) + int(catalog.has_value());
    if (populated > 1)
        throw ValidationError("knot '" + name + "' sets more than one of seifert, braid, catalog");
    if (seifert) return Source::SeifertMatrix;
    if (braid) return Source::Braid;
    if (catalog) return Source::Catalog;
    if (bounding_form) return Source::FormOnly;
    throw ValidationError("knot '" + name + "' has no seifert, braid, catalog or bounding_form");
}

std::string_view to_string(KnotRecord::Source s) {
    switch (s) {
    case KnotRecord::Source::SeifertMatrix:
        return "seifert-matrix";
    case KnotRecord::Source::Braid:
        return "braid";
    case KnotRecord::Source::Catalog:
        return "catalog";
    case KnotRecord::Source::FormOnly:
        return "bounding-form";
    }
    return "?";
}

ResolvedKnot resolve(const KnotRecord& record) {
    ResolvedKnot k;
    k.name = record.name;
    k.bounding_form = record.bounding_form;
    switch (record.source()) {
    case KnotRecord::Source::SeifertMatrix:
        k.seifert = validate_seifert(*record.seifert);
        break;
    case KnotRecord::Source::Braid:
        k.seifert = seifert_matrix_from_braid(*record.braid);
        break;
    case KnotRecord::Source::Catalog: {
        const CatalogEntry& e = catalog(*record.catalog);
        if (k.name.empty()) k.name = e.name;
        k.seifert = e.seifert;
        if (!k.bounding_form) k.bounding_form = e.bounding_form;
        break;
    }
    case KnotRecord::Source::FormOnly:
        break;
    }
    return k;
}

TwoKnot two_knot(const ResolvedKnot& k) {
    if (k.bounding_form) return from_even_form(*k.bounding_form);
    return two_twist_spin(*k.seifert);
}

InvariantsReport compute_invariants(const KnotRecord& record) {
    InvariantsReport r;
    r.knot = resolve(record);
    r.invariants = two_knot(r.knot);
    r.doubling = is_double(r.invariants.h1).has_value();
    return r;
}

Verdict compute_obstruction(const KnotRecord& a, const std::optional<KnotRecord>& b) {
    const TwoKnot ka = two_knot(resolve(a));
    if (!b) return obstruct_ribbon_trivial(ka);
    return obstruct_ribbon_equivalent(ka, two_knot(resolve(*b)));
}

} // namespace ribbon
