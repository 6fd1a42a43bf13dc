#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ribbon/abelian.hpp"
#include "ribbon/alink.hpp"
#include "ribbon/exactla.hpp"
#include "ribbon/matrix.hpp"
#include "ribbon/obstruct.hpp"
#include "ribbon/record.hpp"

namespace ribbon {

using Json = nlohmann::ordered_json;

/// Matrix text: "[[2,4],[6,8]]" (entries may be quoted) or one or more
/// column tuples "(2,4) (1,0)". Throws ParseError with line/column.
IntMatrix parse_matrix_text(std::string_view text);

/// Arrays of arrays of decimal strings. Plain JSON integers are accepted on
/// input.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json group_to_json(const FiniteAbelianGroup& g);

/// Knot file: {"name", and one of "seifert" | "braid": {"strands",
/// "letters"} | "catalog", plus optional "bounding_form"}.
KnotRecord record_from_json(const Json& j);
KnotRecord read_knot_file(const std::filesystem::path& path);

/// A catalog name or a path to a knot file.
KnotRecord knot_reference(const std::string& ref);

/// Machine-readable invariants. The record is itself a valid knot file,
/// so feeding it back reproduces the same values.
Json report_to_json(const InvariantsReport& r);
std::string report_to_text(const InvariantsReport& r);

Json verdict_to_json(const Verdict& v);
std::string verdict_to_text(const Verdict& v);

Json snf_to_json(const SnfResult& snf, bool transforms);
std::string snf_to_text(const SnfResult& snf, bool transforms);

} // namespace ribbon
