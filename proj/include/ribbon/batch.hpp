#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ribbon/record.hpp"

namespace ribbon {

enum class Execution { Serial, Parallel };

struct BatchEntry {
    std::optional<InvariantsReport> report;
    /// Empty on success.
    std::string error;
    bool parse_error = false;
};

/// Invariants for every record, in input order. Serial is the reference
/// path; Parallel distributes records over OpenMP threads and must
/// produce identical output.
std::vector<BatchEntry> evaluate_batch(std::span<const KnotRecord> records, Execution mode);

/// Knot files (*.json) in a directory, sorted by filename. Files that fail
/// to parse yield a record-less entry carrying the error.
struct BatchInput {
    std::string file;
    std::optional<KnotRecord> record;
    std::string error;
};
std::vector<BatchInput> read_batch_directory(const std::string& dir);

} // namespace ribbon
