#include "ribbon/batch.hpp"

#include <algorithm>
#include <filesystem>

#include "ribbon/errors.hpp"
#include "ribbon/io.hpp"

namespace ribbon {

namespace {

BatchEntry evaluate_one(const KnotRecord& record) {
    BatchEntry e;
    try {
        e.report = compute_invariants(record);
    } catch (const ParseError& err) {
        e.error = err.what();
        e.parse_error = true;
    } catch (const Error& err) {
        e.error = err.what();
    }
    return e;
}

} // namespace

std::vector<BatchEntry> evaluate_batch(std::span<const KnotRecord> records, Execution mode) {
    std::vector<BatchEntry> out(records.size());
    const auto n = static_cast<std::ptrdiff_t>(records.size());
    if (mode == Execution::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = evaluate_one(records[i]);
        return out;
    }
    // Entries are independent; each slot is written by exactly one thread.
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = evaluate_one(records[i]);
    return out;
}

std::vector<BatchInput> read_batch_directory(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ParseError("batch path '" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<BatchInput> out;
    out.reserve(files.size());
    for (const auto& f : files) {
        BatchInput in;
        in.file = f.filename().string();
        try {
            in.record = read_knot_file(f);
        } catch (const Error& e) {
            in.error = e.what();
        }
        out.push_back(std::move(in));
    }
    return out;
}

} // namespace ribbon
