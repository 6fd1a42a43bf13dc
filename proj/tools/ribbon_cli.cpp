// ribbon: ribbon-move obstructions for 2-knots from Seifert matrices.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ribbon/alink.hpp"
#include "ribbon/batch.hpp"
#include "ribbon/braid.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/exactla.hpp"
#include "ribbon/io.hpp"
#include "ribbon/record.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ribbon::ParseError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ribbon::IntMatrix matrix_argument(const std::string& inline_text, const std::string& file) {
    if (!file.empty()) return ribbon::parse_matrix_text(slurp(file));
    if (inline_text.empty()) throw ribbon::ParseError("no matrix given");
    return ribbon::parse_matrix_text(inline_text);
}

struct InvariantsArgs {
    std::string knot;
    std::string seifert;
    std::string braid;
    std::size_t strands = 0;
    std::string form;
    std::string batch;
    bool serial = false;
    bool json = false;
};

ribbon::KnotRecord record_from_args(const InvariantsArgs& a) {
    ribbon::KnotRecord r;
    if (!a.knot.empty()) {
        r = ribbon::knot_reference(a.knot);
    } else if (!a.seifert.empty()) {
        r.name = "seifert";
        r.seifert = ribbon::parse_matrix_text(a.seifert);
    } else if (!a.braid.empty()) {
        r.name = "braid";
        r.braid = ribbon::parse_braid(a.braid, a.strands);
    } else {
        r.name = "form";
    }
    if (!a.form.empty()) r.bounding_form = ribbon::parse_matrix_text(a.form);
    return r;
}

int run_batch(const InvariantsArgs& a) {
    const auto inputs = ribbon::read_batch_directory(a.batch);
    std::vector<ribbon::KnotRecord> records;
    for (const auto& in : inputs)
        if (in.record) records.push_back(*in.record);
    const auto results =
        ribbon::evaluate_batch(records, a.serial ? ribbon::Execution::Serial : ribbon::Execution::Parallel);

    int status = 0;
    std::size_t next = 0;
    for (const auto& in : inputs) {
        ribbon::Json line;
        std::string text;
        if (!in.record) {
            line = {{"file", in.file}, {"error", in.error}};
            text = in.file + ": error: " + in.error;
            status = kExitParse;
        } else {
            const auto& r = results[next++];
            if (r.report) {
                line = ribbon::report_to_json(*r.report);
                line["file"] = in.file;
                text = in.file + ": " + r.report->knot.name + "  mu=" + r.report->invariants.mu.to_string() +
                       "  H1=" + r.report->invariants.h1.to_string() +
                       "  doubling=" + (r.report->doubling ? "yes" : "no");
            } else {
                line = {{"file", in.file}, {"name", in.record->name}, {"error", r.error}};
                text = in.file + ": error: " + r.error;
                status = std::max(status, r.parse_error ? kExitParse : kExitValidation);
            }
        }
        std::cout << (a.json ? line.dump() : text) << '\n';
    }
    return status;
}

int run_invariants(const InvariantsArgs& a) {
    if (!a.batch.empty()) return run_batch(a);
    const auto report = ribbon::compute_invariants(record_from_args(a));
    if (a.json)
        std::cout << ribbon::report_to_json(report).dump() << '\n';
    else
        std::cout << ribbon::report_to_text(report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ribbon-move obstructions for 2-knots (mu-invariant mod 16, G ⊕ G torsion test)"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    InvariantsArgs inv;
    auto* invariants = app.add_subcommand("invariants", "mu, signature, determinant, H1 and doubling test");
    invariants->add_option("knot", inv.knot, "catalog name or knot file");
    invariants->add_option("--seifert", inv.seifert, "Seifert matrix, e.g. [[1,1],[0,1]]");
    invariants->add_option("--braid", inv.braid, "braid letters, e.g. \"1 1 1\"");
    invariants->add_option("--strands", inv.strands, "strand count for --braid");
    invariants->add_option("--form", inv.form, "even bounding form (overrides the 2-twist-spin route)");
    invariants->add_option("--batch", inv.batch, "directory of knot files; one record per line");
    invariants->add_flag("--serial", inv.serial, "evaluate the batch on one thread");
    invariants->add_flag("--json", json, "machine-readable output");

    std::string knot_a, knot_b;
    auto* obstruct = app.add_subcommand("obstruct", "test two 2-knots (or one against the trivial 2-knot)");
    obstruct->add_option("a", knot_a, "catalog name or knot file")->required();
    obstruct->add_option("b", knot_b, "catalog name or knot file (default: trivial 2-knot)");
    obstruct->add_flag("--json", json, "machine-readable output");

    std::string matrix_text, matrix_file;
    bool transforms = false;
    auto* snf = app.add_subcommand("snf", "Smith normal form");
    snf->add_option("matrix", matrix_text, "matrix text, e.g. [[2,4],[6,8]]");
    snf->add_option("--file", matrix_file, "read the matrix from a file");
    snf->add_flag("--transforms", transforms, "also print U and V");
    snf->add_flag("--json", json, "machine-readable output");

    auto* alink = app.add_subcommand("alink", "alinking number of an induced map H^1 -> Z^2");
    alink->add_option("matrix", matrix_text, "2 x c matrix or columns, e.g. (2,4)");
    alink->add_option("--file", matrix_file, "read the matrix from a file");
    alink->add_flag("--json", json, "machine-readable output");

    std::string letters;
    std::size_t strands = 0;
    auto* braid = app.add_subcommand("braid", "Seifert matrix of a braid closure");
    braid->add_option("letters", letters, "signed generator indices, e.g. \"1 -2 1 -2\"")->required();
    braid->add_option("--strands", strands, "number of strands")->required();
    braid->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }
    inv.json = json;

    try {
        if (*invariants) return run_invariants(inv);

        if (*obstruct) {
            const auto a = ribbon::knot_reference(knot_a);
            std::optional<ribbon::KnotRecord> b;
            if (!knot_b.empty()) b = ribbon::knot_reference(knot_b);
            const auto verdict = ribbon::compute_obstruction(a, b);
            if (json)
                std::cout << ribbon::verdict_to_json(verdict).dump() << '\n';
            else
                std::cout << ribbon::verdict_to_text(verdict);
            return 0;
        }

        if (*snf) {
            const auto result = ribbon::smith_normal_form(matrix_argument(matrix_text, matrix_file));
            if (json)
                std::cout << ribbon::snf_to_json(result, transforms).dump() << '\n';
            else
                std::cout << ribbon::snf_to_text(result, transforms);
            return 0;
        }

        if (*alink) {
            const ribbon::InducedMap iota(matrix_argument(matrix_text, matrix_file));
            const auto v = ribbon::alinking(iota);
            const int v2 = ribbon::mod2_alinking(iota);
            if (json)
                std::cout << ribbon::Json{{"alinking", v.get_str()}, {"mod2", std::to_string(v2)}}.dump() << '\n';
            else
                std::cout << "v = " << v.get_str() << "\nv mod 2 = " << v2 << '\n';
            return 0;
        }

        if (*braid) {
            ribbon::KnotRecord r;
            r.name = "braid";
            r.braid = ribbon::parse_braid(letters, strands);
            const auto report = ribbon::compute_invariants(r);
            if (json)
                std::cout << ribbon::report_to_json(report).dump() << '\n';
            else
                std::cout << ribbon::report_to_text(report);
            return 0;
        }
    } catch (const ribbon::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ribbon::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
