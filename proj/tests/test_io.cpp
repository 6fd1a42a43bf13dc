#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ribbon/errors.hpp"
#include "ribbon/io.hpp"
#include "support/generators.hpp"

using namespace ribbon;
using ribbon::testing::Rng;

TEST_CASE("parse_matrix_text") {
    CHECK(parse_matrix_text("[[2,4],[6,8]]") == IntMatrix{{2, 4}, {6, 8}});
    CHECK(parse_matrix_text(" [ [ \"2\" , -4 ] ,\n [+6, 8] ] ") == IntMatrix{{2, -4}, {6, 8}});
    CHECK(parse_matrix_text("[]") == IntMatrix());
    CHECK(parse_matrix_text("[[],[]]") == IntMatrix(2, 0));
    CHECK(parse_matrix_text("(2,4)") == IntMatrix::column({2, 4}));
    CHECK(parse_matrix_text("(1,0) (0,3)") == IntMatrix{{1, 0}, {0, 3}});
    CHECK(parse_matrix_text("(1,0),(0,3)") == IntMatrix{{1, 0}, {0, 3}});

    const IntMatrix big = parse_matrix_text("[[\"-123456789012345678901234567890\"]]");
    CHECK(big(0, 0) == Integer("-123456789012345678901234567890"));
}

TEST_CASE("parse_matrix_text reports line and column") {
    try {
        parse_matrix_text("[[1,2],\n [3]]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 2);
    }
    try {
        parse_matrix_text("[[1,x]]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_matrix_text("[[1,2]] junk"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text(""), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("(1,2) (3)"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("[[1,2]"), ParseError);
}

TEST_CASE("matrix JSON uses decimal strings") {
    IntMatrix m{{1, -2}, {0, 3}};
    m(1, 1) = Integer("99999999999999999999999");
    const Json j = matrix_to_json(m);
    CHECK(j.dump() == R"([["1","-2"],["0","99999999999999999999999"]])");
    CHECK(matrix_from_json(j) == m);
    CHECK(matrix_from_json(Json::parse("[[1,2],[3,4]]")) == IntMatrix{{1, 2}, {3, 4}});
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1.5"]])")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1"],["2","3"]])")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["-"]])")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"a":1})")), ParseError);
}

TEST_CASE("matrix text and JSON agree on random matrices") {
    Rng rng(97);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix m = testing::random_matrix(rng, static_cast<std::size_t>(testing::uniform(rng, 1, 5)),
                                                   static_cast<std::size_t>(testing::uniform(rng, 0, 5)), -1000, 1000);
        CHECK(parse_matrix_text(to_string(m)) == m);
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
}

TEST_CASE("knot records") {
    const KnotRecord a = record_from_json(Json::parse(R"({"name":"t","seifert":[["1","1"],["0","1"]]})"));
    CHECK(a.source() == KnotRecord::Source::SeifertMatrix);
    const KnotRecord b = record_from_json(Json::parse(R"({"braid":{"strands":3,"letters":[1,-2,1,-2]}})"));
    CHECK(b.source() == KnotRecord::Source::Braid);
    const KnotRecord c = record_from_json(Json::parse(R"({"braid":{"strands":2,"letters":"1 1 1"}})"));
    CHECK(c.braid->letters == std::vector<int>{1, 1, 1});
    const KnotRecord d = record_from_json(Json::parse(R"({"catalog":"poincare"})"));
    CHECK(d.source() == KnotRecord::Source::Catalog);
    const KnotRecord e = record_from_json(Json::parse(R"({"bounding_form":[["2","1"],["1","2"]]})"));
    CHECK(e.source() == KnotRecord::Source::FormOnly);

    CHECK_THROWS_AS(record_from_json(Json::parse(R"({"catalog":"trefoil","seifert":[]})")).source(),
                    ValidationError);
    CHECK_THROWS_AS(record_from_json(Json::parse(R"({"name":"x"})")).source(), ValidationError);
    CHECK_THROWS_AS(record_from_json(Json::parse(R"({"braid":{"letters":[1]}})")), ParseError);
    CHECK_THROWS_AS(record_from_json(Json::parse("[1]")), ParseError);
}

TEST_CASE("compute_invariants") {
    KnotRecord r;
    r.catalog = "trefoil";
    auto report = compute_invariants(r);
    CHECK(report.knot.name == "trefoil");
    CHECK(report.invariants.mu.value() == 2);
    CHECK(report.invariants.h1 == FiniteAbelianGroup::cyclic(3));
    CHECK_FALSE(report.doubling);

    r.catalog = "figure8";
    report = compute_invariants(r);
    CHECK(report.invariants.mu.value() == 0);
    CHECK(report.invariants.h1 == FiniteAbelianGroup::cyclic(5));
    CHECK_FALSE(report.doubling);

    r.catalog = "unknot";
    report = compute_invariants(r);
    CHECK(report.invariants.mu.value() == 0);
    CHECK(report.invariants.h1.is_trivial());
    CHECK(report.doubling);

    r.catalog = "poincare";
    report = compute_invariants(r);
    CHECK(report.invariants.route == TwoKnot::Route::EvenForm);
    CHECK(report.invariants.mu.value() == 8);

    KnotRecord bad;
    bad.seifert = IntMatrix{{1, 0}, {0, 1}};
    CHECK_THROWS_AS(compute_invariants(bad), NotAKnotError);
    KnotRecord odd;
    odd.bounding_form = IntMatrix{{1}};
    CHECK_THROWS_AS(compute_invariants(odd), FormError);
}

TEST_CASE("compute_obstruction") {
    KnotRecord t, f, u, p;
    t.catalog = "trefoil";
    f.catalog = "figure8";
    u.catalog = "unknot";
    p.catalog = "poincare";
    CHECK(compute_obstruction(t, std::nullopt).conclusion == Conclusion::ObstructedByMu);
    CHECK(compute_obstruction(f, std::nullopt).conclusion == Conclusion::ObstructedByTorsion);
    CHECK(compute_obstruction(u, u).conclusion == Conclusion::NoObstructionFound);
    const Verdict v = compute_obstruction(p, u);
    CHECK(v.conclusion == Conclusion::ObstructedByMu);
    CHECK(verdict_to_json(v).dump() ==
          R"({"conclusion":"ObstructedByMu","theorem_tag":"mu-invariant","mu":["8","0"],)"
          R"("explanation":"not ribbon-move equivalent: mu differs (8 vs 0 mod 16), and mu is preserved by ribbon-moves"})");
}

TEST_CASE("report records round-trip") {
    Rng rng(89);
    std::vector<KnotRecord> records;
    for (const auto& name : catalog_names()) {
        KnotRecord r;
        r.catalog = name;
        records.push_back(r);
    }
    for (int i = 0; i < 60; ++i) {
        KnotRecord r;
        r.name = "random" + std::to_string(i);
        if (i % 2)
            r.seifert = testing::random_valid_seifert(rng, 8);
        else
            r.braid = testing::random_knot_braid(rng, 4, 10);
        records.push_back(r);
    }
    for (const auto& r : records) {
        const Json out = report_to_json(compute_invariants(r));
        const Json again = report_to_json(compute_invariants(record_from_json(Json::parse(out.dump()))));
        CHECK(out == again);
    }
}

TEST_CASE("knot files") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ribbon_test_io";
    fs::create_directories(dir);
    {
        std::ofstream(dir / "knot.json") << R"({"seifert": [["1","1"],["0","1"]]})";
        std::ofstream(dir / "broken.json") << "{\n  \"seifert\": [[1,\n";
    }
    const KnotRecord k = read_knot_file(dir / "knot.json");
    CHECK(k.name == "knot");
    CHECK(k.seifert == IntMatrix{{1, 1}, {0, 1}});
    try {
        read_knot_file(dir / "broken.json");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() >= 2);
    }
    CHECK(knot_reference((dir / "knot.json").string()).seifert.has_value());
    CHECK(knot_reference("trefoil").catalog == "trefoil");
    fs::remove_all(dir);
}

TEST_CASE("snf rendering") {
    const SnfResult r = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
    CHECK(snf_to_text(r, false) == "D = diag(2,4)\n");
    const Json j = snf_to_json(r, true);
    CHECK(j["diagonal"] == Json::array({"2", "4"}));
    CHECK(matrix_from_json(j["U"]) * IntMatrix{{2, 4}, {6, 8}} * matrix_from_json(j["V"]) ==
          matrix_from_json(j["D"]));
}
