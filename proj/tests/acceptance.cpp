// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles/minors.hpp"
#include "oracles/sturm.hpp"
#include "ribbon/abelian.hpp"
#include "ribbon/alink.hpp"
#include "ribbon/braid.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/exactla.hpp"
#include "ribbon/obstruct.hpp"
#include "ribbon/spinmu.hpp"
#include "support/generators.hpp"

using namespace ribbon;
using ribbon::testing::Rng;
using ribbon::testing::uniform;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

const IntMatrix kTrefoil{{1, 1}, {0, 1}};
const IntMatrix kFigure8{{1, 1}, {0, -1}};

Outcome mu_regression() {
    Outcome o;
    o.require(mu_two_twist_spin(validate_seifert(kTrefoil)).value() == 2, "trefoil mu != 2");
    o.require(mu_two_twist_spin(validate_seifert(kFigure8)).value() == 0, "figure-eight mu != 0");
    o.require(oracle::sturm_signature(e8_form()) == 8, "E8 input is not signature 8");
    o.require(mu_from_even_form(e8_form()).value() == 8, "E8 mu != 8");
    o.detail = o.pass ? "trefoil 2, figure-eight 0, E8 8" : o.detail;
    return o;
}

Outcome homology_regression() {
    Outcome o;
    const auto t = branched_double_cover_h1(validate_seifert(kTrefoil));
    const auto f = branched_double_cover_h1(validate_seifert(kFigure8));
    o.require(t.invariant_factors() == std::vector<Integer>{3}, "trefoil H1 = " + t.to_string());
    o.require(f.invariant_factors() == std::vector<Integer>{5}, "figure-eight H1 = " + f.to_string());
    if (o.pass) o.detail = "trefoil " + t.to_string() + ", figure-eight " + f.to_string();
    return o;
}

Outcome corollaries() {
    Outcome o;
    const Verdict t = obstruct_ribbon_trivial(validate_seifert(kTrefoil));
    o.require(t.conclusion == Conclusion::ObstructedByMu && t.mu_witness->first.value() == 2 &&
                  t.mu_witness->second.value() == 0,
              "trefoil spin: " + std::string(to_string(t.conclusion)));
    const Verdict f = obstruct_ribbon_trivial(validate_seifert(kFigure8));
    o.require(f.conclusion == Conclusion::ObstructedByTorsion && f.torsion_witness &&
                  *f.torsion_witness == FiniteAbelianGroup::cyclic(5),
              "figure-eight spin: " + std::string(to_string(f.conclusion)));
    const Verdict p = obstruct_ribbon_equivalent(from_even_form(e8_form()), two_twist_spin(SeifertMatrix{}));
    o.require(p.conclusion == Conclusion::ObstructedByMu && p.mu_witness->first.value() == 8 &&
                  p.mu_witness->second.value() == 0,
              "5-twist-spun trefoil vs unknot: " + std::string(to_string(p.conclusion)));
    if (o.pass) o.detail = "ObstructedByMu(2 vs 0), ObstructedByTorsion(Z5), ObstructedByMu(8 vs 0)";
    return o;
}

Outcome snf_properties() {
    Outcome o;
    Rng rng(1004);
    const int cases = 1000;
    for (int k = 0; k < cases && o.pass; ++k) {
        const auto rows = static_cast<std::size_t>(uniform(rng, 1, 8));
        const auto cols = static_cast<std::size_t>(uniform(rng, 1, 8));
        const IntMatrix m = k % 5 == 0 ? testing::random_sparse_matrix(rng, rows, cols, -50, 50)
                                       : testing::random_matrix(rng, rows, cols, -50, 50);
        const SnfResult r = smith_normal_form(m);
        const std::string tag = " for " + to_string(m);
        o.require(r.U * m * r.V == r.D, "U M V != D" + tag);
        o.require(abs(oracle::cofactor_determinant(r.U)) == 1, "U not unimodular" + tag);
        o.require(abs(oracle::cofactor_determinant(r.V)) == 1, "V not unimodular" + tag);
        for (std::size_t i = 0; i < r.D.rows(); ++i)
            for (std::size_t j = 0; j < r.D.cols(); ++j)
                if (i != j) o.require(r.D(i, j) == 0, "D not diagonal" + tag);
        const auto d = r.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            o.require(d[i] >= 0 && mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()),
                      "divisibility chain broken" + tag);
    }
    if (o.pass) o.detail = std::to_string(cases) + "/" + std::to_string(cases) + " matrices up to 8x8";
    return o;
}

Outcome signature_oracle() {
    Outcome o;
    Rng rng(1005);
    const int cases = 600;
    for (int k = 0; k < cases && o.pass; ++k) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
        IntMatrix q = testing::random_symmetric(rng, n, -6, 6);
        if (k % 5 == 0)
            for (std::size_t i = 0; i < n; ++i) q(i, i) = 0;
        if (k % 7 == 0) q = testing::random_sparse_matrix(rng, n, n, -3, 3), q = q + q.transpose();
        o.require(signature(q) == oracle::sturm_signature(q), "disagreement on " + to_string(q));
    }
    if (o.pass) o.detail = std::to_string(cases) + "/" + std::to_string(cases) + " symmetric matrices up to 6x6";
    return o;
}

Outcome doubling_suite() {
    Outcome o;
    Rng rng(1006);
    const int cases = 500;
    auto group = [&](std::size_t len, long max) {
        return FiniteAbelianGroup::from_orders(testing::random_group_orders(rng, len, max));
    };
    for (int k = 0; k < cases && o.pass; ++k) {
        const auto g = group(5, 64);
        const auto half = is_double(direct_sum(g, g));
        o.require(half && is_isomorphic(*half, g), "is_double(G ⊕ G) failed for G = " + g.to_string());
    }
    int combined = 0;
    for (int k = 0; k < cases && o.pass; ++k) {
        // A ⊕ B and B ⊕ C are doubles exactly when A, B, C share the same
        // odd-multiplicity part X.
        const auto x = group(3, 32);
        const auto a = direct_sum(x, [&] { auto r = group(2, 32); return direct_sum(r, r); }());
        const auto b = direct_sum(x, [&] { auto r = group(2, 32); return direct_sum(r, r); }());
        const auto c = direct_sum(x, [&] { auto r = group(2, 32); return direct_sum(r, r); }());
        const auto p = combine_doubles(a, b, c);
        o.require(is_isomorphic(direct_sum(a, c), direct_sum(p, p)),
                  "A ⊕ C != P ⊕ P for A = " + a.to_string() + ", C = " + c.to_string());
        ++combined;
    }
    for (int k = 0; k < cases && o.pass; ++k) {
        const auto a = group(3, 16), b = group(3, 16), c = group(3, 16);
        try {
            const auto p = combine_doubles(a, b, c);
            o.require(is_isomorphic(direct_sum(a, c), direct_sum(p, p)), "A ⊕ C != P ⊕ P on a random triple");
            ++combined;
        } catch (const PreconditionError&) {
            o.require(!is_double(direct_sum(a, b)) || !is_double(direct_sum(b, c)),
                      "precondition error although both hypotheses hold");
        }
    }
    if (o.pass)
        o.detail = std::to_string(cases) + " doublings, " + std::to_string(combined) + " combined triples";
    return o;
}

std::vector<IntMatrix> seifert_corpus() {
    Rng rng(1007);
    std::vector<IntMatrix> out;
    for (int k = 0; k < 500; ++k) out.push_back(testing::random_valid_seifert(rng, 8));
    return out;
}

Outcome parity_theorem(const std::vector<IntMatrix>& corpus) {
    Outcome o;
    for (const auto& raw : corpus) {
        const IntMatrix q = intersection_form(validate_seifert(raw));
        o.require(mpz_odd_p(determinant(q).get_mpz_t()) != 0, "even det(S + S^T) for " + to_string(raw));
        for (std::size_t i = 0; i < q.rows(); ++i)
            o.require(mpz_even_p(q(i, i).get_mpz_t()) != 0, "odd diagonal for " + to_string(raw));
        if (!o.pass) break;
    }
    if (o.pass) o.detail = std::to_string(corpus.size()) + "/" + std::to_string(corpus.size()) + " matrices";
    return o;
}

Outcome additivity(const std::vector<IntMatrix>& corpus) {
    Outcome o;
    std::vector<IntMatrix> forms;
    std::vector<Mu> mus;
    for (const auto& raw : corpus) {
        forms.push_back(intersection_form(validate_seifert(raw)));
        mus.push_back(mu_from_even_form(forms.back()));
    }
    // Row i of the pair triangle is independent of every other row.
    const auto n = static_cast<std::ptrdiff_t>(forms.size());
    std::vector<std::ptrdiff_t> first_bad(forms.size(), -1);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        for (std::ptrdiff_t j = i; j < n; ++j)
            if (mu_from_even_form(block_diag(forms[i], forms[j])) != mus[i] + mus[j]) {
                first_bad[i] = j;
                break;
            }
    for (std::size_t i = 0; i < forms.size(); ++i)
        o.require(first_bad[i] < 0, "pair (" + std::to_string(i) + ", " + std::to_string(first_bad[i]) + ")");
    const std::size_t pairs = forms.size() * (forms.size() + 1) / 2;
    if (o.pass) o.detail = std::to_string(pairs) + " pairs";
    return o;
}

Outcome braid_cross_check() {
    Outcome o;
    auto compare = [&](const BraidWord& w, const char* name) {
        const SeifertMatrix from_braid = seifert_matrix_from_braid(w);
        const SeifertMatrix reference = catalog(name).seifert;
        const IntMatrix qb = intersection_form(from_braid), qr = intersection_form(reference);
        o.require(abs(determinant(qb)) == abs(determinant(qr)), std::string(name) + ": |det| differs");
        o.require(abs(signature(qb)) == abs(signature(qr)), std::string(name) + ": |signature| differs");
        o.require(branched_double_cover_h1(from_braid) == branched_double_cover_h1(reference),
                  std::string(name) + ": torsion differs");
    };
    compare(BraidWord{2, {1, 1, 1}}, "trefoil");
    compare(BraidWord{3, {1, -2, 1, -2}}, "figure8");
    if (o.pass) o.detail = "trefoil |det| 3 |σ| 2 Z3; figure-eight |det| 5 σ 0 Z5";
    return o;
}

Outcome alinking_suite() {
    Outcome o;
    Rng rng(1010);
    struct Case {
        IntMatrix m;
        long want;
    };
    const std::vector<Case> cases{{IntMatrix::zero(2, 1), 0}, {IntMatrix::column({1, 0}), 1}, {IntMatrix::column({2, 4}), 2}};
    int checks = 0;
    for (const auto& c : cases) {
        o.require(alinking(InducedMap(c.m)) == c.want, "alinking of " + to_string(c.m));
        for (int k = 0; k < 50; ++k) {
            const IntMatrix moved = testing::random_unimodular(rng, 2) * c.m * testing::random_unimodular(rng, c.m.cols());
            o.require(alinking(InducedMap(moved)) == c.want, "not invariant on " + to_string(moved));
            ++checks;
        }
    }
    o.require(alinking(InducedMap(IntMatrix(2, 0))) == 0, "empty map");
    if (o.pass) o.detail = "0, 1, 2 plus " + std::to_string(checks) + " basis changes";
    return o;
}

} // namespace

int main() {
    const auto corpus = seifert_corpus();
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"mu regression", mu_regression},
        {"homology regression", homology_regression},
        {"corollary reproduction", corollaries},
        {"SNF property suite", snf_properties},
        {"signature vs Sturm oracle", signature_oracle},
        {"doubling and combine suite", doubling_suite},
        {"parity theorem", [&] { return parity_theorem(corpus); }},
        {"additivity over block sums", [&] { return additivity(corpus); }},
        {"braid cross-check", braid_cross_check},
        {"alinking", alinking_suite},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d %-28s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
        failures += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
