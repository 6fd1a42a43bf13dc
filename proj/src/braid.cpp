#include "ribbon/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "ribbon/errors.hpp"
#include "ribbon/exactla.hpp"

namespace ribbon {

void BraidWord::validate() const {
    if (strands < 1) throw ValidationError("braid needs at least one strand");
    for (int k : letters)
        if (k == 0 || static_cast<std::size_t>(std::abs(k)) >= strands)
            throw ValidationError("braid letter " + std::to_string(k) + " out of range for " +
                                  std::to_string(strands) + " strands");
}

std::size_t BraidWord::closure_components() const {
    validate();
    std::vector<std::size_t> perm(strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int k : letters) {
        const std::size_t i = static_cast<std::size_t>(std::abs(k)) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    std::vector<bool> seen(strands, false);
    std::size_t cycles = 0;
    for (std::size_t s = 0; s < strands; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t t = s; !seen[t]; t = perm[t]) seen[t] = true;
    }
    return cycles;
}

BraidWord parse_braid(std::string_view text, std::size_t strands) {
    BraidWord w;
    w.strands = strands;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != ',') ++end;
        const std::string_view token = text.substr(pos, end - pos);
        const char* first = token.data();
        if (!token.empty() && token.front() == '+') ++first;
        int value = 0;
        auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw ParseError("bad braid letter '" + std::string(token) + "'", 1, pos + 1);
        w.letters.push_back(value);
        pos = end;
    }
    w.validate();
    return w;
}

namespace {

bool cancel_inverse_pairs(std::vector<int>& letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int k : letters) {
        if (!out.empty() && out.back() == -k)
            out.pop_back();
        else
            out.push_back(k);
    }
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
        ++lo;
        --hi;
    }
    const bool changed = hi - lo != letters.size();
    letters.assign(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
    return changed;
}

std::size_t occurrences(const std::vector<int>& letters, int generator) {
    return static_cast<std::size_t>(
        std::count_if(letters.begin(), letters.end(), [&](int k) { return std::abs(k) == generator; }));
}

bool destabilize(BraidWord& w) {
    if (w.strands < 2) return false;
    const int top = static_cast<int>(w.strands) - 1;
    if (occurrences(w.letters, top) == 1) {
        std::erase_if(w.letters, [&](int k) { return std::abs(k) == top; });
        --w.strands;
        return true;
    }
    if (occurrences(w.letters, 1) == 1) {
        std::erase_if(w.letters, [](int k) { return std::abs(k) == 1; });
        for (int& k : w.letters) k += k > 0 ? -1 : 1;
        --w.strands;
        return true;
    }
    return false;
}

int sign(int v) { return (v > 0) - (v < 0); }

} // namespace

BraidWord reduce(BraidWord w) {
    w.validate();
    while (cancel_inverse_pairs(w.letters) || destabilize(w)) {
    }
    return w;
}

SeifertMatrix seifert_matrix_from_braid(const BraidWord& word) {
    const std::size_t components = word.closure_components();
    if (components != 1)
        throw NotAKnotError("not a knot: braid closure has " + std::to_string(components) + " components");
    const BraidWord w = reduce(word);
    const auto& x = w.letters;
    const std::size_t m = x.size();

    // One loop per consecutive pair (p, next[p]) of same-generator letters:
    // up one band, down the next.
    std::vector<std::size_t> start, next;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q)
            if (std::abs(x[q]) == std::abs(x[p])) {
                start.push_back(p);
                next.push_back(q);
                break;
            }

    const std::size_t n = start.size();
    IntMatrix s(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t p = start[a], q = next[a];
        s(a, a) = -sign(x[p] + x[q]);
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::size_t r = start[b], t = next[b];
            if (q > t || q < r) continue; // nested or disjoint
            if (q == r) {
                // Consecutive loops on the same generator share band q.
                if (x[r] > 0)
                    s(b, a) = 1;
                else
                    s(a, b) = -1;
                continue;
            }
            const int gap = std::abs(x[p]) - std::abs(x[r]);
            if (gap == 1)
                s(b, a) = -1;
            else if (gap == -1)
                s(a, b) = 1;
        }
    }
    return validate_seifert(std::move(s));
}

Integer alexander_at(const SeifertMatrix& s, const Integer& t) {
    return determinant(s.matrix() - t * s.matrix().transpose());
}

IntMatrix e8_form() {
    // Even unimodular positive definite lattice, Dynkin diagram labels
    // 0-1-2-3-4-5-6 with 7 attached to 4.
    IntMatrix q(8, 8);
    for (std::size_t i = 0; i < 8; ++i) q(i, i) = 2;
    auto link = [&](std::size_t a, std::size_t b) { q(a, b) = q(b, a) = -1; };
    for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
    link(4, 7);
    return q;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    c.push_back({"unknot", "trivial knot; its spins are the trivial 2-knot", SeifertMatrix{},
                 BraidWord{1, {}}, std::nullopt});
    c.push_back({"trefoil", "trefoil knot; signature(S + S^T) = +2", validate_seifert(IntMatrix{{1, 1}, {0, 1}}),
                 BraidWord{2, {-1, -1, -1}}, std::nullopt});
    c.push_back({"figure8", "figure-eight knot", validate_seifert(IntMatrix{{1, 1}, {0, -1}}),
                 BraidWord{3, {1, -2, 1, -2}}, std::nullopt});
    c.push_back({"poincare",
                 "5-twist-spun trefoil; Seifert hypersurface is the punctured Poincare sphere, bounding E8",
                 validate_seifert(IntMatrix{{1, 1}, {0, 1}}), BraidWord{2, {-1, -1, -1}}, e8_form()});
    return c;
}

} // namespace

const CatalogEntry& catalog(std::string_view name) {
    static const std::vector<CatalogEntry> entries = build_catalog();
    for (const auto& e : entries)
        if (e.name == name) return e;
    std::string names;
    for (const auto& e : entries) names += (names.empty() ? "" : ", ") + e.name;
    throw LookupError("unknown catalog entry '" + std::string(name) + "'; available: " + names);
}

std::vector<std::string> catalog_names() { return {"unknot", "trefoil", "figure8", "poincare"}; }

} // namespace ribbon
