#include "ribbon/spinmu.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ribbon/errors.hpp"
#include "ribbon/exactla.hpp"

namespace ribbon {

Mu::Mu(const Integer& any) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), any.get_mpz_t(), 16);
    value_ = static_cast<int>(r.get_si());
}

std::string Mu::to_string() const { return std::to_string(value_) + " mod 16"; }

SeifertMatrix validate_seifert(IntMatrix s) {
    if (!s.is_square())
        throw DimensionError("Seifert matrix must be square, got " + std::to_string(s.rows()) + "x" +
                             std::to_string(s.cols()));
    const Integer d = determinant(s - s.transpose());
    if (abs(d) != 1)
        throw NotAKnotError("not a knot Seifert matrix: det(S - S^T) = " + d.get_str());
    return SeifertMatrix(std::move(s));
}

IntMatrix intersection_form(const SeifertMatrix& s) { return s.matrix() + s.matrix().transpose(); }

FiniteAbelianGroup branched_double_cover_h1(const SeifertMatrix& s) {
    PresentedGroup g = from_presentation(intersection_form(s));
    if (!g.is_finite()) throw std::logic_error("S + S^T singular for a validated Seifert matrix");
    return g.torsion;
}

namespace {

void require_odd_determinant(const Integer& det) {
    if (mpz_even_p(det.get_mpz_t()))
        throw SpinStructureError("spin structure not unique; recipe inapplicable (det = " + det.get_str() +
                                 ")");
}

/// det(q) mod 2 by elimination over GF(2) on packed rows.
bool determinant_is_odd(const IntMatrix& q) {
    const std::size_t n = q.rows(), words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(n * words, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (mpz_odd_p(q(i, j).get_mpz_t())) rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t w = k / 64;
        const std::uint64_t bit = std::uint64_t{1} << (k % 64);
        std::size_t r = k;
        while (r < n && !(rows[r * words + w] & bit)) ++r;
        if (r == n) return false;
        if (r != k)
            for (std::size_t c = 0; c < words; ++c) std::swap(rows[k * words + c], rows[r * words + c]);
        for (std::size_t i = k + 1; i < n; ++i)
            if (rows[i * words + w] & bit)
                for (std::size_t c = w; c < words; ++c) rows[i * words + c] ^= rows[k * words + c];
    }
    return true;
}

void require_even_form(const IntMatrix& q) {
    if (!q.is_symmetric()) throw FormError("bounding form must be square and symmetric");
    for (std::size_t i = 0; i < q.rows(); ++i)
        if (mpz_odd_p(q(i, i).get_mpz_t()))
            throw FormError("form not even: diagonal entry " + std::to_string(i) + " is " + q(i, i).get_str());
}

} // namespace

Mu mu_two_twist_spin(const SeifertMatrix& s) {
    const IntMatrix q = intersection_form(s);
    if (!determinant_is_odd(q)) require_odd_determinant(determinant(q));
    return Mu(signature(q));
}

Mu mu_from_even_form(const IntMatrix& q) {
    require_even_form(q);
    if (!determinant_is_odd(q)) require_odd_determinant(determinant(q));
    return Mu(signature(q));
}

Mu mu_boundary_link_sum(std::span<const SeifertMatrix> components) {
    Mu total;
    IntMatrix whole;
    for (const auto& s : components) {
        total = total + mu_two_twist_spin(s);
        whole = block_diag(whole, intersection_form(s));
    }
    if (mu_from_even_form(whole) != total)
        throw std::logic_error("mu of the block-sum form disagrees with the component sum");
    return total;
}

TwoKnot two_twist_spin(const SeifertMatrix& s) {
    TwoKnot k;
    k.route = TwoKnot::Route::TwoTwistSpin;
    k.form = intersection_form(s);
    k.determinant = determinant(k.form);
    require_odd_determinant(k.determinant);
    k.signature = signature(k.form);
    k.mu = Mu(k.signature);
    k.h1 = branched_double_cover_h1(s);
    return k;
}

TwoKnot from_even_form(const IntMatrix& q) {
    require_even_form(q);
    TwoKnot k;
    k.route = TwoKnot::Route::EvenForm;
    k.form = q;
    k.determinant = determinant(q);
    require_odd_determinant(k.determinant);
    k.signature = signature(q);
    k.mu = Mu(k.signature);
    k.h1 = from_presentation(q).torsion;
    return k;
}

} // namespace ribbon
