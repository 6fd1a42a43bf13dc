#include "ribbon/exactla.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "ribbon/errors.hpp"
#include "exact_kernels.hpp"

namespace ribbon {

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

// Nonzero entry of least absolute value in d[t.., t..].
std::optional<Position> least_pivot(const IntMatrix& d, std::size_t t) {
    std::optional<Position> best;
    Integer best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Integer& v = d(i, j);
            if (v == 0) continue;
            Integer a = abs(v);
            if (!best || a < best_abs) {
                best = Position{i, j};
                best_abs = std::move(a);
                if (best_abs == 1) return best;
            }
        }
    return best;
}

// Reduce row t and column t against d(t, t); true if both are now clear.
bool clear_cross(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t t) {
    bool clear = true;
    const Integer pivot = d(t, t);
    Integer q;
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), pivot.get_mpz_t());
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clear = false;
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), pivot.get_mpz_t());
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clear = false;
    }
    return clear;
}

// A row below t holding an entry not divisible by d(t, t).
std::optional<std::size_t> indivisible_row(const IntMatrix& d, std::size_t t) {
    const Integer& pivot = d(t, t);
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
            if (!mpz_divisible_p(d(i, j).get_mpz_t(), pivot.get_mpz_t())) return i;
    return std::nullopt;
}

} // namespace

std::vector<Integer> SnfResult::diagonal() const {
    std::vector<Integer> out;
    const std::size_t n = std::min(D.rows(), D.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(D(i, i));
    return out;
}

std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    for (const auto& d : diagonal())
        if (d != 0) ++r;
    return r;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < n; ++t) {
        auto pivot = least_pivot(d, t);
        if (!pivot) break;
        for (;;) {
            d.swap_rows(t, pivot->row);
            u.swap_rows(t, pivot->row);
            d.swap_cols(t, pivot->col);
            v.swap_cols(t, pivot->col);
            if (!clear_cross(d, u, v, t)) {
                pivot = least_pivot(d, t);
                continue;
            }
            if (auto row = indivisible_row(d, t)) {
                // Pull the offending row into row t; the next pass leaves a
                // remainder smaller than the pivot.
                d.add_row_multiple(t, *row, 1);
                u.add_row_multiple(t, *row, 1);
                pivot = least_pivot(d, t);
                continue;
            }
            break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return SnfResult{std::move(u), std::move(d), std::move(v)};
}

Integer determinant(const IntMatrix& m) {
    if (!m.is_square())
        throw DimensionError("determinant of non-square " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    if (auto words = detail::to_words(m)) {
        try {
            return detail::to_integer(detail::bareiss_determinant(std::move(*words), m.rows()));
        } catch (const detail::Overflow&) {
        }
    }
    return detail::bareiss_determinant(detail::to_integers(m), m.rows());
}

Cokernel cokernel(const IntMatrix& m) {
    const SnfResult snf = smith_normal_form(m);
    Cokernel out;
    out.free_rank = m.rows() - snf.rank();
    for (const auto& d : snf.diagonal())
        if (d >= 2) out.torsion.push_back(d);
    return out;
}

Integer signature(const IntMatrix& q) {
    if (!q.is_square()) throw FormError("signature of a non-square matrix");
    if (!q.is_symmetric()) throw FormError("signature of a non-symmetric matrix");
    if (auto words = detail::to_words(q)) {
        try {
            return detail::congruence_signature(std::move(*words), q.rows());
        } catch (const detail::Overflow&) {
        }
    }
    return detail::congruence_signature(detail::to_integers(q), q.rows());
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    if (!a.is_square() || !b.is_square()) throw DimensionError("block_diag needs square blocks");
    const std::size_t n = a.rows(), m = b.rows();
    IntMatrix r(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) r(n + i, n + j) = b(i, j);
    return r;
}

} // namespace ribbon
