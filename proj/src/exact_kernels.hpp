#pragma once

// Elimination kernels shared by the machine-word fast path and the GMP
// path. The word path throws Overflow; callers then rerun on Integer.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ribbon/matrix.hpp"

namespace ribbon::detail {

struct Overflow {};

using Word = std::int64_t;

inline Word add(Word a, Word b) {
    Word r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline Word sub(Word a, Word b) {
    Word r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline Word mul(Word a, Word b) {
    Word r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline Word neg(Word a) { return sub(0, a); }
inline Word divexact(Word a, Word b) { return a / b; }
inline int sign(Word a) { return (a > 0) - (a < 0); }
inline int cmpabs(Word a, Word b) {
    const std::uint64_t x = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    const std::uint64_t y = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    return (x > y) - (x < y);
}
inline Word gcd_abs(Word a, Word b) {
    std::uint64_t x = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    std::uint64_t y = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (y) {
        x %= y;
        std::swap(x, y);
    }
    if (x > static_cast<std::uint64_t>(INT64_MAX)) throw Overflow{};
    return static_cast<Word>(x);
}

inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer neg(const Integer& a) { return -a; }
inline Integer divexact(const Integer& a, const Integer& b) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}
inline int sign(const Integer& a) { return sgn(a); }
inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
inline Integer gcd_abs(const Integer& a, const Integer& b) { return gcd(a, b); }

inline Integer to_integer(Word w) { return Integer(static_cast<long>(w)); }
inline Integer to_integer(const Integer& v) { return v; }

/// Entries as machine words, if they all fit.
inline std::optional<std::vector<Word>> to_words(const IntMatrix& m) {
    std::vector<Word> out;
    out.reserve(m.entries().size());
    for (const auto& v : m.entries()) {
        if (!v.fits_slong_p()) return std::nullopt;
        out.push_back(v.get_si());
    }
    return out;
}

inline std::vector<Integer> to_integers(const IntMatrix& m) { return m.entries(); }

/// Fraction-free Bareiss elimination on an n x n row-major array.
template <class T>
T bareiss_determinant(std::vector<T> a, std::size_t n) {
    if (n == 0) return T(1);
    auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t r = n;
        for (std::size_t i = k; i < n; ++i)
            if (sign(at(i, k)) != 0 && (r == n || cmpabs(at(i, k), at(r, k)) < 0)) r = i;
        if (r == n) return T(0);
        if (r != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = divexact(sub(mul(at(k, k), at(i, j)), mul(at(i, k), at(k, j))), prev);
            at(i, k) = T(0);
        }
        prev = at(k, k);
    }
    return negate ? neg(at(n - 1, n - 1)) : at(n - 1, n - 1);
}

/// Signature by congruence diagonalization. After pivot p at (k, k) the
/// basis e_i -> p e_i - a_ik e_k (i > k) splits off e_k and leaves the
/// block p (p a_ij - a_ik a_kj); the trailing block is then rescaled by a
/// positive content, which preserves the signature.
template <class T>
long congruence_signature(std::vector<T> a, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
    auto add_basis = [&](std::size_t k, std::size_t j) { // x_k -> x_k + x_j
        for (std::size_t c = 0; c < n; ++c) at(k, c) = add(at(k, c), at(j, c));
        for (std::size_t r = 0; r < n; ++r) at(r, k) = add(at(r, k), at(r, j));
    };
    auto negate_basis = [&](std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) at(j, c) = neg(at(j, c));
        for (std::size_t r = 0; r < n; ++r) at(r, j) = neg(at(r, j));
    };

    auto swap_basis = [&](std::size_t k, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(at(r, k), at(r, j));
    };

    long sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i)
            if (sign(at(i, i)) != 0 && (best == n || cmpabs(at(i, i), at(best, best)) < 0)) best = i;
        if (best != n && best != k) swap_basis(k, best);
        if (sign(at(k, k)) == 0) {
            std::size_t j = k + 1;
            while (j < n && sign(at(k, j)) == 0) ++j;
            if (j == n) continue; // null direction
            // New a_kk = 2 a_kj + a_jj; flip e_j so the two terms cannot cancel.
            if (sign(at(j, j)) != 0 && sign(at(j, j)) != sign(at(k, j))) negate_basis(j);
            add_basis(k, j);
        }
        const T p = at(k, k);
        const int s = sign(p);
        sig += s;
        T content(0);
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                T v = sub(mul(p, at(i, j)), mul(at(i, k), at(k, j)));
                if (s < 0) v = neg(v);
                content = gcd_abs(content, v);
                at(i, j) = std::move(v);
            }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                if (sign(content) > 0) at(i, j) = divexact(at(i, j), content);
                at(j, i) = at(i, j);
            }
        for (std::size_t i = k + 1; i < n; ++i) at(i, k) = at(k, i) = T(0);
    }
    return sig;
}

} // namespace ribbon::detail
