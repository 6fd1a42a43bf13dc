#include "ribbon/abelian.hpp"

#include <algorithm>
#include <sstream>

#include "ribbon/errors.hpp"
#include "ribbon/exactla.hpp"

namespace ribbon {

namespace {

// Chain normalization: (a_i, a_j) -> (gcd, lcm) pairwise leaves
// a_1 | a_2 | ... ; 1s are dropped.
std::vector<Integer> normalize_chain(std::vector<Integer> v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            Integer g = gcd(v[i], v[j]);
            Integer l = lcm(v[i], v[j]);
            v[i] = std::move(g);
            v[j] = std::move(l);
        }
    std::erase_if(v, [](const Integer& d) { return d == 1; });
    return v;
}

Integer pollard_brent(const Integer& n, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Integer y = seed % n, c = (seed * 7 + 1) % n, g = 1, r = 1, q = 1, x, ys;
    const unsigned long m = 64;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1) {
        x = y;
        for (Integer i = 0; i < r; ++i) y = f(y);
        Integer k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < m && k + i < r; ++i) {
                y = f(y);
                q = (q * abs(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

void split(const Integer& n, std::vector<Integer>& primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        primes.push_back(n);
        return;
    }
    Integer d = n;
    for (unsigned long seed = 2; d == n; ++seed) d = pollard_brent(n, seed);
    split(d, primes);
    split(n / d, primes);
}

} // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
    if (n <= 0) throw ValidationError("factorize needs a positive integer, got " + n.get_str());
    std::vector<Integer> primes;
    Integer rest = n;
    for (unsigned long p = 2; p < 1000 && rest > 1; ++p) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            primes.emplace_back(p);
            rest /= p;
        }
    }
    split(rest, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, unsigned>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

FiniteAbelianGroup FiniteAbelianGroup::from_orders(std::vector<Integer> cyclic_orders) {
    for (const auto& d : cyclic_orders)
        if (d <= 0) throw ValidationError("cyclic factor order must be positive, got " + d.get_str());
    FiniteAbelianGroup g;
    g.factors_ = normalize_chain(std::move(cyclic_orders));
    return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_elementary_divisors(const ElementaryDivisors& ed) {
    // Per prime, exponents sorted descending; the i-th largest invariant
    // factor collects the i-th largest power of every prime.
    std::map<Integer, std::vector<unsigned>> by_prime;
    for (const auto& [pp, mult] : ed) {
        if (pp.second == 0 || mult == 0) continue;
        for (std::size_t i = 0; i < mult; ++i) by_prime[pp.first].push_back(pp.second);
    }
    std::size_t length = 0;
    for (auto& [p, exps] : by_prime) {
        std::sort(exps.rbegin(), exps.rend());
        length = std::max(length, exps.size());
    }
    std::vector<Integer> factors(length, Integer(1));
    for (const auto& [p, exps] : by_prime)
        for (std::size_t i = 0; i < exps.size(); ++i) {
            Integer pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), exps[i]);
            factors[length - 1 - i] *= pk;
        }
    FiniteAbelianGroup g;
    g.factors_ = std::move(factors);
    return g;
}

Integer FiniteAbelianGroup::order() const {
    Integer n = 1;
    for (const auto& d : factors_) n *= d;
    return n;
}

ElementaryDivisors FiniteAbelianGroup::elementary_divisors() const {
    ElementaryDivisors ed;
    for (const auto& d : factors_)
        for (const auto& [p, k] : factorize(d)) ++ed[{p, k}];
    return ed;
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " ⊕ ";
        os << 'Z' << factors_[i].get_str();
    }
    return os.str();
}

PresentedGroup from_presentation(const IntMatrix& m) {
    Cokernel c = cokernel(m);
    PresentedGroup out;
    out.free_rank = c.free_rank;
    out.torsion = FiniteAbelianGroup::from_orders(std::move(c.torsion));
    return out;
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h) {
    std::vector<Integer> all = g.invariant_factors();
    all.insert(all.end(), h.invariant_factors().begin(), h.invariant_factors().end());
    return FiniteAbelianGroup::from_orders(std::move(all));
}

bool is_isomorphic(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h) { return g == h; }

std::optional<FiniteAbelianGroup> is_double(const FiniteAbelianGroup& g) {
    // Every elementary divisor has even multiplicity exactly when the
    // invariant-factor chain pairs off into equal neighbours.
    const auto& f = g.invariant_factors();
    if (f.size() % 2 != 0) return std::nullopt;
    std::vector<Integer> half;
    half.reserve(f.size() / 2);
    for (std::size_t i = 0; i < f.size(); i += 2) {
        if (f[i] != f[i + 1]) return std::nullopt;
        half.push_back(f[i]);
    }
    return FiniteAbelianGroup::from_orders(std::move(half));
}

FiniteAbelianGroup combine_doubles(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b,
                                   const FiniteAbelianGroup& c) {
    if (!is_double(direct_sum(a, b)))
        throw PreconditionError("A ⊕ B = " + direct_sum(a, b).to_string() + " is not of the form G ⊕ G");
    if (!is_double(direct_sum(b, c)))
        throw PreconditionError("B ⊕ C = " + direct_sum(b, c).to_string() + " is not of the form G ⊕ G");

    ElementaryDivisors sum = a.elementary_divisors();
    for (const auto& [pp, mult] : c.elementary_divisors()) sum[pp] += mult;
    ElementaryDivisors half;
    for (const auto& [pp, mult] : sum) {
        if (mult % 2 != 0)
            throw std::logic_error("odd multiplicity in A ⊕ C despite doubled hypotheses");
        half[pp] = mult / 2;
    }
    return FiniteAbelianGroup::from_elementary_divisors(half);
}

} // namespace ribbon
