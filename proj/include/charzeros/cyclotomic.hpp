#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Cyclotomic polynomials and extraction of cyclotomic factors.
 *
 * Divisibility by Phi_d is decided exactly over Z.  Candidates are first
 * screened modulo the prime 2^61 - 1: Phi_d divides f mod p iff
 * f * prod_{q | d prime} (t^(d/q) - 1) vanishes modulo (t^d - 1), which costs
 * O(#terms + d) per candidate and never rejects a true factor.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "laurent.hpp"

namespace charzeros {

/// Phi_d, built by dividing t^d - 1 by Phi_e for every proper divisor e of d.
inline LaurentPoly cyclotomic(std::int64_t d) {
    if (d < 1) throw DomainError("cyclotomic: index must be positive");
    std::map<std::int64_t, LaurentPoly> known;
    for (std::int64_t e : nt::divisors(d)) {
        LaurentPoly p = LaurentPoly::binomial(e);
        for (const auto& [f, phi] : known) {
            if (e % f != 0) continue;
            auto q = p.exact_quotient(phi);
            if (!q) throw InexactDivision("cyclotomic: t^e - 1 not divisible by Phi_f");
            p = std::move(*q);
        }
        known.emplace(e, std::move(p));
    }
    return known.at(d);
}

/// f / Phi_d if Phi_d divides f, via Phi_d = prod_{e | d} (t^e - 1)^mu(d/e).
inline std::optional<LaurentPoly> divide_by_cyclotomic(const LaurentPoly& f, std::int64_t d) {
    std::vector<std::int64_t> up, down;
    for (std::int64_t e : nt::divisors(d)) {
        int mu = nt::mobius(d / e);
        if (mu == 1) down.push_back(e);
        if (mu == -1) up.push_back(e);
    }
    LaurentPoly g = f;
    for (std::int64_t e : up) g = g.times_binomial(e);
    for (std::int64_t e : down) {
        auto q = g.divided_by_binomial(e);
        if (!q) return std::nullopt;
        g = std::move(*q);
    }
    return g;
}

struct CycloFactor {
    std::int64_t index;
    int multiplicity;
    bool operator==(const CycloFactor&) const = default;
};

/// f = t^shift * prod Phi_d^mult * remainder.
struct CycloFactorization {
    Exponent shift = 0;
    std::vector<CycloFactor> factors;  // ascending index
    LaurentPoly remainder;

    bool remainder_is_unit() const { return remainder.is_constant() && abs(remainder.trailing_coeff()) == 1; }

    std::vector<std::int64_t> indices() const {
        std::vector<std::int64_t> out;
        for (const auto& f : factors) out.push_back(f.index);
        return out;
    }

    int multiplicity(std::int64_t d) const {
        for (const auto& f : factors)
            if (f.index == d) return f.multiplicity;
        return 0;
    }

    LaurentPoly reconstruct() const {
        LaurentPoly p = remainder.shifted(shift);
        for (const auto& f : factors) {
            LaurentPoly phi = cyclotomic(f.index);
            for (int k = 0; k < f.multiplicity; ++k) p *= phi;
        }
        return p;
    }

    bool operator==(const CycloFactorization&) const = default;
};

namespace detail {

inline constexpr std::uint64_t kFilterPrime = (std::uint64_t{1} << 61) - 1;

struct ModTerm {
    std::int64_t exp;
    std::uint64_t value;
};

inline std::vector<ModTerm> reduce_mod_filter_prime(const LaurentPoly& f) {
    std::vector<ModTerm> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        auto r = static_cast<std::uint64_t>(mpz_fdiv_ui(t.coeff.get_mpz_t(), kFilterPrime));
        if (r != 0) out.push_back({t.exp, r});
    }
    return out;
}

/// Necessary condition for Phi_d | f (f given by residues, exponents >= 0).
inline bool may_have_cyclotomic_factor(const std::vector<ModTerm>& f, std::int64_t d) {
    constexpr std::uint64_t p = kFilterPrime;
    std::vector<std::uint64_t> r(static_cast<std::size_t>(d), 0);
    for (const auto& t : f) {
        auto& slot = r[static_cast<std::size_t>(t.exp % d)];
        slot += t.value;
        if (slot >= p) slot -= p;
    }
    std::vector<std::uint64_t> next(r.size());
    for (std::int64_t q : nt::prime_divisors(d)) {
        const std::int64_t s = d / q;
        // next = r * (t^s - 1) mod (t^d - 1)
        for (std::int64_t i = 0; i < d; ++i) {
            std::uint64_t a = r[static_cast<std::size_t>(nt::mod(i - s, d))];
            std::uint64_t b = r[static_cast<std::size_t>(i)];
            next[static_cast<std::size_t>(i)] = a >= b ? a - b : a + p - b;
        }
        r.swap(next);
    }
    for (auto v : r)
        if (v != 0) return false;
    return true;
}

}  // namespace detail

/// Extract every cyclotomic factor of f with full multiplicity.
///
/// Candidate indices d are scanned in ascending order over all d with
/// phi(d) <= degree of what is left; the remainder therefore has no factor
/// Phi_d with phi(d) <= deg(remainder).
inline CycloFactorization cyclo_factor(const LaurentPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("cyclo_factor: zero polynomial");
    CycloFactorization out;
    out.shift = f.min_exponent();
    LaurentPoly g = f.shifted(-out.shift);
    Exponent degree = g.max_exponent();
    if (degree == 0) {
        out.remainder = std::move(g);
        return out;
    }
    const std::int64_t bound = nt::totient_search_bound(degree);
    const std::vector<std::int64_t> phi = nt::totient_table(bound);
    auto residues = detail::reduce_mod_filter_prime(g);
    for (std::int64_t d = 1; d <= bound && degree > 0; ++d) {
        if (phi[static_cast<std::size_t>(d)] > degree) continue;
        if (!detail::may_have_cyclotomic_factor(residues, d)) continue;
        int mult = 0;
        while (g.max_exponent() >= phi[static_cast<std::size_t>(d)]) {
            auto q = divide_by_cyclotomic(g, d);
            if (!q) break;
            g = std::move(*q);
            ++mult;
        }
        if (mult > 0) {
            out.factors.push_back({d, mult});
            degree = g.max_exponent();
            residues = detail::reduce_mod_filter_prime(g);
        }
    }
    out.remainder = std::move(g);
    return out;
}

}  // namespace charzeros
