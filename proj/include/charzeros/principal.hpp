#pragma once

/**
 * @file principal.hpp
 * @brief Irreducible characters restricted to the principal one-parameter subgroup.
 *
 * For f = 2 rho^vee and a dominant weight lambda,
 *
 *   chi_lambda(f(t)) = t^-<lambda, 2 rho^vee> * prod_{alpha > 0} (t^(2 n'_alpha) - 1) / (t^(2 n_alpha) - 1)
 *
 * with n'_alpha = <lambda + rho, alpha^vee> and n_alpha = <rho, alpha^vee>.
 * The quotient is a Laurent polynomial whose zeros are all roots of unity.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "rootsys.hpp"

namespace charzeros {

struct PrincipalCharacter {
    CartanType type;
    DominantWeight weight;
    IntVec numerator_exponents;    // <lambda + rho, alpha^vee>
    IntVec denominator_exponents;  // <rho, alpha^vee>
    std::int64_t shift = 0;        // <lambda, 2 rho^vee>
    LaurentPoly poly_t;
    bool epsilon_trivial = false;

    /// chi in the variable u = t^2; only defined when epsilon is trivial.
    std::optional<LaurentPoly> poly_u() const {
        if (!epsilon_trivial) return std::nullopt;
        return poly_t.halved_exponents();
    }

    /// prod n'_alpha / prod n_alpha, i.e. chi(1).
    Integer dimension() const {
        Integer num = 1, den = 1;
        for (auto v : numerator_exponents) num *= v;
        for (auto v : denominator_exponents) den *= v;
        return num / den;
    }
};

/// prod (t^n' - 1) / prod (t^n - 1), throwing InexactDivision if the quotient is not a polynomial.
inline LaurentPoly exponent_quotient(const IntVec& numer, const IntVec& denom) {
    LaurentPoly p = LaurentPoly::constant(1);
    for (auto n : numer) p = p.times_binomial(n);
    for (auto n : denom) {
        auto q = p.divided_by_binomial(n);
        if (!q) throw InexactDivision("exponent_quotient: quotient is not a polynomial");
        p = std::move(*q);
    }
    return p;
}

inline PrincipalCharacter principal_character(const RootSystem& rs, const DominantWeight& lambda) {
    rs.check_weight(lambda);
    PrincipalCharacter pc{rs.type(), lambda, rs.shifted_pairings(lambda), rs.rho_pairings(),
                          rs.two_rho_check_pairing(lambda), {}, rs.epsilon_trivial()};
    IntVec numer, denom;
    for (auto v : pc.numerator_exponents) numer.push_back(2 * v);
    for (auto v : pc.denominator_exponents) denom.push_back(2 * v);
    pc.poly_t = exponent_quotient(numer, denom).shifted(-pc.shift);
    return pc;
}

/// m = <2 lambda + 2 rho, beta^vee> with beta^vee the highest coroot; chi vanishes at every
/// primitive m-th root of unity.  The divisibility by Phi_m is checked before returning.
inline std::int64_t explicit_zero_order(const PrincipalCharacter& pc, const RootSystem& rs) {
    if (pc.weight.is_zero()) throw ZeroWeight("explicit_zero_order: weight is zero");
    const std::size_t top = rs.highest_coroot_index();
    const std::int64_t m = 2 * pc.numerator_exponents[top];
    if (!divide_by_cyclotomic(pc.poly_t, m)) throw InexactDivision("explicit_zero_order: Phi_m does not divide chi");
    return m;
}

inline std::int64_t explicit_zero_order(const RootSystem& rs, const DominantWeight& lambda) {
    if (lambda.is_zero()) throw ZeroWeight("explicit_zero_order: weight is zero");
    return explicit_zero_order(principal_character(rs, lambda), rs);
}

struct PrimePowerZero {
    std::int64_t prime;
    int exponent;

    std::int64_t order() const {
        std::int64_t q = 1;
        for (int k = 0; k < exponent; ++k) q *= prime;
        return q;
    }

    bool operator==(const PrimePowerZero&) const = default;
};

/// For F = prod (t^n'_i - 1) / prod (t^n_i - 1) with prod n' > prod n, a prime power l^m such
/// that F vanishes at the primitive l^m-th roots of unity.  Picks the smallest prime l with
/// sum v_l(n') > sum v_l(n), then the smallest m with
/// w_m = #{i : l^m | n'_i} - #{i : l^m | n_i} > 0.
inline PrimePowerZero prime_power_zero(const IntVec& numer, const IntVec& denom) {
    Integer pn = 1, pd = 1;
    for (auto v : numer) {
        if (v < 1) throw DomainError("prime_power_zero: exponents must be positive");
        pn *= v;
    }
    for (auto v : denom) {
        if (v < 1) throw DomainError("prime_power_zero: exponents must be positive");
        pd *= v;
    }
    if (pn <= pd) throw ProductNotLarger("prime_power_zero: product of numerator exponents is not larger");
    std::set<std::int64_t> primes;
    for (auto v : numer)
        for (auto p : nt::prime_divisors(v)) primes.insert(p);
    for (auto l : primes) {
        std::int64_t vn = 0, vd = 0;
        for (auto v : numer) vn += nt::valuation(v, l);
        for (auto v : denom) vd += nt::valuation(v, l);
        if (vn <= vd) continue;
        std::int64_t q = 1;
        for (int m = 1;; ++m) {
            q *= l;
            std::int64_t w = 0;
            for (auto v : numer) w += (v % q == 0);
            for (auto v : denom) w -= (v % q == 0);
            if (w > 0) return {l, m};
        }
    }
    throw InexactDivision("prime_power_zero: no prime with larger valuation");  // unreachable by the product bound
}

/// Character of the k-dimensional irreducible SL2 representation on the diagonal torus,
/// (t^k - t^-k) / (t - t^-1) = t^(k-1) + t^(k-3) + ... + t^(1-k).
inline LaurentPoly sl2_character(std::int64_t k) {
    if (k < 1) throw DomainError("sl2_character: dimension must be positive");
    std::vector<LaurentPoly::Term> terms;
    for (std::int64_t j = 0; j < k; ++j) terms.push_back({k - 1 - 2 * j, Integer(1)});
    return LaurentPoly::from_terms(std::move(terms));
}

/// Checks chi_lambda(f(t)) * prod g_{n_alpha} == prod g_{n'_alpha} by direct multiplication,
/// i.e. the SL2-module identity phi^* V_lambda (x) E_rho = E_{lambda + rho}.
inline bool tensor_identity_check(const PrincipalCharacter& pc) {
    LaurentPoly lhs = pc.poly_t;
    for (auto n : pc.denominator_exponents) lhs *= sl2_character(n);
    LaurentPoly rhs = LaurentPoly::constant(1);
    for (auto n : pc.numerator_exponents) rhs *= sl2_character(n);
    return lhs == rhs;
}

inline bool tensor_identity_check(const RootSystem& rs, const DominantWeight& lambda) {
    return tensor_identity_check(principal_character(rs, lambda));
}

struct ZeroOrders {
    CycloFactorization factorization;  // of poly_t; remainder is 1
    std::vector<std::int64_t> t_orders;
    /// Orders of the group elements f(t): t-orders when f is injective, u-orders (u = t^2) otherwise.
    std::vector<std::int64_t> element_orders;
    bool element_orders_in_u = false;
};

/// Cyclotomic factorization of chi_lambda(f(t)), which is a monomial times cyclotomic polynomials.
inline ZeroOrders zero_orders(const PrincipalCharacter& pc) {
    if (pc.weight.is_zero()) throw ZeroWeight("zero_orders: the trivial character has no zeros");
    ZeroOrders z;
    z.factorization = cyclo_factor(pc.poly_t);
    if (!(z.factorization.remainder == LaurentPoly::constant(1)))
        throw NonCyclotomicRemainder("zero_orders: remainder " + z.factorization.remainder.to_string());
    z.element_orders_in_u = pc.epsilon_trivial;
    std::set<std::int64_t> elem;
    for (const auto& f : z.factorization.factors) {
        z.t_orders.push_back(f.index);
        elem.insert(pc.epsilon_trivial ? f.index / std::gcd(f.index, std::int64_t{2}) : f.index);
    }
    z.element_orders.assign(elem.begin(), elem.end());
    return z;
}

/// Order of a group element f(t) with t^2 a primitive q-th root of unity, choosing t of
/// prime-power order where possible.
inline std::int64_t prime_power_element_order(const PrimePowerZero& z, bool epsilon_trivial) {
    const std::int64_t q = z.order();
    if (epsilon_trivial || z.prime != 2) return q;
    return 2 * q;
}

}  // namespace charzeros
