#pragma once

/**
 * @file realroots.hpp
 * @brief Univariate polynomials over Q, Sturm sequences and real-root isolation.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyclo_element.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "resultant.hpp"

namespace charzeros {

/// Dense polynomial over Q, coefficients lowest degree first, no trailing zeros.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    /// From a Laurent polynomial with no negative exponents.
    static RationalPoly from_laurent(const LaurentPoly& p) {
        if (p.is_zero()) return {};
        if (p.min_exponent() < 0) throw DomainError("RationalPoly: negative exponent");
        std::vector<Rational> c(static_cast<std::size_t>(p.max_exponent() + 1));
        for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.exp)] = t.coeff;
        return RationalPoly(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    RationalPoly derivative() const {
        std::vector<Rational> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
        return RationalPoly(std::move(d));
    }

    RationalPoly scaled(const Rational& s) const {
        std::vector<Rational> c = c_;
        for (auto& v : c) v *= s;
        return RationalPoly(std::move(c));
    }

    RationalPoly monic() const { return is_zero() ? *this : scaled(1 / leading()); }

    /// (quotient, remainder) of *this by d.
    std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const {
        if (d.is_zero()) throw ZeroPolynomial("RationalPoly::divmod: division by zero");
        std::vector<Rational> r = c_;
        if (degree() < d.degree()) return {RationalPoly{}, *this};
        std::vector<Rational> q(static_cast<std::size_t>(degree() - d.degree() + 1));
        const std::size_t dd = static_cast<std::size_t>(d.degree());
        for (std::size_t k = r.size(); k-- > dd;) {
            if (r[k] == 0) continue;
            const Rational f = r[k] / d.leading();
            q[k - dd] = f;
            for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
        }
        r.resize(dd);
        return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
    }

    friend RationalPoly gcd(RationalPoly a, RationalPoly b) {
        while (!b.is_zero()) {
            RationalPoly r = a.divmod(b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    /// *this / gcd(*this, derivative): same roots, all simple.
    RationalPoly squarefree_part() const {
        if (degree() < 1) return *this;
        return divmod(gcd(*this, derivative())).first;
    }

    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline int sign(const Rational& q) { return sgn(q); }

/// Sturm chain p, p', -rem(p, p'), ... (each term rescaled by a positive constant).
class SturmSequence {
public:
    explicit SturmSequence(const RationalPoly& p) {
        if (p.is_zero()) throw ZeroPolynomial("SturmSequence: zero polynomial");
        chain_.push_back(normalized(p));
        RationalPoly d = p.derivative();
        if (d.is_zero()) return;
        chain_.push_back(normalized(d));
        for (;;) {
            RationalPoly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
            if (r.is_zero()) break;
            chain_.push_back(normalized(r.scaled(-1)));
        }
    }

    int variations(const Rational& x) const {
        int count = 0, last = 0;
        for (const auto& p : chain_) {
            const int s = sign(p(x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    /// Distinct roots in (a, b], for a < b with p(a) != 0.
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

    const RationalPoly& base() const { return chain_.front(); }

private:
    static RationalPoly normalized(const RationalPoly& p) {
        const Rational& l = p.leading();
        return p.scaled(1 / abs(l));
    }

    std::vector<RationalPoly> chain_;
};

/// Open interval (lo, hi) holding exactly one root; p(lo) and p(hi) are nonzero.
struct RootInterval {
    Rational lo;
    Rational hi;
};

namespace detail {

/// A point of (lo, hi) that is not a root of p, near the midpoint.
inline Rational non_root_between(const RationalPoly& p, const Rational& lo, const Rational& hi) {
    for (long k = 2;; ++k) {
        // midpoint, then lo + (hi-lo)/3, 2/3, 1/4, 3/4, ... ; p has finitely many roots.
        for (long j = 1; j < k; ++j) {
            Rational x = lo + (hi - lo) * Rational(j, k);
            x.canonicalize();
            if (p(x) != 0) return x;
        }
    }
}

inline void isolate(const SturmSequence& s, const Rational& lo, const Rational& hi, std::vector<RootInterval>& out) {
    const int n = s.count(lo, hi);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi});
        return;
    }
    const Rational mid = non_root_between(s.base(), lo, hi);
    isolate(s, lo, mid, out);
    isolate(s, mid, hi, out);
}

}  // namespace detail

/// Isolating intervals, in increasing order, for the distinct real roots of p in (lo, hi).
/// Requires p(lo) != 0 and p(hi) != 0.
inline std::vector<RootInterval> isolate_real_roots(const RationalPoly& p, const Rational& lo, const Rational& hi) {
    if (p(lo) == 0 || p(hi) == 0) throw DomainError("isolate_real_roots: endpoint is a root");
    const RationalPoly q = p.squarefree_part();
    if (q.degree() < 1) return {};
    SturmSequence s(q);
    std::vector<RootInterval> out;
    detail::isolate(s, lo, hi, out);
    return out;
}

/// Halves an isolating interval of a squarefree p.
inline RootInterval refine(const RationalPoly& p, RootInterval r) {
    const Rational mid = detail::non_root_between(p, r.lo, r.hi);
    if (sign(p(r.lo)) != sign(p(mid))) return {r.lo, mid};
    return {mid, r.hi};
}

/// Cauchy bound: every complex root has modulus < bound.
inline Rational root_bound(const RationalPoly& p) {
    Rational m = 0;
    for (std::int64_t k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(k)] / p.leading())));
    return m + 1;
}

/// Sign (-1, 0, 1) of a real element of Q(zeta_N) under zeta_N = exp(2 pi i / N).
///
/// Integers are read off directly.  Otherwise the characteristic polynomial of the element,
/// Res_z(Phi_N(z), y - r(z)), has only real roots; these are isolated exactly and the
/// interval holding the floating-point value is refined until its sign is fixed.
inline int sign_of_real(const CycloElement& v) {
    if (v.is_zero()) return 0;
    if (v.is_integer()) return sgn(v.integer_part());
    if (!v.is_real()) throw DomainError("sign_of_real: value is not real");
    BiLaurentPoly phi = BiLaurentPoly::from_univariate(cyclotomic(v.modulus()));
    BiLaurentPoly g = BiLaurentPoly::y() - BiLaurentPoly::from_univariate(v.to_laurent());
    const LaurentPoly charpoly = resultant(phi, g, Variable::x).value;
    RationalPoly q = RationalPoly::from_laurent(charpoly.shifted(-charpoly.min_exponent())).squarefree_part();
    const long double approx = v.real_approx();
    long double magnitude = 0;
    for (const auto& c : v.residue()) magnitude += std::fabs(static_cast<long double>(c.get_d()));
    // Generous bound on rounding in real_approx.
    const long double err = (magnitude + 1) * 1e-12L;
    const Rational bound = root_bound(q);
    Rational lo = -bound, hi = bound;
    if (q(lo) == 0) lo -= 1;
    if (q(hi) == 0) hi += 1;
    std::vector<RootInterval> roots = isolate_real_roots(q, lo, hi);
    for (int iteration = 0; iteration < 400; ++iteration) {
        std::vector<std::size_t> hits;
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (roots[k].lo.get_d() <= static_cast<double>(approx + err) &&
                roots[k].hi.get_d() >= static_cast<double>(approx - err))
                hits.push_back(k);
        if (hits.size() == 1) {
            RootInterval r = roots[hits[0]];
            while (sgn(r.lo) != sgn(r.hi) || sgn(r.lo) == 0) r = refine(q, r);
            return sgn(r.lo);
        }
        if (hits.empty()) break;
        for (auto k : hits) roots[k] = refine(q, roots[k]);
    }
    throw DomainError("sign_of_real: could not separate conjugates numerically");
}

}  // namespace charzeros
