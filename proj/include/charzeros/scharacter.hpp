#pragma once

/**
 * @file scharacter.hpp
 * @brief Symmetric Laurent polynomials that are nonnegative on the unit circle, and checks of
 *        the two S-character axioms (f >= 0 and <f, 1> = 1) for class functions.
 */

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclo_element.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "parser.hpp"
#include "principal.hpp"
#include "realroots.hpp"

namespace charzeros {

/// Laurent polynomial with a_n = a_{-n} for every n.
class SymmetricLaurent {
public:
    explicit SymmetricLaurent(LaurentPoly p) : p_(std::move(p)) {
        if (!(p_.reflected() == p_)) throw NotSymmetric("not symmetric: " + p_.to_string());
    }

    static bool is_symmetric(const LaurentPoly& p) { return p.reflected() == p; }

    const LaurentPoly& poly() const noexcept { return p_; }
    Integer a(Exponent n) const { return p_.coeff(n); }
    /// Largest n with a_n != 0 (0 for constants).
    Exponent degree() const noexcept { return p_.max_exponent(); }
    bool is_constant() const noexcept { return p_.is_constant(); }

private:
    LaurentPoly p_;
};

/// t^-m + 2 + t^m (sign +1) or -t^-m + 2 - t^m (sign -1).
inline LaurentPoly g_pm(Exponent m, int sign) {
    const Integer s = sign;
    return LaurentPoly::from_terms({{-m, s}, {0, Integer(2)}, {m, s}});
}

/// p(c) with f(e^{i theta}) = a_0 + sum 2 a_n T_n(c), c = cos(theta).
inline RationalPoly chebyshev_form(const SymmetricLaurent& f) {
    const auto n = static_cast<std::size_t>(f.degree());
    std::vector<Rational> p(n + 1);
    std::vector<Rational> prev{1}, cur{0, 1};  // T_0, T_1
    p[0] = Rational(f.a(0));
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            std::vector<Rational> next(k + 1);
            for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2 * cur[j];
            for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
            prev = std::move(cur);
            cur = std::move(next);
        }
        const Integer ak = f.a(static_cast<Exponent>(k));
        if (ak == 0) continue;
        for (std::size_t j = 0; j < cur.size(); ++j) p[j] += 2 * ak * cur[j];
    }
    return RationalPoly(std::move(p));
}

struct PositivityWitness {
    /// p(c) < 0 for every c in [lo, hi], where -1 <= lo <= hi <= 1.
    Rational lo;
    Rational hi;
    Rational value_at_lo;
};

struct PositivityResult {
    bool positive = true;
    std::optional<PositivityWitness> witness;
};

/// Exact test of f >= 0 on |t| = 1.
inline PositivityResult is_positive_on_circle(const SymmetricLaurent& f) {
    const RationalPoly p = chebyshev_form(f);
    PositivityResult out;
    if (p.is_zero()) return out;
    if (p.degree() == 0) {
        if (sign(p.leading()) < 0) out = {false, PositivityWitness{Rational(-1), Rational(1), p.leading()}};
        return out;
    }
    // Remove roots at c = +-1 so the open interval has non-root endpoints.
    RationalPoly q = p.squarefree_part();
    const RationalPoly c_minus_one(std::vector<Rational>{-1, 1}), c_plus_one(std::vector<Rational>{1, 1});
    if (q(1) == 0) q = q.divmod(c_minus_one).first;
    if (q(-1) == 0) q = q.divmod(c_plus_one).first;
    std::vector<RootInterval> roots;
    if (q.degree() >= 1) roots = isolate_real_roots(q, Rational(-1), Rational(1));
    // Pull the outer intervals away from -1 and 1 so every gap has an interior sample.
    if (!roots.empty()) {
        while (roots.front().lo == -1) roots.front() = refine(q, roots.front());
        while (roots.back().hi == 1) roots.back() = refine(q, roots.back());
    }
    // Component k lies between root k-1 and root k; [left, right] is a closed piece of it.
    for (std::size_t k = 0; k <= roots.size(); ++k) {
        Rational left = k == 0 ? Rational(-1) : roots[k - 1].hi;
        Rational right = k == roots.size() ? Rational(1) : roots[k].lo;
        Rational sample = k == 0 ? right : left;
        if (roots.empty()) sample = 0;
        const Rational value = p(sample);
        if (sign(value) >= 0) continue;
        if (p(left) >= 0) left = sample;
        if (p(right) >= 0) right = sample;
        out.positive = false;
        out.witness = PositivityWitness{left, right, p(left)};
        return out;
    }
    return out;
}

/// (S+, S-) = (m(a_0 + 2a_m), m(a_0 - 2a_m)): the sums of f over the m-th roots of 1 and of -1.
/// Requires a_{km} = 0 for every k >= 2.
inline std::pair<Integer, Integer> partial_sums(const SymmetricLaurent& f, std::int64_t m) {
    if (m < 1) throw DomainError("partial_sums: m must be positive");
    for (const auto& t : f.poly().terms())
        if (t.exp > m && t.exp % m == 0)
            throw HypothesisViolated("partial_sums: a_" + std::to_string(t.exp) + " is nonzero");
    const Integer a0 = f.a(0), am = f.a(m);
    return {m * (a0 + 2 * am), m * (a0 - 2 * am)};
}

/// The same sums computed term by term in Q(zeta_2m): U+ = {z : z^m = 1}, U- = {z : z^m = -1}.
inline std::pair<Integer, Integer> partial_sums_direct(const SymmetricLaurent& f, std::int64_t m) {
    if (m < 1) throw DomainError("partial_sums_direct: m must be positive");
    const std::int64_t n = 2 * m;
    CycloElement plus(n), minus(n);
    for (std::int64_t k = 0; k < n; ++k) {
        const CycloElement v = CycloElement::from_laurent(n, f.poly().substituted_power(k == 0 ? n : k));
        (k % 2 == 0 ? plus : minus) = (k % 2 == 0 ? plus : minus) + v;
    }
    if (!plus.is_integer() || !minus.is_integer()) throw InexactDivision("partial_sums_direct: non-rational sum");
    return {plus.integer_part(), minus.integer_part()};
}

struct A0TwoClass {
    Exponent m;
    int sign;  // +1: t^-m + 2 + t^m, -1: -t^-m + 2 - t^m
    bool operator==(const A0TwoClass&) const = default;
};

/// A nonconstant integral f >= 0 on the circle with a_0 = 2 is t^-m + 2 + t^m or -t^-m + 2 - t^m.
inline A0TwoClass classify_a0_2(const LaurentPoly& f) {
    if (!SymmetricLaurent::is_symmetric(f)) throw NotClassifiable("classify_a0_2: not symmetric");
    const SymmetricLaurent s(f);
    if (s.is_constant()) throw NotClassifiable("classify_a0_2: constant");
    if (s.a(0) != 2) throw NotClassifiable("classify_a0_2: a_0 is " + to_string(s.a(0)) + ", not 2");
    if (!is_positive_on_circle(s).positive) throw NotClassifiable("classify_a0_2: negative somewhere on the circle");
    const Exponent m = s.degree();
    for (int sg : {1, -1})
        if (f == g_pm(m, sg)) return {m, sg};
    throw NotClassifiable("classify_a0_2: " + f.to_string() + " is neither t^-m + 2 + t^m nor -t^-m + 2 - t^m");
}

/// -t^-2 + 2 - t^2 = |t - t^-1|^2 on the circle.
inline LaurentPoly weyl_density() { return g_pm(2, -1); }

/// <f, 1> for the Haar measure of SU2, f read on the diagonal torus: half the constant term of
/// f * (-t^-2 + 2 - t^2), i.e. a_0 - a_2.
inline Rational su2_mean(const SymmetricLaurent& f) {
    const LaurentPoly big_f = f.poly() * weyl_density();
    return Rational(big_f.coeff(0)) / 2;
}

/// For f >= 0 on the circle with SU2-mean 1, returns n with f = g_n^2,
/// g_n = (t^n - t^-n) / (t - t^-1).
inline std::int64_t su2_decompose(const SymmetricLaurent& f) {
    if (!is_positive_on_circle(f).positive) throw NotAnSCharacter("su2_decompose: negative somewhere on the circle");
    if (su2_mean(f) != 1) throw NotAnSCharacter("su2_decompose: mean is " + su2_mean(f).get_str() + ", not 1");
    const LaurentPoly big_f = f.poly() * weyl_density();
    const Exponent m = big_f.max_exponent();
    if (big_f.coeff(0) != 2 || m % 2 != 0 || !(big_f == g_pm(m, -1)))
        throw NotASquare("su2_decompose: f * (-t^-2 + 2 - t^2) = " + big_f.to_string());
    const std::int64_t n = m / 2;
    const LaurentPoly g = sl2_character(n);
    if (!(g * g == f.poly())) throw NotASquare("su2_decompose: f is not g_n^2");
    return n;
}

using ExponentVector = std::vector<std::int64_t>;
/// Finitely supported function Z^r -> Z, i.e. a Laurent polynomial in r variables.
using TorusFunction = std::map<ExponentVector, Integer>;

struct TorusRejection {
    ExponentVector direction;  // y with <a, y> injective on the support
    LaurentPoly restriction;   // sum n_a t^<a, y>
    PositivityWitness witness;
};

namespace detail {

/// max |<a, y>| over the support, or nullopt if two support points collide.
inline std::optional<Integer> direction_degree(const TorusFunction& f, const ExponentVector& y) {
    std::vector<Integer> values;
    for (const auto& [a, c] : f) {
        Integer e = 0;
        for (std::size_t i = 0; i < y.size(); ++i) e += Integer(a[i]) * y[i];
        values.push_back(e);
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) return std::nullopt;
    return std::max(Integer(abs(values.front())), Integer(abs(values.back())));
}

/// A y with <a, y> injective on the support.  Small boxes [-B, B]^r are searched first for the
/// y of least degree (ties: first in enumeration order), since the positivity test is costly in
/// the degree; (1, M, M^2, ...) with M = 1 + 2 * spread always works and is the fallback.
inline ExponentVector separating_direction(const TorusFunction& f, std::size_t rank) {
    constexpr double kMaxBox = 50000;
    for (std::int64_t b = 1; std::pow(2.0 * static_cast<double>(b) + 1, static_cast<double>(rank)) <= kMaxBox; ++b) {
        std::optional<std::pair<Integer, ExponentVector>> best;
        // each coordinate runs through 0, 1, -1, 2, -2, ...
        std::vector<std::int64_t> k(rank, 0);
        ExponentVector y(rank, 0);
        for (;;) {
            if (auto d = direction_degree(f, y); d && (!best || *d < best->first)) best = {{*d, y}};
            std::size_t i = 0;
            while (i < rank && k[i] == 2 * b) {
                k[i] = 0;
                y[i++] = 0;
            }
            if (i == rank) break;
            ++k[i];
            y[i] = (k[i] + 1) / 2 * (k[i] % 2 ? 1 : -1);
        }
        if (best) return best->second;
    }
    std::int64_t spread = 0;  // max |a_i - a'_i| over the support
    for (std::size_t i = 0; i < rank; ++i) {
        std::int64_t lo = 0, hi = 0;
        for (const auto& [a, c] : f) {
            lo = std::min(lo, a[i]);
            hi = std::max(hi, a[i]);
        }
        spread = std::max(spread, hi - lo);
    }
    const std::int64_t base = 1 + 2 * spread;
    ExponentVector y(rank);
    Integer power = 1;
    for (std::size_t i = 0; i < rank; ++i) {
        if (!power.fits_slong_p()) throw DomainError("torus_reject: separating direction overflows");
        y[i] = power.get_si();
        power *= base;
    }
    return y;
}

}  // namespace detail

/// A symmetric f on a torus with constant term 1 and f != 1 takes a negative value: restricting
/// along an injective direction gives a univariate f_y with a_0 = 1, which cannot be >= 0.
inline TorusRejection torus_reject(const TorusFunction& f) {
    TorusFunction clean;
    std::size_t rank = 0;
    for (const auto& [a, c] : f) {
        if (c == 0) continue;
        if (!clean.empty() && a.size() != rank) throw DomainError("torus_reject: exponent vectors of mixed length");
        rank = a.size();
        clean.emplace(a, c);
    }
    const ExponentVector zero(rank, 0);
    auto it = clean.find(zero);
    if (it == clean.end() || it->second != 1) throw DomainError("torus_reject: constant term must be 1");
    if (clean.size() == 1) throw IsTrivial("torus_reject: f = 1");
    for (const auto& [a, c] : clean) {
        ExponentVector neg(a.size());
        std::transform(a.begin(), a.end(), neg.begin(), [](auto v) { return -v; });
        auto jt = clean.find(neg);
        if (jt == clean.end() || jt->second != c) throw NotSymmetric("torus_reject: f(a) != f(-a)");
    }
    const ExponentVector y = detail::separating_direction(clean, rank);
    std::vector<LaurentPoly::Term> terms;
    for (const auto& [a, c] : clean) {
        Integer e = 0;
        for (std::size_t i = 0; i < rank; ++i) e += Integer(a[i]) * y[i];
        if (!e.fits_slong_p()) throw DomainError("torus_reject: exponent overflows");
        terms.push_back({e.get_si(), c});
    }
    TorusRejection out{y, LaurentPoly::from_terms(std::move(terms)), {}};
    if (out.restriction.size() != clean.size())
        throw InexactDivision("torus_reject: direction is not injective on the support");
    const PositivityResult r = is_positive_on_circle(SymmetricLaurent(out.restriction));
    if (r.positive) throw InexactDivision("torus_reject: restriction is nonnegative");
    out.witness = *r.witness;
    return out;
}

/// A class function on a finite group: one value per conjugacy class, in Z[zeta_N].
struct FiniteClassFunction {
    std::int64_t modulus = 1;
    std::vector<Integer> class_sizes;
    std::vector<CycloElement> values;

    Integer group_order() const {
        Integer s = 0;
        for (const auto& c : class_sizes) s += c;
        return s;
    }

    void validate() const {
        if (class_sizes.empty()) throw InconsistentClassData("no classes");
        if (class_sizes.size() != values.size()) throw InconsistentClassData("sizes and values differ in length");
        for (const auto& c : class_sizes)
            if (c <= 0) throw InconsistentClassData("class sizes must be positive");
        for (const auto& v : values)
            if (v.modulus() != modulus) throw InconsistentClassData("values over different cyclotomic fields");
    }
};

struct FiniteSCheck {
    Integer group_order;
    bool is_real = true;
    bool is_positive = true;
    std::vector<std::size_t> negative_classes;  // real and < 0, or not real
    std::optional<Rational> mean;               // <f, 1>, when rational
    bool mean_is_one = false;
    bool is_trivial = false;                    // f = 1
    std::vector<std::size_t> zero_classes;

    bool is_s_character() const { return is_positive && mean_is_one; }
};

/// Checks f >= 0 and <f, 1> = 1 exactly.  An S-character other than 1 must vanish somewhere;
/// that is asserted on the data.
inline FiniteSCheck finite_s_check(const FiniteClassFunction& cf) {
    cf.validate();
    FiniteSCheck out;
    out.group_order = cf.group_order();
    CycloElement total(cf.modulus);
    bool all_one = true;
    const CycloElement one = CycloElement::from_integer(cf.modulus, 1);
    for (std::size_t k = 0; k < cf.values.size(); ++k) {
        const CycloElement& v = cf.values[k];
        total = total + cf.class_sizes[k] * v;
        if (!(v == one)) all_one = false;
        if (v.is_zero()) {
            out.zero_classes.push_back(k);
            continue;
        }
        if (!v.is_real()) {
            out.is_real = false;
            out.is_positive = false;
            out.negative_classes.push_back(k);
        } else if (sign_of_real(v) < 0) {
            out.is_positive = false;
            out.negative_classes.push_back(k);
        }
    }
    out.is_trivial = all_one;
    if (total.is_integer()) {
        Rational mean(total.integer_part(), out.group_order);
        mean.canonicalize();
        out.mean = mean;
        out.mean_is_one = mean == 1;
    }
    if (out.is_s_character() && !out.is_trivial && out.zero_classes.empty())
        throw Error("finite_s_check: S-character without a zero");
    return out;
}

/// Class data as text.  Blank lines and '#' comments are ignored; an optional first directive
/// `root z 7` lets values use z = exp(2 pi i / 7); every other line is `size value`.
inline FiniteClassFunction parse_class_data(std::istream& in) {
    FiniteClassFunction cf;
    char var = 'z';
    bool declared = false, seen_row = false;
    std::string line;
    std::vector<LaurentPoly> raw;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (first == "root") {
            std::string name;
            std::int64_t n = 0;
            if (declared || seen_row) throw ParseError(where + "root must be declared once, before the rows");
            if (!(ls >> name >> n) || name.size() != 1 || !std::isalpha(static_cast<unsigned char>(name[0])) || n < 1)
                throw ParseError(where + "expected 'root <letter> <order>'");
            std::string extra;
            if (ls >> extra) throw ParseError(where + "trailing text after root declaration");
            var = name[0];
            cf.modulus = n;
            declared = true;
            continue;
        }
        Integer size;
        if (first.empty() || !std::all_of(first.begin(), first.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError(where + "expected a class size");
        size = Integer(first);
        std::string rest;
        std::getline(ls, rest);
        try {
            raw.push_back(parse_laurent(rest, var));
        } catch (const ParseError& e) {
            throw ParseError(where + e.what());
        }
        if (!declared && !raw.back().is_constant()) throw ParseError(where + "value uses a variable but no root is declared");
        cf.class_sizes.push_back(size);
        seen_row = true;
    }
    for (const auto& p : raw) cf.values.push_back(CycloElement::from_laurent(cf.modulus, p));
    return cf;
}

}  // namespace charzeros
