#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"

namespace charzeros {

enum class Variable { x, y };

inline char variable_name(Variable v) { return v == Variable::x ? 'x' : 'y'; }

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Entries are polynomials; every division along the way is exact.
inline LaurentPoly bareiss_determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly::constant(1);
    bool negate = false;
    LaurentPoly prev = LaurentPoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return {};
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = num.exact_quotient(prev);
                if (!q) throw InexactDivision("bareiss_determinant: non-exact step");
                m[i][j] = std::move(*q);
            }
            m[i][k] = LaurentPoly{};
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

struct ResultantResult {
    /// Resultant as a polynomial in the variable that was kept.
    LaurentPoly value;
    /// Monomials x^i y^j removed from each input before elimination.
    std::pair<Exponent, Exponent> stripped_first{0, 0};
    std::pair<Exponent, Exponent> stripped_second{0, 0};
};

namespace detail {

/// Sylvester matrix of two polynomials in x whose coefficients (lowest first) are y-polynomials.
inline PolyMatrix sylvester(const std::vector<LaurentPoly>& f, const std::vector<LaurentPoly>& g) {
    const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
    PolyMatrix s(size, std::vector<LaurentPoly>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g[n - k];
    return s;
}

}  // namespace detail

/// Resultant of f and g with respect to `eliminate`, as a polynomial in the other variable.
///
/// Both inputs are first multiplied by the monomial that makes all their
/// exponents nonnegative (the stripped monomials are reported), so the
/// value differs from a Laurent-aware definition by a monomial at most.
inline ResultantResult resultant(const BiLaurentPoly& f, const BiLaurentPoly& g, Variable eliminate) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant: zero input");
    const bool swap = eliminate == Variable::y;
    BiLaurentPoly a = swap ? f.swapped() : f;
    BiLaurentPoly b = swap ? g.swapped() : g;
    ResultantResult out;
    out.stripped_first = {a.min_x(), a.min_y()};
    out.stripped_second = {b.min_x(), b.min_y()};
    a = a.shifted(-a.min_x(), -a.min_y());
    b = b.shifted(-b.min_x(), -b.min_y());
    if (swap) {
        std::swap(out.stripped_first.first, out.stripped_first.second);
        std::swap(out.stripped_second.first, out.stripped_second.second);
    }
    if (a.max_x() == 0 || b.max_x() == 0)
        throw DegenerateDegree(std::string("resultant: input free of ") + variable_name(eliminate));
    out.value = bareiss_determinant(detail::sylvester(a.coefficients_in_x(), b.coefficients_in_x()));
    return out;
}

}  // namespace charzeros
