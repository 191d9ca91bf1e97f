#pragma once

/**
 * @file cyclopoints.hpp
 * @brief Root-of-unity zeros of bivariate Laurent polynomials (Beukers-Smyth).
 *
 * If H(x, y) = 0 at roots of unity then one of the seven polynomials
 * H(+-x, +-y), H(+-x^2, +-y^2) (other than H itself) also vanishes there.
 * For each such H_i the resultants Res_y(H, H_i) and Res_x(H, H_i) bound the
 * orders of x and y; the candidates are then evaluated exactly in Q(zeta_N).
 */

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cyclo_element.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "resultant.hpp"

namespace charzeros {

/// y^2 x^3 (2 + f(x, y) + f(1/x, 1/y)), f = x + y + yx + yx^2 + yx^3 + y^2x^3: the adjoint
/// character of G2 on the maximal torus, in coroot coordinates, cleared of denominators.
inline BiLaurentPoly g2_adjoint_poly() {
    static const std::vector<std::tuple<Exponent, Exponent, int>> terms = {
        {6, 4, 1}, {6, 3, 1}, {5, 3, 1}, {4, 3, 1}, {3, 3, 1}, {4, 2, 1}, {3, 2, 2},
        {2, 2, 1}, {3, 1, 1}, {2, 1, 1}, {1, 1, 1}, {0, 1, 1}, {0, 0, 1},
    };
    BiLaurentPoly h;
    for (auto [i, j, c] : terms) h += BiLaurentPoly::monomial(c, i, j);
    return h;
}

/// H(x,-y), H(-x,y), H(-x,-y), H(x^2,y^2), H(x^2,-y^2), H(-x^2,y^2), H(-x^2,-y^2).
inline std::vector<BiLaurentPoly> seven_variants(const BiLaurentPoly& h) {
    static const std::vector<std::pair<VariableMap, VariableMap>> maps = {
        {{1, 1}, {-1, 1}}, {{-1, 1}, {1, 1}}, {{-1, 1}, {-1, 1}}, {{1, 2}, {1, 2}},
        {{1, 2}, {-1, 2}}, {{-1, 2}, {1, 2}}, {{-1, 2}, {-1, 2}},
    };
    std::vector<BiLaurentPoly> out;
    for (const auto& [xm, ym] : maps) out.push_back(h.substitute(xm, ym));
    return out;
}

/// Cyclotomic indices d with Phi_d dividing the resultant of h and hi that is a polynomial in
/// `var` (so the other variable is eliminated).  Throws PositiveDimensional if the resultant
/// vanishes identically, i.e. h and hi share a component.
inline std::vector<std::int64_t> variant_cyclo_orders(const BiLaurentPoly& h, const BiLaurentPoly& hi, Variable var) {
    const Variable eliminate = var == Variable::x ? Variable::y : Variable::x;
    const ResultantResult r = resultant(h, hi, eliminate);
    if (r.value.is_zero()) throw PositiveDimensional("variant_cyclo_orders: common component");
    return cyclo_factor(r.value).indices();
}

/// (x, y) = (zeta_N^a, zeta_N^b), zeta_N = exp(2 pi i / N).
struct CycloPoint {
    std::int64_t modulus = 1;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t order_x = 1;
    std::int64_t order_y = 1;

    std::int64_t element_order() const { return std::lcm(order_x, order_y); }

    auto operator<=>(const CycloPoint& o) const {
        return std::tie(modulus, a, b) <=> std::tie(o.modulus, o.a, o.b);
    }
    bool operator==(const CycloPoint& o) const { return modulus == o.modulus && a == o.a && b == o.b; }
};

struct VariantRow {
    int index = 0;  // 1..7
    bool positive_dimensional = false;
    std::vector<std::int64_t> x_orders;  // from Res_y(H, H_i)
    std::vector<std::int64_t> y_orders;  // from Res_x(H, H_i)
    std::vector<CycloPoint> points;      // orbit representatives with H = H_i = 0
};

struct CycloSolveReport {
    std::vector<VariantRow> rows;
    std::vector<CycloPoint> points;         // all distinct orbits, sorted
    std::vector<std::int64_t> orbit_sizes;  // phi(N) per point
    std::vector<std::vector<int>> variant_attribution;
    std::vector<int> positive_dimensional;  // variant indices
    /// Set when H involves only one variable and has a cyclotomic factor, so its zeros form
    /// whole subtori.
    bool degenerate_curve = false;

    std::vector<std::int64_t> element_orders() const {
        std::set<std::int64_t> s;
        for (const auto& p : points) s.insert(p.element_order());
        return {s.begin(), s.end()};
    }

    bool complete() const { return positive_dimensional.empty() && !degenerate_curve; }
};

namespace detail {

/// Orbit representatives of pairs (a, b) mod N = lcm(dx, dy) with zeta^a of order dx and
/// zeta^b of order dy, under (a, b) -> (ja, jb) for j prime to N.  The action is free, so each
/// orbit has phi(N) elements; the representative is the lexicographically smallest pair.
inline std::vector<CycloPoint> orbit_representatives(std::int64_t dx, std::int64_t dy) {
    const std::int64_t n = std::lcm(dx, dy);
    std::vector<std::int64_t> units;
    for (std::int64_t j = 1; j <= n; ++j)
        if (std::gcd(j, n) == 1) units.push_back(j % n);
    std::vector<std::int64_t> as, bs;
    for (std::int64_t k = 0; k < dx; ++k)
        if (std::gcd(k, dx) == 1) as.push_back(nt::mod(k * (n / dx), n));
    for (std::int64_t k = 0; k < dy; ++k)
        if (std::gcd(k, dy) == 1) bs.push_back(nt::mod(k * (n / dy), n));
    std::sort(as.begin(), as.end());
    std::sort(bs.begin(), bs.end());
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::vector<CycloPoint> out;
    for (auto a : as)
        for (auto b : bs) {
            if (seen.count({a, b})) continue;
            for (auto j : units) seen.insert({j * a % n, j * b % n});
            out.push_back({n, a, b, dx, dy});
        }
    return out;
}

inline VariantRow solve_variant(const BiLaurentPoly& h, const BiLaurentPoly& hi, int index) {
    VariantRow row;
    row.index = index;
    try {
        row.x_orders = variant_cyclo_orders(h, hi, Variable::x);
        row.y_orders = variant_cyclo_orders(h, hi, Variable::y);
    } catch (const PositiveDimensional&) {
        row.positive_dimensional = true;
        row.x_orders.clear();
        row.y_orders.clear();
        return row;
    }
    for (auto dx : row.x_orders)
        for (auto dy : row.y_orders)
            for (const auto& p : orbit_representatives(dx, dy))
                if (eval_at_roots(h, p.modulus, p.a, p.b).is_zero() &&
                    eval_at_roots(hi, p.modulus, p.a, p.b).is_zero())
                    row.points.push_back(p);
    std::sort(row.points.begin(), row.points.end());
    return row;
}

}  // namespace detail

/// All root-of-unity zeros of h, as Galois orbits.  Variants run concurrently; the result does
/// not depend on scheduling.
inline CycloSolveReport solve(const BiLaurentPoly& h, bool parallel = true) {
    if (h.is_zero()) throw ZeroPolynomial("solve: zero polynomial");
    CycloSolveReport report;
    if (h.is_constant()) return report;
    const bool free_of_y = h.min_y() == h.max_y();
    const bool free_of_x = h.min_x() == h.max_x();
    if (free_of_x || free_of_y) {
        // h = monomial * p(single variable): zeros are subtori p(z) = 0 times the whole other factor.
        LaurentPoly p;
        for (const auto& [k, c] : h.coeffs()) p = p + LaurentPoly::monomial(c, free_of_y ? k.first : k.second);
        report.degenerate_curve = !cyclo_factor(p).factors.empty();
        return report;
    }
    const auto variants = seven_variants(h);
    std::vector<VariantRow> rows(variants.size());
    if (parallel) {
        std::vector<std::future<VariantRow>> jobs;
        for (std::size_t i = 0; i < variants.size(); ++i)
            jobs.push_back(std::async(std::launch::async, detail::solve_variant, std::cref(h), std::cref(variants[i]),
                                      static_cast<int>(i + 1)));
        for (std::size_t i = 0; i < jobs.size(); ++i) rows[i] = jobs[i].get();
    } else {
        for (std::size_t i = 0; i < variants.size(); ++i)
            rows[i] = detail::solve_variant(h, variants[i], static_cast<int>(i + 1));
    }
    std::map<CycloPoint, std::vector<int>> merged;
    for (const auto& row : rows) {
        if (row.positive_dimensional) report.positive_dimensional.push_back(row.index);
        for (const auto& p : row.points) merged[p].push_back(row.index);
    }
    for (const auto& [p, who] : merged) {
        report.points.push_back(p);
        report.orbit_sizes.push_back(nt::totient(p.modulus));
        report.variant_attribution.push_back(who);
    }
    report.rows = std::move(rows);
    return report;
}

}  // namespace charzeros
