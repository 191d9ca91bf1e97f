#include <charzeros/cyclopoints.hpp>
#include <charzeros/parser.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace charzeros;

namespace {

using Orders = std::vector<std::int64_t>;

/// Lexicographically smallest (ja, jb) mod n over units j, after reducing to the exact modulus.
CycloPoint canonical(std::int64_t n, std::int64_t a, std::int64_t b) {
    const std::int64_t g = std::gcd(std::gcd(n, a), b);
    n /= g;
    a /= g;
    b /= g;
    std::pair<std::int64_t, std::int64_t> best{n, n};
    for (std::int64_t j = 1; j <= n; ++j)
        if (std::gcd(j, n) == 1) best = std::min(best, {j * a % n, j * b % n});
    if (n == 1) best = {0, 0};
    return {n, best.first, best.second, n / std::gcd(n, best.first), n / std::gcd(n, best.second)};
}

/// Orbits of zeros with exact modulus <= max_n, found by floating-point search over all pairs.
std::set<CycloPoint> brute_force_zeros(const BiLaurentPoly& h, std::int64_t max_n) {
    std::set<CycloPoint> out;
    for (std::int64_t n = 1; n <= max_n; ++n)
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) {
                if (std::gcd(std::gcd(n, a), b) != 1) continue;
                if (std::abs(oracle::eval_numeric(h, n, a, b)) < 1e-8) out.insert(canonical(n, a, b));
            }
    return out;
}

std::set<CycloPoint> up_to(const std::vector<CycloPoint>& pts, std::int64_t max_n) {
    std::set<CycloPoint> out;
    for (const auto& p : pts)
        if (p.modulus <= max_n) out.insert(p);
    return out;
}

}  // namespace

TEST(Variants, G2Shapes) {
    const auto v = seven_variants(g2_adjoint_poly());
    ASSERT_EQ(v.size(), 7u);
    EXPECT_EQ(v[3].max_y(), 8);
    EXPECT_EQ(v[3].max_x(), 12);
    EXPECT_EQ(v[2].coeff(6, 4), 1);
    EXPECT_EQ(v[2].coeff(3, 2), -2);
    EXPECT_EQ(v[0].coeff(3, 3), -1);
    EXPECT_EQ(v[1].coeff(3, 3), -1);
    EXPECT_EQ(v[6].coeff(6, 4), -2);
    for (const auto& p : v) EXPECT_EQ(p.size(), g2_adjoint_poly().size());
}

TEST(Variants, ConstantGivesSevenCopies) {
    const auto v = seven_variants(BiLaurentPoly::constant(3));
    ASSERT_EQ(v.size(), 7u);
    for (const auto& p : v) EXPECT_EQ(p, BiLaurentPoly::constant(3));
}

TEST(Variants, G2ResultantOrders) {
    const BiLaurentPoly h = g2_adjoint_poly();
    const auto v = seven_variants(h);
    EXPECT_EQ(variant_cyclo_orders(h, v[0], Variable::x), (Orders{2, 4}));
    EXPECT_EQ(variant_cyclo_orders(h, v[0], Variable::y), (Orders{8}));
    EXPECT_EQ(variant_cyclo_orders(h, v[4], Variable::x), (Orders{7}));
    EXPECT_EQ(variant_cyclo_orders(h, v[4], Variable::y), (Orders{2, 42}));
}

TEST(Variants, CommonComponentThrows) {
    const BiLaurentPoly h = parse_bilaurent("x - y");
    EXPECT_THROW(variant_cyclo_orders(h, seven_variants(h)[2], Variable::x), PositiveDimensional);
}

TEST(OrbitRepresentatives, CountsMatchTotients) {
    for (std::int64_t dx = 1; dx <= 24; ++dx)
        for (std::int64_t dy = 1; dy <= 24; ++dy) {
            const auto reps = detail::orbit_representatives(dx, dy);
            const std::int64_t n = std::lcm(dx, dy);
            EXPECT_EQ(static_cast<std::int64_t>(reps.size()) * nt::totient(n), nt::totient(dx) * nt::totient(dy));
            for (const auto& p : reps) {
                EXPECT_EQ(p.modulus, n);
                EXPECT_EQ(canonical(n, p.a, p.b), p);
            }
        }
}

TEST(Solve, G2AdjointTable) {
    const CycloSolveReport r = solve(g2_adjoint_poly());
    ASSERT_EQ(r.rows.size(), 7u);
    const std::vector<std::pair<Orders, Orders>> expected = {
        {{2, 4}, {8}},     {{8}, {2, 4}}, {{8}, {8}},     {{3, 7, 15}, {5, 7}},
        {{7}, {2, 42}},    {{42}, {3}},   {{42}, {2, 42}},
    };
    for (std::size_t i = 0; i < 7; ++i) {
        EXPECT_EQ(r.rows[i].x_orders, expected[i].first) << "variant " << i + 1;
        EXPECT_EQ(r.rows[i].y_orders, expected[i].second) << "variant " << i + 1;
        EXPECT_FALSE(r.rows[i].positive_dimensional);
    }
    EXPECT_EQ(r.rows[0].points.size(), 2u);
    EXPECT_EQ(r.rows[3].points.size(), 5u);
    EXPECT_EQ(r.element_orders(), (Orders{7, 8, 15, 42}));
    EXPECT_EQ(r.points.size(), 14u);
    EXPECT_TRUE(r.complete());
}

TEST(Solve, G2PointOnX11Curve) {
    const CycloSolveReport r = solve(g2_adjoint_poly());
    const CycloPoint p{42, 1, 11, 42, 42};
    const auto it = std::find(r.points.begin(), r.points.end(), p);
    ASSERT_NE(it, r.points.end());
    const auto& who = r.variant_attribution[static_cast<std::size_t>(it - r.points.begin())];
    EXPECT_NE(std::find(who.begin(), who.end(), 7), who.end());
    EXPECT_EQ(r.orbit_sizes[static_cast<std::size_t>(it - r.points.begin())], 12);
}

TEST(Solve, G2GaloisClosed) {
    const BiLaurentPoly h = g2_adjoint_poly();
    for (const auto& p : solve(h).points)
        for (std::int64_t j = 1; j < p.modulus; ++j)
            if (std::gcd(j, p.modulus) == 1) EXPECT_TRUE(eval_at_roots(h, p.modulus, j * p.a, j * p.b).is_zero());
}

TEST(Solve, G2AgreesWithBruteForce) {
    const BiLaurentPoly h = g2_adjoint_poly();
    const CycloSolveReport r = solve(h);
    EXPECT_EQ(brute_force_zeros(h, 90), up_to(r.points, 90));
}

// Zeros on the subgroup (t, t^k) are the cyclotomic factors of H(t, t^k).
TEST(Solve, G2AgreesWithRestrictions) {
    const BiLaurentPoly h = g2_adjoint_poly();
    const CycloSolveReport r = solve(h);
    for (std::int64_t k = -6; k <= 12; ++k) {
        std::set<std::int64_t> from_points;
        for (const auto& p : r.points)
            if (nt::mod(p.b - k * p.a, p.modulus) == 0) from_points.insert(p.order_x);
        const auto idx = cyclo_factor(h.univariate_restrict(1, k)).indices();
        EXPECT_EQ(from_points, std::set<std::int64_t>(idx.begin(), idx.end())) << "k = " << k;
    }
    EXPECT_EQ(cyclo_factor(h.univariate_restrict(1, 11)).indices(), (Orders{8, 42}));
}

TEST(Solve, ParallelMatchesSerial) {
    const BiLaurentPoly h = g2_adjoint_poly();
    const CycloSolveReport a = solve(h, true), b = solve(h, false);
    EXPECT_EQ(a.points, b.points);
    EXPECT_EQ(a.variant_attribution, b.variant_attribution);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].x_orders, b.rows[i].x_orders);
        EXPECT_EQ(a.rows[i].points, b.rows[i].points);
    }
}

TEST(Solve, SinglePoint) {
    const CycloSolveReport r = solve(parse_bilaurent("x + y - 2"));
    ASSERT_EQ(r.points.size(), 1u);
    EXPECT_EQ(r.points[0], (CycloPoint{1, 0, 0, 1, 1}));
    EXPECT_TRUE(r.complete());
}

TEST(Solve, PositiveDimensional) {
    const CycloSolveReport r = solve(parse_bilaurent("x - y"));
    EXPECT_EQ(r.positive_dimensional, (std::vector<int>{3, 4, 7}));
    EXPECT_FALSE(r.complete());
}

TEST(Solve, DegenerateInputs) {
    EXPECT_THROW(solve(BiLaurentPoly{}), ZeroPolynomial);
    const CycloSolveReport c = solve(BiLaurentPoly::constant(5));
    EXPECT_TRUE(c.points.empty());
    EXPECT_TRUE(c.complete());
    EXPECT_TRUE(solve(parse_bilaurent("x^2 + x + 1")).degenerate_curve);
    EXPECT_TRUE(solve(parse_bilaurent("y^3 - 1")).degenerate_curve);
    EXPECT_FALSE(solve(parse_bilaurent("x + 3")).degenerate_curve);
}

TEST(Solve, RandomSparseAgreesWithBruteForce) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> e(-2, 3), nterms(3, 5), sgn(0, 1);
    int tried = 0, with_points = 0;
    while (tried < 25) {
        BiLaurentPoly h;
        for (int k = nterms(rng); k > 0; --k) h += BiLaurentPoly::monomial(sgn(rng) ? 1 : -1, e(rng), e(rng));
        if (h.is_zero() || h.min_x() == h.max_x() || h.min_y() == h.max_y()) continue;
        const CycloSolveReport r = solve(h);
        if (!r.complete()) continue;
        ++tried;
        for (const auto& p : r.points) EXPECT_TRUE(eval_at_roots(h, p.modulus, p.a, p.b).is_zero());
        EXPECT_EQ(brute_force_zeros(h, 36), up_to(r.points, 36)) << h.to_string();
        with_points += !r.points.empty();
    }
    EXPECT_GT(with_points, 5);
}
