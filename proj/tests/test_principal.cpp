#include <charzeros/cyclo_element.hpp>
#include <charzeros/parser.hpp>
#include <charzeros/principal.hpp>

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace charzeros;

namespace {

RootSystem rs(const char* name) { return RootSystem::build(CartanType::parse(name)); }

std::vector<DominantWeight> random_weights(int rank, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> c(0, 3);
    std::vector<DominantWeight> out;
    for (int i = 0; i < count; ++i) {
        IntVec w(static_cast<std::size_t>(rank));
        for (auto& v : w) v = c(rng);
        out.emplace_back(w);
    }
    return out;
}

}  // namespace

TEST(PrincipalCharacter, G2AdjointInU) {
    const RootSystem g2 = rs("G2");
    const PrincipalCharacter pc = principal_character(g2, g2.adjoint_weight());
    ASSERT_TRUE(pc.poly_u());
    EXPECT_EQ(*pc.poly_u(), (cyclotomic(7) * cyclotomic(8)).shifted(-5));
    const std::vector<int> coeffs{1, 1, 1, 1, 2, 2, 2, 1, 1, 1, 1};
    for (int k = 0; k < 11; ++k) EXPECT_EQ(pc.poly_u()->coeff(5 - k), coeffs[static_cast<std::size_t>(k)]);
    EXPECT_EQ(pc.dimension(), 14);
}

TEST(PrincipalCharacter, A1IsSl2Character) {
    const RootSystem a1 = rs("A1");
    for (std::int64_t n = 1; n <= 25; ++n) {
        const PrincipalCharacter pc = principal_character(a1, DominantWeight({n - 1}));
        // (t^n - t^-n) = (t - t^-1) * chi
        const LaurentPoly lhs = LaurentPoly::from_terms({{n, Integer(1)}, {-n, Integer(-1)}});
        EXPECT_EQ(pc.poly_t * parse_laurent("t - t^-1"), lhs) << n;
    }
}

TEST(PrincipalCharacter, TrivialWeightIsOne) {
    for (CartanType t : all_simple_types()) {
        const RootSystem r = RootSystem::build(t);
        EXPECT_EQ(principal_character(r, DominantWeight::zero(t.rank)).poly_t, LaurentPoly::constant(1)) << t.name();
    }
}

TEST(PrincipalCharacter, SymmetricPowersOfStandardOfSLn) {
    for (int n = 1; n <= 6; ++n) {
        const RootSystem r = RootSystem::build(CartanType::make(Family::A, n));
        for (int k = 0; k <= 5; ++k) {
            IntVec w(static_cast<std::size_t>(n), 0);
            w[0] = k;
            EXPECT_EQ(principal_character(r, DominantWeight(w)).poly_t, oracle::sym_power_principal(n, k)) << "A" << n << " k=" << k;
        }
    }
}

TEST(PrincipalCharacter, InvariantsOnRandomWeights) {
    for (CartanType t : all_simple_types(6)) {
        const RootSystem r = RootSystem::build(t);
        for (const auto& w : random_weights(t.rank, 6, 31 * t.rank + static_cast<unsigned>(t.family))) {
            const PrincipalCharacter pc = principal_character(r, w);
            EXPECT_EQ(pc.poly_t.coefficient_sum(), r.weyl_dim(w)) << t.name();
            EXPECT_EQ(pc.dimension(), r.weyl_dim(w));
            EXPECT_EQ(pc.poly_t.reflected(), pc.poly_t);
            EXPECT_EQ(pc.poly_t.max_exponent(), pc.shift);
            if (pc.epsilon_trivial) EXPECT_TRUE(pc.poly_t.only_even_exponents()) << t.name();
            bool strict = false;
            for (std::size_t k = 0; k < pc.numerator_exponents.size(); ++k) {
                EXPECT_GE(pc.numerator_exponents[k], pc.denominator_exponents[k]);
                strict = strict || pc.numerator_exponents[k] > pc.denominator_exponents[k];
            }
            EXPECT_EQ(strict, !w.is_zero());
        }
    }
}

TEST(ExplicitZero, A1) {
    EXPECT_EQ(explicit_zero_order(rs("A1"), DominantWeight({1})), 4);
    EXPECT_TRUE(CycloElement::from_laurent(4, parse_laurent("t + t^-1")).is_zero());
}

TEST(ExplicitZero, G2Adjoint) {
    const RootSystem g2 = rs("G2");
    const std::int64_t m = explicit_zero_order(g2, g2.adjoint_weight());
    EXPECT_EQ(m, 16);
    EXPECT_EQ(cyclo_factor(principal_character(g2, g2.adjoint_weight()).poly_t).multiplicity(m), 1);
}

TEST(ExplicitZero, A2Standard) {
    EXPECT_EQ(explicit_zero_order(rs("A2"), DominantWeight({1, 0})), 6);
    EXPECT_EQ(cyclo_factor(parse_laurent("t^2 + 1 + t^-2")).indices(), (std::vector<std::int64_t>{3, 6}));
}

TEST(ExplicitZero, ZeroWeightThrows) { EXPECT_THROW(explicit_zero_order(rs("B2"), DominantWeight({0, 0})), ZeroWeight); }

TEST(PrimePowerZero, Examples) {
    EXPECT_EQ(prime_power_zero({2}, {1}), (PrimePowerZero{2, 1}));
    EXPECT_EQ(prime_power_zero({6, 4}, {3, 2}), (PrimePowerZero{2, 1}));
    EXPECT_EQ(exponent_quotient({6, 4}, {3, 2}), parse_laurent("t^5 + t^3 + t^2 + 1"));
    const RootSystem g2 = rs("G2");
    const PrincipalCharacter pc = principal_character(g2, g2.adjoint_weight());
    const PrimePowerZero z = prime_power_zero(pc.numerator_exponents, pc.denominator_exponents);
    EXPECT_TRUE(z.order() == 7 || z.order() == 8);
    EXPECT_TRUE(divide_by_cyclotomic(exponent_quotient(pc.numerator_exponents, pc.denominator_exponents), z.order()));
}

TEST(PrimePowerZero, Errors) {
    EXPECT_THROW(prime_power_zero({2, 3}, {6}), ProductNotLarger);
    EXPECT_THROW(prime_power_zero({1}, {2}), ProductNotLarger);
    EXPECT_THROW(prime_power_zero({0}, {1}), DomainError);
}

TEST(PrimePowerZero, ValuationOfQuotientIsPositive) {
    // w_m counts Phi_{l^m} in prod (t^n' - 1) / prod (t^n - 1), so it must show up in the
    // numerator more often than in the denominator.
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> v(1, 30), len(1, 4);
    for (int i = 0; i < 300; ++i) {
        IntVec num, den;
        for (int k = len(rng); k > 0; --k) num.push_back(v(rng));
        for (int k = len(rng); k > 0; --k) den.push_back(v(rng));
        Integer pn = 1, pd = 1;
        for (auto x : num) pn *= x;
        for (auto x : den) pd *= x;
        if (pn <= pd) continue;
        const PrimePowerZero z = prime_power_zero(num, den);
        EXPECT_TRUE(nt::is_prime(z.prime));
        LaurentPoly top = LaurentPoly::constant(1), bottom = LaurentPoly::constant(1);
        for (auto x : num) top = top.times_binomial(x);
        for (auto x : den) bottom = bottom.times_binomial(x);
        EXPECT_GT(cyclo_factor(top).multiplicity(z.order()), cyclo_factor(bottom).multiplicity(z.order()));
    }
}

TEST(TensorIdentity, Examples) {
    EXPECT_TRUE(tensor_identity_check(rs("A1"), DominantWeight({1})));
    const RootSystem g2 = rs("G2");
    EXPECT_TRUE(tensor_identity_check(g2, g2.adjoint_weight()));
    for (const auto& w : random_weights(2, 10, 5)) EXPECT_TRUE(tensor_identity_check(rs("B2"), w));
}

TEST(TensorIdentity, DetectsWrongCharacter) {
    const RootSystem b2 = rs("B2");
    PrincipalCharacter pc = principal_character(b2, DominantWeight({1, 1}));
    pc.poly_t = pc.poly_t + LaurentPoly::constant(1);
    EXPECT_FALSE(tensor_identity_check(pc));
}

TEST(Sl2Character, Values) {
    EXPECT_EQ(sl2_character(1), LaurentPoly::constant(1));
    EXPECT_EQ(sl2_character(4), parse_laurent("t^3 + t + t^-1 + t^-3"));
    EXPECT_THROW(sl2_character(0), DomainError);
}

TEST(ZeroOrders, G2Adjoint) {
    const RootSystem g2 = rs("G2");
    const ZeroOrders z = zero_orders(principal_character(g2, g2.adjoint_weight()));
    EXPECT_EQ(z.t_orders, (std::vector<std::int64_t>{7, 14, 16}));
    EXPECT_TRUE(z.element_orders_in_u);
    EXPECT_EQ(z.element_orders, (std::vector<std::int64_t>{7, 8}));
}

TEST(ZeroOrders, A1) {
    const ZeroOrders z = zero_orders(principal_character(rs("A1"), DominantWeight({1})));
    EXPECT_EQ(z.t_orders, (std::vector<std::int64_t>{4}));
    EXPECT_FALSE(z.element_orders_in_u);
    EXPECT_EQ(z.element_orders, (std::vector<std::int64_t>{4}));
}

TEST(ZeroOrders, A2Standard) {
    const ZeroOrders z = zero_orders(principal_character(rs("A2"), DominantWeight({1, 0})));
    EXPECT_EQ(z.t_orders, (std::vector<std::int64_t>{3, 6}));
    EXPECT_EQ(z.element_orders, (std::vector<std::int64_t>{3}));
}

TEST(ZeroOrders, ZeroWeightThrows) {
    EXPECT_THROW(zero_orders(principal_character(rs("A1"), DominantWeight({0}))), ZeroWeight);
}

TEST(ZeroOrders, E8LargeWeight) {
    const RootSystem e8 = rs("E8");
    const PrincipalCharacter pc = principal_character(e8, DominantWeight(IntVec(8, 3)));
    const ZeroOrders z = zero_orders(pc);
    EXPECT_EQ(z.factorization.reconstruct(), pc.poly_t);
    EXPECT_EQ(pc.poly_t.coefficient_sum(), e8.weyl_dim(DominantWeight(IntVec(8, 3))));
}
