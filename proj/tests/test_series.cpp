#include "qverify/series.hpp"

#include <random>

#include <gtest/gtest.h>

#include "qverify/mock.hpp"
#include "qverify/theta.hpp"

namespace qv {
namespace {

Series q_pow_series(std::int64_t e) { return Series::monomial(Monomial::q_pow(e)); }

Series random_series(std::mt19937_64& rng, Series::Exp prec) {
    std::uniform_int_distribution<std::int64_t> val(-3, 3);
    std::uniform_int_distribution<int> num(-4, 4);
    const std::int64_t lo = val(rng);
    std::vector<CycNum> c;
    for (std::int64_t e = lo; e < prec; ++e) c.push_back(CycNum(num(rng)));
    return Series::from_window(lo, prec, std::move(c));
}

TEST(Series, AddExamples) {
    const Series one = Series::constant(CycNum(1));
    const Series a = one + q_pow_series(1);           // 1 + q
    const Series b = -one + q_pow_series(1);          // -1 + q
    const Series sum = a + b;
    EXPECT_EQ(sum.coeff(0), CycNum(0));
    EXPECT_EQ(sum.coeff(1), CycNum(2));
    EXPECT_EQ(sum.val(), 1);
}

// Precision combination contract: prec(a + b) = min(prec_a, prec_b).
TEST(Series, AddPrecisionContract) {
    std::mt19937_64 rng(3);
    const Series a = random_series(rng, 10);
    const Series b = random_series(rng, 5);
    EXPECT_EQ((a + b).prec(), 5);
    EXPECT_EQ((a * b).prec(), std::min(10 + b.val(), 5 + a.val()));
}

TEST(Series, OmegaCoefficientsAdd) {
    const Series a = Series::monomial(Monomial(CycNum::omega(), 1));
    const Series b = Series::monomial(Monomial(CycNum::omega().pow(2), 1));
    const Series s = a + b;
    EXPECT_EQ(s.coeff(1), CycNum(-1)); // w + w^2 = -1
}

TEST(Series, MulExamples) {
    const Series one = Series::constant(CycNum(1));
    const Series a = one - q_pow_series(1);
    const Series b = one + q_pow_series(1);
    const Series p = a * b; // 1 - q^2
    EXPECT_EQ(p.coeff(0), CycNum(1));
    EXPECT_EQ(p.coeff(1), CycNum(0));
    EXPECT_EQ(p.coeff(2), CycNum(-1));

    EXPECT_EQ((q_pow_series(-1) * q_pow_series(1)).coeff(0), CycNum(1)); // Laurent
}

TEST(Series, MockTimesThetaConstantTerm) {
    // J_{1,2} * phi(q): both series from their own generators; constant term 1.
    const Series j12 = J_ab(1, 2, 20);
    const Series phi = mock_series(MockKind::phi, 20);
    EXPECT_EQ((j12 * phi).coeff(0), CycNum(1));
}

TEST(Series, DivExamples) {
    const Series one = Series::constant(CycNum(1), 10);
    const Series den = Series::constant(CycNum(1), 10) - q_pow_series(1).truncated(10);
    const Series g = one / den; // geometric series
    for (int e = 0; e < 8; ++e) EXPECT_EQ(g.coeff(e), CycNum(1));

    EXPECT_EQ((q_pow_series(2).truncated(10) / q_pow_series(1).truncated(10)).coeff(1), CycNum(1));

    // scalar division lifts a field inversion
    const CycNum d = CycNum::omega() - CycNum::omega().pow(2);
    const Series s = Series::constant(CycNum(5), 10);
    EXPECT_EQ((s / Series::constant(d, 10)).coeff(0), CycNum(5) * d.inverse());
}

TEST(Series, DivErrors) {
    const Series z = Series::zero(6);
    const Series a = Series::constant(CycNum(1), 6);
    EXPECT_THROW(a / z, CannotDetermineValuation);
    EXPECT_THROW(a / Series::zero(), DivisionByZero);
}

TEST(Series, SubstExamples) {
    std::vector<CycNum> c = {CycNum(1), CycNum(1), CycNum(1)};
    const Series s = Series::from_window(0, 3, std::move(c)); // 1 + q + q^2
    const Series t = s.subst(Monomial::q_pow(9));
    EXPECT_EQ(t.coeff(0), CycNum(1));
    EXPECT_EQ(t.coeff(9), CycNum(1));
    EXPECT_EQ(t.coeff(18), CycNum(1));
    EXPECT_EQ(t.coeff(5), CycNum(0));
    EXPECT_EQ(t.prec(), 9 * (3 - 1) + 1);

    const Series u = q_pow_series(1).truncated(5).subst(Monomial(CycNum::omega(), 1));
    EXPECT_EQ(u.coeff(1), CycNum::omega());

    EXPECT_THROW(s.subst(Monomial::q_pow(0)), InvalidSubstitution);
    EXPECT_THROW(s.subst(Monomial::q_pow(-2)), InvalidSubstitution);
}

// Galois-stable combination of omega-substituted series has rational
// coefficients.
TEST(Series, OmegaTwinCombinationIsRational) {
    const Series phi = mock_series(MockKind::phi, 12);
    const Series a = phi.subst(Monomial(CycNum::omega(), 1));
    const Series b = phi.subst(Monomial(CycNum::omega().pow(2), 1));
    const CycNum d = CycNum::omega() - CycNum::omega().pow(2);
    const Series comb = (a - b).scaled(d.inverse());
    for (int e = 0; e < 12; ++e) EXPECT_TRUE(comb.coeff(e).is_rational()) << e;
}

TEST(Series, EqToExamples) {
    const Series a = (Series::constant(CycNum(1)) + q_pow_series(1)).truncated(12);
    const Series b = (Series::constant(CycNum(1)) + q_pow_series(1)).truncated(12);
    EXPECT_FALSE(Series::eq_to(a, b, 10).has_value());

    const Series c = (Series::constant(CycNum(1)) + q_pow_series(1).scaled(CycNum(2))).truncated(12);
    auto mm = Series::eq_to(a, c, 1);
    ASSERT_TRUE(mm.has_value());
    EXPECT_EQ(mm->exp, 1);
    EXPECT_EQ(mm->lhs, CycNum(1));
    EXPECT_EQ(mm->rhs, CycNum(2));

    EXPECT_THROW(Series::eq_to(a.truncated(5), b, 10), PrecisionTooLow);
}

TEST(Series, RingLawsRandomized) {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        const Series a = random_series(rng, 8);
        const Series b = random_series(rng, 8);
        const Series c = random_series(rng, 8);
        const Series lhs = (a * b) * c;
        const Series rhs = a * (b * c);
        const auto order = std::min(lhs.prec(), rhs.prec()) - 1;
        EXPECT_FALSE(Series::eq_to(lhs, rhs, order).has_value());
        const Series dl = a * (b + c);
        const Series dr = a * b + a * c;
        const auto order2 = std::min(dl.prec(), dr.prec()) - 1;
        EXPECT_FALSE(Series::eq_to(dl, dr, order2).has_value());
    }
}

TEST(Series, DivMulRoundTrip) {
    std::mt19937_64 rng(19);
    for (int iter = 0; iter < 30; ++iter) {
        const Series a = random_series(rng, 9);
        Series b = random_series(rng, 9);
        if (b.is_zero_to_prec()) continue;
        const Series q = a / b;
        const Series back = q * b;
        const auto order = std::min(back.prec(), a.prec()) - 1;
        if (order < std::min(a.val(), back.val())) continue;
        EXPECT_FALSE(Series::eq_to(back, a.truncated(order + 1), order).has_value());
    }
}

TEST(Series, SubstComposition) {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 20; ++iter) {
        const Series a = random_series(rng, 7);
        const Series two_step = a.subst(Monomial::q_pow(2)).subst(Monomial::q_pow(3));
        const Series one_step = a.subst(Monomial::q_pow(6));
        const auto order = std::min(two_step.prec(), one_step.prec()) - 1;
        EXPECT_FALSE(Series::eq_to(two_step, one_step, order).has_value());
    }
}

// The three expansion branches of 1/(1-w) agree with literal division by
// the two-term series 1 - w, across |exp| <= 3 and all two dozen signed
// unit choices.
TEST(Series, GeometricBranchesAgreeWithDivision) {
    const Series::Exp P = 24;
    for (int sign = 0; sign < 2; ++sign) {
        for (int t = 0; t < 12; ++t) {
            for (std::int64_t e = -3; e <= 3; ++e) {
                Monomial w = Monomial(CycNum::zeta_pow(t), e);
                if (sign) w = w.negated();
                if (w.is_one()) {
                    EXPECT_THROW(geom_inv_one_minus(w, P), NonGenericPole);
                    continue;
                }
                const Series g = geom_inv_one_minus(w, P);
                const Series lit =
                    (Series::constant(CycNum(1)) - Series::monomial(w)).truncated(P + 8);
                const Series d = Series::div_to(Series::constant(CycNum(1), P + 8), lit, P);
                const auto order = std::min(g.prec(), d.prec()) - 1;
                EXPECT_FALSE(Series::eq_to(g, d, order).has_value())
                    << "unit log " << t << " sign " << sign << " exp " << e;
            }
        }
    }
}

TEST(Series, GeometricExamples) {
    const Series g = geom_inv_one_minus(Monomial::q_pow(1), 6);
    for (int e = 0; e < 6; ++e) EXPECT_EQ(g.coeff(e), CycNum(1));

    const Series h = geom_inv_one_minus(Monomial::q_pow(-1), 6);
    EXPECT_EQ(h.coeff(0), CycNum(0));
    for (int e = 1; e < 6; ++e) EXPECT_EQ(h.coeff(e), CycNum(-1));

    const Series c = geom_inv_one_minus(Monomial(CycNum::omega(), 0), 4);
    EXPECT_EQ(c.coeff(0), (CycNum(1) - CycNum::omega()).inverse());
}

TEST(Series, Rendering) {
    const Series s = Series::constant(CycNum(1), 5) - q_pow_series(2).truncated(5);
    EXPECT_EQ(s.to_string(), "1 - q^2 + O(q^5)");
    EXPECT_EQ(Series::zero(3).to_string(), "0 + O(q^3)");
    const Series t = Series::monomial(Monomial(CycNum::omega(), 3), 9);
    EXPECT_EQ(t.to_string(), "(-1 + z^2)*q^3 + O(q^9)");
}

} // namespace
} // namespace qv
