#include "qverify/mock.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qverify/appell.hpp"
#include "qverify/dn.hpp"
#include "qverify/theta.hpp"

namespace qv {
namespace {

using test::CoeffMap;
using test::cm_add;
using test::cm_div;
using test::cm_matches;
using test::cm_one;
using test::cm_shift;
using test::naive_poch;

void expect_eq_series(const Series& a, const Series& b, std::int64_t order,
                      const std::string& what) {
    auto mm = Series::eq_to(a, b, order);
    EXPECT_FALSE(mm.has_value()) << what << ": mismatch at q^" << (mm ? mm->exp : 0)
                                 << (mm ? " " + mm->lhs.to_string() + " vs " + mm->rhs.to_string()
                                        : "");
}

/// Brute-force Eulerian summation on coefficient maps.
CoeffMap naive_mock(MockKind kind, std::int64_t prec) {
    CoeffMap sum;
    for (std::int64_t n = 0;; ++n) {
        std::int64_t v = 0;
        CoeffMap den;
        bool negate = false;
        switch (kind) {
            case MockKind::phi:
                v = binom2(n + 1);
                den = naive_poch(Monomial::q_pow(1), Base::q_pow(2), n + 1, prec);
                break;
            case MockKind::psi:
                v = binom2(n + 2);
                den = naive_poch(Monomial::q_pow(1), Base::q_pow(2), n + 1, prec);
                break;
            case MockKind::bigX:
                v = n * n;
                den = naive_poch(Monomial::q_pow(1).negated(), Base::q_pow(1), 2 * n, prec);
                negate = (n % 2) != 0;
                break;
            case MockKind::chi:
                v = (n + 1) * (n + 1);
                den = naive_poch(Monomial::q_pow(1).negated(), Base::q_pow(1), 2 * n + 1, prec);
                negate = (n % 2) != 0;
                break;
        }
        if (v >= prec) return sum;
        CoeffMap term = cm_shift(cm_div(cm_one(), den, prec - v), v);
        if (negate)
            for (auto& [e, c] : term) c = -c;
        sum = cm_add(sum, term);
    }
}

TEST(Mock, EulerianOracle) {
    for (MockKind k : {MockKind::phi, MockKind::psi, MockKind::bigX, MockKind::chi}) {
        const Series s = mock_series(k, 26);
        EXPECT_TRUE(cm_matches(naive_mock(k, 26), s, 25)) << mock_name(k);
    }
}

TEST(Mock, LeadingCoefficients) {
    // phi = 1 + 2q + 2q^2 + 3q^3 + ...
    const Series phi = mock_series(MockKind::phi, 8);
    EXPECT_EQ(phi.coeff(0), CycNum(1));
    EXPECT_EQ(phi.coeff(1), CycNum(2));
    EXPECT_EQ(phi.coeff(2), CycNum(2));
    EXPECT_EQ(phi.coeff(3), CycNum(3));
    // psi = q + q^2 + 2q^3 + ...
    const Series psi = mock_series(MockKind::psi, 8);
    EXPECT_EQ(psi.val(), 1);
    EXPECT_EQ(psi.coeff(1), CycNum(1));
    EXPECT_EQ(psi.coeff(2), CycNum(1));
    EXPECT_EQ(psi.coeff(3), CycNum(2));
    // X has constant term 1; every chi summand has positive valuation.
    EXPECT_EQ(mock_series(MockKind::bigX, 6).coeff(0), CycNum(1));
    const Series chi = mock_series(MockKind::chi, 6);
    EXPECT_EQ(chi.coeff(0), CycNum(0));
    EXPECT_EQ(chi.val(), 1);
}

// The Appell-Lerch representations of the four functions.
TEST(Mock, AppellLerchForms) {
    const std::int64_t order = 50;
    const std::int64_t P = order + 3;
    const Base q5 = Base::q_pow(5);
    const Base q10 = Base::q_pow(10);
    {
        const Series rhs = -(m_series(Monomial::q_pow(1), q10, Monomial::q_pow(1), P) +
                             m_series(Monomial::q_pow(1), q10, Monomial::q_pow(2), P))
                                .shifted(-1);
        expect_eq_series(mock_series(MockKind::phi, P), rhs, order, "phi");
    }
    {
        const Series rhs = -(m_series(Monomial::q_pow(3), q10, Monomial::q_pow(1), P) +
                             m_series(Monomial::q_pow(3), q10, Monomial::q_pow(3), P));
        expect_eq_series(mock_series(MockKind::psi, P), rhs, order, "psi");
    }
    {
        const Series rhs = m_series(Monomial::q_pow(2).negated(), q5, Monomial::q_pow(1), P) +
                           m_series(Monomial::q_pow(2).negated(), q5, Monomial::q_pow(4), P);
        expect_eq_series(mock_series(MockKind::bigX, P), rhs, order, "X");
    }
    {
        const Series rhs = m_series(Monomial::q_pow(1).negated(), q5, Monomial::q_pow(2), P) +
                           m_series(Monomial::q_pow(1).negated(), q5, Monomial::q_pow(3), P);
        expect_eq_series(mock_series(MockKind::chi, P), rhs, order, "chi");
    }
}

Series quotient(std::int64_t P, const std::vector<Series>& nums,
                const std::vector<Series>& dens) {
    Series n = Series::constant(CycNum(1));
    for (const auto& s : nums) n = n * s;
    Series d = Series::constant(CycNum(1));
    for (const auto& s : dens) d = d * s;
    return Series::div_to(n, d, P);
}

// Two single-quotient evaluations of D_2 at z' = -1.
TEST(Mock, D2AtMinusOne) {
    const std::int64_t order = 40;
    const Base q5 = Base::q_pow(5);
    {
        const Series lhs = dn_def(
            DnArg{2, Monomial::q_pow(2).negated(), q5, Monomial::q_pow(1), Monomial::minus_one()},
            order + 1);
        const Series rhs = compute_to_prec(order + 1, [&](Series::Exp P) {
            const Series j10 = J_m(10, P);
            return quotient(P, {j10, j10, j10, J_ab(5, 10, P), Jbar_ab(12, 20, P)},
                            {Jbar_ab(2, 5, P), Jbar_ab(0, 20, P), J_ab(1, 10, P), J_ab(4, 10, P)})
                .shifted(-2);
        });
        expect_eq_series(lhs, rhs, order, "D_2(-q^2,q^5,q,-1)");
    }
    {
        const Series lhs = dn_def(
            DnArg{2, Monomial::q_pow(2).negated(), q5, Monomial::q_pow(4), Monomial::minus_one()},
            order + 1);
        const Series rhs = compute_to_prec(order + 1, [&](Series::Exp P) {
            const Series j10 = J_m(10, P);
            return quotient(P,
                            {j10, j10, j10, J_ab(5, 10, P), J_ab(3, 10, P), Jbar_ab(4, 20, P)},
                            {Jbar_ab(1, 5, P), Jbar_ab(0, 20, P), J_ab(1, 10, P), J_ab(1, 10, P),
                             J_ab(4, 10, P)})
                .shifted(-2);
        });
        expect_eq_series(lhs, rhs, order, "D_2(-q^2,q^5,q^4,-1)");
    }
}

} // namespace
} // namespace qv
