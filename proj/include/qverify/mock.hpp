#ifndef QVERIFY_MOCK_HPP
#define QVERIFY_MOCK_HPP

#include <cstdint>

#include "qverify/monomial.hpp"
#include "qverify/series.hpp"
#include "qverify/theta.hpp"

namespace qv {

/// The four tenth-order mock theta functions.
enum class MockKind { phi, psi, bigX, chi };

inline const char* mock_name(MockKind k) {
    switch (k) {
        case MockKind::phi: return "phi";
        case MockKind::psi: return "psi";
        case MockKind::bigX: return "X";
        case MockKind::chi: return "chi";
    }
    return "?";
}

/// Eulerian series:
///   phi(q) = sum_n q^{C(n+1,2)} / (q;q^2)_{n+1}
///   psi(q) = sum_n q^{C(n+2,2)} / (q;q^2)_{n+1}
///   X(q)   = sum_n (-1)^n q^{n^2} / (-q;q)_{2n}
///   chi(q) = sum_n (-1)^n q^{(n+1)^2} / (-q;q)_{2n+1}
/// Each term is the numerator monomial times the inverse of a finite
/// Pochhammer product; the n-th term has valuation equal to the numerator
/// exponent, so the sum truncates once that reaches prec.
inline Series mock_series(MockKind kind, Series::Exp prec) {
    const Monomial x_odd = Monomial::q_pow(1);           // q, stepped by q^2
    const Monomial x_neg = Monomial::q_pow(1).negated(); // -q, stepped by q
    const Base step2 = Base::q_pow(2);
    const Base step1 = Base::q_pow(1);

    Series sum = Series::zero(prec);
    for (std::int64_t n = 0;; ++n) {
        std::int64_t v = 0;
        Series den;
        bool negate = false;
        switch (kind) {
            case MockKind::phi:
                v = binom2(n + 1);
                if (v >= prec) return sum.truncated(prec);
                den = poch_finite(x_odd, step2, n + 1, prec - v);
                break;
            case MockKind::psi:
                v = binom2(n + 2);
                if (v >= prec) return sum.truncated(prec);
                den = poch_finite(x_odd, step2, n + 1, prec - v);
                break;
            case MockKind::bigX:
                v = n * n;
                if (v >= prec) return sum.truncated(prec);
                den = poch_finite(x_neg, step1, 2 * n, prec - v);
                negate = (n % 2) != 0;
                break;
            case MockKind::chi:
                v = (n + 1) * (n + 1);
                if (v >= prec) return sum.truncated(prec);
                den = poch_finite(x_neg, step1, 2 * n + 1, prec - v);
                negate = (n % 2) != 0;
                break;
        }
        Series term = den.inverse().shifted(v);
        if (negate) term = -term;
        sum = sum + term;
    }
}

} // namespace qv

#endif
