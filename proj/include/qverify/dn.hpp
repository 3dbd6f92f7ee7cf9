#ifndef QVERIFY_DN_HPP
#define QVERIFY_DN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qverify/appell.hpp"
#include "qverify/errors.hpp"
#include "qverify/monomial.hpp"
#include "qverify/series.hpp"
#include "qverify/theta.hpp"

namespace qv {

/// Arguments of D_n(x, q, z, z').
struct DnArg {
    std::int64_t n;
    Monomial x;
    Base base;
    Monomial z;
    Monomial zp;
};

/// Definitional form:
///   D_n(x,q,z,z') = m(x,q,z)
///     - sum_{r=0}^{n-1} q^{-C(r+1,2)} (-x)^r m(-q^{C(n,2)-nr} (-x)^n, q^{n^2}, z').
/// All q-powers are powers of the base monomial, which may carry a unit.
inline Series dn_def(const DnArg& a, Series::Exp prec) {
    if (a.n < 1) throw UnsupportedArgument("D_n requires n >= 1");
    const Monomial neg_x = a.x.negated();
    const Base inner_base = a.base.stretch(a.n * a.n);
    Series result = m_series(a.x, a.base, a.z, prec);
    for (std::int64_t r = 0; r < a.n; ++r) {
        const Monomial coef = a.base.pow(-binom2(r + 1)) * neg_x.pow(r);
        const Monomial inner_x =
            (a.base.pow(binom2(a.n) - a.n * r) * neg_x.pow(a.n)).negated();
        const Series inner = m_series(inner_x, inner_base, a.zp, prec - coef.exp());
        result = result - inner.mul_mono(coef);
    }
    return result.truncated(prec);
}

/// Theta-quotient closed form:
///   D_n(x,q,z,z') = z' J_n^3 sum_{r=0}^{n-1}
///     q^{C(r,2)} (-xz)^r j(-q^{C(n,2)+r} (-x)^n z z'; q^n) j(q^{nr} z^n/z'; q^{n^2})
///     / [ j(xz;q) j(z';q^{n^2}) j(-q^{C(n,2)} (-x)^n z'; q^n) j(q^r z; q^n) ].
inline Series dn_closed(const DnArg& a, Series::Exp prec) {
    if (a.n < 1) throw UnsupportedArgument("D_n requires n >= 1");
    const Monomial neg_x = a.x.negated();
    const Base base_n = a.base.stretch(a.n);
    const Base base_nn = a.base.stretch(a.n * a.n);
    const Monomial mx_n = neg_x.pow(a.n);

    const Monomial common_den[3] = {
        a.x * a.z,                                       // over base
        a.zp,                                            // over base^{n^2}
        (a.base.pow(binom2(a.n)) * mx_n * a.zp).negated() // over base^n
    };
    if (!theta_val(common_den[0], a.base) || !theta_val(common_den[1], base_nn) ||
        !theta_val(common_den[2], base_n))
        throw DegenerateParameters("dn_closed: a common denominator theta vanishes");
    for (std::int64_t r = 0; r < a.n; ++r)
        if (!theta_val(a.base.pow(r) * a.z, base_n))
            throw DegenerateParameters("dn_closed: denominator theta j(q^r z; q^n) vanishes");

    return compute_to_prec(prec, [&](Series::Exp P) {
        Series jn = euler_J(a.base, a.n, P);
        Series pref = (jn * jn * jn).mul_mono(a.zp);
        Series acc = Series::zero(Series::kExactPrec);
        for (std::int64_t r = 0; r < a.n; ++r) {
            const Monomial coef = a.base.pow(binom2(r)) * (a.x * a.z).negated().pow(r);
            const Monomial num1 = (a.base.pow(binom2(a.n) + r) * mx_n * a.z * a.zp).negated();
            const Monomial num2 = a.base.pow(a.n * r) * a.z.pow(a.n) / a.zp;
            Series num = theta_j(num1, base_n, P) * theta_j(num2, base_nn, P);
            num = num.mul_mono(coef);
            acc = acc + Series::div_to(num, theta_j(a.base.pow(r) * a.z, base_n, P), P);
        }
        Series den = theta_j(common_den[0], a.base, P) *
                     theta_j(common_den[1], base_nn, P) *
                     theta_j(common_den[2], base_n, P);
        return Series::div_to(pref * acc, den, P);
    });
}

/// Hand-specialized n = 2 closed form:
///   D_2(x,q,z,z') = z'J_2^3 / (j(xz;q) j(z';q^4)) *
///     [ j(-qx^2zz';q^2) j(z^2/z';q^4) / (j(-qx^2z';q^2) j(z;q^2))
///       - xz j(-q^2x^2zz';q^2) j(q^2z^2/z';q^4) / (j(-qx^2z';q^2) j(qz;q^2)) ].
inline Series d2_closed(const Monomial& x, const Base& base, const Monomial& z,
                        const Monomial& zp, Series::Exp prec) {
    const Base b2 = base.stretch(2);
    const Base b4 = base.stretch(4);
    const Monomial x2 = x.pow(2);
    const Monomial gd = (base.pow(1) * x2 * zp).negated(); // -q x^2 z'
    const Monomial dens[4] = {x * z, zp, gd, z};
    if (!theta_val(dens[0], base) || !theta_val(dens[1], b4) || !theta_val(dens[2], b2) ||
        !theta_val(dens[3], b2) || !theta_val(base.pow(1) * z, b2))
        throw DegenerateParameters("d2_closed: denominator theta vanishes");

    return compute_to_prec(prec, [&](Series::Exp P) {
        Series j2 = euler_J(base, 2, P);
        Series pref = (j2 * j2 * j2).mul_mono(zp);
        Series t1 = theta_j((base.pow(1) * x2 * z * zp).negated(), b2, P) *
                    theta_j(z.pow(2) / zp, b4, P);
        t1 = Series::div_to(t1, theta_j(gd, b2, P) * theta_j(z, b2, P), P);
        Series t2 = theta_j((base.pow(2) * x2 * z * zp).negated(), b2, P) *
                    theta_j(base.pow(2) * z.pow(2) / zp, b4, P);
        t2 = Series::div_to(t2, theta_j(gd, b2, P) * theta_j(base.pow(1) * z, b2, P), P);
        Series bracket = t1 - t2.mul_mono(x * z);
        Series den = theta_j(x * z, base, P) * theta_j(zp, b4, P);
        return Series::div_to(pref * bracket, den, P);
    });
}

/// Hand-specialized n = 3 closed form:
///   D_3(x,q,z,z') = z'J_3^3 / (j(xz;q) j(z';q^9) j(x^3z';q^3)) *
///     [ (1/z) j(x^3zz';q^3) j(z^3/z';q^9) / j(z;q^3)
///       - (x/q) j(qx^3zz';q^3) j(q^3z^3/z';q^9) / j(qz;q^3)
///       + (x^2z/q) j(q^2x^3zz';q^3) j(q^6z^3/z';q^9) / j(q^2z;q^3) ].
inline Series d3_closed(const Monomial& x, const Base& base, const Monomial& z,
                        const Monomial& zp, Series::Exp prec) {
    const Base b3 = base.stretch(3);
    const Base b9 = base.stretch(9);
    const Monomial x3 = x.pow(3);
    const Monomial z3 = z.pow(3);
    if (!theta_val(x * z, base) || !theta_val(zp, b9) || !theta_val(x3 * zp, b3))
        throw DegenerateParameters("d3_closed: denominator theta vanishes");
    for (std::int64_t r = 0; r < 3; ++r)
        if (!theta_val(base.pow(r) * z, b3))
            throw DegenerateParameters("d3_closed: denominator theta vanishes");

    return compute_to_prec(prec, [&](Series::Exp P) {
        Series j3 = euler_J(base, 3, P);
        Series pref = (j3 * j3 * j3).mul_mono(zp);
        auto quot = [&](std::int64_t r) {
            Series num = theta_j(base.pow(r) * x3 * z * zp, b3, P) *
                         theta_j(base.pow(3 * r) * z3 / zp, b9, P);
            return Series::div_to(num, theta_j(base.pow(r) * z, b3, P), P);
        };
        Series bracket = quot(0).mul_mono(z.inverse());
        bracket = bracket - quot(1).mul_mono(x / base.mono());
        bracket = bracket + quot(2).mul_mono(x.pow(2) * z / base.mono());
        Series den = theta_j(x * z, base, P) * theta_j(zp, b9, P) * theta_j(x3 * zp, b3, P);
        return Series::div_to(pref * bracket, den, P);
    });
}

} // namespace qv

#endif
