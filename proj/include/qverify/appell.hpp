#ifndef QVERIFY_APPELL_HPP
#define QVERIFY_APPELL_HPP

#include <cstdint>
#include <string>

#include "qverify/errors.hpp"
#include "qverify/monomial.hpp"
#include "qverify/series.hpp"
#include "qverify/theta.hpp"

namespace qv {

/// Arguments of the Appell-Lerch function m(x, q, z).
struct AppellArg {
    Monomial x;
    Base base;
    Monomial z;

    std::string to_string() const {
        return "m(" + x.to_dsl() + "; " + base.mono().to_dsl() + "; " + z.to_dsl() + ")";
    }
};

/// Constructive genericity check: the summand 1/(1 - base^{r-1} x z) has a
/// pole exactly when base^{r-1} x z = 1 for some integer r, and the theta
/// prefactor j(z; base) vanishes exactly when z lies in base^Z.
inline void check_appell_generic(const AppellArg& a) {
    if (!theta_val(a.z, a.base))
        throw PrefactorZero(a.to_string() + ": prefactor j(z; base) vanishes identically");
    const std::int64_t m = a.base.exp();
    const std::int64_t s = a.x.exp() + a.z.exp();
    if (s % m == 0) {
        const std::int64_t r = 1 - s / m;
        const int ulog = detail::mod12i(static_cast<std::int64_t>(a.base.ulog()) * (r - 1) +
                                        a.x.ulog() + a.z.ulog());
        if (ulog == 0)
            throw NonGenericPole(a.to_string() + " has a pole at summation index r = " +
                                 std::to_string(r));
    }
}

/// The Appell-Lerch sum
///   m(x,q,z) = 1/j(z;q) * sum_r (-1)^r q^{binom(r,2)} z^r / (1 - q^{r-1} x z),
/// exact to prec.  window_pad widens the summation window on both sides; it
/// exists so tests can confirm that enlarging the window never changes a
/// reported coefficient.
inline Series m_series(const AppellArg& arg, Series::Exp prec, std::int64_t window_pad = 0) {
    check_appell_generic(arg);
    const std::int64_t m = arg.base.exp();
    const std::int64_t ez = arg.z.exp();
    auto f = [&](std::int64_t r) { return binom2(r) * m + r * ez; };

    const std::int64_t vj = *theta_val(arg.z, arg.base);
    std::int64_t r_min = detail::floor_div(m - 2 * ez, 2 * m);
    if (f(r_min + 1) < f(r_min)) ++r_min;
    const std::int64_t v_sum = f(r_min);

    const Series::Exp prec_sum = std::max<Series::Exp>(prec + vj, v_sum + 1);
    const Series::Exp prec_theta = std::max<Series::Exp>(prec + 2 * vj - v_sum, vj + 4);

    std::int64_t r_hi = r_min;
    while (f(r_hi) < prec_sum) ++r_hi;
    std::int64_t r_lo = r_min - 1;
    while (f(r_lo) < prec_sum) --r_lo;
    r_hi += window_pad;
    r_lo -= window_pad;

    Series sum = Series::zero(prec_sum);
    for (std::int64_t r = r_lo + 1; r < r_hi; ++r) {
        const Monomial w = arg.base.pow(r - 1) * arg.x * arg.z;
        const Series::Exp rel = std::max<Series::Exp>(prec_sum - f(r), 1);
        const Series g = geom_inv_one_minus(w, rel);
        const int ulog = detail::mod12i(6 * r + static_cast<std::int64_t>(arg.base.ulog()) * binom2(r) +
                                        static_cast<std::int64_t>(arg.z.ulog()) * r);
        sum = sum + g.mul_mono(Monomial::from_ulog(ulog, f(r)));
    }

    const Series theta = theta_j(arg.z, arg.base, prec_theta);
    const Series result = sum * theta.inverse();
    if (result.prec() < prec)
        throw PrecisionTooLow(arg.to_string() + ": internal precision fell short");
    return result.truncated(prec);
}

inline Series m_series(const Monomial& x, const Base& base, const Monomial& z,
                       Series::Exp prec, std::int64_t window_pad = 0) {
    return m_series(AppellArg{x, base, z}, prec, window_pad);
}

/// Closed form for m(x,q,z1) - m(x,q,z0):
///   z0 J_1^3 j(z1/z0;q) j(x z0 z1;q) / (j(z0;q) j(z1;q) j(x z0;q) j(x z1;q)).
inline Series m_changing_z(const Monomial& x, const Base& base, const Monomial& z1,
                           const Monomial& z0, Series::Exp prec) {
    check_appell_generic(AppellArg{x, base, z1});
    check_appell_generic(AppellArg{x, base, z0});
    const Monomial denom_args[4] = {z0, z1, x * z0, x * z1};
    for (const Monomial& d : denom_args)
        if (!theta_val(d, base))
            throw DegenerateParameters("m_changing_z: denominator theta j(" + d.to_dsl() +
                                       "; base) vanishes");
    return compute_to_prec(prec, [&](Series::Exp P) {
        Series num = euler_J(base, 1, P);
        num = num * num * num;
        num = num * theta_j(z1 / z0, base, P);
        num = num * theta_j(x * z0 * z1, base, P);
        num = num.mul_mono(z0);
        Series den = theta_j(z0, base, P);
        den = den * theta_j(z1, base, P);
        den = den * theta_j(x * z0, base, P);
        den = den * theta_j(x * z1, base, P);
        return Series::div_to(num, den, P);
    });
}

} // namespace qv

#endif
