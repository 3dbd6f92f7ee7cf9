#ifndef QVERIFY_HECKE_HPP
#define QVERIFY_HECKE_HPP

#include <cstdint>

#include "qverify/errors.hpp"
#include "qverify/monomial.hpp"
#include "qverify/series.hpp"
#include "qverify/theta.hpp"

namespace qv {

/// Parameters of the Hecke-type double sum f_{a,b,c}(x, y, q).
struct HeckeParams {
    std::int64_t a;
    std::int64_t b;
    std::int64_t c;
    Monomial x;
    Monomial y;
    Base base;
};

/// The signed double sum
///   (sum_{r,s >= 0} - sum_{r,s < 0}) (-1)^{r+s} x^r y^s q^{a C(r,2) + brs + c C(s,2)},
/// exact to prec.  Requires the indefinite shape b^2 > ac together with
/// a, c >= 1, which makes the exponent split into two one-variable convex
/// quadratics: within both summation quadrants rs >= 0, so
///   E(r,s) >= [m a C(r,2) + r ex] + [m c C(s,2) + s ey],
/// and each bracket has a finite sublevel set.  range_scale widens the
/// enumeration ranges so tests can confirm box-doubling stability.
inline Series f_hecke(const HeckeParams& p, Series::Exp prec, int range_scale = 1) {
    if (p.b * p.b <= p.a * p.c)
        throw UnsupportedForm("f_hecke requires b^2 > ac");
    if (p.a < 1 || p.c < 1)
        throw UnsupportedForm("f_hecke requires a >= 1 and c >= 1");

    const std::int64_t m = p.base.exp();
    auto part = [&](std::int64_t coef, std::int64_t e) {
        return [coef, e, m](std::int64_t t) { return m * coef * binom2(t) + t * e; };
    };
    auto g = part(p.a, p.x.exp());
    auto h = part(p.c, p.y.exp());

    auto int_min = [&](auto&& fn, std::int64_t coef, std::int64_t e) {
        std::int64_t t = detail::floor_div(m * coef - 2 * e, 2 * m * coef);
        if (fn(t + 1) < fn(t)) ++t;
        return t;
    };
    const std::int64_t rg_min = int_min(g, p.a, p.x.exp());
    const std::int64_t sh_min = int_min(h, p.c, p.y.exp());
    const std::int64_t g_floor = g(rg_min);
    const std::int64_t h_floor = h(sh_min);

    auto range_of = [&](auto&& fn, std::int64_t t_min, std::int64_t bound) {
        std::int64_t hi = t_min;
        while (fn(hi) < bound) ++hi;
        std::int64_t lo = t_min - 1;
        while (fn(lo) < bound) --lo;
        return std::pair<std::int64_t, std::int64_t>(lo + 1, hi); // half-open [lo, hi)
    };
    auto widen = [&](std::pair<std::int64_t, std::int64_t> rng) {
        const std::int64_t w = rng.second - rng.first;
        rng.first -= w * (range_scale - 1);
        rng.second += w * (range_scale - 1);
        return rng;
    };
    const auto r_rng = widen(range_of(g, rg_min, prec - h_floor));
    const auto s_rng = widen(range_of(h, sh_min, prec - g_floor));

    std::int64_t lo_exp = prec;
    std::vector<std::pair<std::int64_t, CycNum>> terms;
    for (std::int64_t r = r_rng.first; r < r_rng.second; ++r) {
        for (std::int64_t s = s_rng.first; s < s_rng.second; ++s) {
            const bool q1 = r >= 0 && s >= 0;
            const bool q3 = r < 0 && s < 0;
            if (!q1 && !q3) continue;
            const std::int64_t quad = p.a * binom2(r) + p.b * r * s + p.c * binom2(s);
            const std::int64_t E = m * quad + r * p.x.exp() + s * p.y.exp();
            if (E >= prec) continue;
            const int ulog = detail::mod12i(6 * (r + s) +
                                            static_cast<std::int64_t>(p.x.ulog()) * r +
                                            static_cast<std::int64_t>(p.y.ulog()) * s +
                                            static_cast<std::int64_t>(p.base.ulog()) * quad);
            CycNum u = CycNum::zeta_pow(ulog);
            if (q3) u = -u;
            terms.emplace_back(E, u);
            lo_exp = std::min(lo_exp, E);
        }
    }
    if (terms.empty()) return Series::zero(prec);
    std::vector<CycNum> acc(static_cast<std::size_t>(prec - lo_exp));
    for (auto& [E, u] : terms) acc[static_cast<std::size_t>(E - lo_exp)] += u;
    return Series::from_window(lo_exp, prec, std::move(acc));
}

} // namespace qv

#endif
