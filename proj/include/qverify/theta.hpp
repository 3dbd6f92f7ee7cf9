#ifndef QVERIFY_THETA_HPP
#define QVERIFY_THETA_HPP

#include <cstdint>
#include <optional>

#include "qverify/errors.hpp"
#include "qverify/monomial.hpp"
#include "qverify/series.hpp"

namespace qv {

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline int mod12i(std::int64_t v) {
    v %= 12;
    return static_cast<int>(v < 0 ? v + 12 : v);
}

} // namespace detail

/// Finite q-Pochhammer product (x; base)_n = prod_{i=0}^{n-1} (1 - base^i x).
inline Series poch_finite(const Monomial& x, const Base& base, std::int64_t n,
                          Series::Exp prec) {
    if (n < 0) throw UnsupportedArgument("poch_finite: negative length");
    if (x.exp() >= 0) {
        if (prec <= 0) return Series::zero(prec);
        std::vector<CycNum> acc(static_cast<std::size_t>(prec));
        acc[0] = CycNum::one();
        for (std::int64_t i = 0; i < n; ++i) {
            const std::int64_t d = x.exp() + i * base.exp();
            if (d >= prec) break; // remaining factors are 1 + O(q^prec)
            const CycNum u = base.unit_pow(i) * x.unit();
            if (d == 0) {
                const CycNum f = CycNum::one() - u;
                if (f.is_zero()) return Series::zero(prec);
                for (auto& c : acc) c = c * f;
                continue;
            }
            for (std::int64_t j = prec - 1; j >= d; --j) {
                const CycNum& low = acc[static_cast<std::size_t>(j - d)];
                if (!low.is_zero()) acc[static_cast<std::size_t>(j)] -= u * low;
            }
        }
        return Series::from_window(0, prec, std::move(acc));
    }
    // Negative argument exponents make the factors genuine Laurent
    // polynomials; the product is still finite and exact.
    Series acc = Series::constant(CycNum::one());
    for (std::int64_t i = 0; i < n; ++i) {
        const Monomial f = x * base.pow(i);
        acc = acc * (Series::constant(CycNum::one()) - Series::monomial(f));
    }
    return acc.truncated(prec);
}

/// Infinite q-Pochhammer product (x; base)_inf, truncated at prec.
/// Requires x.exp >= 0 so that only finitely many factors differ from 1.
inline Series poch_inf(const Monomial& x, const Base& base, Series::Exp prec) {
    if (x.exp() < 0)
        throw UnsupportedArgument("poch_inf requires a nonnegative argument exponent, got q^" +
                                  std::to_string(x.exp()));
    if (prec <= 0) return Series::zero(prec);
    std::vector<CycNum> acc(static_cast<std::size_t>(prec));
    acc[0] = CycNum::one();
    for (std::int64_t i = 0;; ++i) {
        const std::int64_t d = x.exp() + i * base.exp();
        if (d >= prec) break;
        const CycNum u = base.unit_pow(i) * x.unit();
        if (d == 0) {
            const CycNum f = CycNum::one() - u;
            if (f.is_zero()) return Series::zero(prec);
            for (auto& c : acc) c = c * f;
            continue;
        }
        for (std::int64_t j = prec - 1; j >= d; --j) {
            const CycNum& low = acc[static_cast<std::size_t>(j - d)];
            if (!low.is_zero()) acc[static_cast<std::size_t>(j)] -= u * low;
        }
    }
    return Series::from_window(0, prec, std::move(acc));
}

/// Valuation of j(x; base), or nullopt when x lies in base^Z so that the
/// series vanishes identically.  Reduce x = base^k * x0 with x0's exponent
/// in [0, base.exp); then j(x; base) = (-1)^k base^{-binom(k,2)} x0^{-k}
/// j(x0; base) and j(x0; base) has valuation 0 with nonzero leading
/// coefficient.
inline std::optional<std::int64_t> theta_val(const Monomial& x, const Base& base) {
    const std::int64_t m = base.exp();
    const std::int64_t k = detail::floor_div(x.exp(), m);
    const std::int64_t e0 = x.exp() - k * m;
    const int u0 = detail::mod12i(x.ulog() - k * base.ulog());
    if (e0 == 0 && u0 == 0) return std::nullopt;
    return -binom2(k) * m - k * e0;
}

/// Theta function j(x; base) as the bilateral sum
/// sum_n (-1)^n base^{binom(n,2)} x^n, truncated at prec.
inline Series theta_j(const Monomial& x, const Base& base, Series::Exp prec) {
    const std::int64_t m = base.exp();
    const std::int64_t e = x.exp();
    auto f = [&](std::int64_t n) { return binom2(n) * m + n * e; };
    // The exponent is a convex quadratic in n; locate its integer minimum.
    const std::int64_t n_lo = detail::floor_div(m - 2 * e, 2 * m); // floor(1/2 - e/m)
    std::int64_t n_min = n_lo;
    if (f(n_lo + 1) < f(n_lo)) n_min = n_lo + 1;
    if (f(n_min) >= prec) return Series::zero(prec);

    const std::int64_t lo = f(n_min);
    std::vector<CycNum> acc(static_cast<std::size_t>(prec - lo));
    auto add_term = [&](std::int64_t n) {
        const int ulog = detail::mod12i(6 * n + static_cast<std::int64_t>(base.ulog()) * binom2(n) +
                                        static_cast<std::int64_t>(x.ulog()) * n);
        acc[static_cast<std::size_t>(f(n) - lo)] += CycNum::zeta_pow(ulog);
    };
    for (std::int64_t n = n_min; f(n) < prec; ++n) add_term(n);
    for (std::int64_t n = n_min - 1; f(n) < prec; --n) add_term(n);
    return Series::from_window(lo, prec, std::move(acc));
}

/// J_{a,m} = j(q^a; q^m)
inline Series J_ab(std::int64_t a, std::int64_t m, Series::Exp prec) {
    return theta_j(Monomial::q_pow(a), Base::q_pow(m), prec);
}

/// Jbar_{a,m} = j(-q^a; q^m)
inline Series Jbar_ab(std::int64_t a, std::int64_t m, Series::Exp prec) {
    return theta_j(Monomial::q_pow(a).negated(), Base::q_pow(m), prec);
}

/// J_m = (q^m; q^m)_inf
inline Series J_m(std::int64_t m, Series::Exp prec) {
    return poch_inf(Monomial::q_pow(m), Base::q_pow(m), prec);
}

/// Euler product prod_{i>=1} (1 - base^{n i}), the J_n shorthand over an
/// arbitrary (possibly unit-bearing) base.
inline Series euler_J(const Base& base, std::int64_t n, Series::Exp prec) {
    const Monomial bn = base.pow(n);
    return poch_inf(bn, Base(bn), prec);
}

} // namespace qv

#endif
