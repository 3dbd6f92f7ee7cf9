#ifndef QVERIFY_EVAL_HPP
#define QVERIFY_EVAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "qverify/appell.hpp"
#include "qverify/dn.hpp"
#include "qverify/expr.hpp"
#include "qverify/hecke.hpp"
#include "qverify/mock.hpp"
#include "qverify/series.hpp"
#include "qverify/theta.hpp"

namespace qv {

/// Constant-folds an expression into a unit monomial u*q^e when possible.
inline std::optional<Monomial> fold_monomial(const ExprPtr& e) {
    switch (e->kind) {
        case NodeKind::Number:
            if (e->number == 1) return Monomial::one();
            return std::nullopt;
        case NodeKind::SymW: return Monomial(CycNum::omega(), 0);
        case NodeKind::SymI: return Monomial(CycNum::i_unit(), 0);
        case NodeKind::SymQ: return Monomial::q_pow(1);
        case NodeKind::Neg: {
            auto a = fold_monomial(e->a);
            if (!a) return std::nullopt;
            return a->negated();
        }
        case NodeKind::Mul: {
            auto a = fold_monomial(e->a);
            auto b = fold_monomial(e->b);
            if (!a || !b) return std::nullopt;
            return *a * *b;
        }
        case NodeKind::Div: {
            auto a = fold_monomial(e->a);
            auto b = fold_monomial(e->b);
            if (!a || !b) return std::nullopt;
            return *a / *b;
        }
        case NodeKind::Pow: {
            auto a = fold_monomial(e->a);
            if (!a) return std::nullopt;
            return a->pow(e->exponent);
        }
        default: return std::nullopt;
    }
}

/// Constant-folds an integer literal (with optional sign).
inline std::optional<std::int64_t> fold_integer(const ExprPtr& e) {
    if (e->kind == NodeKind::Number) return e->number;
    if (e->kind == NodeKind::Neg) {
        auto v = fold_integer(e->a);
        if (v) return -*v;
    }
    return std::nullopt;
}

namespace detail {

[[noreturn]] inline void rethrow_with_path(const Error& err, const std::string& where) {
    const std::string msg = where + ": " + err.what();
    if (dynamic_cast<const DivisionByZero*>(&err)) throw DivisionByZero(msg);
    if (dynamic_cast<const UnsupportedRoot*>(&err)) throw UnsupportedRoot(msg);
    if (dynamic_cast<const CannotDetermineValuation*>(&err)) throw CannotDetermineValuation(msg);
    if (dynamic_cast<const InvalidSubstitution*>(&err)) throw InvalidSubstitution(msg);
    if (dynamic_cast<const PrecisionTooLow*>(&err)) throw PrecisionTooLow(msg);
    if (dynamic_cast<const NonGenericPole*>(&err)) throw NonGenericPole(msg);
    if (dynamic_cast<const PrefactorZero*>(&err)) throw PrefactorZero(msg);
    if (dynamic_cast<const DegenerateParameters*>(&err)) throw DegenerateParameters(msg);
    if (dynamic_cast<const UnsupportedArgument*>(&err)) throw UnsupportedArgument(msg);
    if (dynamic_cast<const UnsupportedForm*>(&err)) throw UnsupportedForm(msg);
    throw EvalError(msg);
}

class Evaluator {
  public:
    Series eval(const ExprPtr& e, Series::Exp P, const std::string& path) {
        switch (e->kind) {
            case NodeKind::Number: return Series::constant(CycNum(e->number));
            case NodeKind::SymW: return Series::constant(CycNum::omega());
            case NodeKind::SymI: return Series::constant(CycNum::i_unit());
            case NodeKind::SymQ: return Series::monomial(Monomial::q_pow(1));
            case NodeKind::Inf:
                throw EvalError(path + ": 'inf' is only meaningful as the length of P(...)");
            case NodeKind::Neg: return -eval(e->a, P, path);
            case NodeKind::Add: return eval(e->a, P, path) + eval(e->b, P, path);
            case NodeKind::Sub: return eval(e->a, P, path) - eval(e->b, P, path);
            case NodeKind::Mul: return eval(e->a, P, path) * eval(e->b, P, path);
            case NodeKind::Div: {
                const Series num = eval(e->a, P, path);
                const Series den = eval(e->b, P, path);
                try {
                    return Series::div_to(num, den, P);
                } catch (const Error& err) {
                    rethrow_with_path(err, path + "/div");
                }
            }
            case NodeKind::Pow: {
                if (auto m = fold_monomial(e)) return Series::monomial(*m);
                const Series base = eval(e->a, P, path);
                return pow_series(base, e->exponent, P, path);
            }
            case NodeKind::Call: return call(e, P, path);
        }
        throw EvalError(path + ": unreachable node kind");
    }

  private:
    Series pow_series(const Series& base, std::int64_t k, Series::Exp P,
                      const std::string& path) {
        if (k < 0) {
            try {
                return Series::div_to(Series::constant(CycNum(1)), pow_series(base, -k, P, path),
                                      P);
            } catch (const Error& err) {
                rethrow_with_path(err, path + "/pow");
            }
        }
        Series acc = Series::constant(CycNum(1));
        Series sq = base;
        std::int64_t e = k;
        while (e > 0) {
            if (e & 1) acc = acc * sq;
            e >>= 1;
            if (e > 0) sq = sq * sq;
        }
        return acc;
    }

    Monomial need_mono(const ExprPtr& e, const std::string& what, const std::string& path) {
        auto m = fold_monomial(e);
        if (!m)
            throw EvalError(path + ": " + what +
                            " must be a unit monomial u*q^e, got '" + render(e) + "'");
        return *m;
    }

    Base need_base(const ExprPtr& e, const std::string& path) {
        const Monomial m = need_mono(e, "base", path);
        if (m.exp() < 1)
            throw EvalError(path + ": base must have exponent >= 1, got '" + render(e) + "'");
        return Base(m);
    }

    std::int64_t need_int(const ExprPtr& e, const std::string& what, const std::string& path) {
        auto v = fold_integer(e);
        if (!v)
            throw EvalError(path + ": " + what + " must be an integer literal, got '" +
                            render(e) + "'");
        return *v;
    }

    void need_shape(const ExprPtr& e, const std::vector<std::size_t>& shape,
                    const std::string& path) {
        bool ok = e->groups.size() == shape.size();
        if (ok)
            for (std::size_t g = 0; g < shape.size(); ++g)
                if (e->groups[g].size() != shape[g]) ok = false;
        if (!ok) {
            std::string want;
            for (std::size_t g = 0; g < shape.size(); ++g) {
                if (g) want += ";";
                want += std::to_string(shape[g]);
            }
            throw EvalError(path + ": call " + e->callee +
                            " has the wrong argument shape (want group sizes " + want + ")");
        }
    }

    Series call(const ExprPtr& e, Series::Exp P, const std::string& outer) {
        const std::string path = outer + "/" + e->callee;
        try {
            if (e->callee == "j") {
                need_shape(e, {1, 1}, path);
                const Monomial x = need_mono(e->groups[0][0], "theta argument", path);
                const Base b = need_base(e->groups[1][0], path);
                return theta_j(x, b, P);
            }
            if (e->callee == "J" || e->callee == "Jb") {
                need_shape(e, {2}, path);
                const std::int64_t a = need_int(e->groups[0][0], "a", path);
                const std::int64_t m = need_int(e->groups[0][1], "m", path);
                if (m < 1) throw EvalError(path + ": modulus must be >= 1");
                return e->callee == "J" ? J_ab(a, m, P) : Jbar_ab(a, m, P);
            }
            if (e->callee == "Jm") {
                need_shape(e, {1}, path);
                const std::int64_t m = need_int(e->groups[0][0], "m", path);
                if (m < 1) throw EvalError(path + ": modulus must be >= 1");
                return J_m(m, P);
            }
            if (e->callee == "P") {
                need_shape(e, {1, 1, 1}, path);
                const Monomial x = need_mono(e->groups[0][0], "argument", path);
                const Base b = need_base(e->groups[1][0], path);
                if (e->groups[2][0]->kind == NodeKind::Inf) return poch_inf(x, b, P);
                const std::int64_t n = need_int(e->groups[2][0], "length", path);
                if (n < 0) throw EvalError(path + ": Pochhammer length must be >= 0 or inf");
                return poch_finite(x, b, n, P);
            }
            if (e->callee == "m") {
                need_shape(e, {1, 1, 1}, path);
                const Monomial x = need_mono(e->groups[0][0], "x", path);
                const Base b = need_base(e->groups[1][0], path);
                const Monomial z = need_mono(e->groups[2][0], "z", path);
                return m_series(x, b, z, P);
            }
            if (e->callee == "f") {
                need_shape(e, {3, 2, 1}, path);
                HeckeParams p{need_int(e->groups[0][0], "a", path),
                              need_int(e->groups[0][1], "b", path),
                              need_int(e->groups[0][2], "c", path),
                              need_mono(e->groups[1][0], "x", path),
                              need_mono(e->groups[1][1], "y", path),
                              need_base(e->groups[2][0], path)};
                if (p.a < 0 || p.b < 0 || p.c < 0)
                    throw EvalError(path + ": f indices must be nonnegative");
                return f_hecke(p, P);
            }
            if (e->callee == "D") {
                need_shape(e, {1, 1, 1, 1, 1}, path);
                DnArg a{need_int(e->groups[0][0], "n", path),
                        need_mono(e->groups[1][0], "x", path),
                        need_base(e->groups[2][0], path),
                        need_mono(e->groups[3][0], "z", path),
                        need_mono(e->groups[4][0], "z'", path)};
                if (a.n < 1) throw EvalError(path + ": D requires n >= 1");
                return dn_def(a, P);
            }
            if (e->callee == "phi" || e->callee == "psi" || e->callee == "X" ||
                e->callee == "chi") {
                need_shape(e, {1}, path);
                const Monomial image = need_mono(e->groups[0][0], "substitution", path);
                if (image.exp() < 1)
                    throw InvalidSubstitution(path + ": substitution q -> " + image.to_dsl() +
                                              " needs a positive exponent");
                MockKind kind = MockKind::phi;
                if (e->callee == "psi") kind = MockKind::psi;
                if (e->callee == "X") kind = MockKind::bigX;
                if (e->callee == "chi") kind = MockKind::chi;
                const std::int64_t inner = (P - 2) / image.exp() + 2; // k(inner-1)+1 >= P
                return mock_series(kind, inner).subst(image);
            }
            throw EvalError(path + ": unknown function '" + e->callee + "'");
        } catch (const EvalError&) {
            throw;
        } catch (const Error& err) {
            rethrow_with_path(err, path);
        }
    }
};

/// Largest substitution stretch appearing in mock calls; scales the
/// precision guard.
inline std::int64_t max_stretch(const ExprPtr& e) {
    std::int64_t k = 1;
    if (e->kind == NodeKind::Call &&
        (e->callee == "phi" || e->callee == "psi" || e->callee == "X" || e->callee == "chi") &&
        e->groups.size() == 1 && e->groups[0].size() == 1) {
        if (auto m = fold_monomial(e->groups[0][0])) k = std::max<std::int64_t>(k, m->exp());
    }
    if (e->a) k = std::max(k, max_stretch(e->a));
    if (e->b) k = std::max(k, max_stretch(e->b));
    for (const auto& g : e->groups)
        for (const auto& sub : g) k = std::max(k, max_stretch(sub));
    return k;
}

} // namespace detail

/// Evaluates an expression with precision at least order + 1 (the guard
/// policy: generators are asked for order + 1 + 8*k_max, with up to two
/// doubling retries when tracked precision lands short of the target).
inline Series eval_expr(const ExprPtr& e, std::int64_t order) {
    if (order < 1) throw EvalError("evaluation order must be >= 1");
    const std::int64_t kmax = detail::max_stretch(e);
    std::int64_t guard = 8 * kmax;
    detail::Evaluator ev;
    for (int attempt = 0;; ++attempt) {
        const Series s = ev.eval(e, order + 1 + guard, "");
        if (s.prec() >= order + 1) return s;
        if (attempt >= 2)
            throw PrecisionTooLow("expression needs more precision than guard allows: '" +
                                  render(e) + "'");
        guard *= 2;
    }
}

inline Series eval_expr(std::string_view text, std::int64_t order) {
    return eval_expr(parse_expr(text), order);
}

} // namespace qv

#endif
