#ifndef QVERIFY_SERIES_HPP
#define QVERIFY_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qverify/cyclotomic.hpp"
#include "qverify/errors.hpp"
#include "qverify/monomial.hpp"

namespace qv {

/// Truncated Laurent series in q over CycNum.
///
/// Coefficients are stored densely for exponents [val, val+size); exponents
/// in [val+size, prec) are known to be zero; exponents >= prec are unknown
/// (the series is only known modulo q^prec).  A series that is zero
/// throughout its window keeps val == prec.  Exact series (finite Laurent
/// polynomials such as monomials and scalar constants) carry prec ==
/// kExactPrec.
class Series {
  public:
    using Exp = std::int64_t;

    static constexpr Exp kExactPrec = Exp(1) << 62;

    Series() : val_(kExactPrec), prec_(kExactPrec) {}

    static Series zero(Exp prec = kExactPrec) {
        Series s;
        s.val_ = s.prec_ = prec;
        return s;
    }

    static Series constant(const CycNum& c, Exp prec = kExactPrec) {
        Series s;
        s.prec_ = prec;
        if (c.is_zero() || prec <= 0) {
            s.val_ = s.prec_;
            return s;
        }
        s.val_ = 0;
        s.c_.push_back(c);
        return s;
    }

    static Series monomial(const Monomial& m, Exp prec = kExactPrec) {
        Series s;
        s.prec_ = prec;
        if (m.exp() >= prec) {
            s.val_ = s.prec_ = prec;
            return s;
        }
        s.val_ = m.exp();
        s.c_.push_back(m.unit());
        return s;
    }

    /// Builds from a dense window; coefficients[i] sits at exponent lo + i.
    static Series from_window(Exp lo, Exp prec, std::vector<CycNum> coefficients) {
        Series s;
        s.val_ = lo;
        s.prec_ = prec;
        s.c_ = std::move(coefficients);
        s.normalize();
        return s;
    }

    Exp val() const { return val_; }
    Exp prec() const { return prec_; }
    bool is_exact() const { return prec_ >= kExactThreshold; }
    bool is_zero_to_prec() const { return c_.empty(); }

    /// Coefficient at exponent e; e must satisfy e < prec.
    const CycNum& coeff(Exp e) const {
        if (e >= prec_) throw PrecisionTooLow("coefficient at q^" + std::to_string(e) +
                                              " is beyond tracked precision");
        if (e < val_ || e >= val_ + static_cast<Exp>(c_.size())) return czero();
        return c_[static_cast<std::size_t>(e - val_)];
    }

    friend Series operator+(const Series& a, const Series& b) {
        Exp prec = std::min(a.prec_, b.prec_);
        Exp lo = std::min(a.effective_val(prec), b.effective_val(prec));
        if (lo >= prec) return zero(prec);
        std::vector<CycNum> out(static_cast<std::size_t>(prec_window(lo, prec, a, b)));
        a.accumulate_into(out, lo, prec, false);
        b.accumulate_into(out, lo, prec, false);
        return from_window(lo, prec, std::move(out));
    }

    friend Series operator-(const Series& a, const Series& b) {
        Exp prec = std::min(a.prec_, b.prec_);
        Exp lo = std::min(a.effective_val(prec), b.effective_val(prec));
        if (lo >= prec) return zero(prec);
        std::vector<CycNum> out(static_cast<std::size_t>(prec_window(lo, prec, a, b)));
        a.accumulate_into(out, lo, prec, false);
        b.accumulate_into(out, lo, prec, true);
        return from_window(lo, prec, std::move(out));
    }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Exp prec = std::min(sat_add(a.prec_, b.val_), sat_add(b.prec_, a.val_));
        if (a.c_.empty() || b.c_.empty()) return zero(prec);
        Exp lo = a.val_ + b.val_;
        if (lo >= prec) return zero(prec);
        Exp width = std::min<Exp>(static_cast<Exp>(a.c_.size() + b.c_.size()) - 1, prec - lo);
        std::vector<CycNum> out(static_cast<std::size_t>(width));
        for (std::size_t ia = 0; ia < a.c_.size(); ++ia) {
            if (a.c_[ia].is_zero()) continue;
            const Exp ea = a.val_ + static_cast<Exp>(ia);
            if (ea + b.val_ >= prec) break;
            const std::size_t jmax =
                std::min(b.c_.size(), static_cast<std::size_t>(prec - ea - b.val_));
            for (std::size_t jb = 0; jb < jmax; ++jb) {
                if (b.c_[jb].is_zero()) continue;
                out[static_cast<std::size_t>(ea + b.val_ + static_cast<Exp>(jb) - lo)] +=
                    a.c_[ia] * b.c_[jb];
            }
        }
        return from_window(lo, prec, std::move(out));
    }

    Series scaled(const CycNum& k) const {
        if (k.is_zero()) return zero(prec_);
        Series r = *this;
        if (!k.is_one())
            for (auto& c : r.c_) c = c * k;
        r.normalize();
        return r;
    }

    /// Multiply by the monomial u*q^e: scale and shift.
    Series mul_mono(const Monomial& m) const {
        Series r = scaled(m.unit());
        r.val_ = sat_add(r.val_, m.exp());
        r.prec_ = sat_add(r.prec_, m.exp());
        return r;
    }

    Series shifted(Exp e) const {
        Series r = *this;
        r.val_ = sat_add(r.val_, e);
        r.prec_ = sat_add(r.prec_, e);
        return r;
    }

    /// Multiplicative inverse using all available precision.  The leading
    /// coefficient must be determinable: a series that is zero throughout a
    /// finite window cannot be inverted (CannotDetermineValuation), and an
    /// exact series must be a single term (otherwise truncate first).
    Series inverse() const {
        if (c_.empty()) {
            if (is_exact()) throw DivisionByZero("inverse of the zero series");
            throw CannotDetermineValuation("divisor is zero to its precision O(q^" +
                                           std::to_string(prec_) + ")");
        }
        if (is_exact()) {
            if (c_.size() == 1) {
                Series r;
                r.val_ = -val_;
                r.prec_ = kExactPrec;
                r.c_.push_back(c_[0].inverse());
                return r;
            }
            throw CannotDetermineValuation(
                "inverse of an exact multi-term series requires truncation");
        }
        const Exp rel = prec_ - val_;
        std::vector<CycNum> g(static_cast<std::size_t>(rel));
        const CycNum lead_inv = c_[0].inverse();
        g[0] = lead_inv;
        for (Exp k = 1; k < rel; ++k) {
            CycNum acc;
            const std::size_t jmax = std::min<std::size_t>(static_cast<std::size_t>(k), c_.size() - 1);
            for (std::size_t j = 1; j <= jmax; ++j) {
                if (c_[j].is_zero()) continue;
                acc += c_[j] * g[static_cast<std::size_t>(k - static_cast<Exp>(j))];
            }
            if (!acc.is_zero()) g[static_cast<std::size_t>(k)] = -(lead_inv * acc);
        }
        return from_window(-val_, prec_ - 2 * val_, std::move(g));
    }

    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    /// a / b computed so the quotient is exact to at least prec P when the
    /// operands allow it; exact divisors are truncated to just what P needs.
    static Series div_to(const Series& a, const Series& b, Exp P) {
        Series bn = b;
        bn.normalize();
        if (bn.c_.empty()) {
            if (bn.is_exact()) throw DivisionByZero("division by the zero series");
            throw CannotDetermineValuation("divisor is zero to its precision O(q^" +
                                           std::to_string(bn.prec_) + ")");
        }
        if (bn.is_exact() && bn.c_.size() > 1) {
            const Exp need = P + 2 * bn.val_ - a.effective_val(a.prec_) + 1;
            bn = bn.truncated(std::max<Exp>(need, bn.val_ + 2));
        }
        return a * bn.inverse();
    }

    /// q -> u*q^k substitution: c_n q^n maps to c_n u^n q^{kn}.
    Series subst(const Monomial& image) const {
        const Exp k = image.exp();
        if (k < 1)
            throw InvalidSubstitution("substitution q -> u*q^k requires k >= 1, got k = " +
                                      std::to_string(k));
        Series r;
        r.prec_ = sat_stretch(prec_, k);
        if (c_.empty()) {
            r.val_ = r.prec_;
            return r;
        }
        r.val_ = val_ * k;
        r.c_.resize(static_cast<std::size_t>((c_.size() - 1) * static_cast<std::size_t>(k) + 1));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const Exp n = val_ + static_cast<Exp>(i);
            r.c_[i * static_cast<std::size_t>(k)] = c_[i] * image.unit_pow(n);
        }
        r.normalize();
        return r;
    }

    Series truncated(Exp P) const {
        Series r = *this;
        if (P >= r.prec_) return r;
        r.prec_ = P;
        if (r.val_ >= P) {
            r.val_ = P;
            r.c_.clear();
            return r;
        }
        if (static_cast<Exp>(r.c_.size()) > P - r.val_)
            r.c_.resize(static_cast<std::size_t>(P - r.val_));
        r.normalize();
        return r;
    }

    struct Mismatch {
        Exp exp;
        CycNum lhs;
        CycNum rhs;
    };

    /// Exact comparison of all coefficients at exponents <= order.  Both
    /// series must be known at least to order + 1.
    static std::optional<Mismatch> eq_to(const Series& a, const Series& b, Exp order) {
        if (a.prec_ < order + 1 || b.prec_ < order + 1)
            throw PrecisionTooLow("comparison to order " + std::to_string(order) +
                                  " needs precision " + std::to_string(order + 1) +
                                  ", have O(q^" + std::to_string(std::min(a.prec_, b.prec_)) +
                                  ")");
        Exp lo = std::min(a.effective_val(order + 1), b.effective_val(order + 1));
        for (Exp e = lo; e <= order; ++e) {
            const CycNum& ca = a.coeff(e);
            const CycNum& cb = b.coeff(e);
            if (ca != cb) return Mismatch{e, ca, cb};
        }
        return std::nullopt;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const Exp e = val_ + static_cast<Exp>(i);
            CycNum c = c_[i];
            const bool flip = c.is_rational() && c.coeff(0) < 0;
            if (flip) c = -c;
            if (first) {
                if (flip) os << "-";
            } else {
                os << (flip ? " - " : " + ");
            }
            const bool unit_coeff = c.is_rational() && c.coeff(0) == 1;
            if (e == 0 || !unit_coeff) os << coeff_str(c, e != 0);
            if (e != 0) {
                if (!unit_coeff) os << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        if (first) os << "0";
        if (!is_exact()) os << " + O(q^" << prec_ << ")";
        return os.str();
    }

    /// Machine-readable rows: one (exponent, c0, c1, c2, c3) tuple per
    /// stored nonzero coefficient, in increasing exponent order.
    std::vector<std::pair<Exp, std::array<Rational, 4>>> machine_rows() const {
        std::vector<std::pair<Exp, std::array<Rational, 4>>> rows;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            rows.push_back({val_ + static_cast<Exp>(i),
                            {c_[i].coeff(0), c_[i].coeff(1), c_[i].coeff(2), c_[i].coeff(3)}});
        }
        return rows;
    }

    static Exp sat_add(Exp p, Exp d) {
        if (p >= kExactThreshold) return kExactPrec;
        return p + d;
    }

  private:
    static constexpr Exp kExactThreshold = Exp(1) << 61;

    static Exp sat_stretch(Exp p, Exp k) {
        if (p >= kExactThreshold || p > (Exp(1) << 40)) return kExactPrec;
        return k * (p - 1) + 1;
    }

    static const CycNum& czero() {
        static const CycNum z{};
        return z;
    }

    // For window math treat a zero series as starting at its precision cap.
    Exp effective_val(Exp cap) const { return c_.empty() ? std::min(prec_, cap) : std::min(val_, cap); }

    static Exp prec_window(Exp lo, Exp prec, const Series& a, const Series& b) {
        Exp hi = lo;
        if (!a.c_.empty()) hi = std::max(hi, std::min(prec, a.val_ + static_cast<Exp>(a.c_.size())));
        if (!b.c_.empty()) hi = std::max(hi, std::min(prec, b.val_ + static_cast<Exp>(b.c_.size())));
        return hi - lo;
    }

    void accumulate_into(std::vector<CycNum>& out, Exp lo, Exp prec, bool negate) const {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Exp e = val_ + static_cast<Exp>(i);
            if (e >= prec) break;
            if (c_[i].is_zero()) continue;
            auto& slot = out[static_cast<std::size_t>(e - lo)];
            if (negate) slot -= c_[i];
            else slot += c_[i];
        }
    }

    static std::string coeff_str(const CycNum& c, bool in_product) {
        std::string s = c.to_string();
        if (in_product && !c.is_rational()) return "(" + s + ")";
        return s;
    }

    void normalize() {
        // Drop known-zero leading coefficients, raising val; drop trailing
        // stored zeros (they are implied by the window).
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            val_ = prec_;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            val_ += static_cast<Exp>(lead);
        }
        std::size_t tail = c_.size();
        while (tail > 0 && c_[tail - 1].is_zero()) --tail;
        c_.resize(tail);
        if (val_ > prec_) { // can happen after truncation of a shifted zero
            val_ = prec_;
            c_.clear();
        }
    }

    Exp val_;
    Exp prec_;
    std::vector<CycNum> c_;
};

/// Expansion of 1/(1 - w) for a monomial w, valid as a formal Laurent
/// series: for w of positive exponent the geometric series, for negative
/// exponent the expansion -w^{-1}/(1 - w^{-1}), and for exponent zero the
/// constant 1/(1 - unit).  w == 1 has no expansion.
inline Series geom_inv_one_minus(const Monomial& w, Series::Exp prec) {
    if (w.exp() == 0) {
        if (w.unit_is_one())
            throw NonGenericPole("1/(1 - w) undefined at w = 1");
        return Series::constant((CycNum::one() - w.unit()).inverse(), prec);
    }
    if (prec <= 0) return Series::zero(prec);
    std::vector<CycNum> out;
    if (w.exp() > 0) {
        const std::int64_t e = w.exp();
        out.resize(static_cast<std::size_t>(prec));
        for (std::int64_t j = 0; j * e < prec; ++j)
            out[static_cast<std::size_t>(j * e)] = w.unit_pow(j);
        return Series::from_window(0, prec, std::move(out));
    }
    const std::int64_t e = -w.exp();
    out.resize(static_cast<std::size_t>(prec));
    for (std::int64_t j = 1; j * e < prec; ++j)
        out[static_cast<std::size_t>(j * e)] = -w.unit_pow(-j);
    return Series::from_window(0, prec, std::move(out));
}

/// Evaluates a precision-parameterized builder until the tracked precision
/// of its result reaches P, then truncates to exactly P.  Division and
/// negative valuations erode tracked precision by amounts that depend on
/// the inputs; the retry loop converges because every builder here is
/// monotone in its precision argument.
template <class Builder>
Series compute_to_prec(Series::Exp P, Builder&& build) {
    Series::Exp pad = 0;
    for (int tries = 0; tries < 12; ++tries) {
        Series s = build(P + pad);
        if (s.prec() >= P) return s.truncated(P);
        pad += (P - s.prec()) + 4;
    }
    throw PrecisionTooLow("could not reach target precision " + std::to_string(P));
}

} // namespace qv

#endif
