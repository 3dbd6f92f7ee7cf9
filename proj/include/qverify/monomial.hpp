#ifndef QVERIFY_MONOMIAL_HPP
#define QVERIFY_MONOMIAL_HPP

#include <cstdint>
#include <string>

#include "qverify/cyclotomic.hpp"
#include "qverify/errors.hpp"

namespace qv {

/// A unit monomial u*q^e where u is a twelfth root of unity (this covers
/// every +-zeta_12^k) and e is an integer, possibly negative.  All theta,
/// Appell-Lerch, Hecke and mock arguments have this shape.
class Monomial {
  public:
    Monomial() : exp_(0), ulog_(0) {}

    Monomial(const CycNum& unit, std::int64_t exp) : exp_(exp) {
        auto t = unit.unit_log();
        if (!t)
            throw UnsupportedArgument("monomial unit must be a root of unity in Q(zeta_12), got " +
                                      unit.to_string());
        ulog_ = *t;
    }

    /// q^e
    static Monomial q_pow(std::int64_t e) { return Monomial(0, e); }
    static Monomial one() { return Monomial(0, 0); }
    /// -1 as a monomial (unit -1 = zeta^6, exponent 0).
    static Monomial minus_one() { return Monomial(6, 0); }

    static Monomial from_ulog(int ulog, std::int64_t exp) { return Monomial(ulog, exp); }

    std::int64_t exp() const { return exp_; }
    int ulog() const { return ulog_; }
    CycNum unit() const { return CycNum::zeta_pow(ulog_); }
    bool unit_is_one() const { return ulog_ == 0; }
    bool is_one() const { return ulog_ == 0 && exp_ == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.ulog_ == b.ulog_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial(mod12(a.ulog_ + b.ulog_), a.exp_ + b.exp_);
    }
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        return Monomial(mod12(a.ulog_ - b.ulog_), a.exp_ - b.exp_);
    }

    Monomial inverse() const { return Monomial(mod12(-ulog_), -exp_); }

    Monomial negated() const { return Monomial(mod12(ulog_ + 6), exp_); }

    Monomial pow(std::int64_t n) const {
        return Monomial(mod12(static_cast<std::int64_t>(ulog_) * n), exp_ * n);
    }

    /// unit^n as a field element, for any integer n.
    CycNum unit_pow(std::int64_t n) const {
        return CycNum::zeta_pow(mod12(static_cast<std::int64_t>(ulog_) * n));
    }

    /// Coefficient-and-exponent view: the monomial as the single term
    /// unit * q^exp.
    CycNum coefficient() const { return unit(); }

    /// Renders in DSL syntax, e.g. "-w*q^3", "I*q", "q^-2", "1".
    std::string to_dsl() const {
        static const char* unit_str[12] = {
            "",       // 1
            "-w*I",   // zeta
            "-w^2",   // zeta^2
            "I",      // zeta^3
            "w",      // zeta^4
            "-w^2*I", // zeta^5
            "-",      // zeta^6 = -1 (sign only)
            "w*I",    // zeta^7
            "w^2",    // zeta^8
            "-I",     // zeta^9
            "-w",     // zeta^10
            "w^2*I",  // zeta^11
        };
        std::string u = unit_str[static_cast<std::size_t>(ulog_)];
        std::string qpart;
        if (exp_ == 0) {
            if (ulog_ == 0) return "1";
            if (ulog_ == 6) return "-1";
            // strip a trailing '*' separator slot; unit alone
            return u;
        }
        if (exp_ == 1) qpart = "q";
        else qpart = "q^" + std::to_string(exp_);
        if (ulog_ == 0) return qpart;
        if (ulog_ == 6) return "-" + qpart;
        return u + "*" + qpart;
    }

  private:
    Monomial(std::int64_t ulog, std::int64_t exp) : exp_(exp), ulog_(static_cast<int>(ulog)) {}

    static std::int64_t mod12(std::int64_t v) {
        v %= 12;
        return v < 0 ? v + 12 : v;
    }

    std::int64_t exp_;
    int ulog_;
};

/// A monomial with exponent >= 1, usable as the base of infinite sums and
/// products (guarantees truncation).
class Base {
  public:
    explicit Base(const Monomial& m) : m_(m) {
        if (m.exp() < 1)
            throw UnsupportedArgument("base must have exponent >= 1, got q^" +
                                      std::to_string(m.exp()));
    }
    Base(const CycNum& unit, std::int64_t exp) : Base(Monomial(unit, exp)) {}

    static Base q_pow(std::int64_t e) { return Base(Monomial::q_pow(e)); }

    const Monomial& mono() const { return m_; }
    std::int64_t exp() const { return m_.exp(); }
    int ulog() const { return m_.ulog(); }
    CycNum unit() const { return m_.unit(); }

    Monomial pow(std::int64_t n) const { return m_.pow(n); }
    Base stretch(std::int64_t n) const { return Base(m_.pow(n)); }

    CycNum unit_pow(std::int64_t n) const { return m_.unit_pow(n); }

    friend bool operator==(const Base& a, const Base& b) { return a.m_ == b.m_; }

  private:
    Monomial m_;
};

/// binomial(n, 2) = n(n-1)/2, valid for negative n as well.
inline std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

} // namespace qv

#endif
