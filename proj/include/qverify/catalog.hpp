#ifndef QVERIFY_CATALOG_HPP
#define QVERIFY_CATALOG_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qverify/eval.hpp"
#include "qverify/expr.hpp"
#include "qverify/series.hpp"

namespace qv {

/// A named, verifiable equation.
struct IdentitySpec {
    std::string id;
    std::string lhs_src;
    std::string rhs_src;
    ExprPtr lhs;
    ExprPtr rhs;
    std::int64_t default_order = 50;
    std::vector<std::string> tags;
};

struct MismatchInfo {
    std::int64_t exp;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string id;
    std::int64_t order_checked = 0;
    bool pass = false;
    std::optional<MismatchInfo> first_mismatch;
    std::int64_t wall_ms = 0;
    std::string error; // nonempty when evaluation failed outright
};

inline IdentitySpec make_spec(std::string id, std::int64_t order, std::vector<std::string> tags,
                              const std::string& lhs_src, const std::string& rhs_src) {
    IdentitySpec s;
    s.id = std::move(id);
    s.lhs_src = lhs_src;
    s.rhs_src = rhs_src;
    s.lhs = parse_expr(lhs_src);
    s.rhs = parse_expr(rhs_src);
    s.default_order = order;
    s.tags = std::move(tags);
    return s;
}

namespace catalog_detail {

inline std::string M(const Monomial& m) { return m.to_dsl(); }
inline std::string Mp(const Monomial& m) { return "(" + m.to_dsl() + ")"; }
inline std::string jj(const Monomial& x, const Monomial& base) {
    return "j(" + M(x) + "; " + M(base) + ")";
}
inline Monomial mq(std::int64_t e) { return Monomial::q_pow(e); }

// j(q^n x; q) = (-1)^n q^{-C(n,2)} x^{-n} j(x;q)
inline std::string law_02a(std::int64_t n, const Monomial& x, const Base& b) {
    Monomial pre = b.pow(-binom2(n)) * x.pow(-n);
    if (n % 2 != 0) pre = pre.negated();
    return jj(b.pow(n) * x, b.mono()) + " == " + Mp(pre) + "*" + jj(x, b.mono());
}

inline std::string law_02b1(const Monomial& x, const Base& b) {
    return jj(x, b.mono()) + " == " + jj(b.mono() / x, b.mono());
}

inline std::string law_02b2(const Monomial& x, const Base& b) {
    return jj(x, b.mono()) + " == -" + Mp(x) + "*" + jj(x.inverse(), b.mono());
}

// j(x;q) = J_1 j(x; q^n) j(qx; q^n) ... j(q^{n-1}x; q^n) / J_n^n  (base q)
inline std::string law_02c(std::int64_t n, const Monomial& x) {
    const Base b = Base::q_pow(1);
    std::string numerator = "Jm(1)";
    for (std::int64_t k = 0; k < n; ++k)
        numerator += "*" + jj(b.pow(k) * x, mq(n));
    return jj(x, mq(1)) + " == " + numerator + "/Jm(" + std::to_string(n) + ")^" +
           std::to_string(n);
}

inline std::string law_02d(const Monomial& x) {
    return jj(x, mq(1).negated()) + " == " + jj(x, mq(2)) + "*" +
           jj((mq(1) * x).negated(), mq(2)) + "/J(1,4)";
}

// j(z;q) = sum_{k<m} (-1)^k q^{C(k,2)} z^k j((-1)^{m+1} q^{C(m,2)+mk} z^m; q^{m^2})
inline std::string law_02e(std::int64_t m, const Monomial& z) {
    std::string rhs;
    for (std::int64_t k = 0; k < m; ++k) {
        Monomial pre = mq(binom2(k)) * z.pow(k);
        if (k % 2 != 0) pre = pre.negated();
        Monomial inner = mq(binom2(m) + m * k) * z.pow(m);
        if (m % 2 == 0) inner = inner.negated();
        if (!rhs.empty()) rhs += " + ";
        rhs += Mp(pre) + "*" + jj(inner, mq(m * m));
    }
    return jj(z, mq(1)) + " == " + rhs;
}

// j(x^n; q^n) = J_n j(x;q) j(zeta_n x;q) ... / J_1^n
inline std::string law_02f(std::int64_t n, const Monomial& x) {
    std::string numerator = "Jm(" + std::to_string(n) + ")";
    for (std::int64_t k = 0; k < n; ++k) {
        const Monomial arg = Monomial(CycNum::root_of_unity(n, k), 0) * x;
        numerator += "*" + jj(arg, mq(1));
    }
    return jj(x.pow(n), mq(n)) + " == " + numerator + "/Jm(1)^" + std::to_string(n);
}

inline std::string prop_21a_product(const Monomial& x) {
    return jj(mq(1) * x.pow(3), mq(3)) + " + " + Mp(x) + "*" + jj(mq(2) * x.pow(3), mq(3)) +
           " == " + jj(x.negated(), mq(1)) + "*" + jj(mq(1) * x.pow(2), mq(2)) + "/Jm(2)";
}

inline std::string prop_21a_quotient(const Monomial& x) {
    return jj(mq(1) * x.pow(3), mq(3)) + " + " + Mp(x) + "*" + jj(mq(2) * x.pow(3), mq(3)) +
           " == Jm(1)*" + jj(x.pow(2), mq(1)) + "/" + jj(x, mq(1));
}

inline std::string prop_21b(const Monomial& x, const Monomial& y) {
    return jj(x, mq(1)) + "*" + jj(y, mq(1)) + " == " + jj((x * y).negated(), mq(2)) + "*" +
           jj((mq(1) * y / x).negated(), mq(2)) + " - " + Mp(x) + "*" +
           jj((mq(1) * x * y).negated(), mq(2)) + "*" + jj((y / x).negated(), mq(2));
}

inline std::string prop_21c(const Monomial& x, const Monomial& y) {
    return jj(x.negated(), mq(1)) + "*" + jj(y, mq(1)) + " + " + jj(x, mq(1)) + "*" +
           jj(y.negated(), mq(1)) + " == 2*" + jj(x * y, mq(2)) + "*" +
           jj(mq(1) * y / x, mq(2));
}

inline std::string prop_22(const Monomial& a, const Monomial& b, const Monomial& c,
                           const Monomial& d, const Monomial& base) {
    auto quad = [&](const Monomial& m1, const Monomial& m2, const Monomial& m3,
                    const Monomial& m4) {
        return jj(m1, base) + "*" + jj(m2, base) + "*" + jj(m3, base) + "*" + jj(m4, base);
    };
    return quad(a * c, a / c, b * d, b / d) + " == " + quad(a * d, a / d, b * c, b / c) + " + " +
           Mp(b / c) + "*" + quad(a * b, a / b, c * d, c / d);
}

// j(x;q) j(y;q^6) = sum_{i=-2}^{2} (-1)^i q^{C(i,2)} x^i
//                   j(-q^{3i+9} x^3/y; q^15) j(q^{2i+1} x^2 y; q^10)
inline std::string thm_25(const Monomial& x, const Monomial& y) {
    std::string rhs;
    for (std::int64_t i = -2; i <= 2; ++i) {
        Monomial pre = mq(binom2(i)) * x.pow(i);
        if (i % 2 != 0) pre = pre.negated();
        const Monomial arg15 = (mq(3 * i + 9) * x.pow(3) / y).negated();
        const Monomial arg10 = mq(2 * i + 1) * x.pow(2) * y;
        if (!rhs.empty()) rhs += " + ";
        rhs += Mp(pre) + "*" + jj(arg15, mq(15)) + "*" + jj(arg10, mq(10));
    }
    return jj(x, mq(1)) + "*" + jj(y, mq(6)) + " == " + rhs;
}

inline std::string cor_26(const Monomial& x) {
    const Monomial x5 = x.pow(5);
    auto jb10 = [&](std::int64_t e) { return jj((mq(e) * x5).negated(), mq(10)); };
    return jj(x, mq(1)) + "*" + jj(x.pow(3).negated(), mq(6)) + " == J(3,15)*(" +
           Mp(mq(3) * x.pow(-2)) + "*" + jb10(-3) + " - " + Mp(x) + "*" + jb10(3) +
           ") + J(6,15)*(" + jb10(1) + " - " + Mp(mq(1) / x) + "*" + jb10(-1) + ")";
}

// Five-term Appell-Lerch expansion of f_{2,3,2}(x,y,q).
inline std::string prop_32(const Monomial& x, const Monomial& y) {
    auto mm = [&](const Monomial& arg) { return "m(" + M(arg) + "; q^10; -1)"; };
    const Monomial x2 = x.pow(2);
    const Monomial x3 = x.pow(3);
    const Monomial y2 = y.pow(2);
    const Monomial y3 = y.pow(3);
    std::string rhs = jj(x, mq(2)) + "*" + mm(mq(6) * y2 / x3);
    rhs += " - " + Mp(y) + "*" + jj(mq(3) * x, mq(2)) + "*" + mm(mq(1) * y2 / x3);
    rhs += " + " + jj(y, mq(2)) + "*" + mm(mq(6) * x2 / y3);
    rhs += " - " + Mp(x) + "*" + jj(mq(3) * y, mq(2)) + "*" + mm(mq(1) * x2 / y3);
    rhs += " - (1/Jb(0,10))*" + Mp(y / (mq(1) * x)) + "*Jm(5)^3*" +
           jj((x2 / y2).negated(), mq(2)) + "*" + jj(mq(3) * x * y, mq(5)) + "/(" +
           jj((mq(4) * y3 / x2).negated(), mq(5)) + "*" + jj((mq(4) * x3 / y2).negated(), mq(5)) +
           ")";
    return "f(2,3,2; " + M(x) + ", " + M(y) + "; q) == " + rhs;
}

inline void add(std::vector<IdentitySpec>& out, std::string id, std::int64_t order,
                std::vector<std::string> tags, const std::string& equation) {
    const std::size_t sep = equation.find("==");
    IdentitySpec s = make_spec(std::move(id), order, std::move(tags),
                               equation.substr(0, sep), equation.substr(sep + 2));
    out.push_back(std::move(s));
}

inline std::vector<IdentitySpec> build_catalog() {
    std::vector<IdentitySpec> out;
    const CycNum w = CycNum::omega();
    const CycNum i = CycNum::i_unit();

    // ---- The six Ramanujan identities for the tenth-order functions.
    add(out, "RLN-1.2", 50, {"ramanujan", "mock"},
        "q^2*phi(q^9) - (psi(w*q) - psi(w^2*q))/(w - w^2) == "
        "-q*(J(1,2)/J(3,6))*(J(3,15)*Jm(6)/Jm(3))");
    add(out, "RLN-1.3", 50, {"ramanujan", "mock"},
        "q^-2*psi(q^9) + (w*phi(w*q) - w^2*phi(w^2*q))/(w - w^2) == "
        "(J(1,2)/J(3,6))*(J(6,15)*Jm(6)/Jm(3))");
    add(out, "RLN-1.4", 50, {"ramanujan", "mock"},
        "X(q^9) - (w*chi(w*q) - w^2*chi(w^2*q))/(w - w^2) == "
        "(Jb(1,4)/Jb(3,12))*(J(18,30)*Jm(3)/Jm(6))");
    add(out, "RLN-1.5", 50, {"ramanujan", "mock"},
        "chi(q^9) + q^2*(X(w*q) - X(w^2*q))/(w - w^2) == "
        "-q^3*(Jb(1,4)/Jb(3,12))*(J(6,30)*Jm(3)/Jm(6))");
    add(out, "RLN-1.6", 50, {"ramanujan", "mock"},
        "phi(q) - q^-1*psi(-q^4) + q^-2*chi(q^8) == Jb(1,2)*j(-q^2; -q^10)/J(2,8)");
    add(out, "RLN-1.7", 50, {"ramanujan", "mock"},
        "psi(q) + q*phi(-q^4) + X(q^8) == Jb(1,2)*j(-q^6; -q^10)/J(2,8)");

    // ---- Hecke double-sum rewrites.
    add(out, "hecke-3.2", 50, {"hecke", "mock"}, "J(1,2)*phi(q) == f(2,3,2; q^2, q^2; q)");
    add(out, "hecke-3.3", 50, {"hecke", "mock"}, "J(1,2)*psi(q) == -q^2*f(2,3,2; q^4, q^4; q)");
    add(out, "hecke-3.4", 50, {"hecke", "mock"}, "Jb(1,4)*X(q) == f(2,3,2; -q^3, -q^3; q^2)");
    add(out, "hecke-3.5", 50, {"hecke", "mock"},
        "Jb(1,4)*(2 - chi(q)) == q*f(2,3,2; -q^-1, -q^-1; q^2)");

    // ---- Appell-Lerch representations of the four functions.
    add(out, "cor-3.3-phi", 50, {"appell", "mock"},
        "phi(q) == -q^-1*m(q; q^10; q) - q^-1*m(q; q^10; q^2)");
    add(out, "cor-3.3-psi", 50, {"appell", "mock"},
        "psi(q) == -m(q^3; q^10; q) - m(q^3; q^10; q^3)");
    add(out, "cor-3.3-X", 50, {"appell", "mock"},
        "X(q) == m(-q^2; q^5; q) + m(-q^2; q^5; q^4)");
    add(out, "cor-3.3-chi", 50, {"appell", "mock"},
        "chi(q) == m(-q; q^5; q^2) + m(-q; q^5; q^3)");

    // ---- Single-quotient evaluations of D_2 at z' = -1.
    add(out, "lemma-3.4-a", 50, {"dn", "quotient"},
        "D(2; -q^2; q^5; q; -1) == "
        "q^-2*Jm(10)^3*J(5,10)*Jb(12,20)/(Jb(2,5)*Jb(0,20)*J(1,10)*J(4,10))");
    add(out, "lemma-3.4-b", 50, {"dn", "quotient"},
        "D(2; -q^2; q^5; q^4; -1) == "
        "q^-2*Jm(10)^3*J(5,10)*J(3,10)*Jb(4,20)/(Jb(1,5)*Jb(0,20)*J(1,10)^2*J(4,10))");

    // ---- The six identities rewritten through D_2 / D_3.
    add(out, "lemma-4.1a", 50, {"dn", "mock"},
        "psi(q) + q*phi(-q^4) + X(q^8) == "
        "-D(2; q^3; q^10; q^6; q^-8) - D(2; q^3; q^10; q^4; q^8)");
    add(out, "lemma-4.1b", 50, {"dn", "mock"},
        "phi(q) - q^-1*psi(-q^4) + q^-2*chi(q^8) == "
        "-q^-1*D(2; q; q^10; q^8; q^-24) - q^-1*D(2; q; q^10; q^2; q^-16)");
    add(out, "lemma-4.2a", 50, {"dn", "mock", "unit-base"},
        "q^2*phi(q^9) - (psi(w*q) - psi(w^2*q))/(w - w^2) == "
        "(D(3; q^3; w*q^10; q^3; q^9) - D(3; q^3; w^2*q^10; q^3; q^9)"
        " + D(3; q^3; w*q^10; q^6; q^18) - D(3; q^3; w^2*q^10; q^6; q^18))/(w - w^2)");
    add(out, "lemma-4.2b", 50, {"dn", "mock", "unit-base"},
        "q^-2*psi(q^9) + (w*phi(w*q) - w^2*phi(w^2*q))/(w - w^2) == "
        "-q^-1*(D(3; w*q; w*q^10; q^-3; q^-9) - D(3; w^2*q; w^2*q^10; q^-3; q^-9)"
        " + D(3; w*q; w*q^10; q^-9; q^-27) - D(3; w^2*q; w^2*q^10; q^-9; q^-27))/(w - w^2)");
    add(out, "lemma-4.3a", 50, {"dn", "mock", "unit-base"},
        "X(q^9) - (w*chi(w*q) - w^2*chi(w^2*q))/(w - w^2) == "
        "-(D(3; -w*q; w^2*q^5; -q^-3; -q^-9) - w*D(3; -w^2*q; w*q^5; -q^-3; -q^-9)"
        " + D(3; -w*q; w^2*q^5; q^3; q^9) - w*D(3; -w^2*q; w*q^5; q^3; q^9))/(1 - w)");
    add(out, "lemma-4.3b", 50, {"dn", "mock", "unit-base"},
        "chi(q^9) + q^2*(X(w*q) - X(w^2*q))/(w - w^2) == "
        "q^2*(D(3; -w^2*q^2; w^2*q^5; q^6; q^18) - D(3; -w*q^2; w*q^5; q^6; q^18)"
        " + D(3; -w^2*q^2; w^2*q^5; q^9; q^27) - D(3; -w*q^2; w*q^5; q^9; q^27))/(w - w^2)");

    // ---- Single-quotient evaluations of the D_2 / D_3 specializations.
    add(out, "lemma-5.1a", 50, {"dn", "quotient"},
        "D(2; q^3; q^10; q^6; q^-8) == "
        "-Jm(20)^3*Jb(14,20)*J(20,40)/(J(1,10)*J(8,40)*Jb(8,20)*J(6,20))");
    add(out, "lemma-5.1b", 50, {"dn", "quotient"},
        "D(2; q^3; q^10; q^4; q^8) == "
        "-q*Jm(20)^3*Jb(18,20)*J(20,40)/(J(7,10)*J(8,40)*Jb(4,20)*J(6,20))");
    add(out, "lemma-5.2a", 50, {"dn", "quotient"},
        "D(2; q; q^10; q^8; q^-24) == "
        "-q*Jm(20)^3*Jb(6,20)*J(20,40)/(J(9,10)*J(24,40)*Jb(12,20)*J(18,20))");
    add(out, "lemma-5.2b", 50, {"dn", "quotient"},
        "D(2; q; q^10; q^2; q^-16) == "
        "-q^2*Jm(20)^3*Jb(2,20)*J(20,40)/(J(3,10)*J(16,40)*Jb(4,20)*J(2,20))");
    add(out, "lemma-5.3a", 50, {"dn", "quotient"},
        "D(3; q^3; q^10; q^3; q^9) == "
        "-q^-3*Jm(30)^7*J(12,30)/(J(6,30)*J(9,30)*J(9,90)*J(18,30)*J(5,30)*J(7,30)*J(13,30))");
    add(out, "lemma-5.3b", 50, {"dn", "quotient"},
        "D(3; q^3; q^10; q^6; q^18) == "
        "-q^-3*Jm(30)^7*J(12,30)/(J(6,30)*J(9,30)*J(18,90)*J(27,30)*J(4,30)*J(5,30)*J(14,30))");
    add(out, "lemma-5.4a", 50, {"dn", "quotient"},
        "D(3; q; q^10; q^-9; q^-27) == "
        "-Jm(30)^7/(J(18,30)*J(27,90)*J(3,30)*J(1,30)*J(5,30)*J(11,30))");
    add(out, "lemma-5.4b", 50, {"dn", "quotient"},
        "D(3; q; q^10; q^-3; q^-9) == "
        "-q^-3*Jm(30)^7/(J(18,30)*J(9,90)*J(3,30)*J(5,30)*J(7,30)*J(13,30))");
    add(out, "lemma-5.5a", 50, {"dn", "quotient"},
        "D(3; -q; q^5; -q^-3; -q^-9) == "
        "-Jm(15)^7/(J(12,15)*Jb(9,45)*Jb(3,15)*Jb(2,15)*Jb(7,15)*Jb(5,15))");
    add(out, "lemma-5.5b", 50, {"dn", "quotient"},
        "D(3; -q; q^5; q^3; q^9) == "
        "q^-1*Jm(15)^2*Jm(30)^4*J(3,15)/(J(9,45)*Jb(12,15)*J(12,30)*J(2,30)*J(8,30)*J(5,30))");
    add(out, "lemma-5.6a", 50, {"dn", "quotient"},
        "D(3; -q^2; q^5; q^6; q^18) == "
        "-q*Jm(30)^4*Jm(15)^2*J(6,15)/(J(18,45)*Jb(9,15)*J(24,30)*J(4,30)*J(14,30)*J(5,30))");
    add(out, "lemma-5.6b", 50, {"dn", "quotient"},
        "D(3; -q^2; q^5; q^9; q^27) == "
        "q^2*Jm(30)*Jm(15)^5*J(3,15)/(J(27,45)*Jb(3,15)*J(12,30)*J(1,15)*J(4,15)*Jb(5,15))");

    // ---- Product identities behind the final reductions.
    add(out, "cor-2.7-id1", 200, {"theta", "product"},
        "J(1,5)*J(12,30) - q*J(2,5)*J(6,30) == J(1,2)*Jb(3,12)");
    add(out, "cor-2.7-id1b", 200, {"theta", "product"}, "J(1,2)*Jb(3,12) == Jm(1)*J(1,6)");
    add(out, "cor-2.7-id2", 200, {"theta", "product"},
        "J(4,10)*J(6,15) + q*J(2,10)*J(3,15) == Jb(1,4)*J(3,6)");
    add(out, "cor-2.7-id2b", 200, {"theta", "product"}, "Jb(1,4)*J(3,6) == Jm(2)*Jb(1,3)");

    // ---- The reduced theta-quotient forms of the six identities.
    add(out, "reduced-1.2", 100, {"theta", "reduced"},
        "q^2*(Jm(30)^2/J(9,30))*(J(2,5)*Jm(15)/(J(6,15)*J(3,15)))"
        " - q*(Jm(30)^2/J(9,30))*(J(18,30)/J(6,30))*(J(1,5)/J(6,15))*(Jm(15)/J(3,15)) == "
        "-q*(J(1,2)/J(3,6))*(J(3,15)*Jm(6)/Jm(3))");
    add(out, "reduced-1.3", 100, {"theta", "reduced"},
        "(J(1,5)*Jm(15)/(J(3,15)*J(6,15)))*(Jm(30)^2/J(3,30))"
        " - q*(J(2,5)*Jm(15)/J(3,15)^2)*(Jm(30)^2/J(9,30)) == "
        "(J(1,2)/J(3,6))*(J(6,15)*Jm(6)/Jm(3))");
    add(out, "reduced-1.4", 100, {"theta", "reduced"},
        "(J(4,30)*J(14,30)/Jb(6,15))*(Jm(10)*Jm(15)^2/(J(6,30)*Jm(30)^2))"
        " + q*(J(2,30)*J(8,30)/Jb(3,15))*(Jm(10)*Jm(15)^2/(J(6,30)*Jm(30)^2)) == "
        "(Jb(1,4)/Jb(3,12))*(J(18,30)*Jm(3)/Jm(6))");
    add(out, "reduced-1.5", 100, {"theta", "reduced"},
        "-q^3*(J(4,10)/Jb(6,15))*(Jm(15)^2*Jm(30)/(J(12,30)*J(6,30)))"
        " - q^4*(J(2,10)/Jb(3,15))*(Jm(15)^2*Jm(30)/J(12,30)^2) == "
        "-q^3*(Jb(1,4)/Jb(3,12))*(J(6,30)*Jm(3)/Jm(6))");

    // ---- Appell-Lerch functional equations at fixed parameters.
    add(out, "eq-2.3a-inst", 50, {"appell"}, "m(q; q^10; q) == m(q; q^10; q^11)");
    add(out, "eq-2.3b-inst", 50, {"appell"}, "m(q^3; q^10; q) == q^-3*m(q^-3; q^10; q^-1)");
    add(out, "eq-2.3c-inst", 50, {"appell"}, "m(q^3; q^10; q) == m(q^3; q^10; q^-4)");
    add(out, "eq-2.3d-inst", 50, {"appell"},
        "m(q; q^10; q^2) - m(q; q^10; q^3) == "
        "q^3*Jm(10)^3*j(q^-1; q^10)*j(q^6; q^10)"
        "/(j(q^3; q^10)*j(q^2; q^10)*j(q^4; q^10)*j(q^3; q^10))");

    // ---- Theta expansions of D_n at fixed parameters (n = 1, 2, 3).
    add(out, "thm-1-n1-inst", 50, {"dn", "closed-form"},
        "D(1; q^2; q^5; q; q^4) == "
        "q^4*Jm(5)^3*j(q^7; q^5)*j(q^-3; q^5)"
        "/(j(q^3; q^5)*j(q^4; q^5)*j(q^6; q^5)*j(q; q^5))");
    add(out, "cor-2.3-inst", 50, {"dn", "closed-form"},
        "D(2; q; q^5; q^2; q^3) == "
        "q^3*Jm(10)^3*(j(-q^12; q^10)*j(q; q^20)/(j(-q^10; q^10)*j(q^2; q^10))"
        " - q^3*j(-q^17; q^10)*j(q^11; q^20)/(j(-q^10; q^10)*j(q^7; q^10)))"
        "/(j(q^3; q^5)*j(q^3; q^20))");
    add(out, "cor-2.4-inst", 50, {"dn", "closed-form"},
        "D(3; q; q^5; q^2; q^3) == "
        "q^3*Jm(15)^3*(q^-2*j(q^8; q^15)*j(q^3; q^45)/j(q^2; q^15)"
        " - q^-4*j(q^13; q^15)*j(q^18; q^45)/j(q^7; q^15)"
        " + q^-1*j(q^18; q^15)*j(q^33; q^45)/j(q^12; q^15))"
        "/(j(q^3; q^5)*j(q^3; q^45)*j(q^6; q^15))");

    // ---- General theta transformation laws at fixed monomials.
    const Base q1 = Base::q_pow(1);
    add(out, "law-0.2a-inst", 100, {"theta", "law"},
        law_02a(2, Monomial(w, 3), q1));
    add(out, "law-0.2b1-inst", 100, {"theta", "law"},
        law_02b1(Monomial(w, 2), Base::q_pow(3)));
    add(out, "law-0.2b2-inst", 100, {"theta", "law"},
        law_02b2(Monomial(w, 2), Base::q_pow(3)));
    add(out, "law-0.2c-inst", 100, {"theta", "law"}, law_02c(2, Monomial(w, 1)));
    add(out, "law-0.2d-inst", 100, {"theta", "law"}, law_02d(Monomial(w, 2)));
    add(out, "law-0.2e-m2-inst", 100, {"theta", "law"}, law_02e(2, Monomial(i, 2)));
    add(out, "law-0.2e-m3-inst", 100, {"theta", "law"}, law_02e(3, Monomial(i, 2)));
    add(out, "law-0.2f-n2-inst", 100, {"theta", "law"}, law_02f(2, Monomial(i, 1)));
    add(out, "law-0.2f-n3-inst", 100, {"theta", "law"}, law_02f(3, Monomial(i, 1)));

    // ---- Product identities for theta functions at fixed monomials.
    add(out, "prop-2.1a-prod-inst", 100, {"theta", "product"},
        prop_21a_product(Monomial(w, 2)));
    add(out, "prop-2.1a-quot-inst", 100, {"theta", "product"},
        prop_21a_quotient(Monomial(w, 2)));
    add(out, "prop-2.1b-inst", 100, {"theta", "product"},
        prop_21b(Monomial(w, 1), mq(2)));
    add(out, "prop-2.1c-inst", 100, {"theta", "product"},
        prop_21c(Monomial(w, 2), mq(1)));

    // ---- Weierstrass three-term relation at fixed monomials.
    add(out, "prop-2.2-inst-a", 100, {"theta", "weierstrass"},
        prop_22(mq(4), mq(2), mq(1), Monomial(i, 0), mq(10)));
    add(out, "prop-2.2-inst-b", 100, {"theta", "weierstrass"},
        prop_22(Monomial(w, 2), mq(3), mq(1), mq(1).negated(), mq(7)));

    // ---- Quintisection of a theta product, and its companion.
    add(out, "thm-2.5-inst-a", 100, {"theta", "dissection"}, thm_25(mq(1), mq(2)));
    add(out, "thm-2.5-inst-b", 100, {"theta", "dissection"},
        thm_25(Monomial(w, 1), mq(3)));
    add(out, "thm-2.5-inst-c", 100, {"theta", "dissection"},
        thm_25(mq(2).negated(), mq(1)));
    add(out, "cor-2.6-inst-a", 100, {"theta", "dissection"}, cor_26(mq(2)));
    add(out, "cor-2.6-inst-b", 100, {"theta", "dissection"}, cor_26(Monomial(w, 1)));

    // ---- Appell-Lerch expansion of f_{2,3,2} at fixed monomials.
    add(out, "prop-3.2-inst-a", 50, {"hecke", "appell"},
        prop_32(Monomial(w, 1), Monomial(w * w, 2)));
    add(out, "prop-3.2-inst-b", 50, {"hecke", "appell"},
        prop_32(Monomial(i, 1), Monomial(w, 2)));

    return out;
}

} // namespace catalog_detail

/// The built-in identity catalog.
inline const std::vector<IdentitySpec>& builtin_catalog() {
    static const std::vector<IdentitySpec> cat = catalog_detail::build_catalog();
    return cat;
}

inline const IdentitySpec* find_identity(const std::string& id) {
    for (const auto& s : builtin_catalog())
        if (s.id == id) return &s;
    return nullptr;
}

/// Evaluates both sides independently and compares coefficients through
/// q^order.  Evaluation errors become failed reports with a diagnostic,
/// never exceptions.
inline VerificationReport verify(const IdentitySpec& spec, std::int64_t order) {
    VerificationReport rep;
    rep.id = spec.id;
    rep.order_checked = order;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Series lhs = eval_expr(spec.lhs, order);
        const Series rhs = eval_expr(spec.rhs, order);
        const auto mm = Series::eq_to(lhs, rhs, order);
        if (mm) {
            rep.pass = false;
            rep.first_mismatch = MismatchInfo{mm->exp, mm->lhs.to_string(), mm->rhs.to_string()};
        } else {
            rep.pass = true;
        }
    } catch (const Error& e) {
        rep.pass = false;
        rep.error = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

/// Runs a list of specs, optionally overriding each entry's default order,
/// optionally fanned out over threads.  Reports come back in input order.
inline std::vector<VerificationReport> verify_specs(const std::vector<IdentitySpec>& specs,
                                                    std::optional<std::int64_t> order,
                                                    int jobs = 1) {
    std::vector<VerificationReport> reports(specs.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (std::size_t k = 0; k < specs.size(); ++k)
            reports[k] = verify(specs[k], order.value_or(specs[k].default_order));
        return reports;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= specs.size()) return;
            reports[k] = verify(specs[k], order.value_or(specs[k].default_order));
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return reports;
}

inline std::vector<VerificationReport> verify_all(std::optional<std::int64_t> order,
                                                  int jobs = 1) {
    return verify_specs(builtin_catalog(), order, jobs);
}

} // namespace qv

#endif
