#ifndef QVERIFY_CYCLOTOMIC_HPP
#define QVERIFY_CYCLOTOMIC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include <gmpxx.h>

#include "qverify/errors.hpp"

namespace qv {

using Rational = mpq_class;

/// Element of Q(zeta_12), the coefficient field for all series.
///
/// Stored on the canonical basis {1, z, z^2, z^3} with z = zeta_12 a
/// primitive twelfth root of unity, so z^4 = z^2 - 1 (minimal polynomial
/// t^4 - t^2 + 1).  The useful sub-roots are w = z^4 (primitive cube root)
/// and i = z^3.  Representation is always fully reduced, so equality is
/// componentwise.
class CycNum {
  public:
    CycNum() : c_{} {}
    CycNum(const Rational& r) : c_{} { c_[0] = r; } // NOLINT(google-explicit-constructor)
    CycNum(long n) : c_{} { c_[0] = n; }            // NOLINT(google-explicit-constructor)
    CycNum(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& c3)
        : c_{c0, c1, c2, c3} {}

    static CycNum zero() { return CycNum(); }
    static CycNum one() { return CycNum(1); }

    /// zeta_12^k for any integer k.
    static CycNum zeta_pow(std::int64_t k) {
        k %= 12;
        if (k < 0) k += 12;
        return unit_table()[static_cast<std::size_t>(k)];
    }

    static CycNum omega() { return zeta_pow(4); }
    static CycNum i_unit() { return zeta_pow(3); }

    /// Primitive n-th root of unity to the k-th power; requires n | 12.
    static CycNum root_of_unity(std::int64_t n, std::int64_t k) {
        if (n <= 0 || 12 % n != 0)
            throw UnsupportedRoot("root_of_unity: order " + std::to_string(n) +
                                  " does not divide 12");
        return zeta_pow((12 / n) * k);
    }

    const Rational& coeff(int j) const { return c_[static_cast<std::size_t>(j)]; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_one() const { return is_rational() && c_[0] == 1; }

    friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    CycNum operator-() const {
        CycNum r;
        for (int j = 0; j < 4; ++j) r.c_[j] = -c_[j];
        return r;
    }

    CycNum& operator+=(const CycNum& o) {
        for (int j = 0; j < 4; ++j) c_[j] += o.c_[j];
        return *this;
    }
    CycNum& operator-=(const CycNum& o) {
        for (int j = 0; j < 4; ++j) c_[j] -= o.c_[j];
        return *this;
    }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        // Rational operands multiply componentwise.
        if (a.is_rational()) {
            if (a.c_[0] == 0) return CycNum();
            CycNum r;
            for (int j = 0; j < 4; ++j) r.c_[j] = a.c_[0] * b.c_[j];
            return r;
        }
        if (b.is_rational()) {
            if (b.c_[0] == 0) return CycNum();
            CycNum r;
            for (int j = 0; j < 4; ++j) r.c_[j] = b.c_[0] * a.c_[j];
            return r;
        }
        // Schoolbook product, then reduce with z^4 = z^2 - 1, z^5 = z^3 - z,
        // z^6 = -1.
        std::array<Rational, 7> p{};
        for (int j = 0; j < 4; ++j) {
            if (a.c_[j] == 0) continue;
            for (int k = 0; k < 4; ++k) {
                if (b.c_[k] == 0) continue;
                p[static_cast<std::size_t>(j + k)] += a.c_[j] * b.c_[k];
            }
        }
        CycNum r;
        r.c_[0] = p[0] - p[4] - p[6];
        r.c_[1] = p[1] - p[5];
        r.c_[2] = p[2] + p[4];
        r.c_[3] = p[3] + p[5];
        return r;
    }

    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    /// Multiplication by zeta_12 (basis rotation; no rational products).
    CycNum zeta_shift() const {
        CycNum r;
        r.c_[0] = -c_[3];
        r.c_[1] = c_[0];
        r.c_[2] = c_[1] + c_[3];
        r.c_[3] = c_[2];
        return r;
    }

    /// Multiplicative inverse, by solving the 4x4 linear system a*x = 1.
    CycNum inverse() const {
        if (is_zero()) throw DivisionByZero("CycNum::inverse of zero");
        if (is_rational()) {
            CycNum r;
            r.c_[0] = 1 / c_[0];
            return r;
        }
        // Columns of M are a*z^j on the basis; solve M x = e0.
        std::array<std::array<Rational, 5>, 4> m{};
        CycNum col = *this;
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = col.c_[k];
            col = col.zeta_shift();
        }
        m[0][4] = 1;
        // Gaussian elimination with partial (first nonzero) pivoting.
        for (int piv = 0; piv < 4; ++piv) {
            int row = -1;
            for (int r2 = piv; r2 < 4; ++r2)
                if (m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(piv)] != 0) { row = r2; break; }
            if (row < 0) throw DivisionByZero("CycNum::inverse: singular element");
            std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(row)]);
            const Rational inv_p = 1 / m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(piv)];
            for (int k = piv; k < 5; ++k) m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(k)] *= inv_p;
            for (int r2 = 0; r2 < 4; ++r2) {
                if (r2 == piv) continue;
                const Rational f = m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(piv)];
                if (f == 0) continue;
                for (int k = piv; k < 5; ++k)
                    m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(k)] -= f * m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(k)];
            }
        }
        return CycNum(m[0][4], m[1][4], m[2][4], m[3][4]);
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    CycNum pow(std::int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        CycNum acc = one();
        CycNum base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Galois conjugate sigma_k: z -> z^k, for k coprime to 12.
    CycNum conjugate(int k) const {
        CycNum r(c_[0]);
        for (int j = 1; j < 4; ++j) {
            if (c_[j] == 0) continue;
            r += CycNum(c_[j]) * zeta_pow(static_cast<std::int64_t>(j) * k);
        }
        return r;
    }

    /// Field norm: product over the four embeddings.  Always rational.
    Rational norm() const {
        CycNum n = conjugate(1) * conjugate(5) * conjugate(7) * conjugate(11);
        return n.c_[0];
    }

    /// If this value is a twelfth root of unity zeta_12^t, return t in 0..11.
    std::optional<int> unit_log() const {
        for (int t = 0; t < 12; ++t)
            if (*this == unit_table()[static_cast<std::size_t>(t)]) return t;
        return std::nullopt;
    }

    /// Renders on the z-basis, e.g. "1/2 + 3*z^2".
    std::string to_string() const {
        static const char* names[4] = {"", "z", "z^2", "z^3"};
        std::ostringstream os;
        bool first = true;
        for (int j = 0; j < 4; ++j) {
            if (c_[j] == 0) continue;
            Rational v = c_[j];
            if (first) {
                if (v < 0) { os << "-"; v = -v; }
            } else {
                os << (v < 0 ? " - " : " + ");
                if (v < 0) v = -v;
            }
            if (j == 0 || v != 1) {
                os << v.get_str();
                if (j > 0) os << "*";
            }
            if (j > 0) os << names[j];
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

  private:
    static const std::array<CycNum, 12>& unit_table() {
        static const std::array<CycNum, 12> table = [] {
            std::array<CycNum, 12> t{};
            t[0] = CycNum(1);
            for (int k = 1; k < 12; ++k) t[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k - 1)].zeta_shift();
            return t;
        }();
        return table;
    }

    std::array<Rational, 4> c_;
};

} // namespace qv

#endif
