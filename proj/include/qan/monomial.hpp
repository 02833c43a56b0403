#pragma once

#include <string>

#include "qan/rational.hpp"

namespace qan {

// A monomial c * q^e over the formal variable q. Closed under product and
// ratio, which is what keeps every q-Pochhammer argument in the exact
// backend a single monomial. Zero is canonically {0, 0}.
struct QMonomial {
    Rational c{0};
    long e = 0;

    QMonomial() = default;
    QMonomial(Rational coef, long exp) : c(std::move(coef)), e(exp) {
        if (c == 0) e = 0;
    }

    bool is_zero() const { return c == 0; }
    bool is_one() const { return e == 0 && c == 1; }

    friend QMonomial operator*(const QMonomial& a, const QMonomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return {a.c * b.c, a.e + b.e};
    }
    friend QMonomial operator/(const QMonomial& a, const QMonomial& b) {
        if (b.is_zero()) throw SingularBinding("division by zero monomial");
        if (a.is_zero()) return {};
        return {a.c / b.c, a.e - b.e};
    }
    friend QMonomial operator-(const QMonomial& a) { return {-a.c, a.is_zero() ? 0 : a.e}; }
    friend bool operator==(const QMonomial& a, const QMonomial& b) {
        return a.c == b.c && a.e == b.e;
    }
};

inline QMonomial qm(long num, long den = 1, long exp = 0) {
    return {make_rat(num, den), exp};
}

inline QMonomial qm_qpow(long exp) { return {Rational(1), exp}; }

inline QMonomial qm_pow(const QMonomial& a, long e) {
    if (e == 0) return qm_qpow(0);
    if (a.is_zero()) {
        if (e < 0) throw SingularBinding("zero monomial raised to a negative power");
        return {};
    }
    return {rat_pow(a.c, e), a.e * e};
}

inline std::string to_string(const QMonomial& m) {
    std::string s = to_string(m.c);
    if (m.e != 0) s += "*q^" + std::to_string(m.e);
    return s;
}

} // namespace qan
