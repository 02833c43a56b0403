#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "qan/errors.hpp"
#include "qan/rational.hpp"

namespace qan {

// Arbitrary-precision binary float. Precision is fixed at construction;
// binary operations carry the larger operand precision. Rounding is always
// to nearest.
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal from_long(long x, mpfr_prec_t prec) {
        BigReal r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigReal from_rational(const Rational& x, mpfr_prec_t prec) {
        BigReal r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigReal from_decimal(const std::string& s, mpfr_prec_t prec) {
        BigReal r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
            throw ConfigError("bad decimal literal: " + s);
        }
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_finite() const { return mpfr_number_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    double abs_double() const {
        double d = mpfr_get_d(v_, MPFR_RNDN);
        return d < 0 ? -d : d;
    }

    std::string to_string(int digits = 25) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a) {
        BigReal r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator*=(const BigReal& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    BigReal abs() const {
        BigReal r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal pow_si(long e) const {
        BigReal r(prec());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    // x^(1/n) for positive x.
    BigReal root(unsigned long n) const {
        BigReal r(prec());
        mpfr_rootn_ui(r.v_, v_, n, MPFR_RNDN);
        return r;
    }

    // |a| < |b|
    friend bool abs_less(const BigReal& a, const BigReal& b) {
        return mpfr_cmpabs(a.v_, b.v_) < 0;
    }
    friend int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
    bool abs_below(double bound) const { return abs_double() < bound; }

private:
    mpfr_t v_;
};

} // namespace qan
