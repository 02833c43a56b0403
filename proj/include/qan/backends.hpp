#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "qan/bigreal.hpp"
#include "qan/binding.hpp"
#include "qan/context.hpp"
#include "qan/errors.hpp"
#include "qan/monomial.hpp"
#include "qan/pochhammer.hpp"
#include "qan/rational.hpp"
#include "qan/series.hpp"

namespace qan {

// The three backends share one informal interface so that each identity
// evaluator can be written once as a template:
//   types   Value, Scalar
//   scalars qpow, srat, from_spec, smul, sdiv, spow, sneg, one_minus_s,
//           sinv, szero
//   values  one, zero_sum, from_scalar, one_minus, add, sub, mul, scale,
//           inv, div, qpoch, qpoch_inv, qpoch_inf, qpoch_inf_inv,
//           finalize_sum
//   summing shell_patience, shell_cap, weight_add, shell_negligible

// ---------------------------------------------------------------------------
// Exact truncated-Laurent-series backend (formal q).
class ExactBackend {
public:
    using Value = Series;
    using Scalar = QMonomial;

    explicit ExactBackend(ExactContext ctx) : ctx_(ctx) {}
    const ExactContext& ctx() const { return ctx_; }
    long order() const { return ctx_.order; }

    Scalar qpow(long e) const { return qm_qpow(e); }
    Scalar srat(const Rational& r) const { return {r, 0}; }
    Scalar from_spec(const ScalarSpec& s) const {
        if (s.is_dec()) throw ConfigError("decimal scalars need numeric mode");
        return {s.coef, s.exp};
    }
    Scalar smul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar sdiv(const Scalar& a, const Scalar& b) const { return a / b; }
    Scalar spow(const Scalar& a, long e) const { return qm_pow(a, e); }
    Scalar sneg(const Scalar& a) const { return -a; }
    bool szero(const Scalar& a) const { return a.is_zero(); }
    // 1 - s as a scalar; only exponent-0 monomials stay monomial.
    Scalar one_minus_s(const Scalar& s) const {
        if (!s.is_zero() && s.e != 0) {
            throw Error("one_minus_s applied to a monomial with q-exponent");
        }
        return {1 - s.c, 0};
    }
    Scalar sinv(const Scalar& s) const {
        if (s.is_zero()) throw SingularBinding("scalar division by zero");
        return qm_pow(s, -1);
    }

    Value one() const { return Series::one(); }
    Value zero_sum() const { return Series::zero(); }
    Value from_scalar(const Scalar& s) const { return Series::monomial(s); }
    Value one_minus(const Scalar& s) const { return Series::one_minus(s); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value scale(const Value& v, const Scalar& s) const { return v.scaled(s); }
    Value inv(const Value& v) const { return v.inverse(ctx_.order); }
    Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }

    Value qpoch(const Scalar& z, long k, int step = 1) const;
    Value qpoch_inv(const Scalar& z, long k, int step = 1) const;
    Value qpoch_inf(const Scalar& z, int step = 1) const;
    Value qpoch_inf_inv(const Scalar& z, int step = 1) const;

    Value finalize_sum(const Value& v) const { return v.truncated(ctx_.order); }

    int shell_patience() const { return ctx_.zero_shell_patience; }
    long shell_cap() const { return ctx_.shell_cap; }
    void weight_add(double&, const Value&) const {}
    bool shell_negligible(const Value& shell, double) const {
        return shell.truncated(ctx_.order).is_zero_on_window();
    }

private:
    using Key = std::tuple<Rational, long, long, int>;
    ExactContext ctx_;
    mutable std::map<Key, Series> poch_, poch_inv_;
    mutable std::map<std::tuple<Rational, long, int>, Series> inf_, inf_inv_;
};

// ---------------------------------------------------------------------------
// Exact rational backend: q is a fixed rational number; only finite
// expressions are available (no infinite products).
class RationalBackend {
public:
    using Value = Rational;
    using Scalar = Rational;

    explicit RationalBackend(Rational q) : q_(std::move(q)) {
        if (q_ == 0) throw ConfigError("rational backend needs q != 0");
    }
    const Rational& q() const { return q_; }

    Scalar qpow(long e) const { return rat_pow(q_, e); }
    Scalar srat(const Rational& r) const { return r; }
    Scalar from_spec(const ScalarSpec& s) const {
        if (s.is_dec()) throw ConfigError("decimal scalars need numeric mode");
        return s.coef * rat_pow(q_, s.exp);
    }
    Scalar smul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar sdiv(const Scalar& a, const Scalar& b) const {
        if (b == 0) throw SingularBinding("scalar division by zero");
        return a / b;
    }
    Scalar spow(const Scalar& a, long e) const { return rat_pow(a, e); }
    Scalar sneg(const Scalar& a) const { return -a; }
    bool szero(const Scalar& a) const { return a == 0; }
    Scalar one_minus_s(const Scalar& s) const { return 1 - s; }
    Scalar sinv(const Scalar& s) const {
        if (s == 0) throw SingularBinding("scalar division by zero");
        return 1 / s;
    }

    Value one() const { return Rational(1); }
    Value zero_sum() const { return Rational(0); }
    Value from_scalar(const Scalar& s) const { return s; }
    Value one_minus(const Scalar& s) const { return 1 - s; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value scale(const Value& v, const Scalar& s) const { return v * s; }
    Value inv(const Value& v) const {
        if (v == 0) throw SingularBinding("division by zero value");
        return 1 / v;
    }
    Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }

    Value qpoch(const Scalar& z, long k, int step = 1) const {
        if (k < 0) return inv(qpoch(z * qpow(step * k), -k, step));
        Value p(1);
        for (long j = 0; j < k; ++j) p *= 1 - z * qpow(step * j);
        return p;
    }
    Value qpoch_inv(const Scalar& z, long k, int step = 1) const {
        return inv(qpoch(z, k, step));
    }
    Value qpoch_inf(const Scalar&, int = 1) const {
        throw UnsupportedMode("infinite products are not available at rational q");
    }
    Value qpoch_inf_inv(const Scalar&, int = 1) const {
        throw UnsupportedMode("infinite products are not available at rational q");
    }

    Value finalize_sum(const Value& v) const { return v; }

    int shell_patience() const { return 3; }
    long shell_cap() const { return 400; }
    void weight_add(double&, const Value&) const {}
    bool shell_negligible(const Value& shell, double) const { return shell == 0; }

private:
    Rational q_;
};

// ---------------------------------------------------------------------------
// Arbitrary-precision numeric backend.
class NumericBackend {
public:
    using Value = BigReal;
    using Scalar = BigReal;

    explicit NumericBackend(NumericContext ctx);
    const NumericContext& ctx() const { return ctx_; }
    const BigReal& q() const { return q_; }

    Scalar qpow(long e) const { return q_.pow_si(e); }
    Scalar srat(const Rational& r) const {
        return BigReal::from_rational(r, ctx_.precision_bits);
    }
    Scalar from_spec(const ScalarSpec& s) const {
        if (s.is_dec()) return BigReal::from_decimal(s.dec, ctx_.precision_bits);
        Scalar v = srat(s.coef);
        if (s.exp != 0) v *= qpow(s.exp);
        return v;
    }
    Scalar smul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar sdiv(const Scalar& a, const Scalar& b) const { return div(a, b); }
    Scalar spow(const Scalar& a, long e) const {
        if (e < 0 && a.abs_below(kSingularEps)) {
            throw SingularBinding("near-zero scalar raised to a negative power");
        }
        return a.pow_si(e);
    }
    Scalar sneg(const Scalar& a) const { return -a; }
    bool szero(const Scalar& a) const { return a.is_zero(); }
    Scalar one_minus_s(const Scalar& s) const { return one_ - s; }
    Scalar sinv(const Scalar& s) const { return inv(s); }

    Value one() const { return one_; }
    Value zero_sum() const { return BigReal(ctx_.precision_bits); }
    Value from_scalar(const Scalar& s) const { return s; }
    Value one_minus(const Scalar& s) const { return one_ - s; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value scale(const Value& v, const Scalar& s) const { return v * s; }
    Value inv(const Value& v) const {
        if (v.abs_below(kSingularEps)) {
            throw SingularBinding("denominator below the singularity threshold");
        }
        return one_ / v;
    }
    Value div(const Value& a, const Value& b) const {
        if (b.abs_below(kSingularEps)) {
            throw SingularBinding("denominator below the singularity threshold");
        }
        return a / b;
    }

    Value qpoch(const Scalar& z, long k, int step = 1) const;
    Value qpoch_inv(const Scalar& z, long k, int step = 1) const {
        return inv(qpoch(z, k, step));
    }
    Value qpoch_inf(const Scalar& z, int step = 1) const;
    Value qpoch_inf_inv(const Scalar& z, int step = 1) const {
        return inv(qpoch_inf(z, step));
    }

    Value finalize_sum(const Value& v) const { return v; }

    int shell_patience() const { return ctx_.shell_patience; }
    long shell_cap() const { return ctx_.shell_cap; }
    void weight_add(double& w, const Value& v) const { w += v.abs_double(); }
    bool shell_negligible(const Value&, double w) const { return w < ctx_.tail_eps; }

    // pi_q = (1-q^2) q^{1/4} (q^2;q^2)_inf^2 / (q;q^2)_inf^2
    Value pi_q() const;
    Value q_quarter_root() const { return q_.root(4); }

    static constexpr double kSingularEps = 1e-10;

private:
    NumericContext ctx_;
    BigReal q_, one_;
};

} // namespace qan
