#include "qan/backends.hpp"

namespace qan {

Series ExactBackend::qpoch(const Scalar& z, long k, int step) const {
    if (k < 0) return qpoch_inv(smul(z, qpow(step * k)), -k, step);
    Key key{z.c, z.e, k, step};
    auto it = poch_.find(key);
    if (it != poch_.end()) return it->second;
    Series s = qpoch_finite(z, k, step);
    poch_.emplace(key, s);
    return s;
}

Series ExactBackend::qpoch_inv(const Scalar& z, long k, int step) const {
    if (k < 0) return qpoch(smul(z, qpow(step * k)), -k, step);
    Key key{z.c, z.e, k, step};
    auto it = poch_inv_.find(key);
    if (it != poch_inv_.end()) return it->second;
    Series s = qpoch(z, k, step).inverse(ctx_.order);
    poch_inv_.emplace(key, s);
    return s;
}

Series ExactBackend::qpoch_inf(const Scalar& z, int step) const {
    std::tuple<Rational, long, int> key{z.c, z.e, step};
    auto it = inf_.find(key);
    if (it != inf_.end()) return it->second;
    Series s = qpoch_infinite(z, ctx_.order, step);
    inf_.emplace(key, s);
    return s;
}

Series ExactBackend::qpoch_inf_inv(const Scalar& z, int step) const {
    std::tuple<Rational, long, int> key{z.c, z.e, step};
    auto it = inf_inv_.find(key);
    if (it != inf_inv_.end()) return it->second;
    Series s = qpoch_inf(z, step).inverse(ctx_.order);
    inf_inv_.emplace(key, s);
    return s;
}

NumericBackend::NumericBackend(NumericContext ctx)
    : ctx_(ctx),
      q_(BigReal::from_rational(ctx.q, ctx.precision_bits)),
      one_(BigReal::from_long(1, ctx.precision_bits)) {
    if (!(ctx_.q > 0 && ctx_.q < 1)) throw ConfigError("numeric mode needs q in (0,1)");
}

BigReal NumericBackend::qpoch(const Scalar& z, long k, int step) const {
    if (k < 0) return qpoch_inv(z * qpow(step * k), -k, step);
    Value p = one_;
    Value zq = z;
    Value qs = qpow(step);
    for (long j = 0; j < k; ++j) {
        p *= one_ - zq;
        zq *= qs;
    }
    return p;
}

BigReal NumericBackend::qpoch_inf(const Scalar& z, int step) const {
    Value qs = qpow(step);
    // Factors below tail_eps * (1 - q^step) perturb the product by less
    // than tail_eps of its value; stop there.
    double cut = ctx_.tail_eps * (one_ - qs).abs_double();
    Value p = one_;
    Value zq = z;
    long guard = 64 + 64 * ctx_.precision_bits;
    for (long j = 0; j < guard; ++j) {
        if (zq.abs_below(cut)) return p;
        Value f = one_ - zq;
        if (f.is_zero()) throw SingularFactor("infinite product has a zero factor");
        p *= f;
        zq *= qs;
    }
    throw NoConvergence("infinite product failed to reach the tail cutoff");
}

BigReal NumericBackend::pi_q() const {
    Value q2 = qpow(2);
    Value a = qpoch_inf(q2, 2);      // (q^2; q^2)_inf
    Value b = qpoch_inf(q_, 2);      // (q; q^2)_inf
    Value r = div(a, b);
    return (one_ - q2) * q_quarter_root() * r * r;
}

} // namespace qan
