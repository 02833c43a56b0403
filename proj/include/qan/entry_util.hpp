#pragma once

#include <type_traits>
#include <vector>

#include "qan/kernel.hpp"
#include "qan/testfn.hpp"

namespace qan {

// Shared building blocks for the identity evaluators. Everything here is
// backend-generic; an evaluator written against these helpers runs in the
// exact, rational and numeric domains unchanged.

template <class B>
typename B::Scalar sprod(const B& bk, const std::vector<typename B::Scalar>& zs) {
    auto acc = bk.qpow(0);
    for (const auto& z : zs) acc = bk.smul(acc, z);
    return acc;
}

template <class B>
typename B::Scalar sign_of(const B& bk, long m) {
    return bk.srat(m % 2 == 0 ? Rational(1) : Rational(-1));
}

// prod_{r,s} (q^{step(c + a_r - b_s)} x_r/x_s; q^step)_{len_r}, optionally
// inverted. a and b may be null for no per-coordinate shift.
template <class B>
typename B::Value shifted_block(const B& bk, const Realized<B>& rb, const MultiIndex& len,
                                long c, const MultiIndex* a, const MultiIndex* b,
                                bool invert = false, int step = 1) {
    auto arg = [&](int r, int s) {
        long e = c + (a ? (*a)[static_cast<size_t>(r - 1)] : 0) -
                 (b ? (*b)[static_cast<size_t>(s - 1)] : 0);
        return bk.smul(rb.ratio(bk, r, s), bk.qpow(step * e));
    };
    return invert ? poch_block_inv(bk, rb.n, len, arg, step)
                  : poch_block(bk, rb.n, len, arg, step);
}

// Mirror of shifted_block with the ratio flipped:
// prod_{r,s} (q^{step(c + a_r - b_s)} x_s/x_r; q^step)_{len_r}. The inverted
// inner sums produced by series rearrangement index lengths by r but attach
// the reciprocal ratio.
template <class B>
typename B::Value shifted_block_rev(const B& bk, const Realized<B>& rb, const MultiIndex& len,
                                    long c, const MultiIndex* a, const MultiIndex* b,
                                    bool invert = false, int step = 1) {
    auto arg = [&](int r, int s) {
        long e = c + (a ? (*a)[static_cast<size_t>(r - 1)] : 0) -
                 (b ? (*b)[static_cast<size_t>(s - 1)] : 0);
        return bk.smul(rb.ratio(bk, s, r), bk.qpow(step * e));
    };
    return invert ? poch_block_inv(bk, rb.n, len, arg, step)
                  : poch_block(bk, rb.n, len, arg, step);
}

// prod_{r,s} (z q^{step(c + a_r - b_s)} x_r/x_s; q^step)_{len_r} for a generic
// scalar z riding on every ratio.
template <class B>
typename B::Value scaled_block(const B& bk, const Realized<B>& rb, const MultiIndex& len,
                               const typename B::Scalar& z, long c, const MultiIndex* a,
                               const MultiIndex* b, bool invert = false, int step = 1) {
    auto arg = [&](int r, int s) {
        long e = c + (a ? (*a)[static_cast<size_t>(r - 1)] : 0) -
                 (b ? (*b)[static_cast<size_t>(s - 1)] : 0);
        return bk.smul(z, bk.smul(rb.ratio(bk, r, s), bk.qpow(step * e)));
    };
    return invert ? poch_block_inv(bk, rb.n, len, arg, step)
                  : poch_block(bk, rb.n, len, arg, step);
}

// prod_{r<s} (1 - q^{u_r-u_s} x_r/x_s) / (1 - q^{v_r-v_s} x_r/x_s).
template <class B>
typename B::Value an_factor_rel(const B& bk, const Realized<B>& rb, const MultiIndex& u,
                                const MultiIndex& v) {
    auto acc = bk.one();
    for (int r = 1; r <= rb.n; ++r) {
        for (int s = r + 1; s <= rb.n; ++s) {
            auto rat = rb.ratio(bk, r, s);
            auto num = bk.one_minus(bk.smul(
                rat, bk.qpow(u[static_cast<size_t>(r - 1)] - u[static_cast<size_t>(s - 1)])));
            auto den = bk.one_minus(bk.smul(
                rat, bk.qpow(v[static_cast<size_t>(r - 1)] - v[static_cast<size_t>(s - 1)])));
            acc = bk.mul(acc, bk.div(num, den));
        }
    }
    return acc;
}

// Same relative factor with the ratio flipped:
// prod_{r<s} (1 - q^{u_r-u_s} x_s/x_r) / (1 - q^{v_r-v_s} x_s/x_r).
template <class B>
typename B::Value an_factor_rel_rev(const B& bk, const Realized<B>& rb, const MultiIndex& u,
                                    const MultiIndex& v) {
    auto acc = bk.one();
    for (int r = 1; r <= rb.n; ++r) {
        for (int s = r + 1; s <= rb.n; ++s) {
            auto rat = rb.ratio(bk, s, r);
            auto num = bk.one_minus(bk.smul(
                rat, bk.qpow(u[static_cast<size_t>(r - 1)] - u[static_cast<size_t>(s - 1)])));
            auto den = bk.one_minus(bk.smul(
                rat, bk.qpow(v[static_cast<size_t>(r - 1)] - v[static_cast<size_t>(s - 1)])));
            acc = bk.mul(acc, bk.div(num, den));
        }
    }
    return acc;
}

// prod_t (z_t; q^step)_{len} over a list of scalars.
template <class B>
typename B::Value poch_list(const B& bk, const std::vector<typename B::Scalar>& zs, long len,
                            bool invert = false, int step = 1) {
    auto acc = bk.one();
    for (const auto& z : zs) {
        acc = bk.mul(acc, invert ? bk.qpoch_inv(z, len, step) : bk.qpoch(z, len, step));
    }
    return acc;
}

// prod_t (z_t; q^step)_inf over a list of scalars.
template <class B>
typename B::Value poch_inf_list(const B& bk, const std::vector<typename B::Scalar>& zs,
                                bool invert = false, int step = 1) {
    auto acc = bk.one();
    for (const auto& z : zs) {
        acc = bk.mul(acc, invert ? bk.qpoch_inf_inv(z, step) : bk.qpoch_inf(z, step));
    }
    return acc;
}

// The ubiquitous inner sum over 0 <= m <= k (all factors in base q^step):
//   sum_m anfac(m) prod_{r,s} (q^{-step k_s}x_r/x_s)_{m_r} / (q^step x_r/x_s)_{m_r}
//         * q^{step sum r m_r} * mid(m)
// where mid supplies the entry-specific middle factors.
template <class B, class Mid>
typename B::Value inner_milne_sum(const B& bk, const Realized<B>& rb, const MultiIndex& k,
                                  Mid&& mid, int step = 1) {
    return sum_box(bk, k, [&](const MultiIndex& m) {
        auto t = an_factor(bk, rb, m, step);
        t = bk.mul(t, shifted_block(bk, rb, m, 0, nullptr, &k, false, step));
        t = bk.mul(t, shifted_block(bk, rb, m, 1, nullptr, nullptr, true, step));
        t = bk.scale(t, bk.qpow(step * wsum(m, 1)));
        return bk.mul(t, mid(m));
    });
}

// Shell summation for the numeric domain with the summand evaluated in exact
// rational arithmetic at the backend's q (term maps a shell point to a
// Rational, usually through a RationalBackend the caller holds). Deep shells
// of the double sums mix terms many orders of magnitude above their total;
// summing them in floats loses the cancellation long before the tail test
// can fire. Rounding only the finished shell keeps every weight honest.
template <class Term>
BigReal exact_shell_sum(const NumericBackend& bk, int rank, Term&& term) {
    BigReal total = bk.zero_sum();
    int quiet = 0;
    for (long t = 0; t <= bk.shell_cap(); ++t) {
        Rational shell(0);
        for_each_shell(rank, t, [&](const MultiIndex& k) { shell += term(k); });
        BigReal rounded = bk.srat(shell);
        total = total + rounded;
        double w = 0.0;
        bk.weight_add(w, rounded);
        quiet = bk.shell_negligible(rounded, w) ? quiet + 1 : 0;
        if (quiet >= bk.shell_patience()) return total;
    }
    throw NoConvergence("shell sum did not settle within the shell cap");
}

// One shell-summed series body for all three domains. The term functor is
// evaluated against whichever backend actually does the arithmetic; in the
// numeric domain that is a RationalBackend at the evaluation point, routed
// through exact_shell_sum so cancellation inside a shell stays exact.
template <class B, class Term>
typename B::Value hybrid_shell_sum(const B& bk, const BindingSpec& spec, Term&& term) {
    if constexpr (std::is_same_v<B, NumericBackend>) {
        RationalBackend rq(bk.ctx().q);
        auto rb = realize(rq, spec);
        return exact_shell_sum(bk, spec.n,
                               [&](const MultiIndex& k) { return term(rq, rb, k); });
    } else {
        auto rb = realize(bk, spec);
        auto res = sum_shells(bk, spec.n, [&](const MultiIndex& k) { return term(bk, rb, k); });
        return bk.finalize_sum(res.value);
    }
}

} // namespace qan
