#pragma once

#include "qan/kernel.hpp"
#include "qan/multiindex.hpp"

namespace qan {

// Iterate k with m <= k <= N componentwise.
template <class F>
void for_each_between(const MultiIndex& m, const MultiIndex& N, F&& f) {
    for_each_box(mi_sub(N, m), [&](const MultiIndex& d) { f(mi_add(d, m)); });
}

// Shared core prod_{r,s} (q^{1+m_r-m_s} x_r/x_s)^{-1}_{k_r-m_r}. Callers
// guarantee m <= k so every length is nonnegative.
template <class B>
typename B::Value matrix_core_inv(const B& bk, const Realized<B>& rb,
                                  const MultiIndex& k, const MultiIndex& m) {
    auto acc = bk.one();
    for (int r = 1; r <= rb.n; ++r) {
        long len = k[static_cast<size_t>(r - 1)] - m[static_cast<size_t>(r - 1)];
        for (int s = 1; s <= rb.n; ++s) {
            auto arg = bk.smul(rb.ratio(bk, r, s),
                               bk.qpow(1 + m[static_cast<size_t>(r - 1)] -
                                       m[static_cast<size_t>(s - 1)]));
            acc = bk.mul(acc, bk.qpoch_inv(arg, len));
        }
    }
    return acc;
}

// The pair of inverse lower-triangular matrices. Entries vanish unless
// m <= k componentwise; for H and I the vanishing factor sits inside a
// reciprocal, so it is returned directly instead of being computed.
template <class B>
typename B::Value inv_H(const B& bk, const Realized<B>& rb, const typename B::Scalar& a,
                        const MultiIndex& k, const MultiIndex& m) {
    if (!leq(m, k)) return bk.zero_sum();
    auto v = matrix_core_inv(bk, rb, k, m);
    return bk.mul(v, bk.qpoch_inv(bk.smul(a, bk.qpow(1)), total(k) + total(m)));
}

template <class B>
typename B::Value inv_I(const B& bk, const Realized<B>& rb, const typename B::Scalar& a,
                        const MultiIndex& k, const MultiIndex& m) {
    if (!leq(m, k)) return bk.zero_sum();
    long K = total(k), M = total(m);
    auto v = matrix_core_inv(bk, rb, k, m);
    v = bk.mul(v, bk.one_minus(bk.smul(a, bk.qpow(2 * K))));
    v = bk.mul(v, bk.qpoch(bk.smul(a, bk.qpow(1)), K + M - 1));
    auto sgn = bk.srat((K + M) % 2 == 0 ? Rational(1) : Rational(-1));
    return bk.scale(v, bk.smul(sgn, bk.qpow(binom2(K - M))));
}

// Diagonal conjugators.
template <class B>
typename B::Value inv_D(const B& bk, const Realized<B>& rb, const typename B::Scalar& a,
                        const MultiIndex& k) {
    auto v = bk.qpoch(bk.smul(a, bk.qpow(1)), total(k));
    return bk.mul(v, poch_block(bk, rb.n, k, [&](int r, int s) {
        return bk.smul(rb.ratio(bk, r, s), bk.qpow(1));
    }));
}

template <class B>
typename B::Value inv_E(const B& bk, const typename B::Scalar& a, const MultiIndex& m) {
    long M = total(m);
    auto v = bk.one_minus(bk.smul(a, bk.qpow(2 * M)));
    auto sgn = bk.srat(M % 2 == 0 ? Rational(1) : Rational(-1));
    return bk.scale(v, bk.smul(sgn, bk.qpow(binom2(M))));
}

// The conjugated pair F = D H E and G = E^{-1} I D^{-1}, written out in
// closed form. Both vanish automatically for m !<= k through the
// (q^{-k_s} x_r/x_s)_{m_r} block, which sits in the numerator.
template <class B>
typename B::Value inv_F(const B& bk, const Realized<B>& rb, const typename B::Scalar& a,
                        const MultiIndex& k, const MultiIndex& m) {
    long K = total(k), M = total(m);
    long esum = 0;
    for (int r = 1; r <= rb.n; ++r) esum += (r - 1) * m[static_cast<size_t>(r - 1)];
    auto v = an_factor(bk, rb, m);
    v = bk.scale(v, bk.qpow(K * M + esum));
    v = bk.mul(v, bk.one_minus(bk.smul(a, bk.qpow(2 * M))));
    v = bk.mul(v, bk.qpoch_inv(bk.smul(a, bk.qpow(K + 1)), M));
    return bk.mul(v, poch_block(bk, rb.n, m, [&](int r, int s) {
        return bk.smul(rb.ratio(bk, r, s), bk.qpow(-k[static_cast<size_t>(s - 1)]));
    }));
}

template <class B>
typename B::Value inv_G(const B& bk, const Realized<B>& rb, const typename B::Scalar& a,
                        const MultiIndex& k, const MultiIndex& m) {
    long M = total(m);
    long esum = 0;
    for (int r = 1; r <= rb.n; ++r) esum += r * m[static_cast<size_t>(r - 1)];
    auto v = an_factor(bk, rb, m);
    v = bk.scale(v, bk.qpow(esum));
    v = bk.mul(v, bk.qpoch(bk.smul(a, bk.qpow(M)), total(k)));
    v = bk.div(v, bk.one_minus(bk.smul(a, bk.qpow(M))));
    v = bk.mul(v, poch_block(bk, rb.n, m, [&](int r, int s) {
        return bk.smul(rb.ratio(bk, r, s), bk.qpow(-k[static_cast<size_t>(s - 1)]));
    }));
    auto qx = [&](int r, int s) { return bk.smul(rb.ratio(bk, r, s), bk.qpow(1)); };
    v = bk.mul(v, poch_block_inv(bk, rb.n, k, qx));
    return bk.mul(v, poch_block_inv(bk, rb.n, m, qx));
}

// sum_{m<=k<=N} F_{Nk} G_{km}; equals 1 for m = N and 0 for m < N.
template <class B>
typename B::Value delta_sum(const B& bk, const Realized<B>& rb, const typename B::Scalar& a,
                            const MultiIndex& N, const MultiIndex& m) {
    auto acc = bk.zero_sum();
    for_each_between(m, N, [&](const MultiIndex& k) {
        acc = bk.add(acc, bk.mul(inv_F(bk, rb, a, N, k), inv_G(bk, rb, a, k, m)));
    });
    return bk.finalize_sum(acc);
}

// Both sides of the product-rewrite lemma behind F and G, for m <= k.
template <class B>
typename B::Value milne_lhs(const B& bk, const Realized<B>& rb, const MultiIndex& k,
                            const MultiIndex& m) {
    if (!leq(m, k)) return bk.zero_sum();
    return matrix_core_inv(bk, rb, k, m);
}

template <class B>
typename B::Value milne_rhs(const B& bk, const Realized<B>& rb, const MultiIndex& k,
                            const MultiIndex& m) {
    long K = total(k), M = total(m);
    long esum = 0;
    for (int r = 1; r <= rb.n; ++r) esum += (r - 1) * m[static_cast<size_t>(r - 1)];
    auto sgn = bk.srat(M % 2 == 0 ? Rational(1) : Rational(-1));
    auto v = an_factor(bk, rb, m);
    v = bk.scale(v, bk.smul(sgn, bk.qpow(K * M - binom2(M) + esum)));
    v = bk.mul(v, poch_block(bk, rb.n, m, [&](int r, int s) {
        return bk.smul(rb.ratio(bk, r, s), bk.qpow(-k[static_cast<size_t>(s - 1)]));
    }));
    return bk.mul(v, poch_block_inv(bk, rb.n, k, [&](int r, int s) {
        return bk.smul(rb.ratio(bk, r, s), bk.qpow(1));
    }));
}

} // namespace qan
