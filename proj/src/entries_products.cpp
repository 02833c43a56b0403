#include <string>
#include <type_traits>
#include <vector>

#include "qan/catalog.hpp"
#include "qan/entry_util.hpp"
#include "qan/testfn.hpp"

// Infinite-product expansion family: six multiple product expansions obtained
// from the extension formulas by a ratio-of-products choice of f, their common
// rank-1 form, and the very-well-poised 6phi5 pair.

namespace qan {
namespace {

// ---------------------------------------------------------------------------
// sampling helpers

// alpha = c*q keeps every alpha-bearing product argument at valuation >= 1,
// which rules out vanishing denominators in both domains.
ScalarSpec unit_q(Sampler& smp) { return ScalarSpec::rat(smp.signed_unit(), 1); }

ScalarSpec low_scalar(Sampler& smp) { return ScalarSpec::rat(smp.signed_unit(), smp.uniform(0, 1)); }

// terminating choice a_r = q^{N_r}. All-ones termination collapses both
// sides to 1, so keep at least one coordinate deeper than the first level.
std::vector<ScalarSpec> term_a(Sampler& smp, int n) {
    std::vector<ScalarSpec> as;
    long tot = 0;
    for (int r = 0; r < n; ++r) {
        long e = smp.uniform(1, 2);
        tot += e;
        as.push_back(ScalarSpec::qpow(e));
    }
    if (tot == n) as[0] = ScalarSpec::qpow(2);
    return as;
}

// nonterminating numeric choice with a steep modulus: |a_1..a_n / q^n| <= q^7.
// The double sums hide large intermediate terms behind cancellation, so the
// per-shell decay has to dominate the worst-case growth at 256 bits.
std::vector<ScalarSpec> steep_a(Sampler& smp, int n) {
    std::vector<ScalarSpec> as(static_cast<size_t>(n));
    long rest = 0;
    for (int r = 1; r < n; ++r) {
        long e = smp.uniform(1, 2);
        rest += e;
        as[static_cast<size_t>(r)] = ScalarSpec::rat(smp.signed_unit(), e);
    }
    as[0] = ScalarSpec::rat(smp.signed_unit(), n + 7 - rest);
    return as;
}

void sample_prod(Sampler& smp, BindingSpec& spec, Mode mode) {
    int n = spec.n;
    spec.x = smp.distinct_x(n);
    spec.lists["a"] = mode == Mode::Numeric ? steep_a(smp, n) : term_a(smp, n);
    spec.scalars["alpha"] = unit_q(smp);
    for (const char* k : {"b", "c", "d", "beta", "gamma"}) {
        spec.scalars[k] = low_scalar(smp);
    }
}

// ---------------------------------------------------------------------------
// prod-1..6

template <class B>
typename B::Value prod_lhs(const B& bk, const BindingSpec& spec, int variant) {
    auto rb = realize(bk, spec);
    int n = rb.n;
    auto alpha = rb.sc(bk, "alpha");
    auto b = rb.sc(bk, "b");
    auto c = rb.sc(bk, "c");
    auto d = rb.sc(bk, "d");
    auto bt = rb.sc(bk, "beta");
    auto gm = rb.sc(bk, "gamma");
    auto as = rb.list(bk, "a");
    auto A = sprod(bk, as);
    auto aA = bk.smul(alpha, A);
    auto qinvn = bk.qpow(-n);
    std::vector<typename B::Scalar> num, den;
    auto scaled = [&](const typename B::Scalar& z, const typename B::Scalar& w) {
        return bk.smul(z, w);
    };
    switch (variant) {
        case 1:
            num = {scaled(alpha, bk.qpow(1)), scaled(scaled(aA, b), qinvn),
                   scaled(scaled(aA, c), qinvn), scaled(scaled(aA, d), qinvn),
                   scaled(alpha, bt), scaled(alpha, gm)};
            den = {scaled(aA, bk.qpow(1 - n)), scaled(alpha, b), scaled(alpha, c),
                   scaled(alpha, d), scaled(scaled(aA, bt), qinvn), scaled(scaled(aA, gm), qinvn)};
            break;
        case 2:
            num = {scaled(alpha, bk.qpow(1)), scaled(scaled(aA, c), qinvn),
                   scaled(scaled(aA, d), qinvn), scaled(alpha, bt), scaled(alpha, gm)};
            den = {scaled(aA, bk.qpow(1 - n)), scaled(alpha, c), scaled(alpha, d),
                   scaled(scaled(aA, bt), qinvn), scaled(scaled(aA, gm), qinvn)};
            for (int r = 1; r <= n; ++r) {
                auto abx = bk.smul(bk.smul(alpha, b), rb.xr(r));
                num.push_back(scaled(scaled(abx, as[static_cast<size_t>(r - 1)]), bk.qpow(-1)));
                den.push_back(abx);
            }
            break;
        case 3:
            num = {scaled(alpha, bt), scaled(alpha, gm), scaled(scaled(aA, c), qinvn),
                   scaled(scaled(aA, d), qinvn)};
            den = {scaled(alpha, c), scaled(alpha, d), scaled(scaled(aA, bt), qinvn),
                   scaled(scaled(aA, gm), qinvn)};
            for (int r = 1; r <= n; ++r) {
                auto ax = bk.smul(alpha, rb.xr(r));
                auto ar = as[static_cast<size_t>(r - 1)];
                num.push_back(scaled(ax, bk.qpow(1)));
                num.push_back(scaled(scaled(scaled(ax, ar), b), bk.qpow(-1)));
                den.push_back(scaled(ax, b));
                den.push_back(scaled(ax, ar));
            }
            break;
        case 4:
            num = {scaled(alpha, bk.qpow(1)), scaled(scaled(aA, b), qinvn)};
            den = {scaled(alpha, b), scaled(aA, bk.qpow(1 - n))};
            for (int r = 1; r <= n; ++r) {
                auto ax = bk.smul(alpha, rb.xr(r));
                auto ar = as[static_cast<size_t>(r - 1)];
                auto axa = bk.smul(ax, ar);
                num.push_back(scaled(scaled(axa, c), bk.qpow(-1)));
                num.push_back(scaled(scaled(axa, d), bk.qpow(-1)));
                num.push_back(scaled(ax, bt));
                num.push_back(scaled(ax, gm));
                den.push_back(scaled(ax, c));
                den.push_back(scaled(ax, d));
                den.push_back(scaled(scaled(axa, bt), bk.qpow(-1)));
                den.push_back(scaled(scaled(axa, gm), bk.qpow(-1)));
            }
            break;
        case 5:
            num = {scaled(alpha, bk.qpow(1))};
            den = {scaled(aA, bk.qpow(1 - n))};
            for (int r = 1; r <= n; ++r) {
                auto ax = bk.smul(alpha, rb.xr(r));
                auto ar = as[static_cast<size_t>(r - 1)];
                auto axa = bk.smul(ax, ar);
                num.push_back(scaled(scaled(axa, b), bk.qpow(-1)));
                num.push_back(scaled(scaled(axa, c), bk.qpow(-1)));
                num.push_back(scaled(scaled(axa, d), bk.qpow(-1)));
                num.push_back(scaled(ax, bt));
                num.push_back(scaled(ax, gm));
                den.push_back(scaled(ax, b));
                den.push_back(scaled(ax, c));
                den.push_back(scaled(ax, d));
                den.push_back(scaled(scaled(axa, bt), bk.qpow(-1)));
                den.push_back(scaled(scaled(axa, gm), bk.qpow(-1)));
            }
            break;
        default:
            for (int r = 1; r <= n; ++r) {
                auto ax = bk.smul(alpha, rb.xr(r));
                auto ar = as[static_cast<size_t>(r - 1)];
                auto axa = bk.smul(ax, ar);
                num.push_back(scaled(ax, bk.qpow(1)));
                num.push_back(scaled(scaled(axa, b), bk.qpow(-1)));
                num.push_back(scaled(scaled(axa, c), bk.qpow(-1)));
                num.push_back(scaled(scaled(axa, d), bk.qpow(-1)));
                num.push_back(scaled(ax, bt));
                num.push_back(scaled(ax, gm));
                den.push_back(axa);
                den.push_back(scaled(ax, b));
                den.push_back(scaled(ax, c));
                den.push_back(scaled(ax, d));
                den.push_back(scaled(scaled(axa, bt), bk.qpow(-1)));
                den.push_back(scaled(scaled(axa, gm), bk.qpow(-1)));
            }
            break;
    }
    auto v = bk.mul(poch_inf_list(bk, num), poch_inf_list(bk, den, true));
    return bk.finalize_sum(v);
}

template <class B>
struct ProdSetup {
    Realized<B> rb;
    typename B::Scalar alpha, b, c, d, bt, gm, A;
    std::vector<typename B::Scalar> as;
};

template <class B>
ProdSetup<B> prod_setup(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    auto as = rb.list(bk, "a");
    auto A = sprod(bk, as);
    return {rb,
            rb.sc(bk, "alpha"),
            rb.sc(bk, "b"),
            rb.sc(bk, "c"),
            rb.sc(bk, "d"),
            rb.sc(bk, "beta"),
            rb.sc(bk, "gamma"),
            A,
            as};
}

template <class B>
typename B::Value prod_prefactor(const B& bk, const ProdSetup<B>& P, int variant) {
    if (variant != 3 && variant != 6) return bk.inv(bk.one_minus(P.alpha));
    auto pre = bk.one();
    for (int r = 1; r <= P.rb.n; ++r) {
        pre = bk.mul(pre, bk.inv(bk.one_minus(bk.smul(P.alpha, P.rb.xr(r)))));
    }
    return pre;
}

template <class B>
typename B::Value prod_shell_term(const B& bk, const ProdSetup<B>& P, int variant,
                                  const MultiIndex& k) {
    const auto& rb = P.rb;
    const auto& alpha = P.alpha;
    int n = rb.n;
    bool coord_middle = variant == 3 || variant == 6;
    long K = total(k);
    auto t = an_factor(bk, rb, k);
    t = bk.mul(t, poch_block(bk, n, k, [&](int r, int s) {
        return bk.smul(bk.qpow(1), bk.sdiv(rb.ratio(bk, r, s), P.as[static_cast<size_t>(s - 1)]));
    }));
    t = bk.mul(t, shifted_block(bk, rb, k, 1, nullptr, nullptr, true));
    if (coord_middle) {
        for (int r = 1; r <= n; ++r) {
            auto ax = bk.smul(alpha, rb.xr(r));
            t = bk.mul(t, bk.one_minus(bk.smul(ax, bk.qpow(k[static_cast<size_t>(r - 1)] + K))));
            t = bk.mul(t, bk.qpoch(ax, K));
            t = bk.mul(t, bk.qpoch_inv(bk.smul(ax, P.as[static_cast<size_t>(r - 1)]), K));
        }
    } else {
        t = bk.mul(t, bk.one_minus(bk.smul(alpha, bk.qpow(2 * K))));
        t = bk.mul(t, bk.qpoch(alpha, K));
        t = bk.mul(t, bk.qpoch_inv(bk.smul(bk.smul(alpha, P.A), bk.qpow(1 - n)), K));
    }
    t = bk.scale(t, bk.smul(bk.spow(P.A, K), bk.qpow(wsum(k, 0) - n * K)));
    auto inner = inner_milne_sum(bk, rb, k, [&](const MultiIndex& m) {
        long M = total(m);
        typename B::Value mid = bk.one();
        switch (variant) {
            case 1:
                mid = bk.qpoch(bk.smul(alpha, bk.qpow(K)), M);
                mid = bk.mul(mid, poch_list(bk, {bk.smul(alpha, P.bt), bk.smul(alpha, P.gm)}, M));
                mid = bk.mul(mid, poch_list(
                                      bk,
                                      {bk.smul(alpha, P.b), bk.smul(alpha, P.c), bk.smul(alpha, P.d)},
                                      M, true));
                break;
            case 2:
                mid = bk.qpoch(bk.smul(alpha, bk.qpow(K)), M);
                mid = bk.mul(mid, poch_list(bk, {bk.smul(alpha, P.bt), bk.smul(alpha, P.gm)}, M));
                mid = bk.mul(mid,
                             poch_list(bk, {bk.smul(alpha, P.c), bk.smul(alpha, P.d)}, M, true));
                for (int r = 1; r <= n; ++r) {
                    mid = bk.mul(mid, bk.qpoch_inv(bk.smul(bk.smul(alpha, P.b), rb.xr(r)),
                                                   m[static_cast<size_t>(r - 1)]));
                }
                break;
            case 3:
                mid = poch_list(bk, {bk.smul(alpha, P.bt), bk.smul(alpha, P.gm)}, M);
                mid = bk.mul(mid,
                             poch_list(bk, {bk.smul(alpha, P.c), bk.smul(alpha, P.d)}, M, true));
                for (int r = 1; r <= n; ++r) {
                    long mr = m[static_cast<size_t>(r - 1)];
                    auto ax = bk.smul(alpha, rb.xr(r));
                    mid = bk.mul(mid, bk.qpoch(bk.smul(ax, bk.qpow(K)), mr));
                    mid = bk.mul(mid, bk.qpoch_inv(bk.smul(ax, P.b), mr));
                }
                break;
            case 4:
                mid = bk.qpoch(bk.smul(alpha, bk.qpow(K)), M);
                mid = bk.mul(mid, bk.qpoch_inv(bk.smul(alpha, P.b), M));
                for (int r = 1; r <= n; ++r) {
                    long mr = m[static_cast<size_t>(r - 1)];
                    auto ax = bk.smul(alpha, rb.xr(r));
                    mid = bk.mul(mid, poch_list(bk, {bk.smul(ax, P.bt), bk.smul(ax, P.gm)}, mr));
                    mid = bk.mul(mid,
                                 poch_list(bk, {bk.smul(ax, P.c), bk.smul(ax, P.d)}, mr, true));
                }
                break;
            case 5:
                mid = bk.qpoch(bk.smul(alpha, bk.qpow(K)), M);
                for (int r = 1; r <= n; ++r) {
                    long mr = m[static_cast<size_t>(r - 1)];
                    auto ax = bk.smul(alpha, rb.xr(r));
                    mid = bk.mul(mid, poch_list(bk, {bk.smul(ax, P.bt), bk.smul(ax, P.gm)}, mr));
                    mid = bk.mul(mid, poch_list(
                                          bk,
                                          {bk.smul(ax, P.b), bk.smul(ax, P.c), bk.smul(ax, P.d)},
                                          mr, true));
                }
                break;
            default:
                for (int r = 1; r <= n; ++r) {
                    long mr = m[static_cast<size_t>(r - 1)];
                    auto ax = bk.smul(alpha, rb.xr(r));
                    mid = bk.mul(mid, poch_list(bk,
                                                {bk.smul(ax, bk.qpow(K)), bk.smul(ax, P.bt),
                                                 bk.smul(ax, P.gm)},
                                                mr));
                    mid = bk.mul(mid, poch_list(
                                          bk,
                                          {bk.smul(ax, P.b), bk.smul(ax, P.c), bk.smul(ax, P.d)},
                                          mr, true));
                }
                break;
        }
        return mid;
    });
    return bk.mul(t, inner);
}

template <class B>
typename B::Value prod_rhs(const B& bk, const BindingSpec& spec, int variant) {
    if constexpr (std::is_same_v<B, NumericBackend>) {
        RationalBackend rq(bk.ctx().q);
        auto P = prod_setup(rq, spec);
        auto pre = prod_prefactor(rq, P, variant);
        return exact_shell_sum(bk, spec.n, [&](const MultiIndex& k) {
            return rq.mul(pre, prod_shell_term(rq, P, variant, k));
        });
    } else {
        auto P = prod_setup(bk, spec);
        auto pre = prod_prefactor(bk, P, variant);
        auto res = sum_shells(bk, spec.n, [&](const MultiIndex& k) {
            return bk.mul(pre, prod_shell_term(bk, P, variant, k));
        });
        return bk.finalize_sum(res.value);
    }
}

// ---------------------------------------------------------------------------
// liu-product-n1: the common rank-1 product expansion

template <class B>
typename B::Value liuprod_lhs(const B& bk, const BindingSpec& spec) {
    auto alpha = bk.from_spec(spec.scalar("alpha"));
    auto a = bk.from_spec(spec.scalar("a"));
    auto b = bk.from_spec(spec.scalar("b"));
    auto c = bk.from_spec(spec.scalar("c"));
    auto d = bk.from_spec(spec.scalar("d"));
    auto bt = bk.from_spec(spec.scalar("beta"));
    auto gm = bk.from_spec(spec.scalar("gamma"));
    auto aaq = bk.smul(bk.smul(alpha, a), bk.qpow(-1));
    std::vector<typename B::Scalar> num{bk.smul(alpha, bk.qpow(1)), bk.smul(aaq, b),
                                        bk.smul(aaq, c), bk.smul(aaq, d), bk.smul(alpha, bt),
                                        bk.smul(alpha, gm)};
    std::vector<typename B::Scalar> den{bk.smul(alpha, a), bk.smul(alpha, b), bk.smul(alpha, c),
                                        bk.smul(alpha, d), bk.smul(aaq, bt), bk.smul(aaq, gm)};
    return bk.finalize_sum(bk.mul(poch_inf_list(bk, num), poch_inf_list(bk, den, true)));
}

template <class B>
typename B::Value liuprod_term(const B& bk, const BindingSpec& spec, long nn) {
    auto alpha = bk.from_spec(spec.scalar("alpha"));
    auto a = bk.from_spec(spec.scalar("a"));
    auto b = bk.from_spec(spec.scalar("b"));
    auto c = bk.from_spec(spec.scalar("c"));
    auto d = bk.from_spec(spec.scalar("d"));
    auto bt = bk.from_spec(spec.scalar("beta"));
    auto gm = bk.from_spec(spec.scalar("gamma"));
    auto t = bk.one_minus(bk.smul(alpha, bk.qpow(2 * nn)));
    t = bk.mul(t, bk.inv(bk.one_minus(alpha)));
    t = bk.mul(t, bk.qpoch(alpha, nn));
    t = bk.mul(t, bk.qpoch(bk.sdiv(bk.qpow(1), a), nn));
    t = bk.scale(t, bk.spow(bk.smul(a, bk.qpow(-1)), nn));
    t = bk.mul(t, bk.qpoch_inv(bk.qpow(1), nn));
    t = bk.mul(t, bk.qpoch_inv(bk.smul(alpha, a), nn));
    auto inner = bk.zero_sum();
    for (long k = 0; k <= nn; ++k) {
        auto u = bk.qpoch(bk.qpow(-nn), k);
        u = bk.mul(u, bk.qpoch(bk.smul(alpha, bk.qpow(nn)), k));
        u = bk.mul(u, poch_list(bk, {bk.smul(alpha, bt), bk.smul(alpha, gm)}, k));
        u = bk.mul(u, bk.qpoch_inv(bk.qpow(1), k));
        u = bk.mul(u, poch_list(
                            bk, {bk.smul(alpha, b), bk.smul(alpha, c), bk.smul(alpha, d)},
                            k, true));
        u = bk.scale(u, bk.qpow(k));
        inner = bk.add(inner, u);
    }
    return bk.mul(t, inner);
}

template <class B>
typename B::Value liuprod_rhs(const B& bk, const BindingSpec& spec) {
    if constexpr (std::is_same_v<B, NumericBackend>) {
        RationalBackend rq(bk.ctx().q);
        return exact_shell_sum(
            bk, 1, [&](const MultiIndex& sh) { return liuprod_term(rq, spec, sh[0]); });
    } else {
        auto res = sum_shells(
            bk, 1, [&](const MultiIndex& sh) { return liuprod_term(bk, spec, sh[0]); });
        return bk.finalize_sum(res.value);
    }
}

// ---------------------------------------------------------------------------
// an-rogers-6phi5: single multiple sum against a closed product form

template <class B>
typename B::Value anr65_lhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    int n = rb.n;
    auto alpha = rb.sc(bk, "alpha");
    auto b = rb.sc(bk, "b");
    auto c = rb.sc(bk, "c");
    auto as = rb.list(bk, "a");
    auto A = sprod(bk, as);
    auto aA = bk.smul(alpha, A);
    std::vector<typename B::Scalar> num{bk.smul(bk.smul(alpha, b), bk.smul(c, bk.qpow(-1))),
                                        bk.smul(bk.smul(aA, c), bk.qpow(-n))};
    std::vector<typename B::Scalar> den{bk.smul(alpha, c),
                                        bk.smul(bk.smul(aA, bk.smul(b, c)), bk.qpow(-1 - n))};
    for (int r = 1; r <= n; ++r) {
        auto ax = bk.smul(alpha, rb.xr(r));
        auto ar = as[static_cast<size_t>(r - 1)];
        num.push_back(bk.smul(ax, bk.qpow(1)));
        num.push_back(bk.smul(bk.smul(ax, ar), bk.smul(b, bk.qpow(-1))));
        den.push_back(bk.smul(ax, b));
        den.push_back(bk.smul(ax, ar));
    }
    return bk.finalize_sum(bk.mul(poch_inf_list(bk, num), poch_inf_list(bk, den, true)));
}

template <class B>
typename B::Value anr65_rhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    int n = rb.n;
    auto alpha = rb.sc(bk, "alpha");
    auto b = rb.sc(bk, "b");
    auto c = rb.sc(bk, "c");
    auto as = rb.list(bk, "a");
    auto A = sprod(bk, as);
    auto z = bk.smul(bk.smul(alpha, A), bk.smul(bk.smul(b, c), bk.qpow(-1 - n)));
    auto pre = bk.one();
    for (int r = 1; r <= n; ++r) {
        pre = bk.mul(pre, bk.inv(bk.one_minus(bk.smul(alpha, rb.xr(r)))));
    }
    auto res = sum_shells(bk, n, [&](const MultiIndex& k) {
        long K = total(k);
        auto t = an_factor(bk, rb, k);
        t = bk.mul(t, poch_block(bk, n, k, [&](int r, int s) {
            return bk.smul(bk.qpow(1), bk.sdiv(rb.ratio(bk, r, s), as[static_cast<size_t>(s - 1)]));
        }));
        t = bk.mul(t, shifted_block(bk, rb, k, 1, nullptr, nullptr, true));
        for (int r = 1; r <= n; ++r) {
            long kr = k[static_cast<size_t>(r - 1)];
            auto ax = bk.smul(alpha, rb.xr(r));
            t = bk.mul(t, bk.one_minus(bk.smul(ax, bk.qpow(kr + K))));
            t = bk.mul(t, bk.qpoch(ax, K));
            t = bk.mul(t, bk.qpoch_inv(bk.smul(ax, as[static_cast<size_t>(r - 1)]), K));
            t = bk.mul(t, bk.qpoch(bk.smul(bk.qpow(1), bk.sdiv(rb.xr(r), c)), kr));
            t = bk.mul(t, bk.qpoch_inv(bk.smul(ax, b), kr));
        }
        t = bk.mul(t, bk.qpoch(bk.sdiv(bk.qpow(1), b), K));
        t = bk.mul(t, bk.qpoch_inv(bk.smul(alpha, c), K));
        t = bk.scale(t, bk.smul(bk.spow(z, K), bk.qpow(wsum(k, 0))));
        return bk.mul(t, pre);
    });
    return bk.finalize_sum(res.value);
}

// ---------------------------------------------------------------------------
// rogers-6phi5-n1: the classical very-well-poised summation; the pair of
// square-root parameters collapses to (1 - alpha q^{2n})/(1 - alpha).

template <class B>
typename B::Value r65_series(const B& bk, const BindingSpec& spec) {
    auto alpha = bk.from_spec(spec.scalar("alpha"));
    auto a = bk.from_spec(spec.scalar("a"));
    auto b = bk.from_spec(spec.scalar("b"));
    auto c = bk.from_spec(spec.scalar("c"));
    auto z = bk.smul(bk.smul(alpha, a), bk.smul(bk.smul(b, c), bk.qpow(-2)));
    auto inv1ma = bk.inv(bk.one_minus(alpha));
    auto res = sum_shells(bk, 1, [&](const MultiIndex& sh) {
        long nn = sh[0];
        auto t = bk.one_minus(bk.smul(alpha, bk.qpow(2 * nn)));
        t = bk.mul(t, inv1ma);
        t = bk.mul(t, bk.qpoch(alpha, nn));
        t = bk.mul(t, poch_list(bk,
                                {bk.sdiv(bk.qpow(1), a), bk.sdiv(bk.qpow(1), b),
                                 bk.sdiv(bk.qpow(1), c)},
                                nn));
        t = bk.mul(t, bk.qpoch_inv(bk.qpow(1), nn));
        t = bk.mul(t, poch_list(
                              bk,
                              {bk.smul(alpha, a), bk.smul(alpha, b), bk.smul(alpha, c)}, nn,
                              true));
        t = bk.scale(t, bk.spow(z, nn));
        return t;
    });
    return bk.finalize_sum(res.value);
}

template <class B>
typename B::Value r65_product(const B& bk, const BindingSpec& spec) {
    auto alpha = bk.from_spec(spec.scalar("alpha"));
    auto a = bk.from_spec(spec.scalar("a"));
    auto b = bk.from_spec(spec.scalar("b"));
    auto c = bk.from_spec(spec.scalar("c"));
    std::vector<typename B::Scalar> num{
        bk.smul(alpha, bk.qpow(1)), bk.smul(bk.smul(alpha, a), bk.smul(b, bk.qpow(-1))),
        bk.smul(bk.smul(alpha, a), bk.smul(c, bk.qpow(-1))),
        bk.smul(bk.smul(alpha, b), bk.smul(c, bk.qpow(-1)))};
    std::vector<typename B::Scalar> den{bk.smul(alpha, a), bk.smul(alpha, b), bk.smul(alpha, c),
                                        bk.smul(bk.smul(alpha, a), bk.smul(bk.smul(b, c), bk.qpow(-2)))};
    return bk.finalize_sum(bk.mul(poch_inf_list(bk, num), poch_inf_list(bk, den, true)));
}

} // namespace

void register_entries_products(Registry& reg) {
    for (int variant = 1; variant <= 6; ++variant) {
        EntryDef d;
        d.id = "prod-" + std::to_string(variant);
        d.anchor = "product-family";
        d.ranks = {1, 2};
        d.exact = true;
        d.numeric = true;
        d.reduces_to = "liu-product-n1";
        d.notes = "exact runs terminate at a_r = q^{N_r}; numeric runs use a steep modulus";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode mode, const Rational&) {
            sample_prod(smp, spec, mode);
        };
        reg.add(
            d,
            [variant](const auto& bk, const BindingSpec& s) { return prod_lhs(bk, s, variant); },
            [variant](const auto& bk, const BindingSpec& s) { return prod_rhs(bk, s, variant); });
    }
    {
        EntryDef d;
        d.id = "liu-product-n1";
        d.anchor = "product-family";
        d.ranks = {1};
        d.exact = true;
        d.numeric = true;
        d.notes = "rank-1 product expansion shared by prod-1..prod-6";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode mode, const Rational&) {
            spec.x = smp.distinct_x(1);
            spec.scalars["a"] = mode == Mode::Numeric
                                    ? ScalarSpec::rat(smp.signed_unit(), 8)
                                    : ScalarSpec::qpow(smp.uniform(2, 3));
            spec.scalars["alpha"] = unit_q(smp);
            for (const char* k : {"b", "c", "d", "beta", "gamma"}) {
                spec.scalars[k] = low_scalar(smp);
            }
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return liuprod_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return liuprod_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "an-rogers-6phi5";
        d.anchor = "product-family";
        d.ranks = {1, 2};
        d.exact = true;
        d.numeric = true;
        d.reduces_to = "rogers-6phi5-n1";
        d.notes = "single multiple sum; modulus alpha a_1..a_n b c / q^{1+n}";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode mode, const Rational&) {
            int n = spec.n;
            spec.x = smp.distinct_x(n);
            if (mode == Mode::Numeric) {
                std::vector<ScalarSpec> as;
                for (int r = 0; r < n; ++r) {
                    as.push_back(ScalarSpec::rat(smp.signed_unit(), smp.uniform(1, 2)));
                }
                spec.lists["a"] = as;
                spec.scalars["b"] = ScalarSpec::rat(smp.signed_unit(), 1);
                spec.scalars["c"] = ScalarSpec::rat(smp.signed_unit(), 1);
            } else {
                spec.lists["a"] = term_a(smp, n);
                for (;;) {
                    ScalarSpec b = low_scalar(smp);
                    ScalarSpec c = low_scalar(smp);
                    long nt = 0;
                    for (const auto& av : spec.lists["a"]) nt += av.exp;
                    // keep the closed form's denominator argument away from 1
                    if (nt + b.exp + c.exp - n == 0) continue;
                    spec.scalars["b"] = b;
                    spec.scalars["c"] = c;
                    break;
                }
            }
            spec.scalars["alpha"] = unit_q(smp);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return anr65_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return anr65_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "rogers-6phi5-n1";
        d.anchor = "product-family";
        d.ranks = {1};
        d.exact = true;
        d.numeric = true;
        d.notes = "classical very-well-poised summation";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode mode, const Rational&) {
            spec.x = smp.distinct_x(1);
            spec.scalars["alpha"] = unit_q(smp);
            if (mode == Mode::Numeric) {
                spec.scalars["a"] = ScalarSpec::rat(smp.signed_unit(), 2);
                spec.scalars["b"] = ScalarSpec::rat(smp.signed_unit(), 1);
                spec.scalars["c"] = ScalarSpec::rat(smp.signed_unit(), 1);
            } else {
                for (;;) {
                    long N = smp.uniform(2, 3);
                    ScalarSpec b = low_scalar(smp);
                    ScalarSpec c = low_scalar(smp);
                    if (N + b.exp + c.exp - 1 == 0) continue;
                    spec.scalars["a"] = ScalarSpec::qpow(N);
                    spec.scalars["b"] = b;
                    spec.scalars["c"] = c;
                    break;
                }
            }
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return r65_series(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return r65_product(bk, s); });
    }
}

} // namespace qan
