#include <string>
#include <vector>

#include "qan/catalog.hpp"
#include "qan/entry_util.hpp"

// Rogers-Fine in classical and A_n form, the two-parameter extension of the
// nonterminating 6phi5 family together with its gamma = 0 companion, the
// Fang transformations with their A_n extension, and the Andrews expansion.
// Every nonterminating sum goes through hybrid_shell_sum: the inner sums mix
// terms far above the size of their total, so the numeric domain has to add
// each shell in exact rational arithmetic before rounding.

namespace qan {
namespace {

// ---------------------------------------------------------------------------
// sampling helpers

// Nonzero unit scalar; a small denominator cap keeps sampled ratios such as
// z/a^{n-1} or q x_i/a comfortably away from powers of the numeric q.
ScalarSpec unit(Sampler& smp, long den = 9) { return ScalarSpec::rat(smp.signed_unit(den), 0); }

ScalarSpec deep(Sampler& smp, long e, long den = 9) {
    return ScalarSpec::rat(smp.signed_unit(den), e);
}

// ---------------------------------------------------------------------------
// Rogers-Fine, classical

template <class B>
typename B::Value rf1_lhs(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& k) {
        long n = k[0];
        auto t = bx.qpoch(rb.sc(bx, "a"), n);
        t = bx.mul(t, bx.qpoch_inv(rb.sc(bx, "b"), n));
        return bx.scale(t, bx.spow(rb.sc(bx, "z"), n));
    });
}

template <class B>
typename B::Value rf1_rhs(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& k) {
        long n = k[0];
        auto a = rb.sc(bx, "a");
        auto b = rb.sc(bx, "b");
        auto z = rb.sc(bx, "z");
        auto az = bx.smul(a, z);
        auto t = bx.one_minus(bx.smul(az, bx.qpow(2 * n)));
        t = bx.mul(t, bx.qpoch(a, n));
        t = bx.mul(t, bx.qpoch(bx.smul(bx.sdiv(az, b), bx.qpow(1)), n));
        t = bx.mul(t, bx.qpoch_inv(b, n));
        t = bx.mul(t, bx.qpoch_inv(z, n + 1));
        return bx.scale(t, bx.smul(bx.spow(bx.smul(b, z), n), bx.qpow(2 * binom2(n))));
    });
}

void sample_rf(Sampler& smp, BindingSpec& spec) {
    spec.x = smp.distinct_x(spec.n);
    // |a| >= 1/3 and z two q-levels deep keep |z/a^{n-1}| small, so the outer
    // series decays fast enough for the shell cap
    spec.scalars["a"] = unit(smp, 3);
    spec.scalars["b"] = unit(smp);
    spec.scalars["z"] = deep(smp, 2);
}

// ---------------------------------------------------------------------------
// Rogers-Fine, A_n forms

// anfac(j) * prod_{r,s} (a x_r/x_s)_{j_r} / (q x_r/x_s)_{j_r}
template <class B, class R>
typename B::Value arf_block(const B& bk, const R& rb, const MultiIndex& j) {
    auto t = an_factor(bk, rb, j);
    t = bk.mul(t, scaled_block(bk, rb, j, rb.sc(bk, "a"), 0, nullptr, nullptr));
    return bk.mul(t, shifted_block(bk, rb, j, 1, nullptr, nullptr, true));
}

template <class B, class R>
typename B::Scalar z_over_a(const B& bk, const R& rb) {
    return bk.sdiv(rb.sc(bk, "z"), bk.spow(rb.sc(bk, "a"), rb.n - 1));
}

template <class B>
typename B::Value arf1_lhs(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& j) {
        long J = total(j);
        auto t = arf_block(bx, rb, j);
        t = bx.mul(t, bx.qpoch(bx.qpow(1), J));
        t = bx.mul(t, bx.qpoch_inv(rb.sc(bx, "b"), J));
        return bx.scale(t, bx.smul(bx.spow(z_over_a(bx, rb), J), bx.qpow(wsum(j, 0))));
    });
}

template <class B>
typename B::Value arf1_rhs(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& k) {
        long K = total(k);
        auto b = rb.sc(bx, "b");
        auto az = bx.smul(rb.sc(bx, "a"), rb.sc(bx, "z"));
        auto zoa = z_over_a(bx, rb);
        auto t = arf_block(bx, rb, k);
        t = bx.mul(t, bx.one_minus(bx.smul(az, bx.qpow(2 * K))));
        t = bx.mul(t, bx.qpoch(bx.qpow(1), K));
        t = bx.mul(t, bx.qpoch(bx.smul(bx.sdiv(az, b), bx.qpow(1)), K));
        t = bx.mul(t, bx.qpoch_inv(b, K));
        t = bx.mul(t, bx.qpoch_inv(zoa, K + 1));
        auto s = bx.smul(bx.spow(bx.smul(b, zoa), K), bx.qpow(wsum(k, 0) + 2 * binom2(K)));
        return bx.scale(t, s);
    });
}

template <class B>
typename B::Value arf2_lhs(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& j) {
        long J = total(j);
        auto b = rb.sc(bx, "b");
        auto t = arf_block(bx, rb, j);
        t = bx.mul(t, bx.qpoch(bx.qpow(1), J));
        for (int r = 1; r <= rb.n; ++r) {
            t = bx.mul(t, bx.qpoch_inv(bx.smul(b, rb.xr(r)), j[static_cast<size_t>(r - 1)]));
        }
        return bx.scale(t, bx.smul(bx.spow(z_over_a(bx, rb), J), bx.qpow(wsum(j, 0))));
    });
}

template <class B>
typename B::Value arf2_rhs(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& k) {
        long K = total(k);
        auto b = rb.sc(bx, "b");
        auto az = bx.smul(rb.sc(bx, "a"), rb.sc(bx, "z"));
        auto zoa = z_over_a(bx, rb);
        auto t = arf_block(bx, rb, k);
        t = bx.mul(t, bx.one_minus(bx.smul(az, bx.qpow(2 * K))));
        t = bx.mul(t, bx.qpoch(bx.qpow(1), K));
        t = bx.mul(t, bx.qpoch_inv(zoa, K + 1));
        long e = wsum(k, 0) + binom2(K);
        auto s = bx.spow(bx.smul(b, zoa), K);
        for (int r = 1; r <= rb.n; ++r) {
            long kr = k[static_cast<size_t>(r - 1)];
            auto bx_r = bx.smul(b, rb.xr(r));
            t = bx.mul(t, bx.qpoch(bx.smul(bx.sdiv(az, bx_r), bx.qpow(1 + K - kr)), kr));
            t = bx.mul(t, bx.qpoch_inv(bx_r, kr));
            e += binom2(kr);
            s = bx.smul(s, bx.spow(rb.xr(r), kr));
        }
        return bx.scale(t, bx.smul(s, bx.qpow(e)));
    });
}

// ---------------------------------------------------------------------------
// Liu's two-parameter extension of the nonterminating 6phi5 family; the
// gamma = 0 binding of the same evaluators is the Ismail-Rahman-Suslov sum.

template <class B>
typename B::Value liu1_sum(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& kk) {
        long k = kk[0];
        auto al = rb.sc(bx, "alpha");
        auto be = rb.sc(bx, "beta");
        auto ga = rb.sc(bx, "gamma");
        auto a = rb.sc(bx, "a");
        auto b = rb.sc(bx, "b");
        auto c = rb.sc(bx, "c");
        auto t = bx.one_minus(bx.smul(al, bx.qpow(2 * k)));
        t = bx.mul(t, bx.qpoch(al, k));
        t = bx.mul(t, bx.qpoch(bx.sdiv(bx.qpow(1), a), k));
        t = bx.mul(t, bx.qpoch(bx.sdiv(bx.qpow(1), b), k));
        t = bx.mul(t, bx.qpoch(bx.sdiv(bx.qpow(1), c), k));
        t = bx.mul(t, bx.qpoch_inv(bx.qpow(1), k));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(al, a), k));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(al, b), k));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(al, c), k));
        auto bottom = bx.smul(sprod(bx, {al, be, ga, a, b, c}), bx.qpow(-1));
        auto inner = bx.zero_sum();
        for (long m = 0; m <= k; ++m) {
            auto u = bx.qpoch(bx.qpow(-k), m);
            u = bx.mul(u, bx.qpoch(bx.smul(al, bx.qpow(k)), m));
            u = bx.mul(u, bx.qpoch(be, m));
            u = bx.mul(u, bx.qpoch(ga, m));
            u = bx.mul(u, bx.qpoch_inv(bx.qpow(1), m));
            u = bx.mul(u, bx.qpoch_inv(bx.sdiv(bx.qpow(1), a), m));
            u = bx.mul(u, bx.qpoch_inv(bx.sdiv(bx.qpow(1), b), m));
            u = bx.mul(u, bx.qpoch_inv(bottom, m));
            inner = bx.add(inner, bx.scale(u, bx.qpow(m)));
        }
        t = bx.mul(t, inner);
        return bx.scale(t, bx.spow(bx.smul(sprod(bx, {al, a, b, c}), bx.qpow(-2)), k));
    });
}

template <class B>
typename B::Value liu1_product(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    auto al = rb.sc(bk, "alpha");
    auto be = rb.sc(bk, "beta");
    auto ga = rb.sc(bk, "gamma");
    auto a = rb.sc(bk, "a");
    auto b = rb.sc(bk, "b");
    auto c = rb.sc(bk, "c");
    auto mq = [&](std::vector<typename B::Scalar> zs, long e) {
        return bk.smul(sprod(bk, zs), bk.qpow(e));
    };
    std::vector<typename B::Scalar> num{al,
                                        mq({al, a, c}, -1),
                                        mq({al, b, c}, -1),
                                        mq({al, be, a, b}, -1),
                                        mq({al, ga, a, b}, -1),
                                        mq({al, be, ga, a, b, c}, -2)};
    std::vector<typename B::Scalar> den{bk.smul(al, a),
                                        bk.smul(al, b),
                                        bk.smul(al, c),
                                        mq({al, be, a, b, c}, -2),
                                        mq({al, ga, a, b, c}, -2),
                                        mq({al, be, ga, a, b}, -1)};
    return bk.finalize_sum(bk.mul(poch_inf_list(bk, num), poch_inf_list(bk, den, true)));
}

// The terminating runs pin every c (or c_r) to a positive q power so the
// diagonal of the first block vanishes past a small box; the nonterminating
// runs instead push c one level deep to keep the outer modulus small.
void sample_liu(Sampler& smp, BindingSpec& spec, Mode mode, bool with_gamma) {
    spec.x = smp.distinct_x(spec.n);
    spec.scalars["alpha"] = deep(smp, 2, 3);
    spec.scalars["a"] = unit(smp, 4);
    spec.scalars["b"] = unit(smp, 4);
    spec.scalars["beta"] = unit(smp);
    spec.scalars["gamma"] = with_gamma ? unit(smp) : ScalarSpec::rat(Rational(0), 0);
    if (mode == Mode::Exact) {
        spec.scalars["c"] = ScalarSpec::qpow(smp.uniform(1, 2));
    } else {
        spec.scalars["c"] = deep(smp, 1, 4);
    }
}

void sample_anliu(Sampler& smp, BindingSpec& spec, Mode mode, bool with_gamma) {
    spec.x = smp.distinct_x(spec.n);
    spec.scalars["alpha"] = deep(smp, 2, 3);
    spec.scalars["a"] = unit(smp, 4);
    spec.scalars["b"] = unit(smp, 4);
    spec.scalars["beta"] = unit(smp);
    spec.scalars["gamma"] = with_gamma ? unit(smp) : ScalarSpec::rat(Rational(0), 0);
    std::vector<ScalarSpec> cs;
    for (int r = 0; r < spec.n; ++r) {
        cs.push_back(mode == Mode::Exact ? ScalarSpec::qpow(smp.uniform(1, 2))
                                         : deep(smp, 1, 4));
    }
    spec.lists["c"] = std::move(cs);
}

template <class B>
typename B::Value anliu_product(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    int n = rb.n;
    auto al = rb.sc(bk, "alpha");
    auto be = rb.sc(bk, "beta");
    auto ga = rb.sc(bk, "gamma");
    auto a = rb.sc(bk, "a");
    auto b = rb.sc(bk, "b");
    auto cs = rb.list(bk, "c");
    auto C = sprod(bk, cs);
    auto mq = [&](std::vector<typename B::Scalar> zs, long e) {
        return bk.smul(sprod(bk, zs), bk.qpow(e));
    };
    std::vector<typename B::Scalar> num{mq({al, be, a, b}, -1), mq({al, ga, a, b}, -1),
                                        mq({al, a, C}, -n), mq({al, b, C}, -n)};
    std::vector<typename B::Scalar> den{bk.smul(al, a), bk.smul(al, b),
                                        mq({al, be, a, b, C}, -(n + 1)),
                                        mq({al, ga, a, b, C}, -(n + 1))};
    auto v = bk.mul(poch_inf_list(bk, num), poch_inf_list(bk, den, true));
    for (int r = 1; r <= n; ++r) {
        auto xr = rb.xr(r);
        auto cr = cs[static_cast<size_t>(r - 1)];
        v = bk.mul(v, bk.qpoch_inf(bk.smul(al, xr)));
        v = bk.mul(v, bk.qpoch_inf(mq({al, be, ga, a, b, cr, xr}, -2)));
        v = bk.mul(v, bk.qpoch_inf_inv(mq({al, be, ga, a, b, xr}, -1)));
        v = bk.mul(v, bk.qpoch_inf_inv(mq({al, cr, xr}, 0)));
    }
    return bk.finalize_sum(v);
}

template <class B>
typename B::Value anliu_sum(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& k) {
        int n = rb.n;
        long K = total(k);
        auto al = rb.sc(bx, "alpha");
        auto be = rb.sc(bx, "beta");
        auto ga = rb.sc(bx, "gamma");
        auto a = rb.sc(bx, "a");
        auto b = rb.sc(bx, "b");
        auto cs = rb.list(bx, "c");
        auto C = sprod(bx, cs);
        auto t = an_factor(bx, rb, k);
        t = bx.mul(t, poch_block(bx, n, k, [&](int r, int s) {
                       return bx.smul(bx.qpow(1),
                                      bx.sdiv(rb.ratio(bx, r, s), cs[static_cast<size_t>(s - 1)]));
                   }));
        t = bx.mul(t, shifted_block(bx, rb, k, 1, nullptr, nullptr, true));
        for (int r = 1; r <= n; ++r) {
            long kr = k[static_cast<size_t>(r - 1)];
            auto alx = bx.smul(al, rb.xr(r));
            t = bx.mul(t, bx.one_minus(bx.smul(alx, bx.qpow(kr + K))));
            t = bx.mul(t, bx.qpoch(alx, K));
            t = bx.mul(t, bx.qpoch_inv(bx.smul(alx, cs[static_cast<size_t>(r - 1)]), K));
        }
        t = bx.mul(t, bx.qpoch_inv(bx.smul(al, a), K));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(al, b), K));
        for (int r = 1; r <= n; ++r) {
            long kr = k[static_cast<size_t>(r - 1)];
            t = bx.mul(t, bx.qpoch(bx.sdiv(bx.qpow(1), bx.smul(a, rb.xr(r))), kr));
            t = bx.mul(t, bx.qpoch(bx.smul(bx.qpow(1), bx.sdiv(rb.xr(r), b)), kr));
        }
        auto bottom = bx.smul(sprod(bx, {al, be, ga, a, b}), bx.qpow(-1));
        t = bx.mul(t, inner_milne_sum(bx, rb, k, [&](const MultiIndex& m) {
                       auto u = bx.one();
                       for (int r = 1; r <= rb.n; ++r) {
                           long mr = m[static_cast<size_t>(r - 1)];
                           auto xr = rb.xr(r);
                           u = bx.mul(u, bx.qpoch(bx.smul(bx.smul(al, bx.qpow(K)), xr), mr));
                           u = bx.mul(u, bx.qpoch(bx.smul(be, xr), mr));
                           u = bx.mul(u, bx.qpoch(bx.smul(ga, xr), mr));
                           u = bx.mul(u, bx.qpoch_inv(bx.smul(bottom, xr), mr));
                           u = bx.mul(u, bx.qpoch_inv(bx.smul(bx.qpow(1), bx.sdiv(xr, a)), mr));
                           u = bx.mul(u, bx.qpoch_inv(bx.smul(bx.qpow(1), bx.sdiv(xr, b)), mr));
                       }
                       return u;
                   }));
        auto s = bx.spow(bx.smul(sprod(bx, {al, a, b, C}), bx.qpow(-(n + 1))), K);
        s = bx.smul(s, bx.qpow(wsum(k, 0) + e2(k)));
        for (int r = 1; r <= n; ++r) {
            s = bx.smul(s, bx.spow(rb.xr(r), k[static_cast<size_t>(r - 1)]));
        }
        return bx.scale(t, s);
    });
}

// ---------------------------------------------------------------------------
// Fang's transformation and its relatives

template <class B>
typename B::Value fang_finite_lhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    long M = rb.nat("M");
    return bk.finalize_sum(sum_box(bk, MultiIndex{M}, [&](const MultiIndex& nn) {
        long n = nn[0];
        auto t = bk.qpoch(bk.qpow(-M), n);
        t = bk.mul(t, bk.qpoch(rb.sc(bk, "c"), n));
        t = bk.mul(t, bk.qpoch_inv(rb.sc(bk, "beta"), n));
        t = bk.mul(t, bk.qpoch_inv(bk.smul(rb.sc(bk, "b"), rb.sc(bk, "c")), n));
        return bk.scale(t, bk.spow(rb.sc(bk, "tau"), n));
    }));
}

template <class B>
typename B::Value fang_finite_rhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    long M = rb.nat("M");
    auto be = rb.sc(bk, "beta");
    auto b = rb.sc(bk, "b");
    auto c = rb.sc(bk, "c");
    auto tau = rb.sc(bk, "tau");
    auto tqb = bk.smul(bk.sdiv(tau, be), bk.qpow(1 - M)); // q^{1-M} tau / beta
    return bk.finalize_sum(sum_box(bk, MultiIndex{M}, [&](const MultiIndex& nn) {
        long n = nn[0];
        auto t = bk.qpoch(bk.qpow(-M), n);
        t = bk.mul(t, bk.qpoch(tqb, n));
        t = bk.mul(t, bk.qpoch(c, n));
        t = bk.mul(t, bk.one_minus(bk.smul(tau, bk.qpow(2 * n - M))));
        t = bk.mul(t, bk.qpoch_inv(be, n));
        t = bk.mul(t, bk.qpoch_inv(bk.smul(b, c), n));
        t = bk.mul(t, bk.qpoch_inv(tau, n + 1));
        auto inner = bk.zero_sum();
        for (long j = 0; j <= n; ++j) {
            auto u = bk.qpoch(bk.qpow(-n), j);
            u = bk.mul(u, bk.qpoch(b, j));
            u = bk.mul(u, bk.qpoch(bk.sdiv(bk.qpow(1 - n), be), j));
            u = bk.mul(u, bk.qpoch_inv(bk.qpow(1), j));
            u = bk.mul(u, bk.qpoch_inv(tqb, j));
            u = bk.mul(u, bk.qpoch_inv(bk.sdiv(bk.qpow(1 - n), c), j));
            inner = bk.add(inner, bk.scale(u, bk.qpow(j)));
        }
        t = bk.mul(t, inner);
        return bk.scale(t, bk.smul(bk.spow(bk.smul(be, tau), n), bk.qpow(2 * binom2(n))));
    }));
}

// shared left side of both nonterminating forms
template <class B>
typename B::Value fang_series_lhs(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& nn) {
        long n = nn[0];
        auto y = rb.sc(bx, "y");
        auto t = bx.qpoch(bx.sinv(y), n);
        t = bx.mul(t, bx.qpoch(rb.sc(bx, "c"), n));
        t = bx.mul(t, bx.qpoch_inv(rb.sc(bx, "beta"), n));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(rb.sc(bx, "b"), rb.sc(bx, "c")), n));
        return bx.scale(t, bx.spow(bx.smul(y, rb.sc(bx, "tau")), n));
    });
}

template <class B>
typename B::Value fang_nonterm_rhs(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& nn) {
        long n = nn[0];
        auto y = rb.sc(bx, "y");
        auto be = rb.sc(bx, "beta");
        auto b = rb.sc(bx, "b");
        auto c = rb.sc(bx, "c");
        auto tau = rb.sc(bx, "tau");
        auto tqb = bx.smul(bx.sdiv(tau, be), bx.qpow(1));
        auto t = bx.qpoch(bx.sinv(y), n);
        t = bx.mul(t, bx.qpoch(tqb, n));
        t = bx.mul(t, bx.qpoch(c, n));
        t = bx.mul(t, bx.one_minus(bx.smul(tau, bx.qpow(2 * n))));
        t = bx.mul(t, bx.qpoch_inv(be, n));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(b, c), n));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(y, tau), n + 1));
        auto inner = bx.zero_sum();
        for (long j = 0; j <= n; ++j) {
            auto u = bx.qpoch(bx.qpow(-n), j);
            u = bx.mul(u, bx.qpoch(b, j));
            u = bx.mul(u, bx.qpoch(bx.sdiv(bx.qpow(1 - n), be), j));
            u = bx.mul(u, bx.qpoch_inv(bx.qpow(1), j));
            u = bx.mul(u, bx.qpoch_inv(tqb, j));
            u = bx.mul(u, bx.qpoch_inv(bx.sdiv(bx.qpow(1 - n), c), j));
            inner = bx.add(inner, bx.scale(u, bx.qpow(j)));
        }
        t = bx.mul(t, inner);
        auto s = bx.smul(bx.spow(sprod(bx, {y, be, tau}), n), bx.qpow(2 * binom2(n)));
        return bx.scale(t, s);
    });
}

template <class B>
typename B::Value fang_equiv_rhs(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& nn) {
        long n = nn[0];
        auto y = rb.sc(bx, "y");
        auto be = rb.sc(bx, "beta");
        auto b = rb.sc(bx, "b");
        auto c = rb.sc(bx, "c");
        auto tau = rb.sc(bx, "tau");
        auto tqb = bx.smul(bx.sdiv(tau, be), bx.qpow(1));
        auto t = bx.qpoch(bx.sinv(y), n);
        t = bx.mul(t, bx.qpoch(tqb, n));
        t = bx.mul(t, bx.one_minus(bx.smul(tau, bx.qpow(2 * n))));
        t = bx.mul(t, bx.qpoch_inv(be, n));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(y, tau), n + 1));
        // inner argument is cq/beta rather than q
        auto arg = bx.smul(bx.sdiv(c, be), bx.qpow(1));
        auto inner = bx.zero_sum();
        for (long j = 0; j <= n; ++j) {
            auto u = bx.qpoch(bx.qpow(-n), j);
            u = bx.mul(u, bx.qpoch(bx.smul(tau, bx.qpow(n)), j));
            u = bx.mul(u, bx.qpoch(b, j));
            u = bx.mul(u, bx.qpoch_inv(bx.qpow(1), j));
            u = bx.mul(u, bx.qpoch_inv(tqb, j));
            u = bx.mul(u, bx.qpoch_inv(bx.smul(b, c), j));
            inner = bx.add(inner, bx.scale(u, bx.spow(arg, j)));
        }
        t = bx.mul(t, inner);
        auto s = bx.smul(bx.spow(sprod(bx, {y, be, tau}), n), bx.qpow(2 * binom2(n)));
        return bx.scale(t, s);
    });
}

void sample_fang_series(Sampler& smp, BindingSpec& spec, Mode mode) {
    spec.x = smp.distinct_x(spec.n);
    spec.scalars["b"] = unit(smp);
    spec.scalars["c"] = unit(smp, 4);
    spec.scalars["beta"] = unit(smp);
    if (mode == Mode::RationalQ) {
        // y = q^M makes (1/y)_n vanish past n = M, so the rational domain
        // sums an honest finite series
        spec.scalars["y"] = ScalarSpec::qpow(smp.uniform(1, 4));
        spec.scalars["tau"] = unit(smp);
    } else {
        spec.scalars["y"] = unit(smp, 3);
        spec.scalars["tau"] = deep(smp, 2);
    }
}

// ---------------------------------------------------------------------------
// the A_n Fang extension

template <class B>
typename B::Value anfang_lhs(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& j) {
        long J = total(j);
        auto ys = rb.list(bx, "y");
        auto Yt = bx.smul(sprod(bx, ys), rb.sc(bx, "tau"));
        auto be = rb.sc(bx, "beta");
        auto c = rb.sc(bx, "c");
        auto t = an_factor(bx, rb, j);
        t = bx.mul(t, poch_block(bx, rb.n, j, [&](int r, int s) {
                       return bx.sdiv(rb.ratio(bx, r, s), ys[static_cast<size_t>(s - 1)]);
                   }));
        t = bx.mul(t, shifted_block(bx, rb, j, 1, nullptr, nullptr, true));
        t = bx.mul(t, bx.qpoch(bx.qpow(1), J));
        t = bx.mul(t, bx.qpoch(c, J));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(rb.sc(bx, "b"), c), J));
        for (int r = 1; r <= rb.n; ++r) {
            t = bx.mul(t, bx.qpoch_inv(bx.smul(be, rb.xr(r)), j[static_cast<size_t>(r - 1)]));
        }
        return bx.scale(t, bx.smul(bx.spow(Yt, J), bx.qpow(wsum(j, 0))));
    });
}

template <class B>
typename B::Value anfang_rhs(const B& bk, const BindingSpec& spec) {
    return hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& k) {
        int n = rb.n;
        long K = total(k);
        auto ys = rb.list(bx, "y");
        auto Y = sprod(bx, ys);
        auto be = rb.sc(bx, "beta");
        auto b = rb.sc(bx, "b");
        auto c = rb.sc(bx, "c");
        auto tau = rb.sc(bx, "tau");
        auto t = an_factor(bx, rb, k);
        t = bx.mul(t, poch_block(bx, n, k, [&](int r, int s) {
                       return bx.sdiv(rb.ratio(bx, r, s), ys[static_cast<size_t>(s - 1)]);
                   }));
        t = bx.mul(t, shifted_block(bx, rb, k, 1, nullptr, nullptr, true));
        t = bx.mul(t, bx.one_minus(bx.smul(tau, bx.qpow(2 * K))));
        t = bx.mul(t, bx.qpoch(bx.qpow(1), K));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(Y, tau), K + 1));
        long e = wsum(k, 0) + binom2(K);
        auto s = bx.spow(bx.smul(bx.smul(Y, be), tau), K);
        for (int r = 1; r <= n; ++r) {
            long kr = k[static_cast<size_t>(r - 1)];
            auto bex = bx.smul(be, rb.xr(r));
            t = bx.mul(t, bx.qpoch(bx.smul(bx.sdiv(tau, bex), bx.qpow(1 + K - kr)), kr));
            t = bx.mul(t, bx.qpoch_inv(bex, kr));
            e += binom2(kr);
            s = bx.smul(s, bx.spow(rb.xr(r), kr));
        }
        // inner transformed sum over 0 <= j <= k, written against the
        // reversed ratio orientation
        MultiIndex nk = mi_neg(k);
        auto inner = sum_box(bx, k, [&](const MultiIndex& j) {
            long J = total(j);
            auto u = an_factor_rel_rev(bx, rb, mi_sub(j, k), nk);
            u = bx.mul(u, shifted_block_rev(bx, rb, j, 0, &nk, nullptr));
            u = bx.mul(u, shifted_block_rev(bx, rb, j, 1, &nk, &nk, true));
            u = bx.mul(u, bx.qpoch(bx.smul(tau, bx.qpow(K)), J));
            u = bx.mul(u, bx.qpoch(b, J));
            u = bx.mul(u, bx.qpoch_inv(bx.smul(b, c), J));
            long f = K * J - e2(j) + wsum(j, 1);
            auto w = bx.spow(bx.sdiv(c, be), J);
            for (int r = 1; r <= rb.n; ++r) {
                long jr = j[static_cast<size_t>(r - 1)];
                long kr = k[static_cast<size_t>(r - 1)];
                f -= kr * jr;
                auto bex = bx.smul(be, rb.xr(r));
                u = bx.mul(u, bx.qpoch_inv(bx.smul(bx.sdiv(tau, bex), bx.qpow(1 - kr + K)), jr));
                w = bx.smul(w, bx.spow(rb.xr(r), -jr));
            }
            return bx.scale(u, bx.smul(w, bx.qpow(f)));
        });
        t = bx.mul(t, inner);
        return bx.scale(t, bx.smul(s, bx.qpow(e)));
    });
}

void sample_anfang(Sampler& smp, BindingSpec& spec) {
    spec.x = smp.distinct_x(spec.n);
    std::vector<ScalarSpec> ys;
    for (int r = 0; r < spec.n; ++r) ys.push_back(unit(smp, 3));
    spec.lists["y"] = std::move(ys);
    spec.scalars["b"] = unit(smp);
    spec.scalars["c"] = unit(smp, 4);
    spec.scalars["beta"] = unit(smp);
    spec.scalars["tau"] = deep(smp, 2);
}

// ---------------------------------------------------------------------------
// the Andrews expansion and its A_n form

template <class B>
typename B::Value andrews1_lhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    auto a = rb.sc(bk, "a");
    auto b = rb.sc(bk, "b");
    auto y = rb.sc(bk, "y");
    std::vector<typename B::Scalar> num{bk.qpow(1), bk.smul(bk.sdiv(b, y), bk.qpow(1)),
                                        bk.smul(a, bk.qpow(1))};
    std::vector<typename B::Scalar> den{bk.smul(b, bk.qpow(1)), bk.sdiv(bk.qpow(1), y),
                                        bk.smul(bk.sdiv(a, y), bk.qpow(1))};
    return bk.finalize_sum(bk.mul(poch_inf_list(bk, num), poch_inf_list(bk, den, true)));
}

template <class B>
typename B::Value andrews1_rhs(const B& bk, const BindingSpec& spec) {
    auto sum = hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& kk) {
        long k = kk[0];
        auto a = rb.sc(bx, "a");
        auto y = rb.sc(bx, "y");
        auto t = bx.one_minus(bx.smul(a, bx.qpow(2 * k)));
        t = bx.mul(t, bx.qpoch(a, k));
        t = bx.mul(t, bx.qpoch(y, k));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(bx.sdiv(a, y), bx.qpow(1)), k));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(rb.sc(bx, "b"), bx.qpow(1)), k));
        auto inner = bx.zero_sum();
        for (long j = 0; j <= k; ++j) {
            auto u = bx.qpoch(rb.sc(bx, "b"), j);
            u = bx.mul(u, bx.qpoch_inv(bx.qpow(1), j));
            inner = bx.add(inner, bx.scale(u, bx.smul(bx.spow(bx.sinv(a), j),
                                                      bx.qpow(j * (1 - k)))));
        }
        t = bx.mul(t, inner);
        return bx.scale(t, bx.smul(bx.spow(bx.sdiv(a, y), k), bx.qpow(k * k)));
    });
    auto rb = realize(bk, spec);
    return bk.div(sum, bk.one_minus(rb.sc(bk, "a")));
}

template <class B>
typename B::Value anandrews_lhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    auto a = rb.sc(bk, "a");
    auto b = rb.sc(bk, "b");
    auto Y = sprod(bk, rb.list(bk, "y"));
    std::vector<typename B::Scalar> num{bk.qpow(1), bk.smul(a, bk.qpow(1)),
                                        bk.smul(bk.sdiv(b, Y), bk.qpow(1))};
    std::vector<typename B::Scalar> den{bk.smul(bk.sdiv(a, Y), bk.qpow(1)),
                                        bk.smul(b, bk.qpow(1)), bk.sdiv(bk.qpow(1), Y)};
    return bk.finalize_sum(bk.mul(poch_inf_list(bk, num), poch_inf_list(bk, den, true)));
}

template <class B>
typename B::Value anandrews_rhs(const B& bk, const BindingSpec& spec) {
    auto sum = hybrid_shell_sum(bk, spec, [](const auto& bx, const auto& rb, const MultiIndex& k) {
        long K = total(k);
        auto a = rb.sc(bx, "a");
        auto ys = rb.list(bx, "y");
        auto Y = sprod(bx, ys);
        auto t = an_factor(bx, rb, k);
        t = bx.mul(t, poch_block(bx, rb.n, k, [&](int r, int s) {
                       return bx.smul(ys[static_cast<size_t>(s - 1)], rb.ratio(bx, r, s));
                   }));
        t = bx.mul(t, shifted_block(bx, rb, k, 1, nullptr, nullptr, true));
        t = bx.mul(t, bx.one_minus(bx.smul(a, bx.qpow(2 * K))));
        t = bx.mul(t, bx.qpoch(a, K));
        t = bx.mul(t, bx.qpoch(bx.qpow(1), K));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(bx.sdiv(a, Y), bx.qpow(1)), K));
        t = bx.mul(t, bx.qpoch_inv(bx.smul(rb.sc(bx, "b"), bx.qpow(1)), K));
        auto inner = sum_box(bx, k, [&](const MultiIndex& j) {
            long J = total(j);
            auto u = an_factor(bx, rb, j);
            u = bx.mul(u, shifted_block(bx, rb, j, 0, nullptr, &k));
            u = bx.mul(u, shifted_block(bx, rb, j, 1, nullptr, nullptr, true));
            u = bx.mul(u, bx.qpoch(rb.sc(bx, "b"), J));
            u = bx.mul(u, bx.qpoch_inv(bx.qpow(-K), J));
            return bx.scale(u, bx.smul(bx.spow(bx.sinv(a), J), bx.qpow(wsum(j, 1) - K * J)));
        });
        t = bx.mul(t, inner);
        auto s = bx.smul(bx.spow(bx.sdiv(a, Y), K), bx.qpow(wsum(k, 0) + K * K));
        return bx.scale(t, s);
    });
    auto rb = realize(bk, spec);
    return bk.div(sum, bk.one_minus(rb.sc(bk, "a")));
}

void sample_andrews1(Sampler& smp, BindingSpec& spec) {
    spec.x = smp.distinct_x(spec.n);
    spec.scalars["a"] = unit(smp, 3);
    spec.scalars["b"] = unit(smp);
    spec.scalars["y"] = unit(smp, 3);
}

void sample_anandrews(Sampler& smp, BindingSpec& spec) {
    spec.x = smp.distinct_x(spec.n);
    spec.scalars["a"] = unit(smp, 3);
    spec.scalars["b"] = unit(smp);
    std::vector<ScalarSpec> ys;
    for (int r = 0; r < spec.n; ++r) ys.push_back(unit(smp, 3));
    spec.lists["y"] = std::move(ys);
}

} // namespace

void register_entries_rogers(Registry& reg) {
    {
        EntryDef d;
        d.id = "rogers-fine-n1";
        d.anchor = "rogers-fine-family";
        d.ranks = {1};
        d.numeric = true;
        d.notes = "classical series-to-series transformation; |z| < 1";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            sample_rf(smp, spec);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return rf1_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return rf1_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "an-rogers-fine-1";
        d.anchor = "rogers-fine-family";
        d.ranks = {1, 2};
        d.numeric = true;
        d.reduces_to = "rogers-fine-n1";
        d.notes = "single-b form; |z/a^{n-1}| < 1";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            sample_rf(smp, spec);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return arf1_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return arf1_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "an-rogers-fine-2";
        d.anchor = "rogers-fine-family";
        d.ranks = {1, 2};
        d.numeric = true;
        d.reduces_to = "rogers-fine-n1";
        d.notes = "coordinatewise b form; |z/a^{n-1}| < 1";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            sample_rf(smp, spec);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return arf2_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return arf2_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "liu-ext-n1";
        d.anchor = "liu-family";
        d.ranks = {1};
        d.exact = true;
        d.numeric = true;
        d.notes = "two extra parameters over the classical very-well-poised sum; "
                  "exact runs terminate through c = q^N";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode m, const Rational&) {
            sample_liu(smp, spec, m, true);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return liu1_sum(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return liu1_product(bk, s); });
    }
    {
        EntryDef d;
        d.id = "irs-n1";
        d.anchor = "liu-family";
        d.ranks = {1};
        d.exact = true;
        d.numeric = true;
        d.notes = "gamma = 0 binding of the same evaluators as liu-ext-n1";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode m, const Rational&) {
            sample_liu(smp, spec, m, false);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return liu1_sum(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return liu1_product(bk, s); });
    }
    {
        EntryDef d;
        d.id = "an-liu-ext";
        d.anchor = "liu-family";
        d.ranks = {1, 2};
        d.exact = true;
        d.numeric = true;
        d.reduces_to = "liu-ext-n1";
        d.notes = "product equals a double sum; terminating exact via c_r = q^{N_r}, "
                  "nonterminating numeric under |alpha a b c_1..c_n / q^{n+1}| < 1";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode m, const Rational&) {
            sample_anliu(smp, spec, m, true);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return anliu_product(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return anliu_sum(bk, s); });
    }
    {
        EntryDef d;
        d.id = "an-irs";
        d.anchor = "liu-family";
        d.ranks = {1, 2};
        d.exact = true;
        d.numeric = true;
        d.reduces_to = "irs-n1";
        d.notes = "gamma = 0 binding of the same evaluators as an-liu-ext";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode m, const Rational&) {
            sample_anliu(smp, spec, m, false);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return anliu_product(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return anliu_sum(bk, s); });
    }
    {
        EntryDef d;
        d.id = "fang-n1";
        d.anchor = "fang-family";
        d.ranks = {1};
        d.rational = true;
        d.notes = "finite transformation over 0..M; runs as exact rational values";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            spec.x = smp.distinct_x(spec.n);
            spec.naturals["M"] = smp.uniform(1, 4);
            spec.scalars["b"] = unit(smp);
            spec.scalars["c"] = unit(smp);
            spec.scalars["beta"] = unit(smp);
            spec.scalars["tau"] = unit(smp);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return fang_finite_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return fang_finite_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "fang-nonterm";
        d.anchor = "fang-family";
        d.ranks = {1};
        d.rational = true;
        d.numeric = true;
        d.notes = "nonterminating lift; |y tau| < 1 numerically, y = q^M in the "
                  "rational domain so the series terminates";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode m, const Rational&) {
            sample_fang_series(smp, spec, m);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return fang_series_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return fang_nonterm_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "fang-equiv";
        d.anchor = "fang-family";
        d.ranks = {1};
        d.numeric = true;
        d.notes = "same left side as fang-nonterm with the inner sum transformed; "
                  "inner argument cq/beta";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode m, const Rational&) {
            sample_fang_series(smp, spec, m);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return fang_series_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return fang_equiv_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "an-fang";
        d.anchor = "fang-family";
        d.ranks = {1, 2};
        d.numeric = true;
        d.reduces_to = "fang-equiv";
        d.notes = "|y_1..y_n tau| < 1; inner sum carries the reversed ratio blocks";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            sample_anfang(smp, spec);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return anfang_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return anfang_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "andrews-n1";
        d.anchor = "andrews-family";
        d.ranks = {1};
        d.exact = true;
        d.notes = "infinite product expanded over a quadratic q-power lattice";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            sample_andrews(smp, spec);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return andrews1_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return andrews1_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "an-andrews";
        d.anchor = "andrews-family";
        d.ranks = {1, 2};
        d.exact = true;
        d.numeric = true;
        d.exact_rank_cap = 1;
        d.reduces_to = "andrews-n1";
        d.notes = "above rank 1 the inner sum drives shell valuations down, so the "
                  "verifier runs those ranks numerically unless told otherwise";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            sample_andrews(smp, spec);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return anandrews_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return anandrews_rhs(bk, s); });
    }
}

} // namespace qan
