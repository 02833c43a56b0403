#include <utility>
#include <vector>

#include "qan/catalog.hpp"
#include "qan/entry_util.hpp"
#include "qan/testfn.hpp"

// The expansion-formula family: the classical one-variable expansion, the
// multiple master transformation with pluggable K and beta, its rank-1 form,
// the delta specialization, the per-coordinate variant, and the six derived
// extensions with a pluggable test function f.

namespace qan {
namespace {

// ---------------------------------------------------------------------------
// sampling helpers

MultiIndex sample_bound(Sampler& smp, int n, long hi) {
    MultiIndex N(static_cast<size_t>(n), 0);
    for (;;) {
        long t = 0;
        for (auto& v : N) {
            v = smp.uniform(0, hi);
            t += v;
        }
        if (t >= 1) return N;
    }
}

TestFnSpec linear_fn(Sampler& smp, bool with_coord) {
    TestFnSpec f;
    f.kind = TestFnSpec::Kind::Linear;
    long cnt = smp.uniform(1, 2);
    for (long t = 0; t < cnt; ++t) {
        f.factors.push_back(ScalarSpec::rat(smp.simple_ratio(5, true)));
    }
    if (with_coord && smp.coin()) {
        f.coord_factor = ScalarSpec::rat(smp.simple_ratio(5, true));
    }
    return f;
}

BetaSpec small_beta(Sampler& smp, int n) {
    std::vector<MultiIndex> js;
    for (long t = 0; t <= 2; ++t) {
        for_each_shell(n, t, [&](const MultiIndex& j) { js.push_back(j); });
    }
    BetaSpec beta;
    long want = smp.uniform(1, 3);
    for (long i = 0; i < want; ++i) {
        const MultiIndex& j = js[static_cast<size_t>(smp.uniform(0, static_cast<long>(js.size()) - 1))];
        if (beta.coeff(j) != 0) continue;
        beta.support.emplace_back(j, smp.simple_ratio(5, true));
    }
    return beta;
}

// c * q^e with e in {0, 1}; when e = 0 the coefficient avoids the values in
// `forbidden` (typically 1 and the reciprocals of coordinates).
ScalarSpec guarded_scalar(Sampler& smp, const std::vector<Rational>& forbidden) {
    for (;;) {
        Rational c = smp.signed_unit();
        long e = smp.uniform(0, 1);
        if (e == 0) {
            bool bad = false;
            for (const auto& f : forbidden) {
                if (c == f) bad = true;
            }
            if (bad) continue;
        }
        return ScalarSpec::rat(c, e);
    }
}

std::vector<Rational> x_reciprocals(const BindingSpec& spec) {
    std::vector<Rational> out{Rational(1)};
    for (const auto& xs : spec.x) out.push_back(1 / xs.coef);
    return out;
}

// ---------------------------------------------------------------------------
// liu-expansion: the classical rank-1 expansion with pluggable analytic f

template <class B>
typename B::Value liu_lhs(const B& bk, const BindingSpec& spec) {
    auto alpha = bk.from_spec(spec.scalar("alpha"));
    auto a = bk.from_spec(spec.scalar("a"));
    auto b = bk.from_spec(spec.scalar("b"));
    auto v = eval_f1(bk, spec.f1, bk.smul(alpha, a));
    v = bk.mul(v, bk.qpoch_inf(bk.smul(alpha, bk.qpow(1))));
    v = bk.mul(v, bk.qpoch_inf(bk.smul(bk.smul(alpha, a), bk.smul(b, bk.qpow(-1)))));
    v = bk.mul(v, bk.qpoch_inf_inv(bk.smul(alpha, a)));
    v = bk.mul(v, bk.qpoch_inf_inv(bk.smul(alpha, b)));
    return bk.finalize_sum(v);
}

template <class B>
typename B::Value liu_rhs(const B& bk, const BindingSpec& spec) {
    auto alpha = bk.from_spec(spec.scalar("alpha"));
    auto a = bk.from_spec(spec.scalar("a"));
    auto b = bk.from_spec(spec.scalar("b"));
    auto inv1ma = bk.inv(bk.one_minus(alpha));
    auto res = sum_shells(bk, 1, [&](const MultiIndex& sh) {
        long nn = sh[0];
        auto t = bk.one_minus(bk.smul(alpha, bk.qpow(2 * nn)));
        t = bk.mul(t, inv1ma);
        t = bk.mul(t, bk.qpoch(alpha, nn));
        t = bk.mul(t, bk.qpoch(bk.sdiv(bk.qpow(1), a), nn));
        t = bk.scale(t, bk.spow(bk.smul(a, bk.qpow(-1)), nn));
        t = bk.mul(t, bk.qpoch_inv(bk.qpow(1), nn));
        t = bk.mul(t, bk.qpoch_inv(bk.smul(alpha, a), nn));
        auto inner = bk.zero_sum();
        for (long k = 0; k <= nn; ++k) {
            auto u = bk.qpoch(bk.qpow(-nn), k);
            u = bk.mul(u, bk.qpoch(bk.smul(alpha, bk.qpow(nn)), k));
            u = bk.mul(u, bk.qpoch_inv(bk.qpow(1), k));
            u = bk.mul(u, bk.qpoch_inv(bk.smul(alpha, b), k));
            u = bk.scale(u, bk.qpow(k));
            u = bk.mul(u, eval_f1(bk, spec.f1, bk.smul(alpha, bk.qpow(k + 1))));
            inner = bk.add(inner, u);
        }
        return bk.mul(t, inner);
    });
    return bk.finalize_sum(res.value);
}

// ---------------------------------------------------------------------------
// master-an: the multiple transformation, terminating at y_r = q^{N_r}

template <class B>
typename B::Value master_lhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    const MultiIndex& N = rb.mi("N");
    long NT = total(N);
    auto b = rb.sc(bk, "b");
    auto inv1mb = bk.inv(bk.one_minus(b));
    auto acc = bk.zero_sum();
    for_each_box(N, [&](const MultiIndex& j) {
        Rational bc = spec.beta.coeff(j);
        if (bc == 0) return;
        long J = total(j);
        auto t = an_factor(bk, rb, j);
        t = bk.mul(t, shifted_block(bk, rb, j, 0, nullptr, &N));
        t = bk.mul(t, bk.one_minus(bk.smul(b, bk.qpow(2 * J))));
        t = bk.mul(t, inv1mb);
        t = bk.mul(t, bk.qpoch_inv(bk.smul(b, bk.qpow(NT + 1)), J));
        t = bk.scale(t, bk.smul(bk.srat(bc), bk.qpow(NT * J + wsum(j, 0))));
        acc = bk.add(acc, t);
    });
    std::vector<typename B::Scalar> yN;
    for (long Nr : N) yN.push_back(bk.qpow(Nr));
    return bk.finalize_sum(bk.mul(eval_fn(bk, rb, spec.K, yN), acc));
}

template <class B>
typename B::Value master_rhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    const MultiIndex& N = rb.mi("N");
    long NT = total(N);
    auto a = rb.sc(bk, "a");
    auto b = rb.sc(bk, "b");
    auto inv1ma = bk.inv(bk.one_minus(a));
    auto acc = bk.zero_sum();
    for_each_box(N, [&](const MultiIndex& k) {
        long K = total(k);
        auto t = an_factor(bk, rb, k);
        t = bk.mul(t, shifted_block(bk, rb, k, 0, nullptr, &N));
        t = bk.mul(t, shifted_block(bk, rb, k, 1, nullptr, nullptr, true));
        t = bk.mul(t, bk.one_minus(bk.smul(a, bk.qpow(2 * K))));
        t = bk.mul(t, inv1ma);
        t = bk.mul(t, bk.qpoch(a, K));
        t = bk.mul(t, bk.qpoch_inv(bk.smul(a, bk.qpow(NT + 1)), K));
        t = bk.scale(t, bk.qpow(NT * K + wsum(k, 0)));
        auto jacc = bk.zero_sum();
        for (const auto& pr : spec.beta.support) {
            const MultiIndex& j = pr.first;
            if (pr.second == 0 || !leq(j, k)) continue;
            long J = total(j);
            auto u = an_factor(bk, rb, j);
            u = bk.mul(u, shifted_block(bk, rb, j, 0, nullptr, &k));
            u = bk.mul(u, bk.qpoch(bk.smul(a, bk.qpow(K)), J));
            u = bk.mul(u, bk.qpoch(bk.smul(b, bk.qpow(1)), J));
            u = bk.mul(u, bk.qpoch_inv(b, 2 * J));
            u = bk.scale(u, bk.smul(bk.srat(J % 2 == 0 ? pr.second : -pr.second),
                                    bk.qpow(wsum(j, 1) + binom2(J))));
            auto macc = bk.zero_sum();
            for_each_box(mi_sub(k, j), [&](const MultiIndex& m) {
                long M = total(m);
                auto v = an_factor_rel(bk, rb, mi_add(m, j), j);
                v = bk.mul(v, shifted_block(bk, rb, m, 0, &j, &k));
                v = bk.mul(v, shifted_block(bk, rb, m, 1, &j, &j, true));
                v = bk.mul(v, bk.qpoch(bk.smul(a, bk.qpow(K + J)), M));
                v = bk.mul(v, bk.qpoch(bk.smul(b, bk.qpow(1 + J)), M));
                v = bk.mul(v, bk.qpoch_inv(bk.smul(a, bk.qpow(1)), M + J));
                v = bk.mul(v, bk.qpoch_inv(bk.smul(b, bk.qpow(2 * J + 1)), M));
                v = bk.scale(v, bk.qpow(wsum(m, 1)));
                std::vector<typename B::Scalar> ys;
                for (size_t i = 0; i < m.size(); ++i) ys.push_back(bk.qpow(m[i] + j[i]));
                v = bk.mul(v, eval_fn(bk, rb, spec.K, ys));
                macc = bk.add(macc, v);
            });
            jacc = bk.add(jacc, bk.mul(u, macc));
        }
        acc = bk.add(acc, bk.mul(t, jacc));
    });
    return bk.finalize_sum(acc);
}

// ---------------------------------------------------------------------------
// master-n1: the rank-1 statement, written out independently

template <class B>
typename B::Value master1_lhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    long N = spec.natural("N");
    auto b = rb.sc(bk, "b");
    auto inv1mb = bk.inv(bk.one_minus(b));
    auto acc = bk.zero_sum();
    for (const auto& pr : spec.beta.support) {
        long j = pr.first[0];
        if (pr.second == 0) continue;
        auto t = bk.qpoch(bk.qpow(-N), j);
        t = bk.mul(t, bk.one_minus(bk.smul(b, bk.qpow(2 * j))));
        t = bk.mul(t, inv1mb);
        t = bk.mul(t, bk.qpoch_inv(bk.smul(b, bk.qpow(1 + N)), j));
        t = bk.scale(t, bk.smul(bk.srat(pr.second), bk.qpow(N * j)));
        acc = bk.add(acc, t);
    }
    return bk.finalize_sum(bk.mul(eval_fn(bk, rb, spec.K, {bk.qpow(N)}), acc));
}

template <class B>
typename B::Value master1_rhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    long N = spec.natural("N");
    auto a = rb.sc(bk, "a");
    auto b = rb.sc(bk, "b");
    auto inv1ma = bk.inv(bk.one_minus(a));
    auto acc = bk.zero_sum();
    for (long k = 0; k <= N; ++k) {
        auto t = bk.qpoch(bk.qpow(-N), k);
        t = bk.mul(t, bk.qpoch(a, k));
        t = bk.mul(t, bk.one_minus(bk.smul(a, bk.qpow(2 * k))));
        t = bk.mul(t, inv1ma);
        t = bk.mul(t, bk.qpoch_inv(bk.qpow(1), k));
        t = bk.mul(t, bk.qpoch_inv(bk.smul(a, bk.qpow(1 + N)), k));
        t = bk.scale(t, bk.qpow(N * k));
        auto jacc = bk.zero_sum();
        for (const auto& pr : spec.beta.support) {
            long j = pr.first[0];
            if (pr.second == 0 || j > k) continue;
            auto u = bk.qpoch(bk.qpow(-k), j);
            u = bk.mul(u, bk.qpoch(bk.smul(a, bk.qpow(k)), j));
            u = bk.mul(u, bk.qpoch(bk.smul(b, bk.qpow(1)), j));
            u = bk.mul(u, bk.qpoch_inv(b, 2 * j));
            u = bk.scale(u, bk.smul(bk.srat(j % 2 == 0 ? pr.second : -pr.second),
                                    bk.qpow(binom2(j + 1))));
            auto macc = bk.zero_sum();
            for (long m = 0; m <= k - j; ++m) {
                auto v = bk.qpoch(bk.qpow(j - k), m);
                v = bk.mul(v, bk.qpoch(bk.smul(a, bk.qpow(j + k)), m));
                v = bk.mul(v, bk.qpoch(bk.smul(b, bk.qpow(j + 1)), m));
                v = bk.mul(v, bk.qpoch_inv(bk.qpow(1), m));
                v = bk.mul(v, bk.qpoch_inv(bk.smul(b, bk.qpow(1 + 2 * j)), m));
                v = bk.mul(v, bk.qpoch_inv(bk.smul(a, bk.qpow(1)), j + m));
                v = bk.scale(v, bk.qpow(m));
                v = bk.mul(v, eval_fn(bk, rb, spec.K, {bk.qpow(j + m)}));
                macc = bk.add(macc, v);
            }
            jacc = bk.add(jacc, bk.mul(u, macc));
        }
        acc = bk.add(acc, bk.mul(t, jacc));
    }
    return bk.finalize_sum(acc);
}

// ---------------------------------------------------------------------------
// beta-delta: the delta specialization of the master transformation

template <class B>
typename B::Value bdelta_lhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    const MultiIndex& N = rb.mi("N");
    std::vector<typename B::Scalar> yN;
    for (long Nr : N) yN.push_back(bk.qpow(Nr));
    return bk.finalize_sum(eval_fn(bk, rb, spec.K, yN));
}

template <class B>
typename B::Value bdelta_rhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    const MultiIndex& N = rb.mi("N");
    long NT = total(N);
    auto a = rb.sc(bk, "a");
    auto inv1ma = bk.inv(bk.one_minus(a));
    auto acc = bk.zero_sum();
    for_each_box(N, [&](const MultiIndex& k) {
        long K = total(k);
        auto t = an_factor(bk, rb, k);
        t = bk.mul(t, shifted_block(bk, rb, k, 0, nullptr, &N));
        t = bk.mul(t, shifted_block(bk, rb, k, 1, nullptr, nullptr, true));
        t = bk.mul(t, bk.one_minus(bk.smul(a, bk.qpow(2 * K))));
        t = bk.mul(t, inv1ma);
        t = bk.mul(t, bk.qpoch(a, K));
        t = bk.mul(t, bk.qpoch_inv(bk.smul(a, bk.qpow(NT + 1)), K));
        t = bk.scale(t, bk.qpow(NT * K + wsum(k, 0)));
        auto inner = inner_milne_sum(bk, rb, k, [&](const MultiIndex& m) {
            long M = total(m);
            auto mid = bk.qpoch(bk.smul(a, bk.qpow(K)), M);
            mid = bk.mul(mid, bk.qpoch_inv(bk.smul(a, bk.qpow(1)), M));
            std::vector<typename B::Scalar> ys;
            for (long mr : m) ys.push_back(bk.qpow(mr));
            return bk.mul(mid, eval_fn(bk, rb, spec.K, ys));
        });
        acc = bk.add(acc, bk.mul(t, inner));
    });
    return bk.finalize_sum(acc);
}

// ---------------------------------------------------------------------------
// br-expansion: the per-coordinate variant of the master transformation

template <class B>
typename B::Value br_lhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    int n = rb.n;
    const MultiIndex& N = rb.mi("N");
    long NT = total(N);
    auto b = rb.sc(bk, "b");
    auto pre = bk.one();
    for (int r = 1; r <= n; ++r) {
        pre = bk.mul(pre, bk.inv(bk.one_minus(bk.smul(b, rb.xr(r)))));
    }
    auto acc = bk.zero_sum();
    for_each_box(N, [&](const MultiIndex& j) {
        Rational bc = spec.beta.coeff(j);
        if (bc == 0) return;
        long J = total(j);
        auto t = an_factor(bk, rb, j);
        t = bk.mul(t, shifted_block(bk, rb, j, 0, nullptr, &N));
        for (int r = 1; r <= n; ++r) {
            auto bx = bk.smul(b, rb.xr(r));
            t = bk.mul(t, bk.one_minus(bk.smul(bx, bk.qpow(j[static_cast<size_t>(r - 1)] + J))));
            t = bk.mul(t, bk.qpoch_inv(bk.smul(bx, bk.qpow(1 + N[static_cast<size_t>(r - 1)])), J));
        }
        t = bk.scale(t, bk.smul(bk.srat(bc), bk.qpow(NT * J + wsum(j, 0))));
        acc = bk.add(acc, t);
    });
    std::vector<typename B::Scalar> yN;
    for (long Nr : N) yN.push_back(bk.qpow(Nr));
    return bk.finalize_sum(bk.mul(bk.mul(eval_fn(bk, rb, spec.K, yN), pre), acc));
}

template <class B>
typename B::Value br_rhs(const B& bk, const BindingSpec& spec) {
    auto rb = realize(bk, spec);
    int n = rb.n;
    const MultiIndex& N = rb.mi("N");
    long NT = total(N);
    auto a = rb.sc(bk, "a");
    auto b = rb.sc(bk, "b");
    auto pre = bk.one();
    for (int r = 1; r <= n; ++r) {
        pre = bk.mul(pre, bk.inv(bk.one_minus(bk.smul(a, rb.xr(r)))));
    }
    auto acc = bk.zero_sum();
    for_each_box(N, [&](const MultiIndex& k) {
        long K = total(k);
        auto t = an_factor(bk, rb, k);
        t = bk.mul(t, shifted_block(bk, rb, k, 0, nullptr, &N));
        t = bk.mul(t, shifted_block(bk, rb, k, 1, nullptr, nullptr, true));
        for (int r = 1; r <= n; ++r) {
            auto ax = bk.smul(a, rb.xr(r));
            t = bk.mul(t, bk.one_minus(bk.smul(ax, bk.qpow(k[static_cast<size_t>(r - 1)] + K))));
            t = bk.mul(t, bk.qpoch(ax, K));
            t = bk.mul(t, bk.qpoch_inv(bk.smul(ax, bk.qpow(1 + N[static_cast<size_t>(r - 1)])), K));
        }
        t = bk.scale(t, bk.qpow(NT * K + wsum(k, 0)));
        auto jacc = bk.zero_sum();
        for (const auto& pr : spec.beta.support) {
            const MultiIndex& j = pr.first;
            if (pr.second == 0 || !leq(j, k)) continue;
            long J = total(j);
            auto u = an_factor(bk, rb, j);
            u = bk.mul(u, shifted_block(bk, rb, j, 0, nullptr, &k));
            for (int r = 1; r <= n; ++r) {
                long jr = j[static_cast<size_t>(r - 1)];
                auto ax = bk.smul(a, rb.xr(r));
                auto bx = bk.smul(b, rb.xr(r));
                u = bk.mul(u, bk.qpoch(bk.smul(ax, bk.qpow(K)), jr));
                u = bk.mul(u, bk.qpoch(bk.smul(bx, bk.qpow(1)), jr));
                u = bk.mul(u, bk.qpoch_inv(bx, jr + J));
            }
            u = bk.scale(u, bk.smul(bk.srat(J % 2 == 0 ? pr.second : -pr.second),
                                    bk.qpow(wsum(j, 1) + binom2(J))));
            auto macc = bk.zero_sum();
            for_each_box(mi_sub(k, j), [&](const MultiIndex& m) {
                auto v = an_factor_rel(bk, rb, mi_add(m, j), j);
                v = bk.mul(v, shifted_block(bk, rb, m, 0, &j, &k));
                v = bk.mul(v, shifted_block(bk, rb, m, 1, &j, &j, true));
                long J2 = total(j);
                for (int r = 1; r <= n; ++r) {
                    long jr = j[static_cast<size_t>(r - 1)];
                    long mr = m[static_cast<size_t>(r - 1)];
                    auto ax = bk.smul(a, rb.xr(r));
                    auto bx = bk.smul(b, rb.xr(r));
                    v = bk.mul(v, bk.qpoch(bk.smul(ax, bk.qpow(jr + K)), mr));
                    v = bk.mul(v, bk.qpoch(bk.smul(bx, bk.qpow(1 + jr)), mr));
                    v = bk.mul(v, bk.qpoch_inv(bk.smul(ax, bk.qpow(1)), jr + mr));
                    v = bk.mul(v, bk.qpoch_inv(bk.smul(bx, bk.qpow(1 + jr + J2)), mr));
                }
                v = bk.scale(v, bk.qpow(wsum(m, 1)));
                std::vector<typename B::Scalar> ys;
                for (size_t i = 0; i < m.size(); ++i) ys.push_back(bk.qpow(m[i] + j[i]));
                v = bk.mul(v, eval_fn(bk, rb, spec.K, ys));
                macc = bk.add(macc, v);
            });
            jacc = bk.add(jacc, bk.mul(u, macc));
        }
        acc = bk.add(acc, bk.mul(pre, bk.mul(t, jacc)));
    });
    return bk.finalize_sum(acc);
}

// ---------------------------------------------------------------------------
// ext-1..ext-6: the six derived extensions; odd variants take a one-variable
// f, even variants take f(y_1,...,y_n); 1/2 share one left side, 3/4 another,
// 5/6 a per-coordinate one.

template <class B>
typename B::Value ext_lhs(const B& bk, const BindingSpec& spec, int variant) {
    auto rb = realize(bk, spec);
    int n = rb.n;
    auto alpha = rb.sc(bk, "alpha");
    auto b = rb.sc(bk, "b");
    auto as = rb.list(bk, "a");
    auto A = sprod(bk, as);
    auto aAq = bk.smul(bk.smul(alpha, A), bk.qpow(1 - n));
    bool multivar = variant % 2 == 0;
    typename B::Value v = bk.one();
    if (multivar) {
        std::vector<typename B::Scalar> ys;
        for (int r = 1; r <= n; ++r) ys.push_back(bk.smul(alpha, as[static_cast<size_t>(r - 1)]));
        v = eval_fn(bk, rb, spec.fn, ys);
    } else {
        v = eval_f1(bk, spec.f1, aAq);
    }
    switch (variant) {
        case 1:
        case 2:
            v = bk.mul(v, bk.qpoch_inf(bk.smul(alpha, bk.qpow(1))));
            v = bk.mul(v, bk.qpoch_inf(bk.smul(bk.smul(alpha, A), bk.smul(b, bk.qpow(-n)))));
            v = bk.mul(v, bk.qpoch_inf_inv(aAq));
            v = bk.mul(v, bk.qpoch_inf_inv(bk.smul(alpha, b)));
            break;
        case 3:
        case 4:
            v = bk.mul(v, bk.qpoch_inf(bk.smul(alpha, bk.qpow(1))));
            v = bk.mul(v, bk.qpoch_inf_inv(aAq));
            for (int r = 1; r <= n; ++r) {
                auto abx = bk.smul(bk.smul(alpha, b), rb.xr(r));
                v = bk.mul(v, bk.qpoch_inf(bk.smul(bk.smul(abx, as[static_cast<size_t>(r - 1)]),
                                                   bk.qpow(-1))));
                v = bk.mul(v, bk.qpoch_inf_inv(abx));
            }
            break;
        default:
            for (int r = 1; r <= n; ++r) {
                auto ax = bk.smul(alpha, rb.xr(r));
                auto ar = as[static_cast<size_t>(r - 1)];
                v = bk.mul(v, bk.qpoch_inf(bk.smul(ax, bk.qpow(1))));
                v = bk.mul(v, bk.qpoch_inf(bk.smul(bk.smul(ax, ar), bk.smul(b, bk.qpow(-1)))));
                v = bk.mul(v, bk.qpoch_inf_inv(bk.smul(ax, b)));
                v = bk.mul(v, bk.qpoch_inf_inv(bk.smul(ax, ar)));
            }
            break;
    }
    return bk.finalize_sum(v);
}

template <class B>
typename B::Value ext_rhs(const B& bk, const BindingSpec& spec, int variant) {
    auto rb = realize(bk, spec);
    int n = rb.n;
    auto alpha = rb.sc(bk, "alpha");
    auto b = rb.sc(bk, "b");
    auto as = rb.list(bk, "a");
    auto A = sprod(bk, as);
    bool multivar = variant % 2 == 0;

    auto pre = bk.one();
    if (variant <= 4) {
        pre = bk.inv(bk.one_minus(alpha));
    } else {
        for (int r = 1; r <= n; ++r) {
            pre = bk.mul(pre, bk.inv(bk.one_minus(bk.smul(alpha, rb.xr(r)))));
        }
    }

    auto res = sum_shells(bk, n, [&](const MultiIndex& k) {
        long K = total(k);
        auto t = an_factor(bk, rb, k);
        t = bk.mul(t, poch_block(bk, n, k, [&](int r, int s) {
            return bk.smul(bk.qpow(1), bk.sdiv(rb.ratio(bk, r, s), as[static_cast<size_t>(s - 1)]));
        }));
        t = bk.mul(t, shifted_block(bk, rb, k, 1, nullptr, nullptr, true));
        if (variant <= 4) {
            t = bk.mul(t, bk.one_minus(bk.smul(alpha, bk.qpow(2 * K))));
            t = bk.mul(t, bk.qpoch(alpha, K));
            t = bk.mul(t, bk.qpoch_inv(bk.smul(bk.smul(alpha, A), bk.qpow(1 - n)), K));
        } else {
            for (int r = 1; r <= n; ++r) {
                auto ax = bk.smul(alpha, rb.xr(r));
                t = bk.mul(t, bk.one_minus(bk.smul(ax, bk.qpow(k[static_cast<size_t>(r - 1)] + K))));
                t = bk.mul(t, bk.qpoch(ax, K));
                t = bk.mul(t, bk.qpoch_inv(bk.smul(ax, as[static_cast<size_t>(r - 1)]), K));
            }
        }
        t = bk.scale(t, bk.smul(bk.spow(A, K), bk.qpow(wsum(k, 0) - n * K)));
        auto inner = inner_milne_sum(bk, rb, k, [&](const MultiIndex& m) {
            long M = total(m);
            typename B::Value mid = bk.one();
            if (variant == 1 || variant == 2) {
                mid = bk.qpoch(bk.smul(alpha, bk.qpow(K)), M);
                mid = bk.mul(mid, bk.qpoch_inv(bk.smul(alpha, b), M));
            } else if (variant == 3 || variant == 4) {
                mid = bk.qpoch(bk.smul(alpha, bk.qpow(K)), M);
                for (int r = 1; r <= n; ++r) {
                    mid = bk.mul(mid, bk.qpoch_inv(bk.smul(bk.smul(alpha, b), rb.xr(r)),
                                                   m[static_cast<size_t>(r - 1)]));
                }
            } else {
                for (int r = 1; r <= n; ++r) {
                    long mr = m[static_cast<size_t>(r - 1)];
                    auto ax = bk.smul(alpha, rb.xr(r));
                    mid = bk.mul(mid, bk.qpoch(bk.smul(ax, bk.qpow(K)), mr));
                    mid = bk.mul(mid, bk.qpoch_inv(bk.smul(ax, b), mr));
                }
            }
            if (multivar) {
                std::vector<typename B::Scalar> ys;
                for (long mr : m) ys.push_back(bk.smul(alpha, bk.qpow(1 + mr)));
                return bk.mul(mid, eval_fn(bk, rb, spec.fn, ys));
            }
            return bk.mul(mid, eval_f1(bk, spec.f1, bk.smul(alpha, bk.qpow(1 + M))));
        });
        return bk.mul(bk.mul(t, pre), inner);
    });
    return bk.finalize_sum(res.value);
}

// shared sampling for the ext family. All-ones termination pins every
// summation index at zero and the statement collapses to a tautology, so
// keep at least one coordinate deeper.
void sample_ext(Sampler& smp, BindingSpec& spec, int variant) {
    int n = spec.n;
    spec.x = smp.distinct_x(n);
    std::vector<ScalarSpec> as;
    long tot = 0;
    for (int r = 0; r < n; ++r) {
        long e = smp.uniform(1, 2);
        tot += e;
        as.push_back(ScalarSpec::qpow(e));
    }
    if (tot == n) as[0] = ScalarSpec::qpow(2);
    spec.lists["a"] = as;

    std::vector<Rational> bad_alpha{Rational(1)};
    if (variant >= 5) {
        for (const auto& xs : spec.x) bad_alpha.push_back(1 / xs.coef);
    }
    ScalarSpec alpha = guarded_scalar(smp, bad_alpha);
    spec.scalars["alpha"] = alpha;

    for (;;) {
        Rational cb = smp.signed_unit();
        long eb = smp.uniform(0, 1);
        if (alpha.exp + eb == 0) {
            bool bad = alpha.coef * cb == 1;
            if (variant >= 3) {
                for (const auto& xs : spec.x) {
                    if (alpha.coef * cb * xs.coef == 1) bad = true;
                }
            }
            if (bad) continue;
        }
        spec.scalars["b"] = ScalarSpec::rat(cb, eb);
        break;
    }
    if (variant % 2 == 0) {
        spec.fn = linear_fn(smp, n > 1);
    } else {
        spec.f1 = linear_fn(smp, false);
    }
}

} // namespace

void register_entries_master(Registry& reg) {
    {
        EntryDef d;
        d.id = "liu-expansion";
        d.anchor = "expansion-family";
        d.ranks = {1};
        d.exact = true;
        d.numeric = true;
        d.notes = "one-variable expansion with pluggable f; runs terminating a = q^N";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            spec.x = smp.distinct_x(1);
            spec.scalars["a"] = ScalarSpec::qpow(smp.uniform(2, 4));
            spec.scalars["alpha"] = guarded_scalar(smp, {Rational(1)});
            spec.scalars["b"] = guarded_scalar(smp, {Rational(1)});
            spec.f1 = linear_fn(smp, false);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return liu_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return liu_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "master-an";
        d.anchor = "expansion-family";
        d.ranks = {1, 2};
        d.exact = true;
        d.numeric = true;
        d.reduces_to = "master-n1";
        d.notes = "pluggable K and beta; terminating y_r = q^{N_r}";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            spec.x = smp.distinct_x(spec.n);
            spec.multiindices["N"] = sample_bound(smp, spec.n, 2);
            spec.scalars["a"] = guarded_scalar(smp, {Rational(1)});
            spec.scalars["b"] = guarded_scalar(smp, {Rational(1)});
            spec.K = linear_fn(smp, spec.n > 1);
            spec.beta = small_beta(smp, spec.n);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return master_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return master_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "master-n1";
        d.anchor = "expansion-family";
        d.ranks = {1};
        d.exact = true;
        d.numeric = true;
        d.notes = "rank-1 master statement; terminating y = q^N";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            spec.x = smp.distinct_x(1);
            spec.naturals["N"] = smp.uniform(1, 3);
            spec.scalars["a"] = guarded_scalar(smp, {Rational(1)});
            spec.scalars["b"] = guarded_scalar(smp, {Rational(1)});
            spec.K = linear_fn(smp, false);
            spec.beta = small_beta(smp, 1);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return master1_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return master1_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "beta-delta";
        d.anchor = "expansion-family";
        d.ranks = {1, 2, 3};
        d.exact = true;
        d.numeric = true;
        d.notes = "delta-coefficient specialization: K reproduced by the double sum";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            spec.x = smp.distinct_x(spec.n);
            spec.multiindices["N"] = sample_bound(smp, spec.n, 2);
            spec.scalars["a"] = guarded_scalar(smp, {Rational(1)});
            spec.K = linear_fn(smp, spec.n > 1);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return bdelta_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return bdelta_rhs(bk, s); });
    }
    {
        EntryDef d;
        d.id = "br-expansion";
        d.anchor = "expansion-family";
        d.ranks = {1, 2};
        d.exact = true;
        d.numeric = true;
        d.notes = "per-coordinate middle factors; terminating y_r = q^{N_r}";
        d.sample = [](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            spec.x = smp.distinct_x(spec.n);
            spec.multiindices["N"] = sample_bound(smp, spec.n, 2);
            auto recips = x_reciprocals(spec);
            spec.scalars["a"] = guarded_scalar(smp, recips);
            spec.scalars["b"] = guarded_scalar(smp, recips);
            spec.K = linear_fn(smp, spec.n > 1);
            spec.beta = small_beta(smp, spec.n);
        };
        reg.add(
            d, [](const auto& bk, const BindingSpec& s) { return br_lhs(bk, s); },
            [](const auto& bk, const BindingSpec& s) { return br_rhs(bk, s); });
    }
    for (int variant = 1; variant <= 6; ++variant) {
        EntryDef d;
        d.id = "ext-" + std::to_string(variant);
        d.anchor = "expansion-family";
        d.ranks = {1, 2};
        d.exact = true;
        d.numeric = true;
        d.reduces_to = "liu-expansion";
        d.notes = variant % 2 == 0 ? "multivariate test function f(y_1..y_n)"
                                   : "one-variable test function f(y)";
        d.sample = [variant](Sampler& smp, BindingSpec& spec, Mode, const Rational&) {
            sample_ext(smp, spec, variant);
        };
        reg.add(
            d,
            [variant](const auto& bk, const BindingSpec& s) { return ext_lhs(bk, s, variant); },
            [variant](const auto& bk, const BindingSpec& s) { return ext_rhs(bk, s, variant); });
    }
}

} // namespace qan
