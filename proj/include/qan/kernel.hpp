#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "qan/backends.hpp"
#include "qan/binding.hpp"
#include "qan/multiindex.hpp"

namespace qan {

// A BindingSpec realized in a backend's scalar type.
template <class B>
struct Realized {
    using Scalar = typename B::Scalar;

    int n = 1;
    std::vector<Scalar> x;    // x_1..x_n
    std::vector<Scalar> xinv; // 1/x_r, for factors with swapped orientation
    const BindingSpec* spec = nullptr;

    const Scalar& xr(int r) const { return x[static_cast<size_t>(r - 1)]; } // 1-based
    Scalar ratio(const B& bk, int r, int s) const {
        return bk.sdiv(x[static_cast<size_t>(r - 1)], x[static_cast<size_t>(s - 1)]);
    }
    Scalar sc(const B& bk, const std::string& name) const {
        return bk.from_spec(spec->scalar(name));
    }
    std::vector<Scalar> list(const B& bk, const std::string& name) const {
        std::vector<Scalar> out;
        for (const auto& s : spec->list(name)) out.push_back(bk.from_spec(s));
        return out;
    }
    long nat(const std::string& name) const { return spec->natural(name); }
    const MultiIndex& mi(const std::string& name) const { return spec->multiindex(name); }
};

template <class B>
Realized<B> realize(const B& bk, const BindingSpec& spec) {
    Realized<B> rb;
    rb.n = spec.n;
    rb.spec = &spec;
    for (const auto& s : spec.x) {
        auto v = bk.from_spec(s);
        rb.xinv.push_back(bk.sinv(v));
        rb.x.push_back(std::move(v));
    }
    return rb;
}

// prod_{1<=r<s<=n} (1 - q^{sh_r - sh_s} x_r/x_s) as a value.
template <class B>
typename B::Value an_shifted_num(const B& bk, const std::vector<typename B::Scalar>& x,
                                 const MultiIndex& sh) {
    auto acc = bk.one();
    int n = static_cast<int>(x.size());
    for (int r = 0; r < n; ++r) {
        for (int s = r + 1; s < n; ++s) {
            auto rat = bk.sdiv(x[static_cast<size_t>(r)], x[static_cast<size_t>(s)]);
            acc = bk.mul(acc, bk.one_minus(bk.smul(
                                 rat, bk.qpow(sh[static_cast<size_t>(r)] -
                                              sh[static_cast<size_t>(s)]))));
        }
    }
    return acc;
}

// The A_n Vandermonde-type factor
// prod_{r<s} (1 - q^{step(k_r-k_s)} x_r/x_s) / (1 - x_r/x_s).
template <class B>
typename B::Value an_factor(const B& bk, const Realized<B>& rb, const MultiIndex& k,
                            int step = 1) {
    auto acc = bk.one();
    for (int r = 1; r <= rb.n; ++r) {
        for (int s = r + 1; s <= rb.n; ++s) {
            auto rat = rb.ratio(bk, r, s);
            auto num = bk.one_minus(bk.smul(
                rat, bk.qpow(step * (k[static_cast<size_t>(r - 1)] -
                                     k[static_cast<size_t>(s - 1)]))));
            acc = bk.mul(acc, bk.scale(num, bk.sinv(bk.one_minus_s(rat))));
        }
    }
    return acc;
}

// prod over (r,s) pairs of (arg(r,s); q^step)_{len(r)}; arg yields scalars.
template <class B, class Arg>
typename B::Value poch_block(const B& bk, int n, const MultiIndex& len, Arg&& arg,
                             int step = 1) {
    auto acc = bk.one();
    for (int r = 1; r <= n; ++r) {
        long L = len[static_cast<size_t>(r - 1)];
        for (int s = 1; s <= n; ++s) {
            acc = bk.mul(acc, bk.qpoch(arg(r, s), L, step));
        }
    }
    return acc;
}

// Same, but the inverse product 1 / prod (arg(r,s))_{len(r)}.
template <class B, class Arg>
typename B::Value poch_block_inv(const B& bk, int n, const MultiIndex& len, Arg&& arg,
                                 int step = 1) {
    auto acc = bk.one();
    for (int r = 1; r <= n; ++r) {
        long L = len[static_cast<size_t>(r - 1)];
        for (int s = 1; s <= n; ++s) {
            acc = bk.mul(acc, bk.qpoch_inv(arg(r, s), L, step));
        }
    }
    return acc;
}

// Complete sum of term(k) over the box 0 <= k <= N.
template <class B, class Term>
typename B::Value sum_box(const B& bk, const MultiIndex& N, Term&& term) {
    auto acc = bk.zero_sum();
    for_each_box(N, [&](const MultiIndex& k) { acc = bk.add(acc, term(k)); });
    return acc;
}

template <class B>
struct ShellSumResult {
    typename B::Value value;
    long shells = 0;                // shells actually summed
    std::vector<double> last_mags;  // trailing shell magnitudes (numeric)
};

// When set, sum_shells mirrors its stopping data here so the verification
// driver can report it without threading state through every evaluator.
struct ShellTrace {
    long shells = 0;
    std::vector<double> last_mags;
};
inline thread_local ShellTrace* g_shell_trace = nullptr;

// Sum of term(k) over all k >= 0 of the given rank, by shells of constant
// |k| in ascending order, lexicographic within a shell. Stops after
// `shell_patience` consecutive negligible shells; throws NoConvergence at
// the shell cap.
template <class B, class Term>
ShellSumResult<B> sum_shells(const B& bk, int rank, Term&& term) {
    ShellSumResult<B> out{bk.zero_sum(), 0, {}};
    int quiet = 0;
    for (long t = 0; t <= bk.shell_cap(); ++t) {
        auto shell = bk.zero_sum();
        double weight = 0.0;
        for_each_shell(rank, t, [&](const MultiIndex& k) {
            auto v = term(k);
            bk.weight_add(weight, v);
            shell = bk.add(shell, v);
        });
        out.value = bk.add(out.value, shell);
        out.shells = t + 1;
        if (std::getenv("QAN_SHELL_DEBUG")) {
            std::fprintf(stderr, "shell %ld weight %g\n", t, weight);
        }
        out.last_mags.push_back(weight);
        if (out.last_mags.size() > 3) out.last_mags.erase(out.last_mags.begin());
        quiet = bk.shell_negligible(shell, weight) ? quiet + 1 : 0;
        if (quiet >= bk.shell_patience()) {
            out.value = bk.finalize_sum(out.value);
            if (g_shell_trace) {
                g_shell_trace->shells = out.shells;
                g_shell_trace->last_mags = out.last_mags;
            }
            return out;
        }
    }
    throw NoConvergence("shell sum did not settle within the shell cap");
}

} // namespace qan
