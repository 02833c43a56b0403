#pragma once

#include <vector>

#include "qan/binding.hpp"
#include "qan/kernel.hpp"

namespace qan {

// f(y), one variable.
template <class B>
typename B::Value eval_f1(const B& bk, const TestFnSpec& fn, const typename B::Scalar& y) {
    if (fn.kind == TestFnSpec::Kind::Linear) {
        auto acc = bk.one();
        for (const auto& u : fn.factors) {
            acc = bk.mul(acc, bk.one_minus(bk.smul(bk.from_spec(u), y)));
        }
        return acc;
    }
    if (fn.kind == TestFnSpec::Kind::Ratio) {
        auto at = [&](const ScalarSpec& p) {
            return bk.smul(bk.smul(bk.from_spec(p), y), bk.qpow(-1));
        };
        auto num = bk.mul(bk.qpoch_inf(at(fn.c)), bk.qpoch_inf(at(fn.d)));
        auto den = bk.mul(bk.qpoch_inf_inv(at(fn.beta)), bk.qpoch_inf_inv(at(fn.gamma)));
        return bk.mul(num, den);
    }
    throw ConfigError("identity needs a one-variable test function");
}

// f(y_1, ..., y_n).
template <class B>
typename B::Value eval_fn(const B& bk, const Realized<B>& rb, const TestFnSpec& fn,
                          const std::vector<typename B::Scalar>& ys) {
    if (fn.kind == TestFnSpec::Kind::Linear) {
        auto prod = bk.qpow(0);
        for (const auto& y : ys) prod = bk.smul(prod, y);
        auto acc = bk.one();
        for (const auto& u : fn.factors) {
            acc = bk.mul(acc, bk.one_minus(bk.smul(bk.from_spec(u), prod)));
        }
        if (!fn.coord_factor.is_dec() && fn.coord_factor.coef != 0) {
            auto w = bk.from_spec(fn.coord_factor);
            for (const auto& y : ys) {
                acc = bk.mul(acc, bk.one_minus(bk.smul(w, y)));
            }
        }
        return acc;
    }
    if (fn.kind == TestFnSpec::Kind::Ratio) {
        auto acc = bk.one();
        for (size_t r = 0; r < ys.size(); ++r) {
            auto at = [&](const ScalarSpec& p) {
                return bk.smul(bk.smul(bk.smul(bk.from_spec(p), rb.x[r]), ys[r]),
                               bk.qpow(-1));
            };
            acc = bk.mul(acc, bk.qpoch_inf(at(fn.c)));
            acc = bk.mul(acc, bk.qpoch_inf(at(fn.d)));
            acc = bk.mul(acc, bk.qpoch_inf_inv(at(fn.beta)));
            acc = bk.mul(acc, bk.qpoch_inf_inv(at(fn.gamma)));
        }
        return acc;
    }
    throw ConfigError("identity needs a multivariate test function");
}

// K evaluated at a product argument Y = y_1...y_n.
template <class B>
typename B::Value eval_K(const B& bk, const TestFnSpec& fn, const typename B::Scalar& Y) {
    if (fn.kind != TestFnSpec::Kind::Linear) {
        throw ConfigError("identity needs a linear-factor kernel function");
    }
    auto acc = bk.one();
    for (const auto& u : fn.factors) {
        acc = bk.mul(acc, bk.one_minus(bk.smul(bk.from_spec(u), Y)));
    }
    return acc;
}

template <class B>
typename B::Scalar beta_coeff(const B& bk, const BetaSpec& beta, const MultiIndex& j) {
    return bk.srat(beta.coeff(j));
}

} // namespace qan
