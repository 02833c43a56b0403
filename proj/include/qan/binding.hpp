#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qan/errors.hpp"
#include "qan/multiindex.hpp"
#include "qan/rational.hpp"

namespace qan {

// Backend-independent scalar: either coef * q^exp with exact rational coef,
// or a decimal literal (numeric mode only).
struct ScalarSpec {
    Rational coef{0};
    long exp = 0;
    std::string dec;

    bool is_dec() const { return !dec.empty(); }

    static ScalarSpec rat(Rational c, long e = 0) {
        ScalarSpec s;
        s.coef = std::move(c);
        s.exp = e;
        return s;
    }
    static ScalarSpec qpow(long e) { return rat(Rational(1), e); }
    static ScalarSpec decimal(std::string d) {
        ScalarSpec s;
        s.dec = std::move(d);
        return s;
    }
};

std::string to_string(const ScalarSpec& s);

// Pluggable test functions.
//   Linear: f(y) = prod_t (1 - u_t y); in the multivariate case the factors
//     act on the product y_1...y_n, optionally joined by one per-coordinate
//     factor prod_r (1 - w y_r).
//   Ratio: f(y) = (c y/q, d y/q)_inf / ((beta y/q, gamma y/q)_inf); the
//     multivariate form applies the same ratio coordinate-wise at x_r y_r.
struct TestFnSpec {
    enum class Kind { None, Linear, Ratio };
    Kind kind = Kind::None;
    std::vector<ScalarSpec> factors; // Linear: the u_t
    ScalarSpec coord_factor;         // Linear multivariate: w (coef 0 = absent)
    ScalarSpec c, d, beta, gamma;    // Ratio parameters

    bool present() const { return kind != Kind::None; }
};

// Finitely supported coefficient family beta(j).
struct BetaSpec {
    std::vector<std::pair<MultiIndex, Rational>> support;

    Rational coeff(const MultiIndex& j) const {
        for (const auto& [idx, c] : support) {
            if (idx == j) return c;
        }
        return Rational(0);
    }
    bool present() const { return !support.empty(); }
};

// A full assignment of identity parameters. The same spec drives every
// backend, which is what makes cross-backend checks meaningful.
struct BindingSpec {
    int n = 1;
    std::vector<ScalarSpec> x;
    std::map<std::string, ScalarSpec> scalars;
    std::map<std::string, std::vector<ScalarSpec>> lists;
    std::map<std::string, long> naturals;
    std::map<std::string, MultiIndex> multiindices;
    TestFnSpec K, f1, fn;
    BetaSpec beta;
    Rational q_rational{0}; // substitution point for the rational domain

    const ScalarSpec& scalar(const std::string& name) const {
        auto it = scalars.find(name);
        if (it == scalars.end()) throw ConfigError("missing scalar parameter: " + name);
        return it->second;
    }
    const std::vector<ScalarSpec>& list(const std::string& name) const {
        auto it = lists.find(name);
        if (it == lists.end()) throw ConfigError("missing list parameter: " + name);
        return it->second;
    }
    long natural(const std::string& name) const {
        auto it = naturals.find(name);
        if (it == naturals.end()) throw ConfigError("missing natural parameter: " + name);
        return it->second;
    }
    const MultiIndex& multiindex(const std::string& name) const {
        auto it = multiindices.find(name);
        if (it == multiindices.end()) throw ConfigError("missing multi-index parameter: " + name);
        return it->second;
    }
};

std::string binding_digest(const BindingSpec& b);

} // namespace qan
