#pragma once

#include <gmpxx.h>

#include <string>

#include "qan/errors.hpp"

namespace qan {

// Exact rational numbers. GMP's canonical form is the type invariant:
// lowest terms, positive denominator, 0 represented as 0/1.
using Rational = mpq_class;

inline Rational make_rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q", or "-p/q".
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw ConfigError("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw ConfigError("rational with zero denominator: " + s);
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// r^e for any integer e; throws on 0^negative.
inline Rational rat_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw SingularBinding("0 raised to a negative power");
        return Rational(0);
    }
    Rational out;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), ae);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), ae);
    if (e < 0) {
        mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    }
    return out;
}

} // namespace qan
