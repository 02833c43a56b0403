#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qan/binding.hpp"
#include "qan/rational.hpp"

namespace qan {

// Deterministic parameter sampler. The stream is a pure function of
// (seed, id, rank, trial), so any report can be replayed from its seed.
class Sampler {
public:
    Sampler(std::uint64_t seed, const std::string& id, int rank, long trial);

    std::mt19937_64& rng() { return rng_; }

    long uniform(long lo, long hi); // inclusive ends
    bool coin();

    // Nonzero rational in (-1, 1) with denominator <= max_den.
    Rational signed_unit(long max_den = 9);
    // Rational in (0, 1) with denominator <= max_den.
    Rational positive_unit(long max_den = 9);
    // Nonzero rational with numerator and denominator in [1, max_abs],
    // optionally signed.
    Rational simple_ratio(long max_abs = 7, bool allow_negative = false);

    // Pairwise-distinct coordinates x_1..x_n, each num/den <= 7 and
    // positive, so no two share a ratio of 1.
    std::vector<ScalarSpec> distinct_x(int n);

    // Substitution point for the rational domain: 1/d with d prime and
    // large enough that no x-ratio can collide with a power of q.
    Rational rational_q();

    // Shrink c by halving until ok(c) holds; throws SamplingExhausted
    // after 64 halvings.
    Rational shrink_until(Rational c, const std::function<bool(const Rational&)>& ok);

private:
    std::mt19937_64 rng_;
};

} // namespace qan
