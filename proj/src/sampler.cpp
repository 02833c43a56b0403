#include "qan/sampler.hpp"

#include <functional>

#include "qan/errors.hpp"

namespace qan {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

Sampler::Sampler(std::uint64_t seed, const std::string& id, int rank, long trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(fnv1a(id)),
                      static_cast<std::uint32_t>(fnv1a(id) >> 32),
                      static_cast<std::uint32_t>(rank), static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32)};
    rng_.seed(seq);
}

long Sampler::uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

bool Sampler::coin() { return uniform(0, 1) == 1; }

Rational Sampler::signed_unit(long max_den) {
    long den = uniform(2, max_den);
    long num = uniform(1, den - 1);
    Rational r = make_rat(num, den);
    return coin() ? r : -r;
}

Rational Sampler::positive_unit(long max_den) {
    long den = uniform(2, max_den);
    long num = uniform(1, den - 1);
    return make_rat(num, den);
}

Rational Sampler::simple_ratio(long max_abs, bool allow_negative) {
    long num = uniform(1, max_abs), den = uniform(1, max_abs);
    Rational r = make_rat(num, den);
    if (allow_negative && coin()) r = -r;
    return r;
}

std::vector<ScalarSpec> Sampler::distinct_x(int n) {
    std::vector<Rational> vals;
    while (static_cast<int>(vals.size()) < n) {
        Rational c = simple_ratio(7);
        bool fresh = true;
        for (const auto& v : vals) fresh = fresh && v != c;
        if (fresh) vals.push_back(c);
    }
    std::vector<ScalarSpec> out;
    for (auto& v : vals) out.push_back(ScalarSpec::rat(v));
    return out;
}

Rational Sampler::rational_q() {
    static const long dens[] = {11, 13, 17, 19, 23};
    return make_rat(1, dens[uniform(0, 4)]);
}

Rational Sampler::shrink_until(Rational c, const std::function<bool(const Rational&)>& ok) {
    for (int i = 0; i < 64; ++i) {
        if (ok(c)) return c;
        c /= 2;
    }
    throw SamplingExhausted("could not shrink a parameter into its admissible range");
}

} // namespace qan
