#include "qan/pochhammer.hpp"

#include <algorithm>
#include <vector>

#include "qan/errors.hpp"

namespace qan {

namespace {

// In-place multiply of a dense coefficient block [lo, lo+c.size()) by the
// binomial (1 - u q^E), optionally dropping everything above `cap`.
void mul_binomial(std::vector<Rational>& c, long& lo, const Rational& u, long E, long cap) {
    if (c.empty()) return;
    long new_lo = lo + std::min(E, 0L);
    long new_hi = lo + static_cast<long>(c.size()) - 1 + std::max(E, 0L);
    if (new_hi > cap) new_hi = cap;
    if (new_hi < new_lo) {
        c.clear();
        lo = 0;
        return;
    }
    std::vector<Rational> out(static_cast<size_t>(new_hi - new_lo + 1), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long e = lo + static_cast<long>(i);
        if (e <= new_hi) out[static_cast<size_t>(e - new_lo)] += c[i];
        long es = e + E;
        if (es <= new_hi) out[static_cast<size_t>(es - new_lo)] -= u * c[i];
    }
    c = std::move(out);
    lo = new_lo;
}

} // namespace

Series qpoch_finite(const QMonomial& z, long k, int step) {
    if (k < 0) throw Error("qpoch_finite needs k >= 0");
    if (k == 0 || z.is_zero()) return Series::one();
    std::vector<Rational> c{Rational(1)};
    long lo = 0;
    for (long j = 0; j < k; ++j) {
        long E = z.e + step * j;
        if (E == 0 && z.c == 1) return Series::zero(); // exact zero factor
        mul_binomial(c, lo, z.c, E, Series::kExactHor);
    }
    return Series::from_coeffs(lo, std::move(c));
}

Series qpoch_infinite(const QMonomial& z, long order, int step) {
    if (step <= 0) throw Error("qpoch_infinite needs step >= 1");
    if (z.is_zero()) return Series::one().truncated(order);
    std::vector<long> exps;
    for (long j = 0;; ++j) {
        long E = z.e + step * j;
        if (E > order) break;
        if (E == 0 && z.c == 1) throw SingularFactor("infinite product has a zero factor");
        exps.push_back(E);
    }
    // Factors with negative exponents shift coefficients downward, so while
    // any of them are still pending the cap has to sit above `order` by the
    // total remaining downward shift.
    long pending_neg = 0;
    for (long E : exps) pending_neg += std::max(0L, -E);
    std::vector<Rational> c{Rational(1)};
    long lo = 0;
    for (long E : exps) {
        pending_neg -= std::max(0L, -E);
        mul_binomial(c, lo, z.c, E, order + pending_neg);
    }
    return Series::from_coeffs(lo, std::move(c), order);
}

} // namespace qan
