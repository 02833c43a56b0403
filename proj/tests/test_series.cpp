#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qan/backends.hpp"
#include "qan/errors.hpp"
#include "qan/monomial.hpp"
#include "qan/pochhammer.hpp"
#include "qan/rational.hpp"
#include "qan/series.hpp"

using namespace qan;

TEST_CASE("rationals are canonical") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    Rational r = make_rat(-3, -9);
    CHECK(r == make_rat(1, 3));
    CHECK(r.get_den() == 3);
    CHECK(make_rat(-1, 2).get_den() == 2); // denominator stays positive
    CHECK(parse_rational("-7/21") == make_rat(-1, 3));
    CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
    CHECK(rat_pow(make_rat(-2), 3) == make_rat(-8));
    CHECK_THROWS_AS(rat_pow(Rational(0), -1), SingularBinding);
}

TEST_CASE("monomials multiply and cancel") {
    QMonomial a = qm(2, 3, 5), b = qm(3, 1, -2);
    CHECK((a * b) == qm(2, 1, 3));
    CHECK((a / a).is_one());
    QMonomial z = qm(0, 1, 7);
    CHECK(z.is_zero());
    CHECK(z.e == 0); // canonical zero
    CHECK(qm_pow(a, -1) == qm(3, 2, -5));
    CHECK_THROWS_AS(a / z, SingularBinding);
}

TEST_CASE("series windows behave soundly") {
    Series one = Series::one();
    CHECK(one.exact());
    Series b = Series::one_minus(qm(1, 1, 1)); // 1 - q
    CHECK(b.coeff(0) == 1);
    CHECK(b.coeff(1) == -1);

    // Truncated x exact-with-negative-valuation: horizon must drop.
    Series t = (Series::one() + Series::monomial(qm_qpow(1))).truncated(2); // 1+q known to q^2
    Series neg = Series::monomial(qm(1, 1, -1));                            // q^{-1}
    Series prod = t * neg;
    CHECK(prod.hor() == 1);
    CHECK(prod.coeff(-1) == 1);
    CHECK(prod.coeff(0) == 1);

    // Addition takes the weaker horizon.
    CHECK((t + one).hor() == 2);
    CHECK((one - one).is_zero_on_window());
}

TEST_CASE("series inverse against multiply-back") {
    // (q - q^2)^{-1} with two coefficients past the valuation: q^{-1} + 1 + q.
    Series a = Series::monomial(qm_qpow(1)) - Series::monomial(qm_qpow(2));
    Series inv = a.inverse(2);
    CHECK(inv.lo() == -1);
    CHECK(inv.hor() == 1);
    CHECK(inv.coeff(-1) == 1);
    CHECK(inv.coeff(0) == 1);
    CHECK(inv.coeff(1) == 1);
    Series back = a * inv;
    auto cmp = compare(back, Series::one(), back.hor());
    CHECK(cmp.verdict == SeriesCompare::Verdict::Equal);

    CHECK_THROWS_AS(Series::zero().inverse(5), ZeroSeries);

    // Random-ish polynomial: inverse then multiply back equals 1 on window.
    Series p = Series::one() + Series::monomial(qm(3, 2, 1)) - Series::monomial(qm(1, 7, 3));
    Series pi = p.inverse(24);
    auto cmp2 = compare(p * pi, Series::one(), 24);
    CHECK(cmp2.verdict == SeriesCompare::Verdict::Equal);
}

TEST_CASE("series comparison pinpoints mismatches") {
    Series a = Series::one() + Series::monomial(qm(1, 2, 3));
    Series b = Series::one() + Series::monomial(qm(1, 3, 3));
    auto cmp = compare(a, b, 3);
    REQUIRE(cmp.verdict == SeriesCompare::Verdict::Mismatch);
    CHECK(cmp.mismatch->exponent == 3);
    CHECK(cmp.mismatch->lhs == make_rat(1, 2));
    CHECK(cmp.mismatch->rhs == make_rat(1, 3));

    auto insuff = compare(a.truncated(5), b, 10);
    CHECK(insuff.verdict == SeriesCompare::Verdict::InsufficientWindow);
}

TEST_CASE("finite q-Pochhammer expands exactly") {
    // (q;q)_3 = 1 - q - q^2 + q^4 + q^5 - q^6, multiplied out by hand.
    Series p = qpoch_finite(qm_qpow(1), 3);
    CHECK(p.exact());
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == -1);
    CHECK(p.coeff(2) == -1);
    CHECK(p.coeff(3) == 0);
    CHECK(p.coeff(4) == 1);
    CHECK(p.coeff(5) == 1);
    CHECK(p.coeff(6) == -1);

    CHECK(qpoch_finite(qm(5, 7, 2), 0).coeff(0) == 1); // empty product

    // A zero factor collapses the whole product: (1;q)_2 = 0.
    CHECK(qpoch_finite(qm(1, 1, 0), 2).is_zero_on_window());

    // Negative exponents: (2 q^{-1}; q)_2 = (1 - 2q^{-1})(1 - 2) = 2q^{-1} - 1.
    Series n = qpoch_finite(qm(2, 1, -1), 2);
    CHECK(n.coeff(-1) == 2);
    CHECK(n.coeff(0) == -1);
    CHECK(n.lo() == -1);

    // Base q^2: (q; q^2)_2 = (1-q)(1-q^3).
    Series sq = qpoch_finite(qm_qpow(1), 2, 2);
    CHECK(sq.coeff(1) == -1);
    CHECK(sq.coeff(3) == -1);
    CHECK(sq.coeff(4) == 1);
}

namespace {

// Independent pentagonal-number oracle: coefficient of q^e in (q;q)_inf.
long pentagonal_coeff(long e) {
    for (long j = 1;; ++j) {
        long a = j * (3 * j - 1) / 2, b = j * (3 * j + 1) / 2;
        if (a > e && b > e) return e == 0 ? 1 : 0;
        if (a == e || b == e) return (j % 2 == 0) ? 1 : -1;
    }
}

} // namespace

TEST_CASE("infinite q-Pochhammer matches the pentagonal expansion") {
    Series p = qpoch_infinite(qm_qpow(1), 12);
    CHECK(p.hor() == 12);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == -1);
    CHECK(p.coeff(2) == -1);
    CHECK(p.coeff(5) == 1);
    CHECK(p.coeff(7) == 1);
    CHECK(p.coeff(12) == -1);
    for (long e : {3L, 4L, 6L, 8L, 9L, 10L, 11L}) CHECK(p.coeff(e) == 0);

    Series big = qpoch_infinite(qm_qpow(1), 50);
    for (long e = 0; e <= 50; ++e) {
        CHECK(big.coeff(e) == pentagonal_coeff(e));
    }
}

TEST_CASE("partition generating function from the inverse product") {
    // 1/(q;q)_inf: partition numbers, independently listed.
    const long parts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    Series inv = qpoch_infinite(qm_qpow(1), 10).inverse(10);
    for (long e = 0; e <= 10; ++e) {
        CHECK(inv.coeff(e) == parts[e]);
    }
}

TEST_CASE("infinite products with negative-exponent arguments stay sound") {
    // (2 q^{-2}; q)_inf truncated at 5: check via multiply-back of its inverse.
    Series p = qpoch_infinite(qm(2, 1, -2), 5);
    CHECK(p.hor() == 5);
    CHECK(p.lo() == -3); // factors at q^{-2} and q^{-1} push the valuation down
    Series pi = p.inverse(8);
    auto cmp = compare(p * pi, Series::one(), 0);
    CHECK(cmp.verdict == SeriesCompare::Verdict::Equal);

    // Factor exactly zero: (q^{-3} * 1; q)_inf hits 1 - q^0.
    CHECK_THROWS_AS(qpoch_infinite(qm(1, 1, -3), 6), SingularFactor);
    CHECK_THROWS_AS(qpoch_infinite(qm(1, 1, 0), 6), SingularFactor);
}

TEST_CASE("sound window survives mixed-sign pochhammer products") {
    // Multiply several finite pochhammers with negative-exponent arguments by
    // a truncated infinite product, then check the window arithmetic against
    // a wider-order recomputation.
    ExactContext ctx;
    ctx.order = 18;
    ExactBackend bk(ctx);
    auto v = bk.mul(bk.qpoch(qm(3, 5, -2), 3), bk.qpoch_inf(qm(1, 2, 0)));
    v = bk.mul(v, bk.qpoch_inv(qm(2, 7, 0), 4));

    ExactContext wide_ctx;
    wide_ctx.order = 40;
    ExactBackend wide(wide_ctx);
    auto w = wide.mul(wide.qpoch(qm(3, 5, -2), 3), wide.qpoch_inf(qm(1, 2, 0)));
    w = wide.mul(w, wide.qpoch_inv(qm(2, 7, 0), 4));

    for (long e = v.lo(); e <= v.hor(); ++e) {
        CHECK(v.coeff(e) == w.coeff(e));
    }
}

TEST_CASE("exact substitution of a series window") {
    Series p = qpoch_finite(qm_qpow(1), 2); // (1-q)(1-q^2)
    Rational at = p.eval_at(make_rat(1, 3));
    CHECK(at == make_rat(2, 3) * make_rat(8, 9));

    Series lp = Series::monomial(qm(2, 1, -2)) + Series::one(); // 2q^{-2} + 1
    CHECK(lp.eval_at(make_rat(1, 2)) == make_rat(9));
}
