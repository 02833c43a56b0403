#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qan/backends.hpp"
#include "qan/bigreal.hpp"
#include "qan/errors.hpp"

using namespace qan;

namespace {

double diff_abs(const BigReal& a, const BigReal& b) { return (a - b).abs_double(); }

} // namespace

TEST_CASE("bigreal arithmetic and conversions") {
    BigReal a = BigReal::from_rational(make_rat(1, 3), 256);
    BigReal b = BigReal::from_long(3, 256);
    CHECK(diff_abs(a * b, BigReal::from_long(1, 256)) < 1e-70);
    CHECK((a - a).is_zero());
    CHECK(a.prec() == 256);
    CHECK((a + b).prec() == 256);

    BigReal d = BigReal::from_decimal("0.125", 128);
    CHECK(d.to_double() == 0.125);
    CHECK_THROWS_AS(BigReal::from_decimal("not-a-number", 128), ConfigError);

    BigReal two = BigReal::from_long(2, 128);
    CHECK(diff_abs(two.pow_si(-3), BigReal::from_decimal("0.125", 128)) < 1e-30);
    CHECK(diff_abs(BigReal::from_long(16, 128).root(4), two) < 1e-30);

    CHECK(BigReal::from_decimal("1e-12", 128).abs_below(1e-10));
    CHECK(!BigReal::from_decimal("-1e-8", 128).abs_below(1e-10));
    CHECK(abs_less(BigReal::from_long(-2, 64), BigReal::from_long(3, 64)));
}

TEST_CASE("infinite product at q = 1/2 hits the known constant") {
    NumericContext ctx;
    ctx.q = make_rat(1, 2);
    ctx.precision_bits = 256;
    ctx.tail_eps = 1e-70; // pull in far more factors than the default
    NumericBackend bk(ctx);

    BigReal got = bk.qpoch_inf(bk.qpow(1));

    // Independent partial product at higher precision, tail < 2^-400.
    BigReal ref = BigReal::from_long(1, 320);
    BigReal one = BigReal::from_long(1, 320);
    BigReal half = BigReal::from_rational(make_rat(1, 2), 320);
    BigReal t = half;
    for (int j = 1; j <= 400; ++j) {
        ref *= one - t;
        t *= half;
    }
    CHECK(diff_abs(got, ref) < 1e-60);

    // Frozen 40-digit reference, recomputed twice offline by different routes.
    BigReal lit = BigReal::from_decimal("0.2887880950866024212788997219292307800889", 256);
    CHECK(diff_abs(got, lit) < 1e-39);
}

TEST_CASE("numeric and exact pochhammers agree at rational q") {
    NumericContext nctx;
    nctx.q = make_rat(1, 5);
    NumericBackend nb(nctx);

    ExactContext ectx;
    ectx.order = 30;
    ExactBackend eb(ectx);

    RationalBackend rb(make_rat(1, 5));
    struct Case { QMonomial z; long k; int step; };
    for (const Case& c : {Case{qm(2, 3, 1), 4, 1}, Case{qm(-1, 2, 0), 3, 2},
                          Case{qm(1, 7, -1), 5, 1}, Case{qm(3, 4, 2), -2, 1}}) {
        // The rational backend is exact for any finite length, negative too.
        Rational exact = rb.qpoch(c.z.c * rb.qpow(c.z.e), c.k, c.step);
        BigReal zb = nb.smul(nb.srat(c.z.c), nb.qpow(c.z.e));
        BigReal nv = nb.qpoch(zb, c.k, c.step);
        CHECK(diff_abs(nv, BigReal::from_rational(exact, 256)) < 1e-60);
        if (c.k >= 0) {
            // Positive length is a Laurent polynomial: series evaluation is
            // exact as well and must agree on the nose.
            CHECK(eb.qpoch(c.z, c.k, c.step).eval_at(make_rat(1, 5)) == exact);
        }
    }

    CHECK(rb.qpoch(rb.from_spec(ScalarSpec::rat(make_rat(2, 3))), 4) ==
          eb.qpoch(qm(2, 3, 0), 4).eval_at(make_rat(1, 5)));
    CHECK_THROWS_AS(rb.qpoch_inf(rb.qpow(1)), UnsupportedMode);
}

TEST_CASE("singularity guards trip on zero factors") {
    NumericContext ctx;
    ctx.q = make_rat(1, 5);
    NumericBackend bk(ctx);

    CHECK_THROWS_AS(bk.qpoch_inf(bk.srat(Rational(25))), SingularFactor); // 1 - 25 q^2 = 0
    CHECK_THROWS_AS(bk.inv(BigReal::from_decimal("1e-11", 256)), SingularBinding);
    CHECK_THROWS_AS(bk.spow(BigReal::from_decimal("1e-11", 256), -1), SingularBinding);
    CHECK_THROWS_AS(bk.qpoch_inv(bk.srat(Rational(1)), 2), SingularBinding);

    NumericContext bad;
    bad.q = make_rat(6, 5);
    CHECK_THROWS_AS(NumericBackend{bad}, ConfigError);
    NumericContext bad2;
    bad2.q = Rational(0);
    CHECK_THROWS_AS(NumericBackend{bad2}, ConfigError);
}

TEST_CASE("pi_q matches frozen references") {
    struct Case { Rational q; const char* lit; };
    const Case cases[] = {
        {make_rat(1, 5), "0.9369333349902652336825551478912142153341"},
        {make_rat(1, 10), "0.6748552355856851099701051852292383250587"},
        {make_rat(1, 3), "1.270933638844952746239250236394589934094"},
    };
    for (const Case& c : cases) {
        NumericContext ctx;
        ctx.q = c.q;
        ctx.precision_bits = 256;
        NumericBackend bk(ctx);
        CHECK(diff_abs(bk.pi_q(), BigReal::from_decimal(c.lit, 256)) < 1e-36);
    }
}

TEST_CASE("pi_q agrees with the exact-series route") {
    // Build (q^2;q^2)_inf^2 / (q;q^2)_inf^2 as a formal series, evaluate it
    // exactly at q = 1/5, and attach the numeric prefactor (1-q^2) q^{1/4}.
    ExactContext ectx;
    ectx.order = 60;
    ExactBackend eb(ectx);
    Series ratio = eb.div(eb.mul(eb.qpoch_inf(qm_qpow(2), 2), eb.qpoch_inf(qm_qpow(2), 2)),
                          eb.mul(eb.qpoch_inf(qm_qpow(1), 2), eb.qpoch_inf(qm_qpow(1), 2)));
    Rational q = make_rat(1, 5);
    Rational pre = (1 - q * q) * ratio.eval_at(q);

    NumericContext nctx;
    nctx.q = q;
    nctx.precision_bits = 256;
    NumericBackend nb(nctx);
    BigReal expect = BigReal::from_rational(pre, 256) * nb.q_quarter_root();
    CHECK(diff_abs(nb.pi_q(), expect) < 1e-38);
}
