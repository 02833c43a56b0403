#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "qan/kernel.hpp"
#include "qan/multiindex.hpp"
#include "qan/testfn.hpp"

using namespace qan;

namespace {

// Independent recursive enumerators used as oracles for the iterative walks.
void box_rec(const MultiIndex& N, size_t pos, MultiIndex& cur,
             std::vector<MultiIndex>& out) {
    if (pos == N.size()) {
        out.push_back(cur);
        return;
    }
    for (long v = 0; v <= N[pos]; ++v) {
        cur[pos] = v;
        box_rec(N, pos + 1, cur, out);
    }
}

void shell_rec(int rank, long rem, size_t pos, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
    if (pos + 1 == static_cast<size_t>(rank)) {
        cur[pos] = rem;
        out.push_back(cur);
        return;
    }
    for (long v = rem; v >= 0; --v) {
        cur[pos] = v;
        shell_rec(rank, rem - v, pos + 1, cur, out);
    }
}

} // namespace

TEST_CASE("box walk visits every point exactly once, in oracle order") {
    MultiIndex N{2, 1, 3};
    std::vector<MultiIndex> walked;
    for_each_box(N, [&](const MultiIndex& k) { walked.push_back(k); });

    std::vector<MultiIndex> oracle;
    MultiIndex cur(N.size(), 0);
    box_rec(N, 0, cur, oracle);
    CHECK(walked.size() == 24);
    CHECK(walked == oracle);

    // Degenerate boxes.
    std::vector<MultiIndex> single;
    for_each_box(MultiIndex{0, 0}, [&](const MultiIndex& k) { single.push_back(k); });
    CHECK(single == std::vector<MultiIndex>{{0, 0}});
}

TEST_CASE("shell walk enumerates each composition once") {
    for (int rank : {1, 2, 3, 4}) {
        for (long t : {0L, 1L, 4L}) {
            std::vector<MultiIndex> walked;
            for_each_shell(rank, t, [&](const MultiIndex& k) { walked.push_back(k); });

            std::vector<MultiIndex> oracle;
            MultiIndex cur(static_cast<size_t>(rank), 0);
            shell_rec(rank, t, 0, cur, oracle);

            CHECK(walked.size() == oracle.size());
            CHECK(std::set<MultiIndex>(walked.begin(), walked.end()) ==
                  std::set<MultiIndex>(oracle.begin(), oracle.end()));
            for (const auto& k : walked) CHECK(total(k) == t);
        }
    }
}

TEST_CASE("elementary symmetric helper") {
    MultiIndex k{3, 1, 4};
    CHECK(total(k) == 8);
    // e2 = sum over pairs = 3*1 + 3*4 + 1*4.
    CHECK(e2(k) == 19);
    long t = total(k), sq = 9 + 1 + 16;
    CHECK(e2(k) == (t * t - sq) / 2);
    CHECK(e2(MultiIndex{5}) == 0);
}

TEST_CASE("A_n factor against a direct rational computation") {
    RationalBackend bk(make_rat(1, 3));
    BindingSpec spec;
    spec.n = 3;
    spec.x = {ScalarSpec::rat(Rational(2)), ScalarSpec::rat(make_rat(3, 7)),
              ScalarSpec::rat(Rational(5))};
    auto rb = realize(bk, spec);

    auto direct = [&](const MultiIndex& k) {
        Rational q = make_rat(1, 3);
        Rational xs[] = {Rational(2), make_rat(3, 7), Rational(5)};
        Rational acc(1);
        for (int r = 0; r < 3; ++r) {
            for (int s = r + 1; s < 3; ++s) {
                Rational ratio = xs[r] / xs[s];
                acc *= (1 - rat_pow(q, k[static_cast<size_t>(r)] -
                                           k[static_cast<size_t>(s)]) * ratio) /
                       (1 - ratio);
            }
        }
        return acc;
    };

    for (const MultiIndex& k : {MultiIndex{0, 0, 0}, MultiIndex{1, 0, 0},
                                MultiIndex{2, 3, 1}, MultiIndex{0, 4, 2}}) {
        CHECK(an_factor(bk, rb, k) == direct(k));
    }
    CHECK(an_factor(bk, rb, MultiIndex{0, 0, 0}) == 1);
}

TEST_CASE("A_n factor is invariant under common rescaling of x") {
    RationalBackend bk(make_rat(1, 5));
    MultiIndex k{2, 0, 1};
    Rational base[] = {make_rat(1, 2), make_rat(2, 3), Rational(3)};
    BindingSpec a, b;
    a.n = b.n = 3;
    for (const Rational& r : base) {
        a.x.push_back(ScalarSpec::rat(r));
        b.x.push_back(ScalarSpec::rat(r * make_rat(7, 11)));
    }
    auto ra = realize(bk, a), rbd = realize(bk, b);
    CHECK(an_factor(bk, ra, k) == an_factor(bk, rbd, k));
}

TEST_CASE("A_n factor in the exact backend matches rational substitution") {
    ExactContext ctx;
    ctx.order = 25;
    ExactBackend eb(ctx);
    RationalBackend rq(make_rat(1, 7));

    BindingSpec spec;
    spec.n = 2;
    spec.x = {ScalarSpec::rat(make_rat(2, 5)), ScalarSpec::rat(make_rat(1, 3))};
    auto re = realize(eb, spec);
    auto rr = realize(rq, spec);

    for (const MultiIndex& k : {MultiIndex{0, 0}, MultiIndex{3, 1}, MultiIndex{0, 2}}) {
        Series s = an_factor(eb, re, k);
        CHECK(s.eval_at(make_rat(1, 7)) == an_factor(rq, rr, k));
    }
}

TEST_CASE("pochhammer blocks") {
    RationalBackend bk(make_rat(1, 2));
    // Zero lengths give the empty product.
    auto one = poch_block(bk, 2, MultiIndex{0, 0},
                          [&](int, int) { return make_rat(1, 3); });
    CHECK(one == 1);

    // n=2 oracle written out longhand: prod_r prod_s (z_{rs}; q)_{L_r}.
    MultiIndex len{1, 2};
    Rational z[2][2] = {{make_rat(1, 3), make_rat(1, 5)},
                        {make_rat(2, 3), make_rat(3, 4)}};
    auto got = poch_block(bk, 2, len,
                          [&](int r, int s) { return z[r - 1][s - 1]; });
    Rational q = make_rat(1, 2);
    Rational want = (1 - make_rat(1, 3)) * (1 - make_rat(1, 5)) *
                    (1 - make_rat(2, 3)) * (1 - make_rat(2, 3) * q) *
                    (1 - make_rat(3, 4)) * (1 - make_rat(3, 4) * q);
    CHECK(got == want);

    auto inv = poch_block_inv(bk, 2, len,
                              [&](int r, int s) { return z[r - 1][s - 1]; });
    CHECK(got * inv == 1);

    // A unit argument makes the block vanish (and its inverse throw).
    ExactContext ctx;
    ExactBackend eb(ctx);
    auto zero = poch_block(eb, 1, MultiIndex{2}, [&](int, int) { return eb.srat(Rational(1)); });
    CHECK(zero.is_zero_on_window());
}

TEST_CASE("box sums and shell sums") {
    RationalBackend bk(make_rat(1, 2));
    auto count = sum_box(bk, MultiIndex{2, 1}, [&](const MultiIndex&) { return Rational(1); });
    CHECK(count == 6);

    // Geometric series, numeric: sum q^k = 1/(1-q).
    NumericContext nctx;
    nctx.q = make_rat(1, 5);
    NumericBackend nb(nctx);
    auto geo = sum_shells(nb, 1, [&](const MultiIndex& k) {
        return nb.from_scalar(nb.qpow(k[0]));
    });
    BigReal want = nb.inv(nb.one_minus(nb.qpow(1)));
    CHECK((geo.value - want).abs_double() < 1e-38);
    CHECK(geo.shells > 10);
    CHECK(geo.last_mags.size() == 3);

    // Same sum, exact backend: equals the series inverse of (1 - q).
    ExactContext ectx;
    ectx.order = 10;
    ExactBackend eb(ectx);
    auto egeo = sum_shells(eb, 1, [&](const MultiIndex& k) {
        return eb.from_scalar(eb.qpow(k[0]));
    });
    auto cmp = compare(egeo.value, Series::one_minus(qm_qpow(1)).inverse(10), 10);
    CHECK(cmp.verdict == SeriesCompare::Verdict::Equal);

    // Rank-2 numeric: sum over k of q^{k1+2 k2} = 1/((1-q)(1-q^2)).
    auto two = sum_shells(nb, 2, [&](const MultiIndex& k) {
        return nb.from_scalar(nb.qpow(k[0] + 2 * k[1]));
    });
    BigReal want2 = nb.inv(nb.mul(nb.one_minus(nb.qpow(1)), nb.one_minus(nb.qpow(2))));
    CHECK((two.value - want2).abs_double() < 1e-38);

    // A sum that never settles trips the cap.
    NumericContext cctx;
    cctx.q = make_rat(1, 5);
    cctx.shell_cap = 25;
    NumericBackend cb(cctx);
    CHECK_THROWS_AS(sum_shells(cb, 1, [&](const MultiIndex&) { return cb.one(); }),
                    NoConvergence);
}

TEST_CASE("terminating diagonal factors cut boxes off exactly") {
    // (q^{1-N}; q)_k vanishes exactly for k >= N in the exact backend.
    ExactContext ctx;
    ExactBackend eb(ctx);
    long N = 2;
    CHECK(!eb.qpoch(eb.qpow(1 - N), 1).is_zero_on_window());
    CHECK(eb.qpoch(eb.qpow(1 - N), 2).is_zero_on_window());
    CHECK(eb.qpoch(eb.qpow(1 - N), 5).is_zero_on_window());

    // Numerically the residue is only rounding noise.
    NumericContext nctx;
    nctx.q = make_rat(1, 5);
    NumericBackend nb(nctx);
    CHECK(nb.qpoch(nb.qpow(1 - N), 3).abs_double() < 1e-70);
}

TEST_CASE("realized bindings expose parameters and reject missing names") {
    RationalBackend bk(make_rat(1, 2));
    BindingSpec spec;
    spec.n = 2;
    spec.x = {ScalarSpec::rat(Rational(2)), ScalarSpec::rat(Rational(3))};
    spec.scalars["a"] = ScalarSpec::rat(make_rat(1, 4), 2);
    spec.lists["u"] = {ScalarSpec::rat(Rational(1)), ScalarSpec::rat(Rational(2))};
    spec.naturals["N"] = 4;
    spec.multiindices["M"] = MultiIndex{1, 2};

    auto rb = realize(bk, spec);
    CHECK(rb.xr(1) == 2);
    CHECK(rb.ratio(bk, 1, 2) == make_rat(2, 3));
    CHECK(rb.sc(bk, "a") == make_rat(1, 4) * make_rat(1, 4)); // coef * q^2 at q=1/2
    CHECK(rb.list(bk, "u").size() == 2);
    CHECK(rb.nat("N") == 4);
    CHECK(rb.mi("M") == MultiIndex{1, 2});
    CHECK_THROWS_AS(rb.sc(bk, "zz"), ConfigError);
    CHECK_THROWS_AS(rb.nat("zz"), ConfigError);
}

TEST_CASE("test functions evaluate in both shapes") {
    RationalBackend bk(make_rat(1, 2));
    Rational q = make_rat(1, 2);

    TestFnSpec lin;
    lin.kind = TestFnSpec::Kind::Linear;
    lin.factors = {ScalarSpec::rat(Rational(2)), ScalarSpec::rat(make_rat(1, 3))};
    // f(y) = (1-2y)(1-y/3) at y = 1/4.
    Rational y = make_rat(1, 4);
    CHECK(eval_f1(bk, lin, bk.srat(y)) == (1 - 2 * y) * (1 - y / 3));

    // Multivariate linear: factors act on y1*y2, coordinate factor on each y_r.
    lin.coord_factor = ScalarSpec::rat(make_rat(1, 5));
    BindingSpec spec;
    spec.n = 2;
    spec.x = {ScalarSpec::rat(Rational(2)), ScalarSpec::rat(Rational(3))};
    auto rb = realize(bk, spec);
    Rational y1 = make_rat(1, 3), y2 = make_rat(1, 7);
    auto got = eval_fn(bk, rb, lin, {bk.srat(y1), bk.srat(y2)});
    Rational p = y1 * y2;
    Rational want = (1 - 2 * p) * (1 - p / 3) * (1 - y1 / 5) * (1 - y2 / 5);
    CHECK(got == want);

    // K evaluates linear factors at one product argument.
    auto kv = eval_K(bk, lin, bk.srat(p));
    CHECK(kv == (1 - 2 * p) * (1 - p / 3));
}
