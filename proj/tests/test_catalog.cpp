#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "qan/backends.hpp"
#include "qan/catalog.hpp"
#include "qan/entry_util.hpp"
#include "qan/verify.hpp"

using namespace qan;

namespace {

const EntryDef& entry(const std::string& id) {
    const EntryDef* e = catalog().find(id);
    REQUIRE_MESSAGE(e != nullptr, "missing catalog entry ", id);
    return *e;
}

VerificationReport run(const std::string& id, Mode mode, int rank, std::uint64_t seed,
                       long trial = 0) {
    VerifyOptions opt;
    opt.mode = mode;
    opt.rank = rank;
    opt.seed = seed;
    opt.trial = trial;
    return verify_one(entry(id), opt);
}

void expect_pass(const std::string& id, Mode mode, int rank, std::uint64_t seed) {
    auto rep = run(id, mode, rank, seed);
    CHECK_MESSAGE(rep.passed(), id, " rank ", rank, " seed ", seed, " mode ", rep.mode,
                  " verdict ", rep.verdict, " evidence ", rep.evidence);
}

// evaluate both sides of an entry on a fixed binding with the exact backend
std::pair<Series, Series> exact_sides(const std::string& id, const BindingSpec& spec, long order) {
    ExactContext ctx;
    ctx.order = order;
    ExactBackend bk(ctx);
    const EntryDef& e = entry(id);
    return {e.e_lhs(bk, spec), e.e_rhs(bk, spec)};
}

TestFnSpec fixed_linear(std::vector<Rational> us) {
    TestFnSpec f;
    f.kind = TestFnSpec::Kind::Linear;
    for (auto& u : us) f.factors.push_back(ScalarSpec::rat(u));
    return f;
}

} // namespace

TEST_CASE("catalog exposes the expansion family with expected metadata") {
    std::vector<std::string> ids{"liu-expansion", "master-an", "master-n1", "beta-delta",
                                 "br-expansion", "ext-1", "ext-2", "ext-3",
                                 "ext-4", "ext-5", "ext-6"};
    for (const auto& id : ids) {
        const EntryDef& e = entry(id);
        CHECK(e.exact);
        CHECK(e.numeric);
        CHECK_FALSE(e.rational);
        CHECK(e.supports_rank(1));
    }
    CHECK(entry("master-an").supports_rank(2));
    CHECK_FALSE(entry("master-n1").supports_rank(2));
    CHECK(entry("beta-delta").supports_rank(3));
    CHECK(entry("ext-4").reduces_to == "liu-expansion");
    CHECK(entry("master-an").reduces_to == "master-n1");
}

TEST_CASE("liu-expansion verifies in both domains") {
    for (std::uint64_t seed : {1, 2, 3, 4}) expect_pass("liu-expansion", Mode::Exact, 1, seed);
    for (std::uint64_t seed : {1, 2}) expect_pass("liu-expansion", Mode::Numeric, 1, seed);
}

TEST_CASE("master-an verifies at ranks 1 and 2") {
    for (std::uint64_t seed : {1, 2, 3}) expect_pass("master-an", Mode::Exact, 1, seed);
    for (std::uint64_t seed : {1, 2, 3}) expect_pass("master-an", Mode::Exact, 2, seed);
    expect_pass("master-an", Mode::Numeric, 2, 7);
}

TEST_CASE("master-n1 verifies") {
    for (std::uint64_t seed : {1, 2, 3}) expect_pass("master-n1", Mode::Exact, 1, seed);
    expect_pass("master-n1", Mode::Numeric, 1, 5);
}

TEST_CASE("beta-delta verifies up to rank 3") {
    for (std::uint64_t seed : {1, 2}) expect_pass("beta-delta", Mode::Exact, 1, seed);
    for (std::uint64_t seed : {1, 2}) expect_pass("beta-delta", Mode::Exact, 2, seed);
    expect_pass("beta-delta", Mode::Exact, 3, 1);
    expect_pass("beta-delta", Mode::Numeric, 2, 3);
}

TEST_CASE("br-expansion verifies at ranks 1 and 2") {
    for (std::uint64_t seed : {1, 2, 3}) expect_pass("br-expansion", Mode::Exact, 1, seed);
    for (std::uint64_t seed : {1, 2, 3}) expect_pass("br-expansion", Mode::Exact, 2, seed);
    expect_pass("br-expansion", Mode::Numeric, 2, 2);
}

TEST_CASE("all six extensions verify at ranks 1 and 2") {
    for (int v = 1; v <= 6; ++v) {
        std::string id = "ext-" + std::to_string(v);
        for (std::uint64_t seed : {1, 2}) expect_pass(id, Mode::Exact, 1, seed);
        for (std::uint64_t seed : {1, 2}) expect_pass(id, Mode::Exact, 2, seed);
        expect_pass(id, Mode::Numeric, 2, 3);
    }
}

TEST_CASE("rank-1 extensions coincide with the one-variable expansion") {
    // with x_1 = 1 each extension collapses, side by side, onto liu-expansion
    TestFnSpec f = fixed_linear({make_rat(3, 4), make_rat(-2, 5)});
    BindingSpec base;
    base.n = 1;
    base.x = {ScalarSpec::rat(Rational(1))};
    base.scalars["alpha"] = ScalarSpec::rat(make_rat(2, 3));
    base.scalars["b"] = ScalarSpec::rat(make_rat(-1, 2), 1);
    base.lists["a"] = {ScalarSpec::qpow(2)};

    BindingSpec liu = base;
    liu.scalars["a"] = ScalarSpec::qpow(2);
    liu.f1 = f;
    auto [liuL, liuR] = exact_sides("liu-expansion", liu, 40);
    REQUIRE(compare(liuL, liuR, 20).verdict == SeriesCompare::Verdict::Equal);

    for (int v = 1; v <= 6; ++v) {
        BindingSpec be = base;
        if (v % 2 == 0) be.fn = f;
        else be.f1 = f;
        auto [L, R] = exact_sides("ext-" + std::to_string(v), be, 40);
        CHECK_MESSAGE(compare(L, liuL, 20).verdict == SeriesCompare::Verdict::Equal,
                      "ext-", v, " lhs does not reduce");
        CHECK_MESSAGE(compare(R, liuR, 20).verdict == SeriesCompare::Verdict::Equal,
                      "ext-", v, " rhs does not reduce");
    }
}

TEST_CASE("rank-1 master coincides with the standalone rank-1 statement") {
    BetaSpec beta;
    beta.support.emplace_back(MultiIndex{0}, make_rat(1, 2));
    beta.support.emplace_back(MultiIndex{1}, make_rat(-2, 3));
    beta.support.emplace_back(MultiIndex{2}, Rational(3));
    TestFnSpec K = fixed_linear({make_rat(1, 2)});

    BindingSpec bm;
    bm.n = 1;
    bm.x = {ScalarSpec::rat(Rational(1))};
    bm.scalars["a"] = ScalarSpec::rat(make_rat(2, 5));
    bm.scalars["b"] = ScalarSpec::rat(make_rat(-3, 4), 1);
    bm.multiindices["N"] = {2};
    bm.K = K;
    bm.beta = beta;

    BindingSpec b1 = bm;
    b1.multiindices.clear();
    b1.naturals["N"] = 2;

    auto [mL, mR] = exact_sides("master-an", bm, 40);
    auto [sL, sR] = exact_sides("master-n1", b1, 40);
    CHECK(compare(mL, sL, 20).verdict == SeriesCompare::Verdict::Equal);
    CHECK(compare(mR, sR, 20).verdict == SeriesCompare::Verdict::Equal);
    CHECK(compare(mL, mR, 20).verdict == SeriesCompare::Verdict::Equal);

    // the per-coordinate variant collapses onto the same statement at rank 1
    auto [bL, bR] = exact_sides("br-expansion", bm, 40);
    CHECK(compare(bL, sL, 20).verdict == SeriesCompare::Verdict::Equal);
    CHECK(compare(bR, sR, 20).verdict == SeriesCompare::Verdict::Equal);
}

TEST_CASE("master with a point-mass beta collapses onto beta-delta termwise") {
    BindingSpec bs;
    bs.n = 2;
    bs.x = {ScalarSpec::rat(Rational(2)), ScalarSpec::rat(make_rat(1, 3))};
    bs.scalars["a"] = ScalarSpec::rat(make_rat(3, 7));
    bs.scalars["b"] = ScalarSpec::rat(make_rat(5, 9));
    bs.multiindices["N"] = {2, 1};
    bs.K = fixed_linear({make_rat(-1, 2), make_rat(1, 3)});
    BetaSpec delta;
    delta.support.emplace_back(MultiIndex{0, 0}, Rational(1));
    bs.beta = delta;

    auto [mL, mR] = exact_sides("master-an", bs, 40);
    auto [dL, dR] = exact_sides("beta-delta", bs, 40);
    CHECK(compare(mL, dL, 20).verdict == SeriesCompare::Verdict::Equal);
    CHECK(compare(mR, dR, 20).verdict == SeriesCompare::Verdict::Equal);
    CHECK(compare(dL, dR, 20).verdict == SeriesCompare::Verdict::Equal);
}

TEST_CASE("the comparison actually discriminates: a corrupted binding mismatches") {
    BindingSpec good;
    good.n = 1;
    good.x = {ScalarSpec::rat(Rational(1))};
    good.scalars["a"] = ScalarSpec::qpow(2);
    good.scalars["alpha"] = ScalarSpec::rat(make_rat(2, 3));
    good.scalars["b"] = ScalarSpec::rat(make_rat(1, 2), 1);
    good.f1 = fixed_linear({make_rat(3, 4)});

    BindingSpec bad = good;
    bad.scalars["alpha"] = ScalarSpec::rat(make_rat(3, 5));

    ExactContext ctx;
    ctx.order = 40;
    ExactBackend bk(ctx);
    const EntryDef& e = entry("liu-expansion");
    auto L = e.e_lhs(bk, good);
    auto R = e.e_rhs(bk, bad);
    auto cmp = compare(L, R, 20);
    CHECK(cmp.verdict == SeriesCompare::Verdict::Mismatch);
}

TEST_CASE("verification reports are deterministic for a fixed seed") {
    auto a = run("master-an", Mode::Exact, 2, 42);
    auto b = run("master-an", Mode::Exact, 2, 42);
    CHECK(a.binding == b.binding);
    CHECK(a.verdict == b.verdict);
    CHECK(a.evidence == b.evidence);
    CHECK(a.window == b.window);
    auto c = run("master-an", Mode::Exact, 2, 43);
    CHECK(a.binding != c.binding);
}

// ---------------------------------------------------------------------------
// product family

TEST_CASE("product entries verify in both domains") {
    for (int v = 1; v <= 6; ++v) {
        std::string id = "prod-" + std::to_string(v);
        for (std::uint64_t seed : {1, 2}) expect_pass(id, Mode::Exact, 1, seed);
        for (std::uint64_t seed : {1, 2}) expect_pass(id, Mode::Exact, 2, seed);
        expect_pass(id, Mode::Numeric, 1, 3);
        expect_pass(id, Mode::Numeric, 2, 3);
    }
    for (std::uint64_t seed : {1, 2, 3}) expect_pass("liu-product-n1", Mode::Exact, 1, seed);
    expect_pass("liu-product-n1", Mode::Numeric, 1, 1);
    for (std::uint64_t seed : {1, 2}) {
        expect_pass("an-rogers-6phi5", Mode::Exact, 1, seed);
        expect_pass("an-rogers-6phi5", Mode::Exact, 2, seed);
        expect_pass("an-rogers-6phi5", Mode::Numeric, 2, seed);
    }
    expect_pass("an-rogers-6phi5", Mode::Numeric, 1, 9);
    for (std::uint64_t seed : {1, 2, 3}) expect_pass("rogers-6phi5-n1", Mode::Exact, 1, seed);
    expect_pass("rogers-6phi5-n1", Mode::Numeric, 1, 4);
}

TEST_CASE("rank-1 product entries coincide with the shared rank-1 expansion") {
    BindingSpec base;
    base.n = 1;
    base.x = {ScalarSpec::rat(Rational(1))};
    base.lists["a"] = {ScalarSpec::qpow(2)};
    base.scalars["alpha"] = ScalarSpec::rat(make_rat(2, 3), 1);
    base.scalars["b"] = ScalarSpec::rat(make_rat(1, 2));
    base.scalars["c"] = ScalarSpec::rat(make_rat(1, 3));
    base.scalars["d"] = ScalarSpec::rat(make_rat(-2, 5));
    base.scalars["beta"] = ScalarSpec::rat(make_rat(3, 7));
    base.scalars["gamma"] = ScalarSpec::rat(make_rat(-1, 4));

    BindingSpec ref = base;
    ref.scalars["a"] = ScalarSpec::qpow(2);
    auto [refL, refR] = exact_sides("liu-product-n1", ref, 40);
    REQUIRE(compare(refL, refR, 20).verdict == SeriesCompare::Verdict::Equal);

    for (int v = 1; v <= 6; ++v) {
        auto [L, R] = exact_sides("prod-" + std::to_string(v), base, 40);
        CHECK_MESSAGE(compare(L, refL, 20).verdict == SeriesCompare::Verdict::Equal,
                      "prod-", v, " lhs does not reduce");
        CHECK_MESSAGE(compare(R, refR, 20).verdict == SeriesCompare::Verdict::Equal,
                      "prod-", v, " rhs does not reduce");
    }

    BindingSpec r65 = base;
    r65.scalars["a"] = ScalarSpec::qpow(2);
    auto [pL, pR] = exact_sides("an-rogers-6phi5", base, 40);
    auto [sR, sP] = exact_sides("rogers-6phi5-n1", r65, 40);
    CHECK(compare(pL, sP, 20).verdict == SeriesCompare::Verdict::Equal);
    CHECK(compare(pR, sR, 20).verdict == SeriesCompare::Verdict::Equal);
}

TEST_CASE("each product entry is its parent extension at a ratio test function") {
    // pairs (extension, product); the leftover ratio of infinite products is
    // (alpha c, alpha d)inf / (alpha beta, alpha gamma)inf, coordinate-wise
    // for the multivariate extensions.
    const int pair_ext[6] = {1, 3, 5, 2, 4, 6};
    Rational cc = make_rat(1, 3), dd = make_rat(-2, 5), bb = make_rat(3, 7), gg = make_rat(-1, 4);

    BindingSpec prod;
    prod.n = 2;
    prod.x = {ScalarSpec::rat(Rational(2)), ScalarSpec::rat(make_rat(1, 3))};
    prod.lists["a"] = {ScalarSpec::qpow(1), ScalarSpec::qpow(2)};
    prod.scalars["alpha"] = ScalarSpec::rat(make_rat(2, 3), 1);
    prod.scalars["b"] = ScalarSpec::rat(make_rat(1, 2));
    prod.scalars["c"] = ScalarSpec::rat(cc);
    prod.scalars["d"] = ScalarSpec::rat(dd);
    prod.scalars["beta"] = ScalarSpec::rat(bb);
    prod.scalars["gamma"] = ScalarSpec::rat(gg);

    TestFnSpec ratio;
    ratio.kind = TestFnSpec::Kind::Ratio;
    ratio.c = ScalarSpec::rat(cc);
    ratio.d = ScalarSpec::rat(dd);
    ratio.beta = ScalarSpec::rat(bb);
    ratio.gamma = ScalarSpec::rat(gg);

    ExactContext ctx;
    ctx.order = 40;
    ExactBackend bk(ctx);
    auto rb = realize(bk, prod);

    for (int pv = 1; pv <= 6; ++pv) {
        int ev = pair_ext[pv - 1];
        BindingSpec ext = prod;
        if (ev % 2 == 0) ext.fn = ratio;
        else ext.f1 = ratio;

        auto alpha = rb.sc(bk, "alpha");
        Series scale;
        if (pv <= 3) {
            scale = bk.mul(
                poch_inf_list(bk, {bk.smul(alpha, bk.from_spec(prod.scalars.at("c"))),
                                   bk.smul(alpha, bk.from_spec(prod.scalars.at("d")))}),
                poch_inf_list(bk, {bk.smul(alpha, bk.from_spec(prod.scalars.at("beta"))),
                                   bk.smul(alpha, bk.from_spec(prod.scalars.at("gamma")))},
                              true));
        } else {
            scale = bk.one();
            for (int r = 1; r <= prod.n; ++r) {
                auto ax = bk.smul(alpha, rb.xr(r));
                scale = bk.mul(scale,
                               poch_inf_list(bk, {bk.smul(ax, bk.from_spec(prod.scalars.at("c"))),
                                                  bk.smul(ax, bk.from_spec(prod.scalars.at("d")))}));
                scale = bk.mul(
                    scale,
                    poch_inf_list(bk, {bk.smul(ax, bk.from_spec(prod.scalars.at("beta"))),
                                       bk.smul(ax, bk.from_spec(prod.scalars.at("gamma")))},
                                  true));
            }
        }

        const EntryDef& pe = entry("prod-" + std::to_string(pv));
        const EntryDef& ee = entry("ext-" + std::to_string(ev));
        auto pL = pe.e_lhs(bk, prod);
        auto pR = pe.e_rhs(bk, prod);
        auto eL = ee.e_lhs(bk, ext);
        auto eR = ee.e_rhs(bk, ext);
        CHECK_MESSAGE(compare(bk.mul(pL, scale), eL, 20).verdict == SeriesCompare::Verdict::Equal,
                      "prod-", pv, " lhs is not ext-", ev, " at the ratio f");
        CHECK_MESSAGE(compare(bk.mul(pR, scale), eR, 20).verdict == SeriesCompare::Verdict::Equal,
                      "prod-", pv, " rhs is not ext-", ev, " at the ratio f");
    }
}

TEST_CASE("Euler-product power entries verify in both domains") {
    for (const char* id : {"qinf3-a", "qinf3-b", "invqinf2-a", "invqinf2-b", "qinfm-a", "qinfm-b",
                           "invqinfm-a", "invqinfm-b", "qinfm-general", "piq-base"}) {
        for (std::uint64_t seed : {1, 2}) {
            expect_pass(id, Mode::Exact, 1, seed);
            expect_pass(id, Mode::Exact, 2, seed);
        }
        expect_pass(id, Mode::Numeric, 1, 3);
        expect_pass(id, Mode::Numeric, 2, 3);
    }
}

TEST_CASE("cube and inverse-square expansions coincide with the power family at m = 2") {
    for (int n : {1, 2}) {
        BindingSpec spec;
        spec.n = n;
        spec.x = {ScalarSpec::rat(make_rat(3, 2))};
        if (n == 2) spec.x.push_back(ScalarSpec::rat(make_rat(2, 3)));
        spec.naturals["m"] = 2;
        long order = n == 1 ? 31 : 22;
        long floor = order - 2;
        for (auto [lit, par] : {std::pair<const char*, const char*>{"qinf3-a", "qinfm-a"},
                                {"qinf3-b", "qinfm-b"},
                                {"invqinf2-a", "invqinfm-a"},
                                {"invqinf2-b", "invqinfm-b"}}) {
            auto [Ll, Rl] = exact_sides(lit, spec, order);
            auto [Lp, Rp] = exact_sides(par, spec, order);
            CHECK_MESSAGE(compare(Rl, Rp, floor).verdict == SeriesCompare::Verdict::Equal, lit,
                          " sum differs from ", par, " at m=2, n=", n);
            CHECK_MESSAGE(compare(Ll, Lp, floor).verdict == SeriesCompare::Verdict::Equal, lit,
                          " product side differs from ", par, " at m=2, n=", n);
        }
    }
}

TEST_CASE("general power-family parent holds at its vanishing corners") {
    BindingSpec spec;
    spec.n = 2;
    spec.x = {ScalarSpec::rat(make_rat(3, 2)), ScalarSpec::rat(make_rat(2, 3))};
    spec.naturals["m"] = 1;
    spec.scalars["alpha"] = ScalarSpec::rat(make_rat(2, 3), 1);
    spec.scalars["b"] = ScalarSpec::rat(Rational(0));
    spec.lists["bs"] = {ScalarSpec::rat(Rational(0))};
    spec.lists["cs"] = {ScalarSpec::rat(make_rat(1, 2))};
    auto [L1, R1] = exact_sides("qinfm-general", spec, 20);
    CHECK(compare(L1, R1, 18).verdict == SeriesCompare::Verdict::Equal);

    spec.scalars["b"] = ScalarSpec::rat(make_rat(-1, 2));
    spec.lists["bs"] = {ScalarSpec::rat(make_rat(1, 3), 1)};
    spec.lists["cs"] = {ScalarSpec::rat(Rational(0))};
    auto [L2, R2] = exact_sides("qinfm-general", spec, 20);
    CHECK(compare(L2, R2, 18).verdict == SeriesCompare::Verdict::Equal);
}

TEST_CASE("pentagonal coefficients through q^50 are the classical ones") {
    BindingSpec spec;
    spec.n = 1;
    auto [L, R] = exact_sides("pentagonal-n1", spec, 52);
    CHECK(compare(L, R, 50).verdict == SeriesCompare::Verdict::Equal);
    const std::map<long, long> want{{0, 1},  {1, -1},  {2, -1},  {5, 1},  {7, 1}, {12, -1},
                                    {15, -1}, {22, 1}, {26, 1}, {35, -1}, {40, -1}};
    for (long e = 0; e <= 50; ++e) {
        auto it = want.find(e);
        Rational expect(it == want.end() ? 0 : it->second);
        CHECK_MESSAGE(L.coeff(e) == expect, "coefficient at q^", e);
    }
    CHECK(entry("pentagonal-n1").floor == 50);
    CHECK_FALSE(entry("pentagonal-n1").supports(Mode::Numeric));
}

TEST_CASE("rank-n pentagonal expansion verifies and reduces to the classical series") {
    CHECK(entry("an-pentagonal").reduces_to == "pentagonal-n1");
    for (int r : {1, 2, 3}) {
        expect_pass("an-pentagonal", Mode::Exact, r, 1);
        expect_pass("an-pentagonal", Mode::Numeric, r, 2);
    }
    ExactContext ctx;
    ctx.order = 40;
    ExactBackend bk(ctx);
    BindingSpec spec;
    spec.n = 1;
    spec.x = {ScalarSpec::rat(Rational(1))};
    BindingSpec ref;
    ref.n = 1;
    const EntryDef& an = entry("an-pentagonal");
    const EntryDef& n1 = entry("pentagonal-n1");
    CHECK(compare(an.e_rhs(bk, spec), n1.e_rhs(bk, ref), 38).verdict ==
          SeriesCompare::Verdict::Equal);
    CHECK(compare(an.e_lhs(bk, spec), n1.e_lhs(bk, ref), 38).verdict ==
          SeriesCompare::Verdict::Equal);
}

TEST_CASE("reduced pentagonal summand matches the literal form away from x = 1") {
    BindingSpec spec;
    spec.n = 2;
    spec.x = {ScalarSpec::rat(make_rat(3, 2)), ScalarSpec::rat(make_rat(2, 3))};
    ExactContext ctx;
    ctx.order = 24;
    ExactBackend bk(ctx);
    auto rb = realize(bk, spec);
    int n = rb.n;
    auto res = sum_shells(bk, n, [&](const MultiIndex& k) {
        long K = total(k);
        auto t = bk.mul(an_factor(bk, rb, k), shifted_block(bk, rb, k, 1, nullptr, nullptr, true));
        long e = binom2(K) + wsum(k, 1);
        for (long kr : k) e += (n + 1) * binom2(kr);
        auto s = bk.qpow(e);
        if ((n * K) % 2 != 0) s = bk.sneg(s);
        for (int r = 1; r <= n; ++r) {
            s = bk.smul(s, bk.spow(rb.xr(r), (n + 1) * k[static_cast<size_t>(r - 1)] - K));
        }
        t = bk.scale(t, s);
        for (int r = 1; r <= n; ++r) {
            auto xr = rb.xr(r);
            t = bk.mul(t, bk.one_minus(bk.smul(xr, bk.qpow(k[static_cast<size_t>(r - 1)] + K))));
            t = bk.mul(t, bk.qpoch(xr, K));
            t = bk.scale(t, bk.sinv(bk.one_minus_s(xr)));
        }
        return t;
    });
    Series literal = bk.finalize_sum(res.value);
    CHECK(compare(literal, entry("an-pentagonal").e_rhs(bk, spec), 22).verdict ==
          SeriesCompare::Verdict::Equal);
}

TEST_CASE("refined pentagonal identity holds, including at alpha = 1/2") {
    for (std::uint64_t seed : {1, 2, 3}) expect_pass("sylvester-n1", Mode::Exact, 1, seed);
    expect_pass("sylvester-n1", Mode::Numeric, 1, 1);
    BindingSpec spec;
    spec.n = 1;
    spec.scalars["alpha"] = ScalarSpec::rat(make_rat(1, 2));
    VerifyOptions opt;
    opt.mode = Mode::Exact;
    opt.rank = 1;
    opt.fixed = spec;
    auto rep = verify_one(entry("sylvester-n1"), opt);
    CHECK_MESSAGE(rep.passed(), rep.verdict, " ", rep.evidence);
}

TEST_CASE("rank-n Sylvester refinement verifies and reduces") {
    CHECK(entry("an-sylvester").reduces_to == "sylvester-n1");
    for (int r : {1, 2, 3}) {
        expect_pass("an-sylvester", Mode::Exact, r, 1);
        expect_pass("an-sylvester", Mode::Numeric, r, 2);
    }
    ExactContext ctx;
    ExactBackend bk(ctx);
    BindingSpec spec;
    spec.n = 1;
    spec.x = {ScalarSpec::rat(Rational(1))};
    spec.scalars["alpha"] = ScalarSpec::rat(make_rat(1, 2));
    BindingSpec ref;
    ref.n = 1;
    ref.scalars["alpha"] = ScalarSpec::rat(make_rat(1, 2));
    CHECK(compare(entry("an-sylvester").e_rhs(bk, spec), entry("sylvester-n1").e_lhs(bk, ref),
                  18).verdict == SeriesCompare::Verdict::Equal);

    BindingSpec z;
    z.n = 2;
    z.x = {ScalarSpec::rat(make_rat(3, 2)), ScalarSpec::rat(make_rat(2, 3))};
    z.scalars["alpha"] = ScalarSpec::rat(Rational(0));
    CHECK(compare(entry("an-sylvester").e_rhs(bk, z), bk.one(), 18).verdict ==
          SeriesCompare::Verdict::Equal);
}

TEST_CASE("q-analogue-of-pi entries match the closed form numerically") {
    for (const char* id : {"piq-a", "piq-b", "inv-piq"}) {
        expect_pass(id, Mode::Numeric, 1, 1);
        expect_pass(id, Mode::Numeric, 2, 1);
        CHECK_FALSE(entry(id).supports(Mode::Exact));
        CHECK_FALSE(entry(id).supports(Mode::RationalQ));
    }
    NumericContext nctx;
    nctx.q = make_rat(1, 3);
    NumericBackend nb(nctx);
    BindingSpec spec;
    spec.n = 1;
    spec.x = {ScalarSpec::rat(Rational(1))};
    for (const char* id : {"piq-a", "piq-b", "inv-piq"}) {
        auto lhs = entry(id).n_lhs(nb, spec);
        auto rhs = entry(id).n_rhs(nb, spec);
        CHECK_MESSAGE(nb.sub(lhs, rhs).abs_double() < 1e-20, id, " at q = 1/3");
    }
}
