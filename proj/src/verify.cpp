#include "qan/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "qan/errors.hpp"
#include "qan/kernel.hpp"

namespace qan {

namespace {

std::string hex_digest(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct TraceGuard {
    explicit TraceGuard(ShellTrace* t) { g_shell_trace = t; }
    ~TraceGuard() { g_shell_trace = nullptr; }
};

std::string shells_note(const ShellTrace& l, const ShellTrace& r) {
    std::ostringstream os;
    if (l.shells || r.shells) os << " shells=" << l.shells << "/" << r.shells;
    return os.str();
}

std::string mags_note(const ShellTrace& t) {
    if (t.last_mags.empty()) return "";
    std::ostringstream os;
    os << " tail=[";
    for (size_t i = 0; i < t.last_mags.size(); ++i) {
        if (i) os << ",";
        os << t.last_mags[i];
    }
    os << "]";
    return os.str();
}

// Exact-formal check with order doubling whenever the windows come up short.
void run_exact(const EntryDef& e, const VerifyOptions& opt, const BindingSpec& spec,
               VerificationReport& rep) {
    long base = opt.order > 0 ? opt.order : e.floor;
    if (base < e.floor) base = e.floor;
    ExactContext ctx;
    int retries = ctx.max_order_retries;
    std::string zero_msg;
    for (int r = 0; r <= retries; ++r) {
        ExactContext c = ctx;
        c.order = base << r;
        ExactBackend bk(c);
        ShellTrace lt, rt;
        Series L = Series::zero(), R = Series::zero();
        try {
            {
                TraceGuard g(&lt);
                L = e.e_lhs(bk, spec);
            }
            {
                TraceGuard g(&rt);
                R = e.e_rhs(bk, spec);
            }
        } catch (const ZeroSeries& ex) {
            // Either a genuinely zero denominator or a fully eroded window;
            // more order settles the question.
            zero_msg = ex.what();
            continue;
        }
        std::ostringstream w;
        w << "q^" << std::min(L.lo(), R.lo()) << "..q^" << e.floor << " order=" << c.order;
        rep.window = w.str();
        auto cmp = compare(L, R, e.floor);
        if (cmp.verdict == SeriesCompare::Verdict::Equal) {
            rep.verdict = "pass";
            rep.evidence = "coeffs=" + hex_digest(L.truncated(e.floor).digest()) +
                           shells_note(lt, rt);
            return;
        }
        if (cmp.verdict == SeriesCompare::Verdict::Mismatch) {
            rep.verdict = "fail";
            std::ostringstream os;
            os << "first mismatch at q^" << cmp.mismatch->exponent << ": lhs="
               << to_string(cmp.mismatch->lhs) << " rhs=" << to_string(cmp.mismatch->rhs);
            rep.evidence = os.str();
            return;
        }
        // InsufficientWindow: double the order and go again.
    }
    if (!zero_msg.empty()) {
        rep.verdict = "singular";
        rep.evidence = zero_msg;
        return;
    }
    rep.verdict = "insufficient-window";
    std::ostringstream os;
    os << "window below the floor q^" << e.floor << " after " << (retries + 1)
       << " order doublings from " << base;
    rep.evidence = os.str();
}

void run_rational(const EntryDef& e, const BindingSpec& spec, VerificationReport& rep) {
    RationalBackend bk(spec.q_rational);
    ShellTrace lt, rt;
    Rational L, R;
    {
        TraceGuard g(&lt);
        L = e.r_lhs(bk, spec);
    }
    {
        TraceGuard g(&rt);
        R = e.r_rhs(bk, spec);
    }
    rep.window = "exact at q=" + to_string(spec.q_rational);
    if (L == R) {
        rep.verdict = "pass";
        rep.evidence = "value=" + hex_digest(to_string(L)) + shells_note(lt, rt);
    } else {
        rep.verdict = "fail";
        std::ostringstream os;
        os << "lhs-rhs ~= " << Rational(L - R).get_d();
        rep.evidence = os.str();
    }
}

void run_numeric(const EntryDef& e, const VerifyOptions& opt, const BindingSpec& spec,
                 VerificationReport& rep) {
    NumericContext ctx;
    ctx.q = opt.num_q;
    ctx.precision_bits = opt.precision_bits;
    ctx.tail_eps = opt.tail_eps;
    NumericBackend bk(ctx);
    ShellTrace lt, rt;
    BigReal L(ctx.precision_bits), R(ctx.precision_bits);
    {
        TraceGuard g(&lt);
        L = e.n_lhs(bk, spec);
    }
    {
        TraceGuard g(&rt);
        R = e.n_rhs(bk, spec);
    }
    double diff = (L - R).abs_double();
    double scale = std::max(1.0, L.abs_double());
    std::ostringstream tol;
    tol << "relative " << opt.verify_eps;
    rep.tolerance = tol.str();
    rep.verdict = diff <= opt.verify_eps * scale ? "pass" : "fail";
    std::ostringstream os;
    os << "|lhs-rhs|=" << diff << " |lhs|=" << L.abs_double() << shells_note(lt, rt)
       << mags_note(lt);
    rep.evidence = os.str();
}

} // namespace

VerificationReport verify_one(const EntryDef& e, const VerifyOptions& opt) {
    if (!e.supports(opt.mode)) {
        throw ConfigError("identity " + e.id + " does not support mode " +
                          to_string(opt.mode));
    }
    if (!e.supports_rank(opt.rank)) {
        throw ConfigError("identity " + e.id + " does not support rank " +
                          std::to_string(opt.rank));
    }

    VerificationReport rep;
    rep.id = e.id;
    rep.mode = to_string(opt.mode);
    rep.rank = opt.rank;
    rep.seed = opt.seed;
    auto t0 = std::chrono::steady_clock::now();
    auto done = [&]() {
        rep.millis = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - t0)
                                           .count());
        return rep;
    };

    const int kMaxResample = 12;
    std::string last_trouble;
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        BindingSpec spec;
        bool single_shot = opt.fixed.has_value();
        if (single_shot) {
            spec = *opt.fixed;
        } else {
            Sampler smp(opt.seed, e.id, opt.rank, opt.trial * 1000 + attempt);
            spec.n = opt.rank;
            Rational q(0);
            if (opt.mode == Mode::Numeric) q = opt.num_q;
            if (opt.mode == Mode::RationalQ) q = smp.rational_q();
            e.sample(smp, spec, opt.mode, q);
            if (opt.mode == Mode::RationalQ && spec.q_rational == 0) spec.q_rational = q;
        }
        rep.binding = binding_digest(spec);
        try {
            Mode run_mode = opt.mode;
            std::string downgrade;
            if (opt.mode == Mode::Exact && e.exact_rank_cap > 0 &&
                opt.rank > e.exact_rank_cap && e.numeric) {
                // Past the cap the truncated window erodes faster than it
                // fills, so the check moves to the numeric domain unless the
                // caller insists on trying the formal run first.
                if (opt.attempt_exact) {
                    try {
                        run_exact(e, opt, spec, rep);
                        return done();
                    } catch (const NoConvergence& ex) {
                        downgrade = std::string("exact attempt stalled (") + ex.what() +
                                    "); numeric fallback; ";
                    }
                } else {
                    downgrade = "exact capped at rank " + std::to_string(e.exact_rank_cap) +
                                "; numeric fallback; ";
                }
                run_mode = Mode::Numeric;
            }
            switch (run_mode) {
                case Mode::Exact: run_exact(e, opt, spec, rep); break;
                case Mode::RationalQ: run_rational(e, spec, rep); break;
                case Mode::Numeric: run_numeric(e, opt, spec, rep); break;
            }
            if (!downgrade.empty()) {
                rep.mode = to_string(Mode::Numeric);
                rep.evidence = downgrade + rep.evidence;
            }
            return done();
        } catch (const SingularBinding& ex) {
            last_trouble = ex.what();
        } catch (const SingularFactor& ex) {
            last_trouble = ex.what();
        } catch (const ZeroSeries& ex) {
            last_trouble = ex.what();
        } catch (const NoConvergence& ex) {
            rep.verdict = "no-convergence";
            rep.evidence = ex.what();
            return done();
        } catch (const SamplingExhausted& ex) {
            last_trouble = ex.what();
        }
        if (single_shot) {
            rep.verdict = "singular";
            rep.evidence = last_trouble;
            return done();
        }
    }
    rep.verdict = "sampling-exhausted";
    rep.evidence = "resampling cap reached; last: " + last_trouble;
    return done();
}

} // namespace qan
