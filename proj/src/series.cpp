#include "qan/series.hpp"

#include <algorithm>

#include "qan/errors.hpp"

namespace qan {

namespace {

constexpr long kSat = Series::kExactHor;

long sat_add(long h, long v) {
    if (h >= kSat || v >= kSat) return kSat;
    return h + v;
}

const Rational kZero(0);

} // namespace

void Series::trim() {
    size_t b = 0, e = c_.size();
    while (b < e && c_[b] == 0) ++b;
    while (e > b && c_[e - 1] == 0) --e;
    if (b == e) {
        c_.clear();
        lo_ = 0;
        return;
    }
    if (b > 0 || e < c_.size()) {
        c_ = std::vector<Rational>(c_.begin() + b, c_.begin() + e);
    }
    lo_ += static_cast<long>(b);
}

Series Series::monomial(const QMonomial& m, long hor) {
    Series s;
    s.hor_ = hor;
    if (!m.is_zero() && m.e <= hor) {
        s.lo_ = m.e;
        s.c_ = {m.c};
    }
    return s;
}

Series Series::one_minus(const QMonomial& m) {
    return one() - monomial(m);
}

Series Series::from_coeffs(long lo, std::vector<Rational> coeffs, long hor) {
    Series s;
    s.lo_ = lo;
    s.c_ = std::move(coeffs);
    s.hor_ = hor;
    if (!s.c_.empty() && s.hi() > hor) s.c_.resize(static_cast<size_t>(hor - lo + 1));
    s.trim();
    return s;
}

const Rational& Series::coeff(long e) const {
    if (e < lo_ || c_.empty() || e > hi()) return kZero;
    return c_[static_cast<size_t>(e - lo_)];
}

Series Series::truncated(long new_hor) const {
    if (new_hor >= hor_) return *this;
    Series s;
    s.hor_ = new_hor;
    if (!c_.empty() && lo_ <= new_hor) {
        s.lo_ = lo_;
        s.c_.assign(c_.begin(),
                    c_.begin() + static_cast<size_t>(std::min(hi(), new_hor) - lo_ + 1));
        s.trim();
    }
    return s;
}

Rational Series::eval_at(const Rational& q) const {
    Rational acc(0);
    // Horner over the stored support, then shift by q^lo.
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * q + c_[i];
    }
    if (acc == 0) return acc;
    return acc * rat_pow(q, lo_);
}

std::string Series::digest() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(lo_ + static_cast<long>(i)) + ':' + c_[i].get_str();
    }
    return out;
}

Series operator+(const Series& a, const Series& b) {
    Series s;
    s.hor_ = std::min(a.hor_, b.hor_);
    if (a.c_.empty() && b.c_.empty()) return s;
    long lo = a.c_.empty() ? b.lo_ : (b.c_.empty() ? a.lo_ : std::min(a.lo_, b.lo_));
    long hi = std::min(std::max(a.hi(), b.hi()), s.hor_);
    if (hi < lo) return s;
    s.lo_ = lo;
    s.c_.assign(static_cast<size_t>(hi - lo + 1), Rational(0));
    for (long e = lo; e <= hi; ++e) {
        s.c_[static_cast<size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
    }
    s.trim();
    return s;
}

Series operator-(const Series& a) {
    Series s = a;
    for (auto& x : s.c_) x = -x;
    return s;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    Series s;
    long va = a.c_.empty() ? kSat : a.lo_;
    long vb = b.c_.empty() ? kSat : b.lo_;
    s.hor_ = std::min(sat_add(a.hor_, vb), sat_add(b.hor_, va));
    if (a.c_.empty() || b.c_.empty()) return s;
    long lo = va + vb;
    long hi = std::min(a.hi() + b.hi(), s.hor_);
    if (hi < lo) return s;
    s.lo_ = lo;
    s.c_.assign(static_cast<size_t>(hi - lo + 1), Rational(0));
    mpq_t tmp;
    mpq_init(tmp);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        long ea = a.lo_ + static_cast<long>(i);
        long jmax = std::min<long>(static_cast<long>(b.c_.size()) - 1, hi - ea - b.lo_);
        for (long j = 0; j <= jmax; ++j) {
            if (b.c_[static_cast<size_t>(j)] == 0) continue;
            size_t pos = static_cast<size_t>(ea + b.lo_ + j - lo);
            mpq_mul(tmp, a.c_[i].get_mpq_t(), b.c_[static_cast<size_t>(j)].get_mpq_t());
            mpq_add(s.c_[pos].get_mpq_t(), s.c_[pos].get_mpq_t(), tmp);
        }
    }
    mpq_clear(tmp);
    s.trim();
    return s;
}

Series Series::scaled(const QMonomial& m) const {
    if (m.is_zero()) {
        // Exact zero times anything known to hor+e.
        return Series::zero(sat_add(hor_, m.e));
    }
    Series s;
    s.hor_ = sat_add(hor_, m.e);
    s.lo_ = lo_ + m.e;
    s.c_ = c_;
    if (m.c != 1) {
        for (auto& x : s.c_) x *= m.c;
    }
    return s;
}

Series Series::inverse(long rel_prec) const {
    if (c_.empty()) throw ZeroSeries();
    long v = lo_;
    long avail = exact() ? rel_prec : hor_ - v;
    long prec = std::min(rel_prec, avail);
    if (prec < 0) throw ZeroSeries("series window too small to invert");
    // g = series shifted to valuation 0; h = g^{-1} computed to prec.
    std::vector<Rational> h(static_cast<size_t>(prec) + 1);
    const Rational& g0 = c_[0];
    Rational inv_g0 = 1 / g0;
    h[0] = inv_g0;
    for (long t = 1; t <= prec; ++t) {
        Rational acc(0);
        long imax = std::min<long>(t, static_cast<long>(c_.size()) - 1);
        for (long i = 1; i <= imax; ++i) {
            if (c_[static_cast<size_t>(i)] == 0) continue;
            acc += c_[static_cast<size_t>(i)] * h[static_cast<size_t>(t - i)];
        }
        h[static_cast<size_t>(t)] = -inv_g0 * acc;
    }
    return from_coeffs(-v, std::move(h), -v + prec);
}

SeriesCompare compare(const Series& a, const Series& b, long floor) {
    SeriesCompare out;
    long top = std::min(a.hor(), b.hor());
    out.window_hi = top;
    if (top < floor) {
        out.verdict = SeriesCompare::Verdict::InsufficientWindow;
        return out;
    }
    bool ae = a.is_zero_on_window(), be = b.is_zero_on_window();
    if (ae && be) {
        out.verdict = SeriesCompare::Verdict::Equal;
        return out;
    }
    long lo = std::min(ae ? 0 : a.lo(), be ? 0 : b.lo());
    long hi = std::min(top, std::max(ae ? 0 : a.hi(), be ? 0 : b.hi()));
    for (long e = lo; e <= hi; ++e) {
        if (a.coeff(e) != b.coeff(e)) {
            out.verdict = SeriesCompare::Verdict::Mismatch;
            out.mismatch = SeriesMismatch{e, a.coeff(e), b.coeff(e)};
            return out;
        }
    }
    out.verdict = SeriesCompare::Verdict::Equal;
    return out;
}

} // namespace qan
