#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qan/monomial.hpp"
#include "qan/rational.hpp"

namespace qan {

// Truncated Laurent series over Q with sound-window bookkeeping.
//
// A Series represents a formal Laurent series whose coefficients are known
// exactly for every exponent <= hor(): below lo() and between the stored
// support and hor() they are known to be zero, inside the stored support
// they are stored, above hor() they are unknown. hor() == kExactHor marks a
// Laurent polynomial that is known completely.
class Series {
public:
    static constexpr long kExactHor = 1L << 40;

    Series() : lo_(0), hor_(kExactHor) {}

    static Series zero(long hor = kExactHor) {
        Series s;
        s.hor_ = hor;
        return s;
    }
    static Series monomial(const QMonomial& m, long hor = kExactHor);
    static Series one() { return monomial(qm_qpow(0)); }
    // 1 - m, exact.
    static Series one_minus(const QMonomial& m);
    // Explicit coefficient list c[i] at exponent lo + i.
    static Series from_coeffs(long lo, std::vector<Rational> coeffs, long hor = kExactHor);

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    long hor() const { return hor_; }
    bool exact() const { return hor_ >= kExactHor; }
    bool is_zero_on_window() const { return c_.empty(); }
    // Valuation (exponent of the lowest nonzero coefficient); empty if the
    // series is zero on its whole window.
    std::optional<long> valuation() const {
        if (c_.empty()) return std::nullopt;
        return lo_;
    }

    // Coefficient at exponent e; must satisfy e <= hor().
    const Rational& coeff(long e) const;

    // Drops knowledge above new_hor.
    Series truncated(long new_hor) const;

    // Exact substitution q = value over the stored support.
    Rational eval_at(const Rational& q) const;

    // "e:num/den" pairs over the stored support, lowest exponent first.
    std::string digest() const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator-(const Series& a);
    friend Series operator*(const Series& a, const Series& b);

    Series scaled(const QMonomial& m) const; // multiply by a monomial

    // Multiplicative inverse. rel_prec bounds the number of computed
    // coefficients beyond the valuation; knowledge never exceeds what the
    // input window supports. Throws ZeroSeries when no nonzero coefficient
    // is visible.
    Series inverse(long rel_prec) const;

private:
    void trim();

    long lo_;
    std::vector<Rational> c_;
    long hor_;
};

struct SeriesMismatch {
    long exponent;
    Rational lhs, rhs;
};

struct SeriesCompare {
    enum class Verdict { Equal, Mismatch, InsufficientWindow };
    Verdict verdict;
    long window_hi = 0;                    // top of the compared window
    std::optional<SeriesMismatch> mismatch;
};

// Coefficient-wise comparison on the intersection of the sound windows.
// Requires both windows to reach at least `floor`, otherwise the result is
// InsufficientWindow.
SeriesCompare compare(const Series& a, const Series& b, long floor);

} // namespace qan
