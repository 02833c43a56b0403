#pragma once

#include <vector>

namespace qan {

// Multi-indices k = (k_1, ..., k_n) of nonnegative integers.
using MultiIndex = std::vector<long>;

inline long total(const MultiIndex& k) {
    long t = 0;
    for (long v : k) t += v;
    return t;
}

inline long binom2(long d) { return d * (d - 1) / 2; }

// sum_r (r - 1 + off) k_r; the exponent sums q^{sum (r-1) k_r} (off = 0)
// and q^{sum r k_r} (off = 1) are everywhere.
inline long wsum(const MultiIndex& k, long off) {
    long t = 0;
    for (size_t i = 0; i < k.size(); ++i) t += (static_cast<long>(i) + off) * k[i];
    return t;
}

// Second elementary symmetric function sum_{r<s} k_r k_s.
inline long e2(const MultiIndex& k) {
    long t = total(k), sq = 0;
    for (long v : k) sq += v * v;
    return (t * t - sq) / 2;
}

inline bool leq(const MultiIndex& a, const MultiIndex& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

inline MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline MultiIndex mi_sub(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline MultiIndex mi_neg(const MultiIndex& a) {
    MultiIndex c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

// Complete walk of the box 0 <= k <= N in odometer order (last coordinate
// fastest). f(const MultiIndex&).
template <class F>
void for_each_box(const MultiIndex& N, F&& f) {
    MultiIndex k(N.size(), 0);
    for (;;) {
        f(static_cast<const MultiIndex&>(k));
        size_t i = N.size();
        while (i > 0) {
            --i;
            if (k[i] < N[i]) {
                ++k[i];
                break;
            }
            k[i] = 0;
            if (i == 0) return;
        }
        if (N.empty()) return;
    }
}

// All k >= 0 of the given rank with |k| = t, lexicographically ascending.
template <class F>
void for_each_shell(int rank, long t, F&& f) {
    MultiIndex k(static_cast<size_t>(rank), 0);
    auto rec = [&](auto&& self, int pos, long rem) -> void {
        if (pos == rank - 1) {
            k[static_cast<size_t>(pos)] = rem;
            f(static_cast<const MultiIndex&>(k));
            return;
        }
        for (long v = 0; v <= rem; ++v) {
            k[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rem - v);
        }
    };
    if (rank == 0) return;
    rec(rec, 0, t);
}

} // namespace qan
