#pragma once

#include "qan/monomial.hpp"
#include "qan/series.hpp"

namespace qan {

// (z; q^step)_k = prod_{j=0}^{k-1} (1 - z q^{step j}) as an exact Laurent
// polynomial; k >= 0. Zero factors are legal (that is how terminating sums
// cut off) and make the result the exact zero polynomial.
Series qpoch_finite(const QMonomial& z, long k, int step = 1);

// (z; q^step)_infinity truncated soundly at `order`: the factors with
// exponent(z) + step*j <= order are multiplied in, everything beyond is
// congruent to 1 mod q^{order+1}. Throws SingularFactor when a factor is
// identically zero (z a pure power of q hitting 1 - q^0).
Series qpoch_infinite(const QMonomial& z, long order, int step = 1);

} // namespace qan
