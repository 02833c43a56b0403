#pragma once

#include "qan/rational.hpp"

namespace qan {

// Knobs for arbitrary-precision numeric evaluation.
struct NumericContext {
    Rational q = make_rat(1, 5); // must lie in (0,1)
    long precision_bits = 256;
    double tail_eps = 1e-40;
    double verify_eps = 1e-20;
    int shell_patience = 3;
    long shell_cap = 400;
};

// Knobs for exact series evaluation.
struct ExactContext {
    long order = 20;         // truncation order for series atoms
    long floor = 20;         // comparisons must cover exponents 0..floor
    int zero_shell_patience = 3;
    long shell_cap = 400;
    int max_order_retries = 4; // doublings on InsufficientWindow
};

} // namespace qan
