#pragma once

#include <cstdint>
#include <optional>

#include "qan/catalog.hpp"
#include "qan/context.hpp"
#include "qan/report.hpp"

namespace qan {

struct VerifyOptions {
    Mode mode = Mode::Exact;
    int rank = 1;
    std::uint64_t seed = 1;
    long trial = 0;     // trial index; resampling advances within a trial
    long order = 0;     // exact mode: base order; 0 means the entry floor
    Rational num_q = make_rat(1, 5);
    int precision_bits = 256;
    double tail_eps = 1e-40;
    double verify_eps = 1e-20;
    // Try exact mode even past an entry's exact_rank_cap instead of switching
    // to numeric up front; a window that never settles still falls back.
    bool attempt_exact = false;
    std::optional<BindingSpec> fixed; // bypass sampling entirely
};

// Run one verification. Never throws for math-level trouble; those become
// verdicts. Configuration errors (unknown mode/rank, unsupported domain)
// do throw ConfigError.
VerificationReport verify_one(const EntryDef& entry, const VerifyOptions& opt);

} // namespace qan
