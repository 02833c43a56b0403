#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace qan {

// One verification outcome. Exactly one of window/tolerance is set,
// depending on the mode.
struct VerificationReport {
    std::string id;
    std::string mode; // exact | rational | numeric
    int rank = 1;
    std::uint64_t seed = 0;
    std::string binding;   // deterministic digest of the sampled parameters
    std::string window;    // exact / rational evidence of the compared range
    std::string tolerance; // numeric comparison tolerance
    std::string verdict;   // see kVerdicts in report.cpp
    std::string evidence;
    long millis = 0;

    bool passed() const { return verdict == "pass"; }
};

nlohmann::json to_json(const VerificationReport& r);
std::string to_text_line(const VerificationReport& r);

// True for the closed set of verdict strings reports may carry.
bool known_verdict(const std::string& v);

} // namespace qan
