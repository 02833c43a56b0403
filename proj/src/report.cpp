#include "qan/report.hpp"

#include <array>
#include <sstream>

namespace qan {

namespace {
constexpr std::array<const char*, 6> kVerdicts = {
    "pass", "fail", "insufficient-window", "no-convergence", "singular",
    "sampling-exhausted"};
}

bool known_verdict(const std::string& v) {
    for (const char* k : kVerdicts) {
        if (v == k) return true;
    }
    return false;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j{
        {"id", r.id},       {"mode", r.mode},       {"rank", r.rank},
        {"seed", r.seed},   {"binding", r.binding}, {"verdict", r.verdict},
        {"evidence", r.evidence}, {"millis", r.millis},
    };
    if (!r.window.empty()) j["window"] = r.window;
    if (!r.tolerance.empty()) j["tolerance"] = r.tolerance;
    return j;
}

std::string to_text_line(const VerificationReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS" : "FAIL") << " " << r.id << " mode=" << r.mode
       << " n=" << r.rank << " seed=" << r.seed;
    if (!r.window.empty()) os << " window=[" << r.window << "]";
    if (!r.tolerance.empty()) os << " tol=" << r.tolerance;
    if (r.verdict != "pass" && r.verdict != "fail") os << " verdict=" << r.verdict;
    os << " binding=" << r.binding;
    if (!r.evidence.empty()) os << " evidence=" << r.evidence;
    os << " millis=" << r.millis;
    return os.str();
}

} // namespace qan
