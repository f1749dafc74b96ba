#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace mstab {

inline constexpr const char* kToolVersion = "0.1.0";

struct CheckParams {
    int level = 6;
    int coeff_bits = 3;
    int s_precision = 16;
    uint64_t seed = 0;
    int trials = 0;
};

struct Report {
    std::string check;
    CheckParams params;
    enum Status { Pass, Fail, Inconclusive, Skipped } status = Pass;
    std::string details;
    int64_t elapsed_ms = 0;

    bool failed() const { return status == Fail; }
};

std::string status_string(Report::Status s);

// one JSON object per report line; elapsed_ms only when with_timings
// (reports must be byte-identical for identical version/config/seed)
std::string report_json(const Report& r, const std::string& config_hash, bool with_timings);

// summary object appended after the per-check lines
std::string summary_json(const std::vector<Report>& reports, const std::string& config_hash,
                         bool with_timings);

// FNV-1a over the canonical parameter rendering
std::string config_hash_of(const CheckParams& p, const std::string& suite);

}  // namespace mstab
