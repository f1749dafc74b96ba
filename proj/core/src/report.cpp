#include "mstab/report.hpp"

#include <nlohmann/json.hpp>

#include "mstab/rng.hpp"

namespace mstab {

std::string status_string(Report::Status s) {
    switch (s) {
        case Report::Pass: return "pass";
        case Report::Fail: return "fail";
        case Report::Inconclusive: return "inconclusive";
        case Report::Skipped: return "skipped";
    }
    return "?";
}

static nlohmann::json params_json(const CheckParams& p) {
    nlohmann::json j;
    j["level"] = p.level;
    j["coeff_bits"] = p.coeff_bits;
    j["s_precision"] = p.s_precision;
    j["seed"] = p.seed;
    j["trials"] = p.trials;
    return j;
}

std::string report_json(const Report& r, const std::string& config_hash, bool with_timings) {
    nlohmann::json j;
    j["check"] = r.check;
    j["params"] = params_json(r.params);
    j["status"] = status_string(r.status);
    j["details"] = r.details;
    if (with_timings) j["elapsed_ms"] = r.elapsed_ms;
    j["version"] = kToolVersion;
    j["config_hash"] = config_hash;
    return j.dump();
}

std::string summary_json(const std::vector<Report>& reports, const std::string& config_hash,
                         bool with_timings) {
    int pass = 0, fail = 0, inconclusive = 0, skipped = 0;
    int64_t total_ms = 0;
    for (const auto& r : reports) {
        switch (r.status) {
            case Report::Pass: ++pass; break;
            case Report::Fail: ++fail; break;
            case Report::Inconclusive: ++inconclusive; break;
            case Report::Skipped: ++skipped; break;
        }
        total_ms += r.elapsed_ms;
    }
    nlohmann::json j;
    j["summary"] = true;
    j["pass"] = pass;
    j["fail"] = fail;
    j["inconclusive"] = inconclusive;
    j["skipped"] = skipped;
    if (with_timings) j["elapsed_ms"] = total_ms;
    j["version"] = kToolVersion;
    j["config_hash"] = config_hash;
    return j.dump();
}

std::string config_hash_of(const CheckParams& p, const std::string& suite) {
    std::string canon = suite + "|" + std::to_string(p.level) + "|" +
                        std::to_string(p.coeff_bits) + "|" + std::to_string(p.s_precision) +
                        "|" + std::to_string(p.seed) + "|" + std::to_string(p.trials) + "|" +
                        kToolVersion;
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a64(canon));
    return std::string(buf);
}

}  // namespace mstab
