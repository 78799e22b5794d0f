#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace fragmenta {

struct ClaimResult {
    std::string id;
    int criterion = 0;
    std::string paper_ref;
    std::string expected;
    std::string computed;
    bool match = false;
    bool skipped = false;
    std::string skip_reason;
    double runtime_ms = 0.0;
};

struct VerifyOptions {
    int max_L = 0;           // 0 = unrestricted; claims above this are skipped (config)
    bool fusion_sweep = true;  // the exhaustive fusion sweep is the slowest block
};

struct VerifyReport {
    std::vector<ClaimResult> claims;
    int passed = 0, failed = 0, skipped = 0;
    // 0 all pass; 2 budget skips only; 3 any mismatch
    int exit_code = 0;
};

VerifyReport run_all_claims(const VerifyOptions& options = {});

nlohmann::json report_to_json(const VerifyReport& report, bool with_timestamp = true);

// one line per acceptance criterion
std::string criterion_summary(const VerifyReport& report);

}  // namespace fragmenta
