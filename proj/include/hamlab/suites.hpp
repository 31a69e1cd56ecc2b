#pragma once

#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

namespace hamlab {

struct SuiteOptions {
    int max_n = -1;  // -1 picks the suite default
    int max_k = -1;
    int only_n = -1;        // restrict theorem5 to a single order
    int jobs = 1;
    bool timestamp = true;  // false drops both timestamp and wall_time_ms
    std::string corpus;     // graph6 file; empty means the built-in enumeration
};

// The JSON report plus the process exit code: 0 pass, 1 counterexample found,
// 2 usage/input error. Reports are byte-identical across reruns when
// timestamps are off.
struct SuiteResult {
    nlohmann::ordered_json report;
    int exit_code = 0;
};

// name: theorem5 | theorem9 | theorem11 | prop7 | conditions
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

// claim: hamiltonian | hamiltonian-path <u> <v> | hamiltonian-connected |
// chromatic | k-critical | self-complementary. claim_args carries the
// endpoint pair for hamiltonian-path. input supplies one graph6 line per
// graph; source names it in the report. Malformed lines become per-line
// error entries.
SuiteResult run_certify(const std::string& claim, const std::vector<std::string>& claim_args,
                        std::istream& input, const std::string& source,
                        const SuiteOptions& opts);

}  // namespace hamlab
