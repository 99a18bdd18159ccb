#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace minfact {

/// Outcome of one parameterized check. A failing report carries a witness
/// that can be re-fed to the relevant module to reproduce the failure.
struct CheckReport {
    std::string check;
    std::map<std::string, std::string> params;
    bool pass = true;
    std::string witness;
    long long count = 0;  // objects examined
    double millis = 0;
};

struct BatteryOptions {
    /// Main exhaustive bound. The recursion check runs to max_n - 1, the
    /// interval-cover count to max_n + 1, and the symmetric-group sweeps to
    /// max_n - 2, matching their different costs.
    int max_n = 7;
    int threads = 1;
};

/// Check families, in battery order.
std::vector<std::string> check_names();

/// Reports for the named families, deterministic order, parallelism only
/// affecting wall time.
std::vector<CheckReport> run_checks(const std::vector<std::string>& names,
                                    const BatteryOptions& opt);

std::vector<CheckReport> run_all(const BatteryOptions& opt);

/// One JSON object per report (a JSON-lines record). Timing is excluded by
/// default so output is byte-stable across runs.
std::string report_json(const CheckReport& r, bool with_timing = false);

}  // namespace minfact
