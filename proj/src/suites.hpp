#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"
#include "series.hpp"

namespace sqf {

struct SuiteReport {
    std::string name;
    Sweep sweep;
    double wall_ms = 0.0; // timing goes to stderr, not into the serialized report
    bool passed() const { return sweep.passed(); }
};

// Individual suite names in fixed (sorted) order; "all" runs the union.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Throws usage for an unknown name. Sweep ranges come from the config; the
// defaults are the documented verification ranges.
SuiteReport run_suite(const std::string& name, const Config& cfg, DensityStore* store);

std::string suite_report_json(const SuiteReport& report);
std::string suite_report_csv(const SuiteReport& report);

} // namespace sqf
