#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "k3seq/report.hpp"

namespace k3seq::checks {

struct Options {
    std::uint64_t seed = 0;
    int trials = 20;       // samples per randomized property
    bool tamper = false;   // negative control: perturb one catalog entry
};

struct Check {
    std::string id;
    std::string anchor;  // stable claim identifier covered by this check
    std::function<CheckGroup(const Options&)> run;
};

/// The full verification suite in its canonical order.
const std::vector<Check>& all_checks();

/// Claim identifiers that the suite must cover (enforced by a meta-test).
const std::vector<std::string>& required_anchors();

struct ReportEntry {
    std::string id;
    std::string anchor;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string detail;
    long elapsed_ms = 0;
};

struct Report {
    std::uint64_t seed = 0;
    std::vector<ReportEntry> entries;
    int passed = 0, failed = 0, skipped = 0;
    bool ok() const { return failed == 0; }
};

/// Run the suite (or the single check named by `only`).  Unknown `only`
/// values raise std::invalid_argument.
Report run_suite(const Options& opt, const std::string& only = "");

}  // namespace k3seq::checks
