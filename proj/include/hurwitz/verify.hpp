#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace hurwitz {

/// Outcome of one randomized verification suite. The textual report
/// (format_report) is deterministic for a fixed seed and trial count;
/// elapsed time is carried separately so reports stay byte-identical
/// across runs.
struct VerifyReport {
    std::string suite;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t checks = 0;
    std::vector<std::string> failures; // counterexample descriptions
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return failures.empty(); }
};

/// Suite names accepted by run_suite: ring, series, bell, transforms, br,
/// dynamics.
const std::vector<std::string>& suite_names();

VerifyReport run_suite(const std::string& name, std::uint64_t trials,
                       std::uint64_t seed); // UnknownSuite

std::vector<VerifyReport> run_all_suites(std::uint64_t trials, std::uint64_t seed);

std::string format_report(const VerifyReport& report);

} // namespace hurwitz
