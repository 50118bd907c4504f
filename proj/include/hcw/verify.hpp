#pragma once

// The full verification battery: every structural identity the project
// asserts, runnable as one deterministic suite. Each case reports pass/fail
// and a residual summary; the CLI turns the report into JSON or text.

#include <cstdint>
#include <string>
#include <vector>

namespace hcw::verify {

struct CaseResult {
    std::string name;
    bool passed = false;
    std::string residual_summary;
    long elapsed_ms = 0;
};

struct Report {
    std::string suite;
    std::string version;
    uint64_t seed = 0;
    std::vector<CaseResult> cases;  // sorted by name

    bool all_passed() const {
        for (const auto& c : cases)
            if (!c.passed) return false;
        return true;
    }
};

std::vector<CaseResult> hurwitz_suite(uint64_t seed);
std::vector<CaseResult> cayley_suite(uint64_t seed);
std::vector<CaseResult> ksmap_suite(uint64_t seed);
std::vector<CaseResult> laplace_suite(uint64_t seed);
std::vector<CaseResult> param_suite(uint64_t seed);
std::vector<CaseResult> cartanweyl_suite(uint64_t seed);
std::vector<CaseResult> bispherical_suite(uint64_t seed);

// All suites, cases sorted by name.
Report run_all(uint64_t seed);

extern const char* kVersion;

}  // namespace hcw::verify
