// Verification batteries behind `dkq verify`: each suite runs the invariants
// of one module against a concrete field and reports per-check pass/fail with
// case counts and worst deviations. Bound checks are soft so a sweep reports
// every violation instead of stopping at the first.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dkq/chars.hpp"

namespace dkq::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::uint64_t cases = 0;
    double worst = 0;  // worst deviation / bound excess observed
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint32_t q = 0;
    std::vector<CheckResult> checks;
    bool pass() const;
};

struct Options {
    std::uint64_t seed = 0;
    double bucket_tol = 0;    // 0 = default for the field
    bool allow_large = false; // enables the multi-minute brute-force paths
};

SuiteReport verify_field(const gf::Field& f, const Options& opt = {});
SuiteReport verify_chars(const chars::CharTable& c, const Options& opt = {});
SuiteReport verify_weil(const chars::CharTable& c, const Options& opt = {});
SuiteReport verify_reps(const chars::CharTable& c, const Options& opt = {});
SuiteReport verify_blocks(const chars::CharTable& c, const Options& opt = {});
SuiteReport verify_assembly(const chars::CharTable& c, const Options& opt = {});
SuiteReport verify_graphs(const chars::CharTable& c, const Options& opt = {});

SuiteReport run_suite(const std::string& name, const chars::CharTable& c,
                      const Options& opt = {});

const std::vector<std::string>& suite_names();

}  // namespace dkq::verify
