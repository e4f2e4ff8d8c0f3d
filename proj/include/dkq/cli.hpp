// Command implementations behind the dkq binary. Exit codes: 0 when every
// asserted bound/equality in the run held, 1 when a computation-level check
// failed, 2 for usage errors (bad q, unknown suite, invalid method).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dkq::cli {

// Factors q and insists on an odd prime power; returns {p, e}.
std::pair<std::uint32_t, std::uint32_t> parse_odd_prime_power(std::uint32_t q);

struct SpectrumConfig {
    std::uint32_t k = 5;
    std::uint32_t q = 3;
    std::string method = "repr";  // repr | brute | both
    double bucket_tol = 0;        // 0 = 1e-6 * q
    std::string out;              // empty = stdout
    std::string format = "json";  // json | csv
    bool allow_large = false;
};

struct VerifyConfig {
    std::string suite;
    std::vector<std::uint32_t> qs;
    std::uint64_t seed = 0;
    double bucket_tol = 0;
    std::string out;
    bool allow_large = false;
};

struct ReportConfig {
    std::vector<std::uint32_t> qs;
    double bucket_tol = 0;
    std::string out;
    std::string format = "csv";
};

struct ExportConfig {
    std::uint32_t k = 5;
    std::uint32_t q = 3;
    std::string out;
};

int cmd_spectrum(const SpectrumConfig& cfg, std::ostream& os, std::ostream& err);
int cmd_verify(const VerifyConfig& cfg, std::ostream& os, std::ostream& err);
int cmd_report(const ReportConfig& cfg, std::ostream& os, std::ostream& err);
int cmd_export(const ExportConfig& cfg, std::ostream& os, std::ostream& err);

std::vector<std::uint32_t> parse_q_list(const std::string& list);

}  // namespace dkq::cli
