#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dkq/cli.hpp"
#include "dkq/io.hpp"

using namespace dkq;
namespace fs = std::filesystem;

namespace {

struct Run {
    int rc;
    std::string out;
    std::string err;
};

template <typename Cfg, typename Fn>
Run run(Fn fn, const Cfg& cfg) {
    std::ostringstream out, err;
    int rc = fn(cfg, out, err);
    return {rc, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("dkq_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("odd prime power parsing") {
    CHECK(cli::parse_odd_prime_power(9) == std::pair{3u, 2u});
    CHECK(cli::parse_odd_prime_power(27) == std::pair{3u, 3u});
    CHECK(cli::parse_odd_prime_power(49) == std::pair{7u, 2u});
    CHECK(cli::parse_odd_prime_power(11) == std::pair{11u, 1u});
    CHECK_THROWS(cli::parse_odd_prime_power(4));   // even
    CHECK_THROWS(cli::parse_odd_prime_power(15));  // not a prime power
    CHECK_THROWS(cli::parse_odd_prime_power(1));
    CHECK(cli::parse_q_list("3,5,7") == std::vector<std::uint32_t>{3, 5, 7});
    CHECK_THROWS(cli::parse_q_list(""));
}

TEST_CASE("spectrum: brute force D(2,5) has the known distinct values") {
    cli::SpectrumConfig cfg;
    cfg.k = 2;
    cfg.q = 5;
    cfg.method = "brute";
    auto r = run(cli::cmd_spectrum, cfg);
    REQUIRE(r.rc == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["q"] == 5);
    CHECK(doc["k"] == 2);
    CHECK(doc["graph"] == "D(2,5)");
    CHECK(doc["method"] == "brute");
    REQUIRE(doc["eigenvalues"].size() == 5);
    const double sq5 = std::sqrt(5.0);
    std::vector<double> want{5.0, sq5, 0.0, -sq5, -5.0};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(double(doc["eigenvalues"][i]["value"]) == doctest::Approx(want[i]).epsilon(1e-9));
    CHECK(doc["bound_2sqrtq"] == true);
    CHECK(doc.contains("spectral_gap"));
    CHECK(doc.contains("cheeger_lower"));
    CHECK(doc.contains("cheeger_upper"));
    CHECK(doc.contains("ramanujan"));
    CHECK(doc.contains("lambda2"));
}

TEST_CASE("spectrum: usage errors") {
    cli::SpectrumConfig cfg;
    cfg.k = 5;
    cfg.q = 4;  // even
    CHECK(run(cli::cmd_spectrum, cfg).rc == 2);
    cfg.q = 3;
    cfg.method = "nonsense";
    CHECK(run(cli::cmd_spectrum, cfg).rc == 2);
    cfg.method = "repr";
    cfg.k = 3;  // repr pipeline is k = 5 only
    CHECK(run(cli::cmd_spectrum, cfg).rc == 2);
    cfg.k = 7;
    CHECK(run(cli::cmd_spectrum, cfg).rc == 2);
}

TEST_CASE("spectrum: method both compares pipelines and writes artifacts") {
    TempDir tmp;
    cli::SpectrumConfig cfg;
    cfg.k = 5;
    cfg.q = 3;
    cfg.method = "both";
    cfg.out = (tmp.path / "spec.json").string();
    auto r = run(cli::cmd_spectrum, cfg);
    REQUIRE(r.rc == 0);
    auto doc = nlohmann::json::parse(slurp(tmp.path / "spec.json"));
    CHECK(doc["method"] == "both");
    std::uint64_t total = 0;
    for (auto& ev : doc["eigenvalues"]) total += std::uint64_t(ev["multiplicity"]);
    CHECK(total == 486);
    auto cmp = nlohmann::json::parse(slurp(tmp.path / "spec.json.compare.json"));
    CHECK(cmp["equal"] == true);
    CHECK(cmp["matched"] == 486);
}

TEST_CASE("spectrum: csv format emits value,multiplicity rows") {
    cli::SpectrumConfig cfg;
    cfg.k = 2;
    cfg.q = 3;
    cfg.method = "brute";
    cfg.format = "csv";
    auto r = run(cli::cmd_spectrum, cfg);
    REQUIRE(r.rc == 0);
    CHECK(r.out.substr(0, r.out.find('\n')) == "value,multiplicity");
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);  // header + 5 buckets
}

TEST_CASE("verify: passing suite, exit codes, unknown suite") {
    cli::VerifyConfig cfg;
    cfg.suite = "field";
    cfg.qs = {9};
    auto r = run(cli::cmd_verify, cfg);
    CHECK(r.rc == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["suite"] == "field");
    CHECK(doc["pass"] == true);
    CHECK(doc["results"][0]["q"] == 9);
    CHECK(doc["results"][0]["checks"].size() >= 3);

    cfg.suite = "bogus";
    CHECK(run(cli::cmd_verify, cfg).rc == 2);
    cfg.suite = "field";
    cfg.qs = {15};
    CHECK(run(cli::cmd_verify, cfg).rc == 2);
}

TEST_CASE("report: q = 3 row certifies the 2 sqrt(q) bound") {
    cli::ReportConfig cfg;
    cfg.qs = {3};
    cfg.format = "csv";
    auto r = run(cli::cmd_report, cfg);
    REQUIRE(r.rc == 0);
    std::string header = r.out.substr(0, r.out.find('\n'));
    CHECK(header ==
          "q,lambda2,lambda2_point,two_sqrt_q,two_sqrt_q_minus_1,bound_2sqrtq,ramanujan,"
          "spectral_gap,cheeger_lower,cheeger_upper");
    CHECK(r.out.find("\n3,") != std::string::npos);
    CHECK(r.out.find("true") != std::string::npos);

    cfg.format = "json";
    auto rj = run(cli::cmd_report, cfg);
    auto doc = nlohmann::json::parse(rj.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["q"] == 3);
    CHECK(doc[0]["bound_2sqrtq"] == true);
    CHECK(double(doc[0]["lambda2"]) <= 2 * std::sqrt(3.0) + 1e-9);
    CHECK(double(doc[0]["cheeger_lower"]) ==
          doctest::Approx(double(doc[0]["spectral_gap"]) / 2));
}

TEST_CASE("report: dual-format file output") {
    TempDir tmp;
    cli::ReportConfig cfg;
    cfg.qs = {3, 5};
    cfg.out = (tmp.path / "bounds").string();
    REQUIRE(run(cli::cmd_report, cfg).rc == 0);
    CHECK(fs::exists(tmp.path / "bounds.csv"));
    CHECK(fs::exists(tmp.path / "bounds.json"));
    auto doc = nlohmann::json::parse(slurp(tmp.path / "bounds.json"));
    CHECK(doc.size() == 2);
    CHECK(doc[1]["q"] == 5);
    CHECK(doc[1]["bound_2sqrtq"] == true);
}

TEST_CASE("export: deterministic edge list with header") {
    cli::ExportConfig cfg;
    cfg.k = 5;
    cfg.q = 3;
    auto r1 = run(cli::cmd_export, cfg);
    auto r2 = run(cli::cmd_export, cfg);
    REQUIRE(r1.rc == 0);
    CHECK(r1.out == r2.out);  // byte-identical reruns
    CHECK(r1.out.substr(0, r1.out.find('\n')) == "# d-graph k=5 q=3");
    CHECK(std::count(r1.out.begin(), r1.out.end(), '\n') == 730);
    cfg.q = 8;
    CHECK(run(cli::cmd_export, cfg).rc == 2);
}

TEST_CASE("12-significant-digit formatting") {
    CHECK(io::format12(2.0 * std::sqrt(3.0)) == "3.46410161514");
    CHECK(io::format12(6.0) == "6");
    CHECK(io::round12(1.0 / 3.0) == doctest::Approx(0.333333333333).epsilon(1e-12));
}

}  // TEST_SUITE
