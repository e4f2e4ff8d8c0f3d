#include "dkq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dkq/io.hpp"
#include "dkq/verify.hpp"

namespace dkq::cli {

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_artifact(const std::string& path, const std::string& content, std::ostream& os) {
    if (path.empty()) {
        os << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    file << content;
}

gf::Field make_field(std::uint32_t q) {
    auto [p, e] = parse_odd_prime_power(q);
    return gf::Field::make(p, e);
}

spectra::BoundsReport bounds_from_bipartite(const spectra::Spectrum& s, std::uint32_t q) {
    spectra::BoundsReport r;
    r.q = q;
    r.lambda2_bipartite = spectra::lambda2(s);
    r.lambda2_point = r.lambda2_bipartite * r.lambda2_bipartite - double(q);
    r.two_sqrt_q = 2.0 * std::sqrt(double(q));
    r.two_sqrt_q_minus_1 = 2.0 * std::sqrt(double(q) - 1.0);
    r.spectral_gap = double(q) - r.lambda2_bipartite;
    r.cheeger_lower = r.spectral_gap / 2.0;
    r.cheeger_upper =
        std::sqrt(std::max(0.0, double(q) * q - r.lambda2_bipartite * r.lambda2_bipartite));
    r.bound_2sqrtq = r.lambda2_bipartite <= r.two_sqrt_q + 1e-9;
    r.ramanujan = r.lambda2_bipartite <= r.two_sqrt_q_minus_1 + 1e-9;
    return r;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> parse_odd_prime_power(std::uint32_t q) {
    if (q < 3) throw UsageError("q must be an odd prime power >= 3");
    std::uint32_t p = 0, n = q;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = n;  // q itself is prime
    if (p == 2) throw UsageError("q = " + std::to_string(q) + " is even; odd prime powers only");
    std::uint32_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1)
        throw UsageError("q = " + std::to_string(q) + " is not a prime power");
    return {p, e};
}

std::vector<std::uint32_t> parse_q_list(const std::string& list) {
    std::vector<std::uint32_t> qs;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        qs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    if (qs.empty()) throw UsageError("empty q list");
    return qs;
}

int cmd_spectrum(const SpectrumConfig& cfg, std::ostream& os, std::ostream& err) {
    try {
        if (cfg.method != "repr" && cfg.method != "brute" && cfg.method != "both")
            throw UsageError("method must be repr, brute or both");
        if (cfg.format != "json" && cfg.format != "csv")
            throw UsageError("format must be json or csv");
        if (cfg.k < 2 || cfg.k > 5) throw UsageError("k must be in {2,3,4,5}");
        if (cfg.method != "brute" && cfg.k != 5)
            throw UsageError("the representation pipeline covers k = 5 only; use --method brute");

        gf::Field field = make_field(cfg.q);
        chars::CharTable table(field);
        const double bucket_tol =
            cfg.bucket_tol > 0 ? cfg.bucket_tol : spectra::default_bucket_tol(cfg.q);
        const std::uint64_t size_limit = cfg.allow_large ? 20000 : oracle::kDefaultSizeLimit;

        spectra::Spectrum result;
        spectra::Spectrum brute;
        if (cfg.method == "repr" || cfg.method == "both") {
            result = spectra::lift_to_bipartite(
                spectra::assemble_point_spectrum(table, bucket_tol), cfg.q);
        }
        if (cfg.method == "brute" || cfg.method == "both") {
            brute = oracle::bipartite_spectrum(graphs::d_graph(cfg.k, field), bucket_tol,
                                               size_limit);
            if (cfg.method == "brute") result = brute;
        }

        auto bounds = bounds_from_bipartite(result, cfg.q);
        std::string graph_name = "D(" + std::to_string(cfg.k) + "," + std::to_string(cfg.q) + ")";

        std::string artifact;
        if (cfg.format == "json") {
            artifact =
                io::spectrum_json(result, cfg.q, cfg.k, graph_name, cfg.method, bounds).dump(2) +
                "\n";
        } else {
            artifact = io::spectrum_csv(result);
        }
        write_artifact(cfg.out, artifact, os);

        int rc = bounds.bound_2sqrtq ? 0 : 1;
        if (cfg.method == "both") {
            const double tol = cfg.q <= 3 ? 1e-6 : 1e-5;
            auto cmp = oracle::compare_spectra(result, brute, tol);
            std::string cmp_doc = io::compare_json(cmp, tol).dump(2) + "\n";
            if (!cfg.out.empty())
                write_artifact(cfg.out + ".compare.json", cmp_doc, os);
            else
                os << cmp_doc;
            if (!cmp.equal(tol)) rc = 1;
        }
        return rc;
    } catch (const UsageError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& os, std::ostream& err) {
    try {
        const auto& names = verify::suite_names();
        if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
            throw UsageError("unknown suite '" + cfg.suite + "'");
        if (cfg.qs.empty()) throw UsageError("verify needs at least one q");

        verify::Options opt;
        opt.seed = cfg.seed;
        opt.bucket_tol = cfg.bucket_tol;
        opt.allow_large = cfg.allow_large;

        io::ordered_json results = io::ordered_json::array();
        bool all_pass = true;
        for (std::uint32_t q : cfg.qs) {
            gf::Field field = make_field(q);
            chars::CharTable table(field);
            auto suite = verify::run_suite(cfg.suite, table, opt);
            io::ordered_json checks = io::ordered_json::array();
            for (const auto& c : suite.checks)
                checks.push_back({{"name", c.name},
                                  {"pass", c.pass},
                                  {"cases", c.cases},
                                  {"worst_deviation", io::round12(c.worst)},
                                  {"detail", c.detail}});
            results.push_back(
                {{"q", q}, {"pass", suite.pass()}, {"checks", std::move(checks)}});
            all_pass = all_pass && suite.pass();
        }
        io::ordered_json doc{{"suite", cfg.suite}, {"pass", all_pass}, {"results", results}};
        write_artifact(cfg.out, doc.dump(2) + "\n", os);
        return all_pass ? 0 : 1;
    } catch (const UsageError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

int cmd_report(const ReportConfig& cfg, std::ostream& os, std::ostream& err) {
    try {
        if (cfg.qs.empty()) throw UsageError("report needs at least one q");
        if (cfg.format != "json" && cfg.format != "csv")
            throw UsageError("format must be json or csv");

        std::vector<spectra::BoundsReport> rows;
        for (std::uint32_t q : cfg.qs) {
            gf::Field field = make_field(q);
            chars::CharTable table(field);
            const double bucket_tol =
                cfg.bucket_tol > 0 ? cfg.bucket_tol : spectra::default_bucket_tol(q);
            rows.push_back(spectra::bounds_report(table, bucket_tol));
        }

        std::string csv = io::bounds_csv_header();
        io::ordered_json json_rows = io::ordered_json::array();
        bool all_bounded = true;
        for (const auto& r : rows) {
            csv += io::bounds_csv_row(r);
            json_rows.push_back(io::bounds_json(r));
            all_bounded = all_bounded && r.bound_2sqrtq;
        }
        std::string json_doc = json_rows.dump(2) + "\n";

        if (cfg.out.empty()) {
            os << (cfg.format == "csv" ? csv : json_doc);
        } else if (cfg.out.ends_with(".json")) {
            write_artifact(cfg.out, json_doc, os);
        } else if (cfg.out.ends_with(".csv")) {
            write_artifact(cfg.out, csv, os);
        } else {
            write_artifact(cfg.out + ".csv", csv, os);
            write_artifact(cfg.out + ".json", json_doc, os);
        }
        return all_bounded ? 0 : 1;
    } catch (const UsageError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

int cmd_export(const ExportConfig& cfg, std::ostream& os, std::ostream& err) {
    try {
        if (cfg.k < 2 || cfg.k > 5) throw UsageError("k must be in {2,3,4,5}");
        gf::Field field = make_field(cfg.q);
        write_artifact(cfg.out, io::edge_list_csv(graphs::d_graph(cfg.k, field)), os);
        return 0;
    } catch (const UsageError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace dkq::cli
