// dkq: build the graphs D(k,q), compute their spectra through the
// representation pipeline or brute force, run verification suites, and
// export bound reports and edge lists.

#include <CLI11.hpp>
#include <iostream>

#include "dkq/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"spectra of D(k,q) and their point collinearity graphs"};
    app.require_subcommand(1);

    dkq::cli::SpectrumConfig spec_cfg;
    std::string spec_q = "3";
    auto* spectrum = app.add_subcommand("spectrum", "compute the spectrum of D(k,q)");
    spectrum->add_option("--k", spec_cfg.k, "graph rank, 2..5")->capture_default_str();
    spectrum->add_option("--q", spec_q, "odd prime power")->capture_default_str();
    spectrum->add_option("--method", spec_cfg.method, "repr | brute | both")
        ->capture_default_str();
    spectrum->add_option("--bucket-tol", spec_cfg.bucket_tol, "eigenvalue bucketing tolerance");
    spectrum->add_option("--out", spec_cfg.out, "output path (default stdout)");
    spectrum->add_option("--format", spec_cfg.format, "json | csv")->capture_default_str();
    spectrum->add_flag("--allow-large", spec_cfg.allow_large,
                       "lift the brute-force size limit to 20000 vertices");

    dkq::cli::VerifyConfig ver_cfg;
    std::string ver_q = "3,5";
    auto* verify = app.add_subcommand("verify", "run a module verification suite");
    verify->add_option("--suite", ver_cfg.suite,
                       "field | chars | weil | reps | blocks | assembly | graphs")
        ->required();
    verify->add_option("--q", ver_q, "comma-separated odd prime powers")->capture_default_str();
    verify->add_option("--seed", ver_cfg.seed, "seed for randomized checks")
        ->capture_default_str();
    verify->add_option("--bucket-tol", ver_cfg.bucket_tol, "eigenvalue bucketing tolerance");
    verify->add_option("--out", ver_cfg.out, "output path (default stdout)");
    verify->add_flag("--allow-large", ver_cfg.allow_large, "enable multi-minute brute force");

    dkq::cli::ReportConfig rep_cfg;
    std::string rep_q = "3,5,7,9,11,13";
    auto* report = app.add_subcommand("report", "lambda2 / spectral gap / Cheeger table");
    report->add_option("--q", rep_q, "comma-separated odd prime powers")->capture_default_str();
    report->add_option("--bucket-tol", rep_cfg.bucket_tol, "eigenvalue bucketing tolerance");
    report->add_option("--out", rep_cfg.out,
                       "output base path (writes .csv and .json unless the "
                       "extension picks one)");
    report->add_option("--format", rep_cfg.format, "stdout format: json | csv")
        ->capture_default_str();

    dkq::cli::ExportConfig exp_cfg;
    std::string exp_q = "3";
    auto* exp = app.add_subcommand("export", "write the D(k,q) edge list as CSV");
    exp->add_option("--k", exp_cfg.k, "graph rank, 2..5")->capture_default_str();
    exp->add_option("--q", exp_q, "odd prime power")->capture_default_str();
    exp->add_option("--out", exp_cfg.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) {
            spec_cfg.q = dkq::cli::parse_q_list(spec_q).front();
            return dkq::cli::cmd_spectrum(spec_cfg, std::cout, std::cerr);
        }
        if (verify->parsed()) {
            ver_cfg.qs = dkq::cli::parse_q_list(ver_q);
            return dkq::cli::cmd_verify(ver_cfg, std::cout, std::cerr);
        }
        if (report->parsed()) {
            rep_cfg.qs = dkq::cli::parse_q_list(rep_q);
            return dkq::cli::cmd_report(rep_cfg, std::cout, std::cerr);
        }
        if (exp->parsed()) {
            exp_cfg.q = dkq::cli::parse_q_list(exp_q).front();
            return dkq::cli::cmd_export(exp_cfg, std::cout, std::cerr);
        }
    } catch (const std::exception& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
