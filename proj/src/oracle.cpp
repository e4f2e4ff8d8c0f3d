#include "dkq/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace dkq::oracle {

namespace {

void check_size(std::uint64_t n, std::uint64_t limit, const char* what) {
    if (n > limit)
        throw std::length_error(std::string("oracle: ") + what + " size " + std::to_string(n) +
                                " exceeds limit " + std::to_string(limit));
}

}  // namespace

Spectrum dense_spectrum(const graphs::SimpleGraph& g, double bucket_tol,
                        std::uint64_t size_limit) {
    check_size(g.n, size_limit, "adjacency");
    const Eigen::Index n = static_cast<Eigen::Index>(g.n);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("oracle: symmetric eigensolver failed");

    std::vector<std::pair<double, std::uint64_t>> values;
    values.reserve(g.n);
    for (Eigen::Index i = 0; i < n; ++i) values.emplace_back(solver.eigenvalues()[i], 1);
    return spectra::bucket_values(std::move(values), bucket_tol);
}

Spectrum bipartite_spectrum(const graphs::BipartiteGraph& g, double bucket_tol,
                            std::uint64_t size_limit) {
    check_size(g.part_size, size_limit, "biadjacency");
    // Eigenvalues of [[0, B], [B^T, 0]] are the +-singular values of B.
    // The symmetric eigensolver on the doubled adjacency is used instead of
    // an SVD of B: Eigen 3.4.0's BDCSVD returns NaN singular values for some
    // of these 0/1 matrices (deflation bug), and the symmetric path delivers
    // the +- pairing exactly.
    const Eigen::Index n = static_cast<Eigen::Index>(2 * g.part_size);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [p, l] : g.edges) {
        a(p, g.part_size + l) = 1.0;
        a(g.part_size + l, p) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("oracle: symmetric eigensolver failed");
    std::vector<std::pair<double, std::uint64_t>> values;
    values.reserve(2 * g.part_size);
    for (Eigen::Index i = 0; i < n; ++i) values.emplace_back(solver.eigenvalues()[i], 1);
    return spectra::bucket_values(std::move(values), bucket_tol);
}

EigList numeric_eig(const CMatrix& m, std::uint64_t size_limit) {
    check_size(static_cast<std::uint64_t>(m.rows()), size_limit, "matrix");
    Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("oracle: complex eigensolver failed");
    EigList out;
    out.source = EigList::Source::Numeric;
    out.values.assign(solver.eigenvalues().data(),
                      solver.eigenvalues().data() + solver.eigenvalues().size());
    return out;
}

CompareReport compare_spectra(const Spectrum& expected, const Spectrum& found, double tol) {
    CompareReport report;
    std::size_t i = 0, j = 0;
    std::uint64_t mi = 0, mj = 0;  // multiplicity already consumed at i / j

    auto expected_left = [&] { return expected.entries[i].second - mi; };
    auto found_left = [&] { return found.entries[j].second - mj; };

    while (i < expected.entries.size() && j < found.entries.size()) {
        double ev = expected.entries[i].first;
        double fv = found.entries[j].first;
        std::uint64_t take = std::min(expected_left(), found_left());
        double dev = std::abs(ev - fv);
        if (dev <= tol) {
            report.matched += take;
        } else {
            report.mismatches.push_back({ev, take, fv, take});
        }
        report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
        mi += take;
        mj += take;
        if (expected_left() == 0) {
            ++i;
            mi = 0;
        }
        if (j < found.entries.size() && found_left() == 0) {
            ++j;
            mj = 0;
        }
    }
    // surplus buckets on either side
    for (; i < expected.entries.size(); ++i, mi = 0)
        report.mismatches.push_back(
            {expected.entries[i].first, expected.entries[i].second - mi, 0.0, 0});
    for (; j < found.entries.size(); ++j, mj = 0)
        report.mismatches.push_back({0.0, 0, found.entries[j].first, found.entries[j].second - mj});
    return report;
}

}  // namespace dkq::oracle
