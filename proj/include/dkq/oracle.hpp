// Brute-force numeric ground truth: dense symmetric eigensolve of adjacency
// matrices, SVD-based spectra of bipartite graphs (+-singular values of the
// biadjacency block), general dense eigensolve of complex blocks, and
// multiset comparison of bucketed spectra.

#pragma once

#include <cstdint>
#include <vector>

#include "dkq/graphs.hpp"
#include "dkq/spectra.hpp"

namespace dkq::oracle {

using spectra::CMatrix;
using spectra::EigList;
using spectra::Spectrum;

inline constexpr std::uint64_t kDefaultSizeLimit = 4000;

// All n real eigenvalues of the adjacency matrix.
Spectrum dense_spectrum(const graphs::SimpleGraph& g, double bucket_tol,
                        std::uint64_t size_limit = kDefaultSizeLimit);

// Spectrum {+-sigma_i} of the 2 q^k adjacency from the singular values of
// the q^k x q^k biadjacency matrix.
Spectrum bipartite_spectrum(const graphs::BipartiteGraph& g, double bucket_tol,
                            std::uint64_t size_limit = kDefaultSizeLimit);

// All eigenvalues of a general complex matrix.
EigList numeric_eig(const CMatrix& m, std::uint64_t size_limit = kDefaultSizeLimit);

struct Mismatch {
    double expected_value = 0;
    std::uint64_t expected_mult = 0;
    double found_value = 0;
    std::uint64_t found_mult = 0;
};

struct CompareReport {
    std::uint64_t matched = 0;
    std::vector<Mismatch> mismatches;
    double max_abs_deviation = 0;
    bool equal(double tol) const { return mismatches.empty() && max_abs_deviation <= tol; }
};

// Greedy aligned walk over the two descending multiplicity lists; buckets
// whose values agree within tol consume each other.
CompareReport compare_spectra(const Spectrum& expected, const Spectrum& found, double tol);

}  // namespace dkq::oracle
