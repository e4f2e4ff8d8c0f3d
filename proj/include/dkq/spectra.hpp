// Closed-form spectra of the block matrices M_{alpha,beta,gamma}(S) and
// N_{tau,mu}(S), and assembly of the complete point-graph spectrum.
//
// The entry formula shared by both families: with F, G the quadratics
// obtained from the generator sum (F = (k^2-j^2)/(4 alpha), G = (beta/alpha) F
// + gamma (k-j)/(2 alpha) for M; F = mu (k-j)/(2 tau), G = (k^2-j^2)/(4 tau)
// for N), the (j,k) entry is
//   eta(G) zeta^{-tr(F^2/4G)} S_{y^2}   if G != 0,
//   0                                   if G = 0, F != 0, or j = k,
//   q                                   otherwise.
//
// After the reduction M_{alpha,beta,gamma}(S) = M_{1,beta,alpha gamma}(S) and
// a diagonal-phase similarity, the beta != 0 blocks become U_beta (gamma' = 0)
// or W_{beta,gamma'} (gamma' != 0), whose eigenvalues are exponential sums:
// q-2 eigenvectors (chi(j))_j for the nontrivial multiplicative characters,
// plus two eigenvalues solving a quadratic. The point-graph spectrum is the
// multiset union of the q^3 linear character sums (multiplicity 1), the M
// block eigenvalues (multiplicity q(q-1) per reduced pair), and the N block
// eigenvalues (multiplicity q per pair).
//
// Note on the two quadratic eigenvalues of the W-type blocks: deriving the
// row identity via the Gauss sum sum_s eta(s) zeta^{-tr(cs)} = eta(-c) S_{y^2}
// gives, with s = eta(beta) and theta = (2 pi / p) tr(gamma^2 / 4 beta^3),
//   lambda^2 - T lambda - eta(-1)(q-1) = 0,
//   T = eta(-1) S_{y^2} - s zeta^{-tr} - eta(-1) s zeta^{tr},
// i.e. T = S_{y^2} - 2 s cos(theta) for q = 1 (mod 4) and
// T = -S_{y^2} + 2 i s sin(theta) for q = 3 (mod 4). These closed forms are
// cross-checked against a dense eigensolver for every block at many q.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "dkq/chars.hpp"
#include "dkq/reps.hpp"

namespace dkq::spectra {

using chars::cplx;
using reps::CMatrix;
using reps::MParams;
using reps::NParams;

// Real eigenvalue multiset with deterministic tolerance bucketing: values
// sorted descending, adjacent raw values merged while they differ by less
// than bucket_tol, each bucket represented by its multiplicity-weighted mean.
struct Spectrum {
    std::vector<std::pair<double, std::uint64_t>> entries;  // descending
    double bucket_tol = 0;

    std::uint64_t total_multiplicity() const;
    double top() const { return entries.front().first; }
    double moment(int power) const;  // sum over values of m * value^power
};

double default_bucket_tol(std::uint32_t q);

Spectrum bucket_values(std::vector<std::pair<double, std::uint64_t>> values, double bucket_tol);

// Second entry of the multiplicity-expanded descending list.
double lambda2(const Spectrum& s);

// Largest value strictly below the top bucket, when one exists.
std::optional<double> below_top(const Spectrum& s);

struct EigList {
    std::vector<cplx> values;  // exactly q of them
    enum class Source { ClosedForm, Numeric } source = Source::ClosedForm;
};

// Entry formulas (the G != 0 / G = 0 case split above).
CMatrix m_matrix_entries(const chars::CharTable& c, const MParams& p);
CMatrix n_matrix_entries(const chars::CharTable& c, const NParams& p);

// M_{alpha,beta,gamma}(S) = M_{1,beta,alpha gamma}(S).
MParams reduce_m_params(const gf::Field& f, const MParams& p);

// U_beta: eta(-1) S_{y^2} on the antidiagonal j = -k != 0, eta(beta (k^2-j^2))
// elsewhere. Satisfies M_{1,beta,0}(S) = S_{y^2} D U_beta D^* with
// D = diag(u_similarity_diag).
CMatrix u_matrix(const chars::CharTable& c, gf::Fel beta);
std::vector<cplx> u_similarity_diag(const chars::CharTable& c, gf::Fel beta);

// W_{beta,gamma}: 0 on j^2 = k^2, else
// eta(beta (k^2-j^2)) zeta^{-tr(gamma^2 (k-j) / (4 beta^3 (k+j)))}.
// The shifted matrix M'(j,k) = M_{1,beta,gamma}(S)(j - gamma/beta, k - gamma/beta)
// equals S_{y^2} D^* W D with D = diag(w_similarity_diag).
CMatrix w_matrix(const chars::CharTable& c, gf::Fel beta, gf::Fel gamma);
std::vector<cplx> w_similarity_diag(const chars::CharTable& c, gf::Fel beta, gf::Fel gamma);

// Closed-form eigenvalue lists (unscaled: these are spectra of U / W / N/S_{y^2}).
EigList eig_closed_u(const chars::CharTable& c, gf::Fel beta);
EigList eig_closed_w(const chars::CharTable& c, gf::Fel beta, gf::Fel gamma);
EigList eig_closed_n(const chars::CharTable& c, const NParams& p);

// Eigenvalues of the block sums themselves (scaled by S_{y^2} where the
// similarity applies). beta = 0 falls back to a dense eigensolver on the
// entry formula; everything else is closed form.
EigList eig_block_m(const chars::CharTable& c, const MParams& p);
EigList eig_block_n(const chars::CharTable& c, const NParams& p);

// Complete point-graph spectrum: q^5 eigenvalues including multiplicity.
// Throws std::runtime_error if any eigenvalue keeps an imaginary residue
// above 1e-8 q (that would signal a formula or implementation fault).
Spectrum assemble_point_spectrum(const chars::CharTable& c, double bucket_tol);

// Halved-graph lift: (lambda, m) -> (+-sqrt(lambda + q), m), with
// lambda = -q collapsing to (0, 2m). Throws if a value drops below
// -q - tolerance.
Spectrum lift_to_bipartite(const Spectrum& s, std::uint32_t q);

struct BoundsReport {
    std::uint32_t q = 0;
    double lambda2_bipartite = 0;  // lifted D(5,q) value
    double lambda2_point = 0;
    double two_sqrt_q = 0;
    double two_sqrt_q_minus_1 = 0;
    double spectral_gap = 0;   // q - lambda2_bipartite
    double cheeger_lower = 0;  // (q - lambda2)/2
    double cheeger_upper = 0;  // sqrt(q^2 - lambda2^2)
    bool bound_2sqrtq = false;
    bool ramanujan = false;
};

BoundsReport bounds_report(const chars::CharTable& c, double bucket_tol);

}  // namespace dkq::spectra
