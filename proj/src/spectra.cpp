#include "dkq/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dkq::spectra {

using gf::Fel;

std::uint64_t Spectrum::total_multiplicity() const {
    std::uint64_t t = 0;
    for (auto& [v, m] : entries) t += m;
    return t;
}

double Spectrum::moment(int power) const {
    double s = 0;
    for (auto& [v, m] : entries) s += double(m) * std::pow(v, power);
    return s;
}

double default_bucket_tol(std::uint32_t q) { return 1e-6 * std::max(1u, q); }

Spectrum bucket_values(std::vector<std::pair<double, std::uint64_t>> values, double bucket_tol) {
    std::sort(values.begin(), values.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    Spectrum s;
    s.bucket_tol = bucket_tol;
    std::size_t i = 0;
    while (i < values.size()) {
        double weighted = values[i].first * double(values[i].second);
        std::uint64_t mult = values[i].second;
        double last = values[i].first;
        std::size_t j = i + 1;
        while (j < values.size() && last - values[j].first < bucket_tol) {
            weighted += values[j].first * double(values[j].second);
            mult += values[j].second;
            last = values[j].first;
            ++j;
        }
        s.entries.emplace_back(weighted / double(mult), mult);
        i = j;
    }
    return s;
}

double lambda2(const Spectrum& s) {
    if (s.total_multiplicity() < 2) throw std::invalid_argument("spectra: lambda2 needs >= 2 values");
    return s.entries.front().second > 1 ? s.entries.front().first : s.entries[1].first;
}

std::optional<double> below_top(const Spectrum& s) {
    if (s.entries.size() < 2) return std::nullopt;
    return s.entries[1].first;
}

namespace {

struct EntryFG {
    Fel f, g;
};

cplx entry_from_fg(const chars::CharTable& c, const gf::Field& fld, std::uint32_t j,
                   std::uint32_t k, const EntryFG& fg) {
    if (j == k) return 0;
    if (fg.g.code == 0) {
        if (fg.f.code != 0) return 0;
        return cplx(double(c.q()), 0);
    }
    // eta(G) zeta^{-tr(F^2 / 4G)} S_{y^2}
    Fel arg = fld.mul(fld.mul(fg.f, fg.f),
                      fld.inv(fld.mul(fld.from_int(4), fg.g)));
    return c.eta(fg.g) * c.zeta_pow(-std::int64_t(fld.trace(arg))) * c.gauss_sy2();
}

}  // namespace

CMatrix m_matrix_entries(const chars::CharTable& c, const MParams& p) {
    if (p.alpha.code == 0) throw std::invalid_argument("spectra: M entries need alpha != 0");
    const auto& fld = c.field();
    const std::uint32_t q = c.q();
    const Fel inv_2a = fld.inv(fld.mul(fld.from_int(2), p.alpha));
    const Fel ba = fld.mul(p.beta, fld.inv(p.alpha));

    CMatrix m(q, q);
    for (std::uint32_t j = 0; j < q; ++j) {
        for (std::uint32_t k = 0; k < q; ++k) {
            // x = (k - j)/(2 alpha); F = x j + alpha x^2; G = (beta/alpha) F + gamma x
            Fel x = fld.mul(fld.sub({k}, {j}), inv_2a);
            Fel fq = fld.add(fld.mul(x, {j}), fld.mul(p.alpha, fld.mul(x, x)));
            Fel gq = fld.add(fld.mul(ba, fq), fld.mul(p.gamma, x));
            m(j, k) = entry_from_fg(c, fld, j, k, {fq, gq});
        }
    }
    return m;
}

CMatrix n_matrix_entries(const chars::CharTable& c, const NParams& p) {
    if (p.tau.code == 0) throw std::invalid_argument("spectra: N entries need tau != 0");
    const auto& fld = c.field();
    const std::uint32_t q = c.q();
    const Fel inv_2t = fld.inv(fld.mul(fld.from_int(2), p.tau));

    CMatrix m(q, q);
    for (std::uint32_t j = 0; j < q; ++j) {
        for (std::uint32_t k = 0; k < q; ++k) {
            Fel x = fld.mul(fld.sub({k}, {j}), inv_2t);
            Fel fq = fld.mul(p.mu, x);
            Fel gq = fld.add(fld.mul(x, {j}), fld.mul(p.tau, fld.mul(x, x)));
            m(j, k) = entry_from_fg(c, fld, j, k, {fq, gq});
        }
    }
    return m;
}

MParams reduce_m_params(const gf::Field& f, const MParams& p) {
    if (p.alpha.code == 0) throw std::invalid_argument("spectra: reduction needs alpha != 0");
    return {f.one(), p.beta, f.mul(p.alpha, p.gamma)};
}

CMatrix u_matrix(const chars::CharTable& c, Fel beta) {
    if (beta.code == 0) throw std::invalid_argument("spectra: U matrix needs beta != 0");
    const auto& fld = c.field();
    const std::uint32_t q = c.q();
    const cplx anti = c.eta(fld.neg(fld.one())) * c.gauss_sy2();

    CMatrix u(q, q);
    for (std::uint32_t j = 0; j < q; ++j) {
        for (std::uint32_t k = 0; k < q; ++k) {
            if (j != 0 && Fel{k} == fld.neg({j})) {
                u(j, k) = anti;
            } else {
                Fel d = fld.sub(fld.mul({k}, {k}), fld.mul({j}, {j}));
                u(j, k) = c.eta(fld.mul(beta, d));
            }
        }
    }
    return u;
}

std::vector<cplx> u_similarity_diag(const chars::CharTable& c, Fel beta) {
    const auto& fld = c.field();
    const Fel inv_16b = fld.inv(fld.mul(fld.from_int(16), beta));
    std::vector<cplx> d(c.q());
    for (std::uint32_t j = 0; j < c.q(); ++j)
        d[j] = c.zeta_pow(fld.trace(fld.mul(fld.mul({j}, {j}), inv_16b)));
    return d;
}

CMatrix w_matrix(const chars::CharTable& c, Fel beta, Fel gamma) {
    if (beta.code == 0 || gamma.code == 0)
        throw std::invalid_argument("spectra: W matrix needs beta, gamma != 0");
    const auto& fld = c.field();
    const std::uint32_t q = c.q();
    // gamma^2 / (4 beta^3)
    const Fel cprime = fld.mul(fld.mul(gamma, gamma),
                               fld.inv(fld.mul(fld.from_int(4), fld.pow(beta, 3))));

    CMatrix w(q, q);
    for (std::uint32_t j = 0; j < q; ++j) {
        for (std::uint32_t k = 0; k < q; ++k) {
            Fel diff = fld.sub(fld.mul({k}, {k}), fld.mul({j}, {j}));
            if (diff.code == 0) {
                w(j, k) = 0;
                continue;
            }
            Fel ratio = fld.mul(fld.sub({k}, {j}), fld.inv(fld.add({k}, {j})));
            w(j, k) = c.eta(fld.mul(beta, diff)) *
                      c.zeta_pow(-std::int64_t(fld.trace(fld.mul(cprime, ratio))));
        }
    }
    return w;
}

std::vector<cplx> w_similarity_diag(const chars::CharTable& c, Fel beta, Fel gamma) {
    const auto& fld = c.field();
    const Fel inv_16b = fld.inv(fld.mul(fld.from_int(16), beta));
    const Fel g_4b2 = fld.mul(gamma, fld.inv(fld.mul(fld.from_int(4), fld.mul(beta, beta))));
    std::vector<cplx> d(c.q());
    for (std::uint32_t j = 0; j < c.q(); ++j) {
        Fel arg = fld.sub(fld.mul(fld.mul({j}, {j}), inv_16b), fld.mul(g_4b2, {j}));
        d[j] = c.zeta_pow(-std::int64_t(fld.trace(arg)));
    }
    return d;
}

namespace {

// Roots of lambda^2 - T lambda - D = 0.
std::pair<cplx, cplx> quadratic_roots(cplx t, cplx d) {
    cplx disc = std::sqrt(t * t + 4.0 * d);
    return {(t + disc) / 2.0, (t - disc) / 2.0};
}

// The two non-character eigenvalues shared by the W-type blocks, with
// sign = eta(beta) (or eta(tau)) and theta_num = tr of the trace constant.
std::pair<cplx, cplx> w_form_quadratic(const chars::CharTable& c, int sign,
                                       std::uint32_t theta_num) {
    const double q = c.q();
    const int eta_m1 = c.eta_sign(c.field().neg(c.field().one()));
    cplx t = double(eta_m1) * c.gauss_sy2() -
             double(sign) * c.zeta_pow(-std::int64_t(theta_num)) -
             double(eta_m1 * sign) * c.zeta_pow(theta_num);
    cplx d = cplx(eta_m1 * (q - 1.0), 0);
    return quadratic_roots(t, d);
}

}  // namespace

EigList eig_closed_u(const chars::CharTable& c, Fel beta) {
    if (beta.code == 0) throw std::invalid_argument("spectra: eig_closed_u needs beta != 0");
    const auto& fld = c.field();
    const std::uint32_t q = c.q();
    const Fel minus_one = fld.neg(fld.one());
    const int eta_m1 = c.eta_sign(minus_one);
    const double eta_b = c.eta_sign(beta);

    EigList out;
    out.source = EigList::Source::ClosedForm;
    out.values.reserve(q);

    for (std::uint32_t k = 1; k < q - 1; ++k) {
        // lambda_chi = eta(beta) sum_t chi(t) eta(t^2-1) + chi(-1) eta(-1) S_{y^2}
        cplx a_sum = c.weil_sum_A(k, fld.zero()).value;
        out.values.push_back(eta_b * a_sum + c.chi(k, minus_one) * double(eta_m1) * c.gauss_sy2());
    }

    // Lemma of the (z,1,...,1) eigenvectors: for q = 1 (mod 4) the linear
    // coefficient is S_{y^2} - 2 eta(beta); for q = 3 (mod 4) it is -S_{y^2}.
    cplx t = (q % 4 == 1) ? c.gauss_sy2() - 2.0 * eta_b : -c.gauss_sy2();
    cplx d = cplx(eta_m1 * (double(q) - 1.0), 0);
    auto [r1, r2] = quadratic_roots(t, d);
    out.values.push_back(r1);
    out.values.push_back(r2);
    return out;
}

EigList eig_closed_w(const chars::CharTable& c, Fel beta, Fel gamma) {
    if (beta.code == 0 || gamma.code == 0)
        throw std::invalid_argument("spectra: eig_closed_w needs beta, gamma != 0");
    const auto& fld = c.field();
    const std::uint32_t q = c.q();
    const int eta_b = c.eta_sign(beta);
    const Fel cprime = fld.mul(fld.mul(gamma, gamma),
                               fld.inv(fld.mul(fld.from_int(4), fld.pow(beta, 3))));

    EigList out;
    out.source = EigList::Source::ClosedForm;
    out.values.reserve(q);

    for (std::uint32_t k = 1; k < q - 1; ++k)
        out.values.push_back(double(eta_b) * c.weil_sum_B(k, cprime).value);

    auto [r1, r2] = w_form_quadratic(c, eta_b, fld.trace(cprime));
    out.values.push_back(r1);
    out.values.push_back(r2);
    return out;
}

EigList eig_closed_n(const chars::CharTable& c, const NParams& p) {
    if (p.tau.code == 0) throw std::invalid_argument("spectra: eig_closed_n needs tau != 0");
    if (p.mu.code == 0) return eig_closed_u(c, p.tau);

    const auto& fld = c.field();
    const std::uint32_t q = c.q();
    const int eta_t = c.eta_sign(p.tau);
    // mu^2 / (4 tau)
    const Fel cprime = fld.mul(fld.mul(p.mu, p.mu),
                               fld.inv(fld.mul(fld.from_int(4), p.tau)));

    EigList out;
    out.source = EigList::Source::ClosedForm;
    out.values.reserve(q);

    for (std::uint32_t k = 1; k < q - 1; ++k)
        out.values.push_back(double(eta_t) * c.weil_sum_B(k, cprime).value);

    auto [r1, r2] = w_form_quadratic(c, eta_t, fld.trace(cprime));
    out.values.push_back(r1);
    out.values.push_back(r2);
    return out;
}

namespace {

EigList numeric_block_eig(const CMatrix& m) {
    Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectra: dense eigensolver failed on a block");
    EigList out;
    out.source = EigList::Source::Numeric;
    out.values.assign(solver.eigenvalues().data(),
                      solver.eigenvalues().data() + solver.eigenvalues().size());
    return out;
}

}  // namespace

EigList eig_block_m(const chars::CharTable& c, const MParams& p) {
    const auto reduced = reduce_m_params(c.field(), p);
    if (reduced.beta.code == 0)
        return numeric_block_eig(m_matrix_entries(c, reduced));

    EigList eigs = reduced.gamma.code == 0 ? eig_closed_u(c, reduced.beta)
                                           : eig_closed_w(c, reduced.beta, reduced.gamma);
    for (auto& v : eigs.values) v *= c.gauss_sy2();
    return eigs;
}

EigList eig_block_n(const chars::CharTable& c, const NParams& p) {
    EigList eigs = eig_closed_n(c, p);
    for (auto& v : eigs.values) v *= c.gauss_sy2();
    return eigs;
}

Spectrum assemble_point_spectrum(const chars::CharTable& c, double bucket_tol) {
    const auto& fld = c.field();
    const std::uint32_t q = c.q();
    const double imag_tol = 1e-8 * q;

    std::vector<std::pair<double, std::uint64_t>> values;
    values.reserve(std::size_t(q) * q * 2 + 8);

    auto push_real = [&](cplx v, std::uint64_t mult) {
        if (std::abs(v.imag()) > imag_tol)
            throw std::runtime_error("spectra: eigenvalue with non-real residue " +
                                     std::to_string(v.imag()));
        values.emplace_back(v.real(), mult);
    };

    // (a) linear characters: chi_{a,b,g}(S) = q R - q, aggregated by root count
    std::uint64_t count_by_roots[3] = {0, 0, 0};
    std::uint64_t count_trivial = 0;
    for (std::uint32_t gc = 0; gc < q; ++gc)
        for (std::uint32_t bc = 0; bc < q; ++bc)
            for (std::uint32_t ac = 0; ac < q; ++ac) {
                if (gc != 0) {
                    Fel disc = fld.sub(fld.mul({bc}, {bc}),
                                       fld.mul(fld.from_int(4), fld.mul({gc}, {ac})));
                    count_by_roots[1 + c.eta_sign(disc)] += 1;
                } else if (bc != 0) {
                    count_by_roots[1] += 1;
                } else if (ac != 0) {
                    count_by_roots[0] += 1;
                } else {
                    count_trivial += 1;
                }
            }
    const double dq = q;
    if (count_by_roots[0]) values.emplace_back(-dq, count_by_roots[0]);
    if (count_by_roots[1]) values.emplace_back(0.0, count_by_roots[1]);
    if (count_by_roots[2]) values.emplace_back(dq, count_by_roots[2]);
    values.emplace_back(dq * dq - dq, count_trivial);  // the trivial character, once

    // (b) M blocks through the alpha-reduction: every reduced pair
    // (beta, gamma') stands for q-1 source triples, and the determinant power
    // contributes q, so each eigenvalue carries multiplicity q(q-1).
    const std::uint64_t m_mult = std::uint64_t(q) * (q - 1);
    for (std::uint32_t bc = 0; bc < q; ++bc)
        for (std::uint32_t gc = 0; gc < q; ++gc) {
            EigList eigs = eig_block_m(c, {fld.one(), {bc}, {gc}});
            for (cplx v : eigs.values) push_real(v, m_mult);
        }

    // (c) N blocks, multiplicity q per (tau, mu)
    for (std::uint32_t tc = 1; tc < q; ++tc)
        for (std::uint32_t mc = 0; mc < q; ++mc) {
            EigList eigs = eig_block_n(c, {{tc}, {mc}});
            for (cplx v : eigs.values) push_real(v, q);
        }

    return bucket_values(std::move(values), bucket_tol);
}

Spectrum lift_to_bipartite(const Spectrum& s, std::uint32_t q) {
    const double tol = std::max(s.bucket_tol, 1e-9);
    std::vector<std::pair<double, std::uint64_t>> values;
    values.reserve(s.entries.size() * 2);
    for (auto& [v, m] : s.entries) {
        double shifted = v + double(q);
        if (shifted < -tol)
            throw std::domain_error("spectra: halved-graph eigenvalue below -q");
        if (shifted <= tol) {
            values.emplace_back(0.0, 2 * m);
        } else {
            double root = std::sqrt(shifted);
            values.emplace_back(root, m);
            values.emplace_back(-root, m);
        }
    }
    return bucket_values(std::move(values), s.bucket_tol);
}

BoundsReport bounds_report(const chars::CharTable& c, double bucket_tol) {
    const std::uint32_t q = c.q();
    Spectrum point = assemble_point_spectrum(c, bucket_tol);
    Spectrum lifted = lift_to_bipartite(point, q);

    BoundsReport r;
    r.q = q;
    r.lambda2_point = lambda2(point);
    r.lambda2_bipartite = lambda2(lifted);
    r.two_sqrt_q = 2.0 * std::sqrt(double(q));
    r.two_sqrt_q_minus_1 = 2.0 * std::sqrt(double(q) - 1.0);
    r.spectral_gap = double(q) - r.lambda2_bipartite;
    r.cheeger_lower = r.spectral_gap / 2.0;
    r.cheeger_upper = std::sqrt(std::max(0.0, double(q) * q - r.lambda2_bipartite * r.lambda2_bipartite));
    r.bound_2sqrtq = r.lambda2_bipartite <= r.two_sqrt_q + 1e-9;
    r.ramanujan = r.lambda2_bipartite <= r.two_sqrt_q_minus_1 + 1e-9;
    return r;
}

}  // namespace dkq::spectra
