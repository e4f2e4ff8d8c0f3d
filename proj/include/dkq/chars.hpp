// Additive and multiplicative characters of F_q and their exponential sums:
// the canonical additive character psi(a) = zeta^tr(a), the multiplicative
// characters chi_k indexed by an exponent k in [0, q-1) against the field's
// primitive element, the quadratic character eta = chi_{(q-1)/2}, quadratic
// Gauss sums, and the two Weil-type sums whose moduli are certified against
// (3 - delta_{0c}) sqrt(q) and 3 sqrt(q).

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dkq/field.hpp"

namespace dkq::chars {

using cplx = std::complex<double>;

struct MultChar {
    std::uint32_t k = 0;
    std::uint32_t order = 1;  // (q-1) / gcd(k, q-1)
};

// A Weil-type sum together with the bound it is expected to satisfy. The
// bound is reported, not enforced: sweeps collect violations instead of
// aborting on the first one.
struct WeilSum {
    cplx value;
    double bound = 0;
    bool within_bound = false;
};

class CharTable {
public:
    explicit CharTable(gf::Field field);

    const gf::Field& field() const { return field_; }
    std::uint32_t q() const { return field_.q(); }
    std::uint32_t p() const { return field_.p(); }

    // zeta^r with zeta = e^{2 pi i / p}; r is reduced mod p.
    cplx zeta_pow(std::int64_t r) const;

    // e^{2 pi i tr(a) / p}
    cplx psi(gf::Fel a) const { return zeta_p_[field_.trace(a)]; }

    MultChar mult_char(std::uint32_t k) const;

    // chi_k(a) = zeta_{q-1}^{k dlog(a)}; chi_k(0) = 0 except chi_0(0) = 1.
    cplx chi(std::uint32_t k, gf::Fel a) const;

    std::uint32_t eta_index() const { return (q() - 1) / 2; }

    // Quadratic character as a sign: +1 on nonzero squares, -1 on
    // non-squares, 0 at 0.
    int eta_sign(gf::Fel a) const { return eta_[a.code]; }
    cplx eta(gf::Fel a) const { return {double(eta_[a.code]), 0.0}; }

    // S_{y^2} = sum_a zeta^{tr(a^2)} in closed form:
    // (-1)^{e-1} sqrt(q) for p = 1 (mod 4), (-i)^{e+2} sqrt(q) for p = 3 (mod 4).
    cplx gauss_sy2() const { return sy2_; }

    // sum_a zeta^{tr(g a^2)} = eta(g) S_{y^2}, closed form; g != 0.
    cplx gauss_square_sum(gf::Fel g) const;
    cplx gauss_square_sum_direct(gf::Fel g) const;

    // sum_a zeta^{tr(b a + c)}: 0 for b != 0, q zeta^{tr(c)} for b = 0.
    cplx linear_exp_sum(gf::Fel b, gf::Fel c) const;
    cplx linear_exp_sum_direct(gf::Fel b, gf::Fel c) const;

    // sum_{a != 0} eta(a^2 - 1), by direct summation. Equals -2 for
    // q = 1 (mod 4) and 0 for q = 3 (mod 4).
    cplx eta_sq_minus_one_sum() const;

    // sum_t chi_k(t) eta(t^2 - 1) psi(c t), nontrivial k; bound (3 - delta_{0c}) sqrt(q).
    WeilSum weil_sum_A(std::uint32_t k, gf::Fel c) const;

    // sum_{t != -1} chi_k(t) eta(t^2 - 1) zeta^{-tr(c (t-1)/(t+1))},
    // nontrivial k, c != 0; bound 3 sqrt(q).
    WeilSum weil_sum_B(std::uint32_t k, gf::Fel c) const;

    // The same sum after the Moebius substitution s = (t-1)/(t+1):
    // sum_s chi_k(-(s-1)^{q-2} (s+1)) eta(s) zeta^{-tr(c s)}.
    cplx weil_sum_B_substituted(std::uint32_t k, gf::Fel c) const;

private:
    gf::Field field_;
    std::vector<cplx> zeta_p_;    // p-th roots of unity
    std::vector<cplx> zeta_qm1_;  // (q-1)-th roots of unity
    std::vector<int> eta_;        // quadratic character signs per code
    cplx sy2_;
};

}  // namespace dkq::chars
