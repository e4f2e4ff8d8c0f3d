#include "dkq/reps.hpp"

#include <stdexcept>

namespace dkq::reps {

namespace {

void require_m(const MParams& p) {
    if (p.alpha.code == 0) throw std::invalid_argument("reps: M params need alpha != 0");
}
void require_n(const NParams& p) {
    if (p.tau.code == 0) throw std::invalid_argument("reps: N params need tau != 0");
}

}  // namespace

cplx linear_char_value(const chars::CharTable& c, gf::Fel a, gf::Fel b, gf::Fel g,
                       const graphs::GroupElt& x) {
    const auto& f = c.field();
    gf::Fel arg = f.add(f.add(f.mul(a, x.x[0]), f.mul(b, x.x[1])), f.mul(g, x.x[2]));
    return c.psi(arg);
}

cplx linear_char_sum_S(const chars::CharTable& c, gf::Fel a, gf::Fel b, gf::Fel g) {
    const auto& f = c.field();
    const std::uint32_t q = c.q();
    // Summing the inner x-sum per slope t: it is q when g t^2 + b t + a = 0
    // and 0 otherwise, minus the excluded x = 0 term.
    std::uint32_t roots;
    if (g.code != 0) {
        gf::Fel disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), f.mul(g, a)));
        roots = static_cast<std::uint32_t>(1 + c.eta_sign(disc));
    } else if (b.code != 0) {
        roots = 1;
    } else {
        roots = (a.code == 0) ? q : 0;
    }
    return cplx(double(q) * roots - double(q), 0.0);
}

cplx linear_char_sum_S_direct(const chars::CharTable& c, gf::Fel a, gf::Fel b, gf::Fel g) {
    cplx sum = 0;
    for (const auto& s : graphs::gen_set(c.field())) sum += linear_char_value(c, a, b, g, s);
    return sum;
}

CMatrix rep_m(const chars::CharTable& c, const MParams& p, const graphs::GroupElt& x) {
    require_m(p);
    const auto& f = c.field();
    const std::uint32_t q = c.q();
    const gf::Fel two_x1_alpha = f.mul(f.from_int(2), f.mul(x.x[0], p.alpha));
    const gf::Fel row_coeff = f.add(x.x[1], f.mul(f.mul(p.beta, f.inv(p.alpha)), x.x[2]));
    const gf::Fel constant = f.add(f.add(f.mul(p.alpha, x.x[3]), f.mul(p.beta, x.x[4])),
                                   f.mul(p.gamma, x.x[2]));

    CMatrix m = CMatrix::Zero(q, q);
    for (std::uint32_t j = 0; j < q; ++j) {
        gf::Fel col = f.add(two_x1_alpha, {j});
        m(j, col.code) = c.psi(f.add(f.mul(row_coeff, {j}), constant));
    }
    return m;
}

CMatrix rep_n(const chars::CharTable& c, const NParams& p, const graphs::GroupElt& x) {
    require_n(p);
    const auto& f = c.field();
    const std::uint32_t q = c.q();
    const gf::Fel two_x1_tau = f.mul(f.from_int(2), f.mul(x.x[0], p.tau));
    const gf::Fel constant = f.add(f.mul(p.tau, x.x[4]), f.mul(p.mu, x.x[1]));

    CMatrix m = CMatrix::Zero(q, q);
    for (std::uint32_t j = 0; j < q; ++j) {
        gf::Fel col = f.add(two_x1_tau, {j});
        m(j, col.code) = c.psi(f.add(f.mul(x.x[2], {j}), constant));
    }
    return m;
}

CMatrix rep_sum_direct_m(const chars::CharTable& c, const MParams& p) {
    require_m(p);
    CMatrix sum = CMatrix::Zero(c.q(), c.q());
    for (const auto& s : graphs::gen_set(c.field())) sum += rep_m(c, p, s);
    return sum;
}

CMatrix rep_sum_direct_n(const chars::CharTable& c, const NParams& p) {
    require_n(p);
    CMatrix sum = CMatrix::Zero(c.q(), c.q());
    for (const auto& s : graphs::gen_set(c.field())) sum += rep_n(c, p, s);
    return sum;
}

GroupCharacter GroupCharacter::linear(gf::Fel a, gf::Fel b, gf::Fel g) {
    GroupCharacter ch;
    ch.kind_ = Kind::Linear;
    ch.p1_ = a;
    ch.p2_ = b;
    ch.p3_ = g;
    return ch;
}

GroupCharacter GroupCharacter::psi_m(const MParams& p) {
    require_m(p);
    GroupCharacter ch;
    ch.kind_ = Kind::PsiM;
    ch.p1_ = p.alpha;
    ch.p2_ = p.beta;
    ch.p3_ = p.gamma;
    return ch;
}

GroupCharacter GroupCharacter::phi_n(const NParams& p) {
    require_n(p);
    GroupCharacter ch;
    ch.kind_ = Kind::PhiN;
    ch.p1_ = p.tau;
    ch.p2_ = p.mu;
    ch.p3_ = {0};
    return ch;
}

cplx GroupCharacter::eval(const chars::CharTable& c, const graphs::GroupElt& x) const {
    const auto& f = c.field();
    switch (kind_) {
        case Kind::Linear:
            return linear_char_value(c, p1_, p2_, p3_, x);
        case Kind::PsiM: {
            if (x.x[0].code != 0) return 0;
            gf::Fel required_x2 = f.neg(f.mul(f.mul(p2_, f.inv(p1_)), x.x[2]));
            if (x.x[1] != required_x2) return 0;
            gf::Fel arg = f.add(f.add(f.mul(p1_, x.x[3]), f.mul(p2_, x.x[4])),
                                f.mul(p3_, x.x[2]));
            return double(c.q()) * c.psi(arg);
        }
        case Kind::PhiN: {
            if (x.x[0].code != 0 || x.x[2].code != 0) return 0;
            gf::Fel arg = f.add(f.mul(p1_, x.x[4]), f.mul(p2_, x.x[1]));
            return double(c.q()) * c.psi(arg);
        }
    }
    return 0;
}

std::uint64_t GroupCharacter::support_size(std::uint64_t q) const {
    return kind_ == Kind::Linear ? q * q * q * q * q : q * q * q;
}

cplx GroupCharacter::inner_product(const chars::CharTable& c, const GroupCharacter& c1,
                                   const GroupCharacter& c2) {
    const auto& f = c.field();
    const std::uint32_t q = c.q();
    const GroupCharacter& lead = c1.support_size(q) <= c2.support_size(q) ? c1 : c2;

    double norm = 1.0;
    for (int i = 0; i < 5; ++i) norm *= q;

    cplx sum = 0;
    auto accumulate = [&](const graphs::GroupElt& x) {
        cplx v1 = c1.eval(c, x);
        if (v1 == cplx(0, 0)) return;
        sum += v1 * std::conj(c2.eval(c, x));
    };

    if (lead.kind_ == Kind::Linear) {
        // both characters are linear: full q^5 sweep
        graphs::GroupElt x;
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t d = 0; d < q; ++d)
                    for (std::uint32_t e2 = 0; e2 < q; ++e2)
                        for (std::uint32_t g = 0; g < q; ++g) {
                            x.x = {gf::Fel{a}, gf::Fel{b}, gf::Fel{d}, gf::Fel{e2}, gf::Fel{g}};
                            accumulate(x);
                        }
    } else if (lead.kind_ == Kind::PsiM) {
        // x1 = 0, x2 tied to x3: sweep (x3, x4, x5)
        for (std::uint32_t x3 = 0; x3 < q; ++x3) {
            gf::Fel x2 = f.neg(f.mul(f.mul(lead.p2_, f.inv(lead.p1_)), gf::Fel{x3}));
            for (std::uint32_t x4 = 0; x4 < q; ++x4)
                for (std::uint32_t x5 = 0; x5 < q; ++x5)
                    accumulate({{gf::Fel{0}, x2, gf::Fel{x3}, gf::Fel{x4}, gf::Fel{x5}}});
        }
    } else {
        // x1 = x3 = 0: sweep (x2, x4, x5)
        for (std::uint32_t x2 = 0; x2 < q; ++x2)
            for (std::uint32_t x4 = 0; x4 < q; ++x4)
                for (std::uint32_t x5 = 0; x5 < q; ++x5)
                    accumulate({{gf::Fel{0}, gf::Fel{x2}, gf::Fel{0}, gf::Fel{x4}, gf::Fel{x5}}});
    }
    return sum / norm;
}

bool dim_check(std::uint64_t q) {
    using u128 = unsigned __int128;
    u128 q2 = u128(q) * q, q3 = q2 * q;
    return (q3 - q) * q2 + q3 == q3 * q2;
}

}  // namespace dkq::reps
