#include "dkq/chars.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace dkq::chars {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

CharTable::CharTable(gf::Field field) : field_(std::move(field)) {
    const std::uint32_t p = field_.p(), q = field_.q(), e = field_.e();

    zeta_p_.resize(p);
    for (std::uint32_t r = 0; r < p; ++r)
        zeta_p_[r] = std::polar(1.0, kTwoPi * r / p);

    zeta_qm1_.resize(q - 1);
    for (std::uint32_t r = 0; r < q - 1; ++r)
        zeta_qm1_[r] = std::polar(1.0, kTwoPi * r / (q - 1));

    // eta(a) = (-1)^dlog(a): the squares are exactly the even powers of the
    // primitive element.
    eta_.assign(q, 0);
    for (std::uint32_t c = 1; c < q; ++c)
        eta_[c] = (field_.dlog({c}) % 2 == 0) ? 1 : -1;

    const double root_q = std::sqrt(double(q));
    if (p % 4 == 1) {
        sy2_ = cplx((e % 2 == 1) ? root_q : -root_q, 0.0);
    } else {
        // (-i)^{e+2} cycles with period 4 in e.
        static const cplx minus_i_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
        sy2_ = minus_i_pow[(e + 2) % 4] * root_q;
    }
}

cplx CharTable::zeta_pow(std::int64_t r) const {
    std::int64_t m = r % field_.p();
    if (m < 0) m += field_.p();
    return zeta_p_[static_cast<std::size_t>(m)];
}

MultChar CharTable::mult_char(std::uint32_t k) const {
    if (k >= q() - 1) throw std::invalid_argument("chars: character index out of range");
    return {k, (q() - 1) / std::gcd(k, q() - 1)};
}

cplx CharTable::chi(std::uint32_t k, gf::Fel a) const {
    if (a.code == 0) return k == 0 ? cplx(1, 0) : cplx(0, 0);
    std::uint64_t r = std::uint64_t(k) * field_.dlog(a) % (q() - 1);
    return zeta_qm1_[static_cast<std::size_t>(r)];
}

cplx CharTable::gauss_square_sum(gf::Fel g) const {
    if (g.code == 0) throw std::invalid_argument("chars: gauss_square_sum requires g != 0");
    return eta(g) * sy2_;
}

cplx CharTable::gauss_square_sum_direct(gf::Fel g) const {
    if (g.code == 0) throw std::invalid_argument("chars: gauss_square_sum requires g != 0");
    cplx sum = 0;
    for (std::uint32_t c = 0; c < q(); ++c) {
        gf::Fel a{c};
        sum += psi(field_.mul(g, field_.mul(a, a)));
    }
    return sum;
}

cplx CharTable::linear_exp_sum(gf::Fel b, gf::Fel c) const {
    if (b.code != 0) return 0;
    return double(q()) * psi(c);
}

cplx CharTable::linear_exp_sum_direct(gf::Fel b, gf::Fel c) const {
    cplx sum = 0;
    for (std::uint32_t t = 0; t < q(); ++t)
        sum += psi(field_.add(field_.mul(b, {t}), c));
    return sum;
}

cplx CharTable::eta_sq_minus_one_sum() const {
    cplx sum = 0;
    const gf::Fel one = field_.one();
    for (std::uint32_t c = 1; c < q(); ++c) {
        gf::Fel a{c};
        sum += eta(field_.sub(field_.mul(a, a), one));
    }
    return sum;
}

WeilSum CharTable::weil_sum_A(std::uint32_t k, gf::Fel c) const {
    if (k == 0 || k >= q() - 1)
        throw std::invalid_argument("chars: weil_sum_A requires a nontrivial character");
    const gf::Fel one = field_.one();
    cplx sum = 0;
    for (std::uint32_t t = 1; t < q(); ++t) {  // chi(0) = 0 for k != 0
        gf::Fel ft{t};
        int es = eta_sign(field_.sub(field_.mul(ft, ft), one));
        if (es == 0) continue;
        sum += chi(k, ft) * double(es) * psi(field_.mul(c, ft));
    }
    double bound = (c.code == 0 ? 2.0 : 3.0) * std::sqrt(double(q()));
    return {sum, bound, std::abs(sum) <= bound + 1e-9};
}

WeilSum CharTable::weil_sum_B(std::uint32_t k, gf::Fel c) const {
    if (k == 0 || k >= q() - 1)
        throw std::invalid_argument("chars: weil_sum_B requires a nontrivial character");
    if (c.code == 0) throw std::invalid_argument("chars: weil_sum_B requires c != 0");
    const gf::Fel one = field_.one();
    const gf::Fel minus_one = field_.neg(one);
    cplx sum = 0;
    for (std::uint32_t t = 0; t < q(); ++t) {
        gf::Fel ft{t};
        if (ft == minus_one) continue;
        int es = eta_sign(field_.sub(field_.mul(ft, ft), one));
        if (es == 0) continue;
        gf::Fel arg = field_.mul(c, field_.mul(field_.sub(ft, one), field_.inv(field_.add(ft, one))));
        sum += chi(k, ft) * double(es) * zeta_pow(-std::int64_t(field_.trace(arg)));
    }
    double bound = 3.0 * std::sqrt(double(q()));
    return {sum, bound, std::abs(sum) <= bound + 1e-9};
}

cplx CharTable::weil_sum_B_substituted(std::uint32_t k, gf::Fel c) const {
    if (k == 0 || k >= q() - 1)
        throw std::invalid_argument("chars: weil_sum_B requires a nontrivial character");
    const gf::Fel one = field_.one();
    cplx sum = 0;
    for (std::uint32_t s = 0; s < q(); ++s) {
        gf::Fel fs{s};
        int es = eta_sign(fs);
        if (es == 0) continue;
        // -(s-1)^{q-2} (s+1); the q-2 power is the inverse away from s = 1
        // and vanishes there, killing the term through chi.
        gf::Fel arg = field_.neg(
            field_.mul(field_.pow(field_.sub(fs, one), q() - 2), field_.add(fs, one)));
        sum += chi(k, arg) * double(es) * zeta_pow(-std::int64_t(field_.trace(field_.mul(c, fs))));
    }
    return sum;
}

}  // namespace dkq::chars
