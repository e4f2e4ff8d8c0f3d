// Irreducible representations of G = (F_q^5, *): the q^3 linear characters
// chi_{a,b,g}(X) = zeta^{tr(a x1 + b x2 + g x3)}, the q-dimensional families
//   M_{alpha,beta,gamma}(X) = [zeta^{tr((x2 + (beta/alpha) x3) j
//                              + alpha x4 + beta x5 + gamma x3)}
//                              delta_{2 x1 alpha + j, k}]      (alpha != 0)
//   N_{tau,mu}(X)           = [zeta^{tr(x3 j + tau x5 + mu x2)}
//                              delta_{2 x1 tau + j, k}]        (tau != 0)
// together with their sums over the generating set S, trace characters, and
// the orthonormality inner product. The dimension count
// (q^3 - q) q^2 + q^3 = q^5 confirms the list is complete.

#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "dkq/chars.hpp"
#include "dkq/graphs.hpp"

namespace dkq::reps {

using chars::cplx;
using CMatrix = Eigen::MatrixXcd;

struct MParams {
    gf::Fel alpha, beta, gamma;  // alpha != 0
};

struct NParams {
    gf::Fel tau, mu;  // tau != 0
};

cplx linear_char_value(const chars::CharTable& c, gf::Fel a, gf::Fel b, gf::Fel g,
                       const graphs::GroupElt& x);

// chi_{a,b,g}(S) = q R - q where R = #{t : g t^2 + b t + a = 0}; the trivial
// character gives |S| = q^2 - q.
cplx linear_char_sum_S(const chars::CharTable& c, gf::Fel a, gf::Fel b, gf::Fel g);
cplx linear_char_sum_S_direct(const chars::CharTable& c, gf::Fel a, gf::Fel b, gf::Fel g);

CMatrix rep_m(const chars::CharTable& c, const MParams& p, const graphs::GroupElt& x);
CMatrix rep_n(const chars::CharTable& c, const NParams& p, const graphs::GroupElt& x);

// sum_{g in S} of the representation matrices, by direct accumulation.
CMatrix rep_sum_direct_m(const chars::CharTable& c, const MParams& p);
CMatrix rep_sum_direct_n(const chars::CharTable& c, const NParams& p);

// A character of G in closed trace form, for inner-product verification.
// psi_{a,b,g} = Tr M_{a,b,g} is supported on x1 = 0, x2 = -(b/a) x3;
// phi_{t,m} = Tr N_{t,m} is supported on x1 = x3 = 0.
class GroupCharacter {
public:
    static GroupCharacter linear(gf::Fel a, gf::Fel b, gf::Fel g);
    static GroupCharacter psi_m(const MParams& p);
    static GroupCharacter phi_n(const NParams& p);

    cplx eval(const chars::CharTable& c, const graphs::GroupElt& x) const;

    // [c1, c2] = (1/q^5) sum_X c1(X) conj(c2(X)), iterating only over the
    // support of the structurally smaller character.
    static cplx inner_product(const chars::CharTable& c, const GroupCharacter& c1,
                              const GroupCharacter& c2);

private:
    enum class Kind { Linear, PsiM, PhiN } kind_ = Kind::Linear;
    gf::Fel p1_, p2_, p3_;  // (a,b,g) / (alpha,beta,gamma) / (tau,mu,-)
    std::uint64_t support_size(std::uint64_t q) const;
};

// (q^3 - q) q^2 + q^3 == q^5, in exact integer arithmetic.
bool dim_check(std::uint64_t q);

}  // namespace dkq::reps
