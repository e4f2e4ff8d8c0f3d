// Table-driven arithmetic for the odd finite fields F_q, q = p^e.
//
// Elements are stored as integer codes in [0, q): the base-p digits of the
// code are the coefficients of the residue polynomial, lowest degree first.
// Multiplication and inversion run through discrete-log tables, addition is
// digit-wise mod p, so everything is O(e) per operation after construction.

#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace dkq::gf {

// An element of F_q, valid only together with the Field that produced it.
struct Fel {
    std::uint32_t code = 0;
    friend auto operator<=>(const Fel&, const Fel&) = default;
};

struct FieldLimits {
    std::uint32_t max_q = 1u << 14;
};

class Field {
public:
    // Builds F_{p^e} for an odd prime p. The modulus is the lexicographically
    // smallest monic irreducible of degree e (coefficients compared from the
    // constant term up); the primitive element is the smallest code whose
    // multiplicative order is q-1. Throws std::invalid_argument on a bad
    // (p, e) and std::length_error when p^e exceeds the limit.
    static Field make(std::uint32_t p, std::uint32_t e, FieldLimits limits = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    // Monic modulus as coefficient list c[0] + c[1] x + ... + c[e] x^e, c[e] = 1.
    // For e = 1 this degenerates to x, i.e. {0, 1}.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fel primitive() const { return primitive_; }

    Fel zero() const { return {0}; }
    Fel one() const { return {1}; }

    // Element with the given code; throws std::out_of_range if code >= q.
    Fel el(std::uint32_t code) const;

    // n mod p embedded in the prime subfield (the constant polynomial).
    Fel from_int(std::int64_t n) const;

    Fel add(Fel a, Fel b) const;
    Fel sub(Fel a, Fel b) const;
    Fel neg(Fel a) const;
    Fel mul(Fel a, Fel b) const;
    Fel inv(Fel a) const;           // throws std::domain_error on inv(0)
    Fel pow(Fel a, std::int64_t n) const;

    // tr(a) = a + a^p + ... + a^{p^{e-1}}, as a residue in [0, p).
    std::uint32_t trace(Fel a) const { return trace_[a.code]; }

    // Index i with primitive^i = a; throws std::domain_error on dlog(0).
    std::uint32_t dlog(Fel a) const;

    // exp_table[i] = primitive^i for i in [0, q-1).
    const std::vector<std::uint32_t>& exp_table() const { return exp_; }

    std::string describe() const;   // "F_9 = F_3[x]/(1 + x^2)" style

private:
    Field() = default;

    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Fel primitive_;
    std::vector<std::uint32_t> exp_;    // length q-1
    std::vector<std::uint32_t> log_;    // length q, log_[0] unused
    std::vector<std::uint32_t> neg_;    // additive inverses
    std::vector<std::uint32_t> trace_;  // trace residues
};

}  // namespace dkq::gf
