#include <doctest.h>

#include <stdexcept>
#include <set>
#include <vector>

#include "dkq/field.hpp"

using dkq::gf::Fel;
using dkq::gf::Field;

namespace {

// Test-local oracle: the first monic irreducible quadratic over F_p in lex
// order (constant coefficient most significant), found by root search.
std::vector<std::uint32_t> first_irreducible_quadratic(std::uint32_t p) {
    for (std::uint32_t c0 = 0; c0 < p; ++c0)
        for (std::uint32_t c1 = 0; c1 < p; ++c1) {
            bool has_root = false;
            for (std::uint32_t x = 0; x < p && !has_root; ++x)
                has_root = (x * x + c1 * x + c0) % p == 0;
            if (!has_root) return {c0, c1, 1};
        }
    return {};
}

// Multiplication of residue polynomials mod (modulus, p), coefficient lists
// low degree first. Independent of the Field's table path.
std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b,
                           const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
    std::uint32_t e = static_cast<std::uint32_t>(modulus.size() - 1);
    std::vector<std::uint32_t> prod(2 * e, 0);
    for (std::uint32_t i = 0, ai = a; i < e; ++i, ai /= p)
        for (std::uint32_t j = 0, bj = b; j < e; ++j, bj /= p)
            prod[i + j] = (prod[i + j] + (ai % p) * (bj % p)) % p;
    for (std::uint32_t d = 2 * e - 1; d >= e; --d) {
        std::uint32_t lead = prod[d];
        if (lead == 0) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i <= e; ++i) {
            std::uint32_t pos = d - e + i;
            prod[pos] = (prod[pos] + (p - lead % p) * modulus[i]) % p;
        }
    }
    std::uint32_t code = 0;
    for (std::uint32_t i = e; i-- > 0;) code = code * p + prod[i];
    return code;
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("prime field F_5 is residues mod 5") {
    Field f = Field::make(5, 1);
    CHECK(f.q() == 5);
    CHECK(f.modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(f.add({3}, {4}).code == 2);
    CHECK(f.mul({3}, {4}).code == 2);
    CHECK(f.neg({2}).code == 3);
}

TEST_CASE("F_9 modulus is the lex-smallest monic irreducible quadratic") {
    Field f = Field::make(3, 2);
    CHECK(f.q() == 9);
    CHECK(f.modulus() == first_irreducible_quadratic(3));
    CHECK(f.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(2, 1), std::invalid_argument);  // even characteristic
    CHECK_THROWS_AS(Field::make(9, 1), std::invalid_argument);  // not prime
    CHECK_THROWS_AS(Field::make(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 10), std::length_error);  // 3^10 over the limit
    CHECK_NOTHROW(Field::make(3, 4, {.max_q = 100}));
    CHECK_THROWS_AS(Field::make(3, 5, {.max_q = 100}), std::length_error);
}

TEST_CASE("inverses match exhaustive search in F_7") {
    Field f = Field::make(7, 1);
    std::uint32_t inv2 = 0;
    for (std::uint32_t b = 1; b < 7; ++b)
        if (2 * b % 7 == 1) inv2 = b;
    CHECK(inv2 == 4);
    CHECK(f.inv({2}).code == inv2);
    CHECK_THROWS_AS(f.inv({0}), std::domain_error);
    for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul({a}, f.inv({a})) == f.one());
}

TEST_CASE("multiplicative identities and primitive order") {
    for (auto [p, e] : {std::pair{3u, 2u}, {7u, 1u}, {3u, 3u}, {5u, 2u}}) {
        Field f = Field::make(p, e);
        for (std::uint32_t a = 0; a < f.q(); ++a) CHECK(f.mul({a}, f.one()) == Fel{a});
        CHECK(f.pow(f.primitive(), f.q() - 1) == f.one());
        for (std::uint32_t d = 1; d < f.q() - 1; ++d)
            CHECK(f.pow(f.primitive(), d) != f.one());
    }
}

TEST_CASE("F_7 primitive is 3 and dlog matches powers") {
    Field f = Field::make(7, 1);
    // smallest element of order 6: 2 has order 3, 3 has order 6
    CHECK(f.primitive().code == 3);
    CHECK(f.dlog(f.one()) == 0);
    CHECK(f.dlog(f.primitive()) == 1);
    CHECK(f.dlog({2}) == 2);  // 3^2 = 9 = 2 (mod 7)
    CHECK_THROWS_AS(f.dlog({0}), std::domain_error);
}

TEST_CASE("field multiplication agrees with raw polynomial arithmetic") {
    for (auto [p, e] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}}) {
        Field f = Field::make(p, e);
        for (std::uint32_t a = 0; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b)
                CHECK(f.mul({a}, {b}).code == poly_mul_mod(a, b, f.modulus(), p));
    }
}

TEST_CASE("trace: identity for e = 1, polynomial oracle for F_9") {
    Field f5 = Field::make(5, 1);
    for (std::uint32_t a = 0; a < 5; ++a) CHECK(f5.trace({a}) == a);

    Field f9 = Field::make(3, 2);
    CHECK(f9.trace({0}) == 0);
    for (std::uint32_t a = 0; a < 9; ++a) {
        // tr(a) = a + a^3, computed via the independent polynomial product
        std::uint32_t a3 = poly_mul_mod(poly_mul_mod(a, a, f9.modulus(), 3), a, f9.modulus(), 3);
        std::uint32_t lo = (a % 3 + a3 % 3) % 3;
        std::uint32_t hi = (a / 3 + a3 / 3) % 3;
        CHECK(hi == 0);  // the sum lands in the prime subfield
        CHECK(f9.trace({a}) == lo);
    }
}

TEST_CASE("trace is linear, surjective, with kernel of size q/p") {
    for (auto [p, e] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}}) {
        Field f = Field::make(p, e);
        std::vector<std::uint32_t> hits(p, 0);
        for (std::uint32_t a = 0; a < f.q(); ++a) {
            hits[f.trace({a})]++;
            for (std::uint32_t b = 0; b < f.q(); ++b)
                CHECK(f.trace(f.add({a}, {b})) == (f.trace({a}) + f.trace({b})) % p);
        }
        for (std::uint32_t r = 0; r < p; ++r) CHECK(hits[r] == f.q() / p);
    }
}

TEST_CASE("exp/log tables are mutually inverse bijections") {
    Field f = Field::make(3, 3);
    std::set<std::uint32_t> seen;
    for (std::uint32_t i = 0; i + 1 < f.q(); ++i) {
        std::uint32_t code = f.exp_table()[i];
        CHECK(seen.insert(code).second);
        CHECK(f.dlog({code}) == i);
    }
    CHECK(seen.size() == f.q() - 1);
}

TEST_CASE("pow handles zero base and negative exponents") {
    Field f = Field::make(7, 1);
    CHECK(f.pow({0}, 5) == f.zero());
    CHECK(f.pow({0}, 0) == f.one());
    CHECK(f.pow({3}, -1) == f.inv({3}));
    CHECK(f.pow({3}, 6) == f.one());
    CHECK(f.from_int(-1) == f.neg(f.one()));
    CHECK(f.from_int(16).code == 2);
}

}  // TEST_SUITE
