#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <numbers>
#include <set>

#include "dkq/chars.hpp"

using dkq::chars::CharTable;
using dkq::chars::cplx;
using dkq::gf::Fel;
using dkq::gf::Field;

namespace {
const double pi = std::numbers::pi;
CharTable table(std::uint32_t p, std::uint32_t e) { return CharTable(Field::make(p, e)); }
double d(cplx a, cplx b) { return std::abs(a - b); }
}  // namespace

TEST_SUITE("chars") {

TEST_CASE("psi: additive character basics") {
    auto c = table(5, 1);
    CHECK(d(c.psi({0}), {1, 0}) == 0);
    CHECK(d(c.psi({1}), std::polar(1.0, 2 * pi / 5)) < 1e-15);
    // sum over a of psi(b a) vanishes for b != 0
    for (auto ct : {table(5, 1), table(3, 2), table(7, 1)}) {
        const auto& f = ct.field();
        for (std::uint32_t b = 1; b < f.q(); ++b) {
            cplx sum = 0;
            for (std::uint32_t a = 0; a < f.q(); ++a) sum += ct.psi(f.mul({b}, {a}));
            CHECK(std::abs(sum) < 1e-12);
        }
    }
}

TEST_CASE("chi: trivial character and unit values") {
    auto c = table(7, 1);
    for (std::uint32_t a = 0; a < 7; ++a) CHECK(d(c.chi(0, {a}), {1, 0}) == 0);
    for (std::uint32_t k = 1; k < 6; ++k) {
        CHECK(d(c.chi(k, {1}), {1, 0}) < 1e-15);
        CHECK(d(c.chi(k, {0}), {0, 0}) == 0);
        for (std::uint32_t a = 1; a < 7; ++a) CHECK(std::abs(std::abs(c.chi(k, {a})) - 1) < 1e-15);
    }
    CHECK(c.mult_char(0).order == 1);
    CHECK(c.mult_char(3).order == 2);  // the quadratic character
    CHECK(c.mult_char(1).order == 6);
    CHECK_THROWS_AS(c.mult_char(6), std::invalid_argument);
}

TEST_CASE("eta agrees with the set of squares in F_7") {
    auto c = table(7, 1);
    std::set<std::uint32_t> squares;
    for (std::uint32_t b = 1; b < 7; ++b) squares.insert(b * b % 7);
    CHECK(squares == std::set<std::uint32_t>{1, 2, 4});
    CHECK(c.eta_index() == 3);
    CHECK(d(c.chi(3, {2}), {1, 0}) < 1e-15);  // eta(2) = 1
    for (std::uint32_t a = 1; a < 7; ++a)
        CHECK(c.eta_sign({a}) == (squares.count(a) ? 1 : -1));
    CHECK(c.eta_sign({0}) == 0);
}

TEST_CASE("chi multiplicativity and orthogonality, exhaustive F_9") {
    auto c = table(3, 2);
    const auto& f = c.field();
    for (std::uint32_t k = 0; k < 8; ++k)
        for (std::uint32_t a = 1; a < 9; ++a)
            for (std::uint32_t b = 1; b < 9; ++b)
                CHECK(d(c.chi(k, f.mul({a}, {b})), c.chi(k, {a}) * c.chi(k, {b})) < 1e-12);
    for (std::uint32_t k = 1; k < 8; ++k)
        for (std::uint32_t m = 1; m < 8; ++m) {
            cplx sum = 0;
            for (std::uint32_t a = 1; a < 9; ++a) sum += c.chi(k, {a}) * std::conj(c.chi(m, {a}));
            CHECK(d(sum, k == m ? cplx(8, 0) : cplx(0, 0)) < 1e-12);
        }
}

TEST_CASE("linear exponential sums: closed form and direct sum") {
    auto c = table(5, 1);
    const auto& f = c.field();
    CHECK(d(c.linear_exp_sum({0}, {0}), {5, 0}) == 0);
    CHECK(d(c.linear_exp_sum({0}, {1}), 5.0 * std::polar(1.0, 2 * pi / 5)) < 1e-14);
    for (std::uint32_t b = 0; b < 5; ++b)
        for (std::uint32_t cc = 0; cc < 5; ++cc)
            CHECK(d(c.linear_exp_sum({b}, {cc}), c.linear_exp_sum_direct({b}, {cc})) < 1e-10 * 5);
    (void)f;
}

TEST_CASE("gauss sums: frozen values and direct-summation oracle") {
    auto c5 = table(5, 1);
    CHECK(d(c5.gauss_square_sum({1}), {std::sqrt(5.0), 0}) < 1e-12);

    auto c7 = table(7, 1);
    CHECK(d(c7.gauss_square_sum({1}), {0, std::sqrt(7.0)}) < 1e-12);  // i sqrt(7)
    // non-square g flips the sign
    CHECK(d(c7.gauss_square_sum({3}), {0, -std::sqrt(7.0)}) < 1e-12);
    CHECK(d(c7.gauss_square_sum_direct({3}), {0, -std::sqrt(7.0)}) < 1e-12);
    CHECK_THROWS_AS(c7.gauss_square_sum({0}), std::invalid_argument);

    for (auto [p, e] : {std::pair{3u, 1u}, {3u, 2u}, {3u, 3u}, {3u, 4u},
                        {5u, 1u}, {5u, 2u}, {7u, 1u}, {7u, 2u}, {11u, 1u}, {13u, 1u}}) {
        auto c = table(p, e);
        const double tol = 1e-10 * std::sqrt(double(c.q()));
        for (std::uint32_t g = 1; g < c.q(); ++g)
            CHECK(d(c.gauss_square_sum({g}), c.gauss_square_sum_direct({g})) < tol);
        // |S|^2 = q and eta(-1) S = q / S
        cplx s = c.gauss_sy2();
        CHECK(std::abs(std::norm(s) - double(c.q())) < 1e-9);
        CHECK(d(c.eta(c.field().neg(c.field().one())) * s, double(c.q()) / s) < 1e-9);
    }
}

TEST_CASE("sum of eta(a^2 - 1) follows the q mod 4 dichotomy") {
    CHECK(d(table(5, 1).eta_sq_minus_one_sum(), {-2, 0}) < 1e-10);
    CHECK(d(table(7, 1).eta_sq_minus_one_sum(), {0, 0}) < 1e-10);
    CHECK(d(table(3, 2).eta_sq_minus_one_sum(), {-2, 0}) < 1e-10);  // 9 = 1 (mod 4)
    CHECK(d(table(3, 3).eta_sq_minus_one_sum(), {0, 0}) < 1e-10);   // 27 = 3 (mod 4)
}

TEST_CASE("weil sum A: hand enumeration at q = 3 and bounds") {
    auto c3 = table(3, 1);
    // q = 3, k = 1, c = 0: t = 1, 2 both give eta(t^2 - 1) = eta(0) = 0
    auto w = c3.weil_sum_A(1, {0});
    CHECK(std::abs(w.value) < 1e-15);
    CHECK(w.within_bound);

    auto c5 = table(5, 1);
    auto w5 = c5.weil_sum_A(1, {0});
    CHECK(std::abs(w5.value) <= 2 * std::sqrt(5.0) + 1e-9);
    CHECK(w5.bound == doctest::Approx(2 * std::sqrt(5.0)));

    auto c7 = table(7, 1);
    auto w7 = c7.weil_sum_A(2, {1});
    CHECK(std::abs(w7.value) <= 3 * std::sqrt(7.0) + 1e-9);

    for (auto& ct : {table(3, 2), table(5, 1), table(7, 1), table(11, 1)})
        for (std::uint32_t k = 1; k < ct.q() - 1; ++k)
            for (std::uint32_t cc = 0; cc < ct.q(); ++cc)
                CHECK(ct.weil_sum_A(k, {cc}).within_bound);
    CHECK_THROWS_AS(c3.weil_sum_A(0, {0}), std::invalid_argument);
}

TEST_CASE("weil sum B: hand enumeration at q = 3, bounds, Moebius identity") {
    auto c3 = table(3, 1);
    // t = 0: chi(0) = 0; t = 1: eta(0) = 0; t = -1 excluded. Total 0.
    auto w = c3.weil_sum_B(1, {1});
    CHECK(std::abs(w.value) < 1e-15);

    auto c5 = table(5, 1);
    CHECK(std::abs(c5.weil_sum_B(1, {1}).value) <= 3 * std::sqrt(5.0) + 1e-9);
    CHECK_THROWS_AS(c5.weil_sum_B(1, {0}), std::invalid_argument);
    CHECK_THROWS_AS(c5.weil_sum_B(0, {1}), std::invalid_argument);

    for (auto& ct : {table(5, 1), table(3, 2), table(3, 3), table(7, 1), table(13, 1)})
        for (std::uint32_t k = 1; k < ct.q() - 1; ++k)
            for (std::uint32_t cc = 1; cc < ct.q(); ++cc) {
                auto direct = ct.weil_sum_B(k, {cc});
                CHECK(direct.within_bound);
                CHECK(d(direct.value, ct.weil_sum_B_substituted(k, {cc})) < 1e-9);
            }
}

}  // TEST_SUITE
