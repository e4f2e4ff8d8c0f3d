#include <doctest.h>

#include <stdexcept>
#include <random>
#include <set>

#include "dkq/graphs.hpp"
#include "dkq/io.hpp"

using namespace dkq;
using gf::Fel;
using gf::Field;
using graphs::GroupElt;

namespace {

std::vector<std::uint32_t> degrees(const graphs::SimpleGraph& g) {
    std::vector<std::uint32_t> deg(g.n, 0);
    for (auto [u, v] : g.edges) {
        deg[u]++;
        deg[v]++;
    }
    return deg;
}

GroupElt elt(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d,
             std::uint32_t e) {
    return {{Fel{a}, Fel{b}, Fel{c}, Fel{d}, Fel{e}}};
}

}  // namespace

TEST_SUITE("graphs") {

TEST_CASE("group operation, inverse, identity") {
    Field f = Field::make(3, 1);
    CHECK(graphs::group_mul(f, elt(1, 0, 0, 0, 0), elt(0, 1, 0, 0, 0)) == elt(1, 1, 0, 2, 0));
    GroupElt x = elt(2, 1, 0, 2, 1);
    CHECK(graphs::group_mul(f, x, graphs::group_identity()) == x);

    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::uint32_t> pick(0, 2);
    for (int i = 0; i < 1000; ++i) {
        GroupElt y = elt(pick(rng), pick(rng), pick(rng), pick(rng), pick(rng));
        CHECK(graphs::group_mul(f, y, graphs::group_inv(f, y)) == graphs::group_identity());
    }
}

TEST_CASE("generating set: size, closure under inverse, no identity") {
    for (auto [p, e] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}}) {
        Field f = Field::make(p, e);
        auto s = graphs::gen_set(f);
        std::set<GroupElt> sset(s.begin(), s.end());
        CHECK(sset.size() == std::size_t(f.q()) * (f.q() - 1));
        CHECK(sset.count(graphs::group_identity()) == 0);
        for (const auto& g : s) CHECK(sset.count(graphs::group_inv(f, g)) == 1);
    }
}

TEST_CASE("d_graph: counts and q-regularity") {
    Field f3 = Field::make(3, 1);
    auto d2 = graphs::d_graph(2, f3);
    CHECK(d2.part_size == 9);  // 18 vertices in the two parts
    CHECK(d2.edges.size() == 27);
    std::vector<std::uint32_t> pdeg(9, 0), ldeg(9, 0);
    for (auto [p, l] : d2.edges) {
        pdeg[p]++;
        ldeg[l]++;
    }
    for (auto v : pdeg) CHECK(v == 3);
    for (auto v : ldeg) CHECK(v == 3);

    auto d5 = graphs::d_graph(5, f3);
    CHECK(d5.part_size == 243);
    CHECK(d5.edges.size() == 729);
    CHECK_THROWS_AS(graphs::d_graph(1, f3), std::invalid_argument);
    CHECK_THROWS_AS(graphs::d_graph(6, f3), std::invalid_argument);
}

TEST_CASE("girth: measured values for the small D(k,q)") {
    Field f3 = Field::make(3, 1);
    // q = 3 is the exceptional case with girth 12; see also D(2,q) girth 6.
    CHECK(graphs::girth(graphs::d_graph(5, f3)) == 12);
    CHECK(graphs::girth(graphs::d_graph(4, f3)) == 12);
    CHECK(graphs::girth(graphs::d_graph(3, f3)) == 8);
    CHECK(graphs::girth(graphs::d_graph(2, f3)) == 6);

    Field f5 = Field::make(5, 1);
    CHECK(graphs::girth(graphs::d_graph(2, f5)) == 6);
    CHECK(graphs::girth(graphs::d_graph(5, f5)) == 10);
}

TEST_CASE("girth: sentinel for forests, known small graphs") {
    graphs::SimpleGraph edge{2, {{0, 1}}, };
    CHECK(graphs::girth(edge) == graphs::kInfiniteGirth);

    graphs::SimpleGraph triangle{3, {{0, 1}, {0, 2}, {1, 2}}};
    CHECK(graphs::girth(triangle) == 3);

    graphs::SimpleGraph c5{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}};
    CHECK(graphs::girth(c5) == 5);

    // two triangles joined by a path: girth stays 3
    graphs::SimpleGraph g{8, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}};
    CHECK(graphs::girth(g) == 3);
}

TEST_CASE("components: connectivity and edgeless graphs") {
    Field f3 = Field::make(3, 1);
    CHECK(graphs::components(graphs::d_graph(5, f3)).size() == 1);
    CHECK(graphs::components(graphs::point_graph_direct(f3)).size() == 1);
    graphs::SimpleGraph isolated{4, {}};
    CHECK(graphs::components(isolated).size() == 4);
}

TEST_CASE("iso_pi: fixed points, frozen image, exhaustive edge preservation") {
    Field f5 = Field::make(5, 1);
    std::array<Fel, 5> zero{};
    CHECK(graphs::iso_pi(f5, zero, graphs::Side::Point) == zero);
    CHECK(graphs::iso_pi(f5, zero, graphs::Side::Line) == zero);
    std::array<Fel, 5> ones{Fel{1}, Fel{1}, Fel{1}, Fel{1}, Fel{1}};
    std::array<Fel, 5> expected{Fel{1}, Fel{1}, Fel{1}, Fel{2}, Fel{3}};
    CHECK(graphs::iso_pi(f5, ones, graphs::Side::Point) == expected);

    Field f3 = Field::make(3, 1);
    auto d5 = graphs::d_graph(5, f3);
    auto gamma = graphs::gamma_graph(f3);
    CHECK(gamma.part_size == 243);
    std::set<std::pair<std::uint32_t, std::uint32_t>> gamma_edges(gamma.edges.begin(),
                                                                  gamma.edges.end());
    graphs::VertexCodec codec(3, 5);
    std::set<std::uint64_t> point_image, line_image;
    for (std::uint64_t v = 0; v < 243; ++v) {
        point_image.insert(codec.encode(graphs::iso_pi(f3, codec.decode<5>(v), graphs::Side::Point)));
        line_image.insert(codec.encode(graphs::iso_pi(f3, codec.decode<5>(v), graphs::Side::Line)));
    }
    CHECK(point_image.size() == 243);  // bijection on each side
    CHECK(line_image.size() == 243);
    for (auto [pv, lv] : d5.edges) {
        auto pp = codec.encode(graphs::iso_pi(f3, codec.decode<5>(pv), graphs::Side::Point));
        auto ll = codec.encode(graphs::iso_pi(f3, codec.decode<5>(lv), graphs::Side::Line));
        CHECK(gamma_edges.count({std::uint32_t(pp), std::uint32_t(ll)}) == 1);
    }
}

TEST_CASE("point graph: degree, Cayley identity, distance-two identity") {
    Field f3 = Field::make(3, 1);
    auto direct = graphs::point_graph_direct(f3);
    CHECK(direct.n == 243);
    for (auto deg : degrees(direct)) CHECK(deg == 6);  // q(q-1)
    CHECK(direct.edges.size() == 243 * 6 / 2);

    auto cayley = graphs::cayley_graph(f3);
    CHECK(cayley.n == direct.n);
    CHECK(cayley.edges == direct.edges);

    auto halved = graphs::halved_point_graph(graphs::gamma_graph(f3));
    CHECK(halved.edges == direct.edges);

    // adjacent points never share the first coordinate
    graphs::VertexCodec codec(3, 5);
    for (auto [u, v] : direct.edges)
        CHECK(codec.decode<5>(u)[0] != codec.decode<5>(v)[0]);
}

TEST_CASE("point graph at q = 5: order and regularity") {
    Field f5 = Field::make(5, 1);
    auto g = graphs::point_graph_direct(f5);
    CHECK(g.n == 3125);
    for (auto deg : degrees(g)) CHECK(deg == 20);
    CHECK(graphs::components(g).size() == 1);
}

TEST_CASE("edge list export: header, row count, determinism") {
    Field f3 = Field::make(3, 1);
    auto d5 = graphs::d_graph(5, f3);
    std::string csv = io::edge_list_csv(d5);
    std::string again = io::edge_list_csv(graphs::d_graph(5, f3));
    CHECK(csv == again);
    CHECK(csv.substr(0, csv.find('\n')) == "# d-graph k=5 q=3");
    std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
    CHECK(rows == 730);  // header + 729 edges
}

}  // TEST_SUITE
