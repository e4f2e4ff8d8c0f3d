// The bipartite graphs D(k,q) for k in {2,...,5}, the isomorphic variant
// Gamma(q), the point-collinearity (halved) graph, and its Cayley-graph
// description Cay(G, S) for the group G = (F_q^5, *) with
//   X * Y = (x1+y1, x2+y2, x3+y3, x4+y4+2 x1 y2, x5+y5+2 x1 y3).
//
// Vertex indexing is shared by every module: a coordinate tuple maps to
// sum_i code(x_i) q^{i-1}, first coordinate least significant.

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "dkq/field.hpp"

namespace dkq::graphs {

struct GroupElt {
    std::array<gf::Fel, 5> x{};
    friend auto operator<=>(const GroupElt&, const GroupElt&) = default;
};

GroupElt group_mul(const gf::Field& f, const GroupElt& a, const GroupElt& b);
GroupElt group_inv(const gf::Field& f, const GroupElt& a);
GroupElt group_identity();

// S = { (x, xa, xa^2, x^2 a, x^2 a^2) : a, x in F_q, x != 0 }, closed under
// inverses, |S| = q(q-1). Enumerated in (x, a) code order.
std::vector<GroupElt> gen_set(const gf::Field& f);

// Tuple <-> index codec on F_q^k.
class VertexCodec {
public:
    VertexCodec(std::uint32_t q, std::uint32_t k) : q_(q), k_(k) {}
    std::uint32_t k() const { return k_; }

    template <std::size_t N>
    std::uint64_t encode(const std::array<gf::Fel, N>& t) const {
        std::uint64_t idx = 0;
        for (std::size_t i = N; i-- > 0;) idx = idx * q_ + t[i].code;
        return idx;
    }

    template <std::size_t N>
    std::array<gf::Fel, N> decode(std::uint64_t idx) const {
        std::array<gf::Fel, N> t;
        for (std::size_t i = 0; i < N; ++i, idx /= q_) t[i] = {static_cast<std::uint32_t>(idx % q_)};
        return t;
    }

private:
    std::uint32_t q_, k_;
};

// Bipartite graph on points and lines, each part indexed by [0, q^k).
struct BipartiteGraph {
    std::uint32_t k = 0, q = 0;
    std::uint64_t part_size = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (point, line), sorted

    // Neighbor lists over the doubled vertex set: points occupy
    // [0, part_size), lines [part_size, 2 part_size).
    std::vector<std::vector<std::uint32_t>> adjacency() const;
};

struct SimpleGraph {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v, sorted
    std::vector<std::vector<std::uint32_t>> adjacency() const;
};

enum class Side { Point, Line };

// D(k,q): point (p) and line [l] are adjacent iff
//   p2 + l2 = p1 l1, p3 + l3 = p1 l2, p4 + l4 = p2 l1, p5 + l5 = p3 l1,
// truncated to the first k-1 relations. Throws on k outside {2,...,5}.
BipartiteGraph d_graph(std::uint32_t k, const gf::Field& f);

// Gamma(q): same parts as D(5,q) with relations
//   p2 + l2 = p1 l1, p3 + l3 = p1 l1^2, p4 + l4 = p1^2 l1, p5 + l5 = p1^2 l1^2.
BipartiteGraph gamma_graph(const gf::Field& f);

// The isomorphism D(5,q) -> Gamma(q), per side:
//   points: (p1, p2, p4, p3 + p1 p2, 2 p5 + p2^2)
//   lines:  [l1, l2, l4 + l1 l2, l3, 2 l5 + 2 l1 l3 - l2^2]
std::array<gf::Fel, 5> iso_pi(const gf::Field& f, const std::array<gf::Fel, 5>& v, Side side);

// Point collinearity graph of Gamma(q), built directly from the distance-two
// relations: (p) ~ (r) iff some l1 solves
//   p2 - r2 = (p1 - r1) l1,        p3 - r3 = (p1 - r1) l1^2,
//   p4 - r4 = (p1^2 - r1^2) l1,    p5 - r5 = (p1^2 - r1^2) l1^2.
SimpleGraph point_graph_direct(const gf::Field& f);

// Cay(G, S): r adjacent to r * s for every s in S. Equals
// point_graph_direct vertex-for-vertex.
SimpleGraph cayley_graph(const gf::Field& f);

// Halved graph on the point side: two points adjacent iff they share a line.
SimpleGraph halved_point_graph(const BipartiteGraph& g);

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Shortest cycle length via BFS from every vertex; kInfiniteGirth for forests.
int girth(const std::vector<std::vector<std::uint32_t>>& adj);
int girth(const BipartiteGraph& g);
int girth(const SimpleGraph& g);

std::vector<std::vector<std::uint32_t>> components(const std::vector<std::vector<std::uint32_t>>& adj);
std::vector<std::vector<std::uint32_t>> components(const BipartiteGraph& g);
std::vector<std::vector<std::uint32_t>> components(const SimpleGraph& g);

}  // namespace dkq::graphs
