#include "dkq/graphs.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace dkq::graphs {

GroupElt group_mul(const gf::Field& f, const GroupElt& a, const GroupElt& b) {
    const gf::Fel two = f.from_int(2);
    GroupElt r;
    r.x[0] = f.add(a.x[0], b.x[0]);
    r.x[1] = f.add(a.x[1], b.x[1]);
    r.x[2] = f.add(a.x[2], b.x[2]);
    r.x[3] = f.add(f.add(a.x[3], b.x[3]), f.mul(two, f.mul(a.x[0], b.x[1])));
    r.x[4] = f.add(f.add(a.x[4], b.x[4]), f.mul(two, f.mul(a.x[0], b.x[2])));
    return r;
}

GroupElt group_inv(const gf::Field& f, const GroupElt& a) {
    const gf::Fel two = f.from_int(2);
    GroupElt r;
    r.x[0] = f.neg(a.x[0]);
    r.x[1] = f.neg(a.x[1]);
    r.x[2] = f.neg(a.x[2]);
    r.x[3] = f.add(f.neg(a.x[3]), f.mul(two, f.mul(a.x[0], a.x[1])));
    r.x[4] = f.add(f.neg(a.x[4]), f.mul(two, f.mul(a.x[0], a.x[2])));
    return r;
}

GroupElt group_identity() { return {}; }

std::vector<GroupElt> gen_set(const gf::Field& f) {
    std::vector<GroupElt> s;
    s.reserve(std::size_t(f.q()) * (f.q() - 1));
    for (std::uint32_t xc = 1; xc < f.q(); ++xc) {
        gf::Fel x{xc};
        gf::Fel x2 = f.mul(x, x);
        for (std::uint32_t ac = 0; ac < f.q(); ++ac) {
            gf::Fel a{ac};
            gf::Fel a2 = f.mul(a, a);
            s.push_back({{x, f.mul(x, a), f.mul(x, a2), f.mul(x2, a), f.mul(x2, a2)}});
        }
    }
    return s;
}

namespace {

std::vector<std::vector<std::uint32_t>> adjacency_from_edges(
    std::uint64_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
    std::uint64_t second_offset) {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (auto [u, v] : edges) {
        std::uint32_t w = static_cast<std::uint32_t>(v + second_offset);
        adj[u].push_back(w);
        adj[w].push_back(u);
    }
    return adj;
}

void sort_unique(std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Explicit edge lists only; anything bigger belongs to the closed-form
// pipeline, not to materialized graphs.
constexpr std::uint64_t kMaxEdges = 1ull << 26;

void check_edge_budget(std::uint64_t expected) {
    if (expected > kMaxEdges)
        throw std::length_error("graphs: edge list would exceed the construction limit");
}

}  // namespace

std::vector<std::vector<std::uint32_t>> BipartiteGraph::adjacency() const {
    return adjacency_from_edges(2 * part_size, edges, part_size);
}

std::vector<std::vector<std::uint32_t>> SimpleGraph::adjacency() const {
    return adjacency_from_edges(n, edges, 0);
}

BipartiteGraph d_graph(std::uint32_t k, const gf::Field& f) {
    if (k < 2 || k > 5) throw std::invalid_argument("graphs: d_graph needs k in {2,3,4,5}");
    const std::uint32_t q = f.q();
    BipartiteGraph g;
    g.k = k;
    g.q = q;
    g.part_size = ipow(q, k);
    check_edge_budget(g.part_size * q);
    g.edges.reserve(g.part_size * q);
    VertexCodec codec(q, k);

    std::array<gf::Fel, 5> p{}, l{};
    for (std::uint64_t pi = 0; pi < g.part_size; ++pi) {
        auto pt = codec.decode<5>(pi);  // coordinates beyond k stay zero
        p = pt;
        for (std::uint32_t l1 = 0; l1 < q; ++l1) {
            l[0] = {l1};
            // l_{i} solved from the chain p2+l2=p1l1, p3+l3=p1l2, p4+l4=p2l1, p5+l5=p3l1
            l[1] = f.sub(f.mul(p[0], l[0]), p[1]);
            if (k >= 3) l[2] = f.sub(f.mul(p[0], l[1]), p[2]);
            if (k >= 4) l[3] = f.sub(f.mul(p[1], l[0]), p[3]);
            if (k >= 5) l[4] = f.sub(f.mul(p[2], l[0]), p[4]);
            std::array<gf::Fel, 5> lt{};
            for (std::uint32_t i = 0; i < k; ++i) lt[i] = l[i];
            g.edges.emplace_back(static_cast<std::uint32_t>(pi),
                                 static_cast<std::uint32_t>(codec.encode(lt)));
        }
    }
    sort_unique(g.edges);
    return g;
}

BipartiteGraph gamma_graph(const gf::Field& f) {
    const std::uint32_t q = f.q();
    BipartiteGraph g;
    g.k = 5;
    g.q = q;
    g.part_size = ipow(q, 5);
    check_edge_budget(g.part_size * q);
    g.edges.reserve(g.part_size * q);
    VertexCodec codec(q, 5);

    for (std::uint64_t pi = 0; pi < g.part_size; ++pi) {
        auto p = codec.decode<5>(pi);
        for (std::uint32_t l1c = 0; l1c < q; ++l1c) {
            gf::Fel l1{l1c};
            gf::Fel l1sq = f.mul(l1, l1);
            gf::Fel p1sq = f.mul(p[0], p[0]);
            std::array<gf::Fel, 5> l{};
            l[0] = l1;
            l[1] = f.sub(f.mul(p[0], l1), p[1]);
            l[2] = f.sub(f.mul(p[0], l1sq), p[2]);
            l[3] = f.sub(f.mul(p1sq, l1), p[3]);
            l[4] = f.sub(f.mul(p1sq, l1sq), p[4]);
            g.edges.emplace_back(static_cast<std::uint32_t>(pi),
                                 static_cast<std::uint32_t>(codec.encode(l)));
        }
    }
    sort_unique(g.edges);
    return g;
}

std::array<gf::Fel, 5> iso_pi(const gf::Field& f, const std::array<gf::Fel, 5>& v, Side side) {
    const gf::Fel two = f.from_int(2);
    if (side == Side::Point) {
        return {v[0], v[1], v[3], f.add(v[2], f.mul(v[0], v[1])),
                f.add(f.mul(two, v[4]), f.mul(v[1], v[1]))};
    }
    return {v[0], v[1], f.add(v[3], f.mul(v[0], v[1])), v[2],
            f.sub(f.add(f.mul(two, v[4]), f.mul(two, f.mul(v[0], v[2]))), f.mul(v[1], v[1]))};
}

SimpleGraph point_graph_direct(const gf::Field& f) {
    const std::uint32_t q = f.q();
    SimpleGraph g;
    g.n = ipow(q, 5);
    check_edge_budget(g.n * q * (q - 1) / 2);
    g.edges.reserve(g.n * q * (q - 1) / 2);
    VertexCodec codec(q, 5);

    for (std::uint64_t pi = 0; pi < g.n; ++pi) {
        auto p = codec.decode<5>(pi);
        gf::Fel p1sq = f.mul(p[0], p[0]);
        for (std::uint32_t r1c = 0; r1c < q; ++r1c) {
            gf::Fel r1{r1c};
            if (r1 == p[0]) continue;  // adjacent points differ in the first coordinate
            gf::Fel d1 = f.sub(p[0], r1);
            gf::Fel d1sq = f.sub(p1sq, f.mul(r1, r1));
            for (std::uint32_t l1c = 0; l1c < q; ++l1c) {
                gf::Fel l1{l1c};
                gf::Fel l1sq = f.mul(l1, l1);
                std::array<gf::Fel, 5> r{};
                r[0] = r1;
                r[1] = f.sub(p[1], f.mul(d1, l1));
                r[2] = f.sub(p[2], f.mul(d1, l1sq));
                r[3] = f.sub(p[3], f.mul(d1sq, l1));
                r[4] = f.sub(p[4], f.mul(d1sq, l1sq));
                std::uint64_t ri = codec.encode(r);
                if (pi < ri)
                    g.edges.emplace_back(static_cast<std::uint32_t>(pi),
                                         static_cast<std::uint32_t>(ri));
                else
                    g.edges.emplace_back(static_cast<std::uint32_t>(ri),
                                         static_cast<std::uint32_t>(pi));
            }
        }
    }
    sort_unique(g.edges);
    return g;
}

SimpleGraph cayley_graph(const gf::Field& f) {
    const std::uint32_t q = f.q();
    SimpleGraph g;
    g.n = ipow(q, 5);
    const auto s = gen_set(f);
    check_edge_budget(g.n * s.size() / 2);
    g.edges.reserve(g.n * s.size() / 2);
    VertexCodec codec(q, 5);

    for (std::uint64_t ri = 0; ri < g.n; ++ri) {
        GroupElt r{codec.decode<5>(ri)};
        for (const auto& gen : s) {
            std::uint64_t ni = codec.encode(group_mul(f, r, gen).x);
            if (ri < ni)
                g.edges.emplace_back(static_cast<std::uint32_t>(ri),
                                     static_cast<std::uint32_t>(ni));
        }
    }
    sort_unique(g.edges);
    return g;
}

SimpleGraph halved_point_graph(const BipartiteGraph& g) {
    std::vector<std::vector<std::uint32_t>> line_pts(g.part_size);
    for (auto [p, l] : g.edges) line_pts[l].push_back(p);
    SimpleGraph h;
    h.n = g.part_size;
    for (const auto& pts : line_pts)
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                h.edges.emplace_back(std::min(pts[i], pts[j]), std::max(pts[i], pts[j]));
    sort_unique(h.edges);
    return h;
}

int girth(const std::vector<std::vector<std::uint32_t>>& adj) {
    const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
    int best = kInfiniteGirth;
    std::vector<std::int32_t> dist(n);
    std::vector<std::uint32_t> parent(n);

    for (std::uint32_t root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<std::uint32_t> bfs;
        dist[root] = 0;
        parent[root] = root;
        bfs.push(root);
        while (!bfs.empty()) {
            std::uint32_t u = bfs.front();
            bfs.pop();
            // candidates reachable from u are >= 2 dist[u], so deeper levels
            // cannot improve on best
            if (best != kInfiniteGirth && 2 * dist[u] >= best) break;
            for (std::uint32_t w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    bfs.push(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

int girth(const BipartiteGraph& g) { return girth(g.adjacency()); }
int girth(const SimpleGraph& g) { return girth(g.adjacency()); }

std::vector<std::vector<std::uint32_t>> components(
    const std::vector<std::vector<std::uint32_t>>& adj) {
    const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<std::uint32_t>> comps;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        auto& comp = comps.back();
        std::queue<std::uint32_t> bfs;
        bfs.push(s);
        seen[s] = 1;
        while (!bfs.empty()) {
            std::uint32_t u = bfs.front();
            bfs.pop();
            comp.push_back(u);
            for (std::uint32_t w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    bfs.push(w);
                }
        }
    }
    return comps;
}

std::vector<std::vector<std::uint32_t>> components(const BipartiteGraph& g) {
    return components(g.adjacency());
}
std::vector<std::vector<std::uint32_t>> components(const SimpleGraph& g) {
    return components(g.adjacency());
}

}  // namespace dkq::graphs
