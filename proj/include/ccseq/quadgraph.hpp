#pragma once
// Labeled graph of a quadratic form and the delete-to-path test that gates
// the sequence constructions: after removing the victim vertices the
// survivors must form a path (or a single vertex) with every edge labeled
// exactly q/2.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccseq {

// One quadratic coefficient q_ij * z_i * z_j, i < j.
struct QuadTerm {
    int i = 0;
    int j = 0;
    int coeff = 1;
};

struct QuadGraph {
    struct Edge {
        int u = 0;
        int v = 0;  // u < v
        int label = 0;
    };

    int q = 2;
    std::vector<int> vertices;  // sorted, unique
    std::vector<Edge> edges;

    bool has_vertex(int x) const {
        return std::binary_search(vertices.begin(), vertices.end(), x);
    }
    int degree(int x) const {
        int d = 0;
        for (const Edge& e : edges) d += (e.u == x || e.v == x);
        return d;
    }
};

// Path ordering of the surviving vertices. The endpoint pair is unordered;
// callers pick which end plays beta1 (a single vertex is its own pair).
struct PathWitness {
    std::vector<int> order;
    int end_a() const { return order.front(); }
    int end_b() const { return order.back(); }
};

struct PathCheck {
    bool ok = false;
    PathWitness witness;  // meaningful only when ok
    std::string reason;   // violated condition when !ok
};

inline QuadGraph graph_of(const std::vector<QuadTerm>& quadratic, int vertex_count, int q) {
    if (vertex_count < 0) throw std::invalid_argument("quadgraph: negative vertex count");
    if (q < 2 || q % 2 != 0) throw std::invalid_argument("quadgraph: q must be even and >= 2");
    QuadGraph g;
    g.q = q;
    g.vertices.resize(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v) g.vertices[static_cast<std::size_t>(v)] = v;
    for (const QuadTerm& t : quadratic) {
        if (!(0 <= t.i && t.i < t.j && t.j < vertex_count))
            throw std::invalid_argument("quadgraph: quadratic term needs 0 <= i < j < vertex count");
        const int label = ((t.coeff % q) + q) % q;
        if (label == 0) continue;  // zero coefficients carry no edge
        for (const QuadGraph::Edge& e : g.edges)
            if (e.u == t.i && e.v == t.j)
                throw std::invalid_argument("quadgraph: duplicate edge (i,j)");
        g.edges.push_back({t.i, t.j, label});
    }
    return g;
}

inline QuadGraph delete_vertices(const QuadGraph& g, const std::vector<int>& victims) {
    for (int v : victims)
        if (!g.has_vertex(v)) throw std::invalid_argument("quadgraph: victim is not a vertex");
    auto gone = [&](int x) { return std::find(victims.begin(), victims.end(), x) != victims.end(); };
    QuadGraph out;
    out.q = g.q;
    for (int v : g.vertices)
        if (!gone(v)) out.vertices.push_back(v);
    for (const QuadGraph::Edge& e : g.edges)
        if (!gone(e.u) && !gone(e.v)) out.edges.push_back(e);
    return out;
}

// Succeeds iff g is a single vertex, or a connected graph with |V|-1 edges,
// max degree 2, and all labels exactly q/2. The returned order starts at the
// smaller endpoint, so the walk is deterministic.
inline PathCheck is_labeled_path(const QuadGraph& g) {
    PathCheck r;
    const std::size_t n = g.vertices.size();
    if (n == 0) {
        r.reason = "no surviving vertices";
        return r;
    }
    if (n == 1) {
        r.ok = true;
        r.witness.order = {g.vertices.front()};
        return r;
    }
    for (const QuadGraph::Edge& e : g.edges) {
        if (e.label != g.q / 2) {
            r.reason = "edge label differs from q/2";
            return r;
        }
    }
    if (g.edges.size() != n - 1) {
        r.reason = g.edges.size() > n - 1 ? "too many edges (cycle)" : "too few edges (disconnected)";
        return r;
    }
    std::vector<int> ends;
    for (int v : g.vertices) {
        const int d = g.degree(v);
        if (d > 2) {
            r.reason = "vertex of degree > 2";
            return r;
        }
        if (d == 1) ends.push_back(v);
        if (d == 0) {
            r.reason = "isolated vertex (disconnected)";
            return r;
        }
    }
    if (ends.size() != 2) {
        r.reason = "edge count matches a path but degree sequence does not (disconnected)";
        return r;
    }
    // walk from the smaller endpoint
    int cur = std::min(ends[0], ends[1]);
    int prev = -1;
    std::vector<int> order{cur};
    while (order.size() < n) {
        int next = -1;
        for (const QuadGraph::Edge& e : g.edges) {
            if (e.u == cur && e.v != prev) next = e.v;
            else if (e.v == cur && e.u != prev) next = e.u;
            if (next != -1) break;
        }
        if (next == -1) {
            r.reason = "walk ended early (disconnected)";
            return r;
        }
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    r.ok = true;
    r.witness.order = std::move(order);
    return r;
}

// Exhaustive helper: every victim subset of size <= k_max whose deletion
// leaves a labeled path. Deterministic order: by size, then lexicographic.
inline std::vector<std::vector<int>> path_reducing_sets(const QuadGraph& g, int k_max) {
    const int n = static_cast<int>(g.vertices.size());
    if (n > 20) throw std::invalid_argument("quadgraph: enumeration limited to 20 vertices");
    std::vector<std::vector<int>> found;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> victims;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) victims.push_back(g.vertices[static_cast<std::size_t>(b)]);
        if (static_cast<int>(victims.size()) > k_max) continue;
        if (is_labeled_path(delete_vertices(g, victims)).ok) found.push_back(std::move(victims));
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return found;
}

}  // namespace ccseq
