#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ccseq/quadgraph.hpp"

using namespace ccseq;

namespace {

std::vector<QuadTerm> k4_terms() {
    std::vector<QuadTerm> t;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) t.push_back({i, j, 1});
    return t;
}

}  // namespace

TEST_CASE("graph construction") {
    const QuadGraph g = graph_of(k4_terms(), 4, 2);
    CHECK(g.vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(g.edges.size() == 6);
    CHECK(g.degree(0) == 3);

    CHECK(graph_of({}, 3, 2).edges.empty());
    CHECK(graph_of({{0, 1, 2}}, 2, 2).edges.empty());  // coeff 2 mod 2 = 0: no edge
    CHECK_THROWS_AS(graph_of({{1, 0, 1}}, 2, 2), std::invalid_argument);  // needs i < j
    CHECK_THROWS_AS(graph_of({{0, 0, 1}}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(graph_of({{0, 5, 1}}, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(graph_of({{0, 1, 1}, {0, 1, 1}}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(graph_of({}, -1, 2), std::invalid_argument);
    CHECK_THROWS_AS(graph_of({}, 2, 3), std::invalid_argument);
}

TEST_CASE("vertex deletion") {
    const QuadGraph g = graph_of(k4_terms(), 4, 2);
    const QuadGraph h = delete_vertices(g, {0, 3});
    CHECK(h.vertices == std::vector<int>{1, 2});
    REQUIRE(h.edges.size() == 1);
    CHECK(h.edges[0].u == 1);
    CHECK(h.edges[0].v == 2);

    const QuadGraph same = delete_vertices(g, {});
    CHECK(same.vertices == g.vertices);
    CHECK(same.edges.size() == g.edges.size());

    CHECK_THROWS_AS(delete_vertices(g, {7}), std::invalid_argument);
}

TEST_CASE("path recognition") {
    // K4 is not a path; K4 minus two vertices is.
    const QuadGraph g = graph_of(k4_terms(), 4, 2);
    CHECK_FALSE(is_labeled_path(g).ok);
    const PathCheck pc = is_labeled_path(delete_vertices(g, {0, 3}));
    REQUIRE(pc.ok);
    CHECK(pc.witness.order == std::vector<int>{1, 2});
    CHECK(pc.witness.end_a() == 1);
    CHECK(pc.witness.end_b() == 2);

    // single vertex counts as a path with coinciding ends
    const PathCheck single = is_labeled_path(delete_vertices(g, {0, 1, 3}));
    REQUIRE(single.ok);
    CHECK(single.witness.order == std::vector<int>{2});
    CHECK(single.witness.end_a() == single.witness.end_b());

    // removing a middle vertex of a path disconnects it
    const QuadGraph p3 = graph_of({{0, 1, 1}, {1, 2, 1}}, 3, 2);
    CHECK(is_labeled_path(p3).ok);
    const PathCheck broken = is_labeled_path(delete_vertices(p3, {1}));
    CHECK_FALSE(broken.ok);
    CHECK(broken.reason.find("too few edges") != std::string::npos);
}

TEST_CASE("path rejection reasons") {
    const QuadGraph tri = graph_of({{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}, 3, 2);
    const PathCheck cyc = is_labeled_path(tri);
    CHECK_FALSE(cyc.ok);
    CHECK(cyc.reason.find("too many edges") != std::string::npos);

    const QuadGraph star = graph_of({{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}, 4, 2);
    const PathCheck deg = is_labeled_path(star);
    CHECK_FALSE(deg.ok);
    CHECK(deg.reason.find("degree") != std::string::npos);

    // labels must be exactly q/2
    const QuadGraph weak = graph_of({{0, 1, 1}}, 2, 4);
    const PathCheck lab = is_labeled_path(weak);
    CHECK_FALSE(lab.ok);
    CHECK(lab.reason.find("label") != std::string::npos);
    CHECK(is_labeled_path(graph_of({{0, 1, 2}}, 2, 4)).ok);

    CHECK_FALSE(is_labeled_path(graph_of({}, 2, 2)).ok);  // two isolated vertices
}

TEST_CASE("the path witness re-encodes the edge set") {
    const QuadGraph p4 = graph_of({{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}, 4, 2);
    const PathCheck pc = is_labeled_path(p4);
    REQUIRE(pc.ok);
    const std::vector<int>& o = pc.witness.order;
    REQUIRE(o.size() == 4);
    for (std::size_t i = 0; i + 1 < o.size(); ++i) {
        const int u = std::min(o[i], o[i + 1]);
        const int v = std::max(o[i], o[i + 1]);
        const bool found = std::any_of(p4.edges.begin(), p4.edges.end(),
                                       [&](const QuadGraph::Edge& e) { return e.u == u && e.v == v; });
        CHECK(found);
    }
}

TEST_CASE("enumeration of path-reducing deletions") {
    const QuadGraph g = graph_of(k4_terms(), 4, 2);
    const auto found = path_reducing_sets(g, 2);
    // K4: no deletion of size 0 or 1 works, every pair does
    const std::vector<std::vector<int>> expect = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(found == expect);

    const QuadGraph p4 = graph_of({{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}, 4, 2);
    const auto ends = path_reducing_sets(p4, 1);
    CHECK(ends == std::vector<std::vector<int>>{{}, {0}, {3}});

    // results are stable across repeated calls
    CHECK(path_reducing_sets(g, 2) == found);
}
