#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "kgon/errors.hpp"
#include "kgon/plane_graph.hpp"

using namespace kgon;

namespace {

std::multiset<int> face_sizes(const PlaneGraph& g) {
    std::multiset<int> sizes;
    for (const Face& f : trace_faces(g)) sizes.insert(f.size());
    return sizes;
}

}  // namespace

TEST_CASE("triangle traces to two 3-faces") {
    PlaneGraph g = fixtures::cycle(3);
    auto faces = trace_faces(g);
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].size() == 3);
    CHECK(faces[1].size() == 3);
    CHECK(euler_check(g));
}

TEST_CASE("4-cycle with a chord gives faces {3,3,4}") {
    std::vector<std::vector<VertexId>> rot = {{3, 1}, {0, 2}, {1, 3}, {2, 0}};
    auto faces = trace_faces_raw(rot);
    std::size_t interior = face_with_directed_edge(faces, 1, 0);
    add_chord_in_face(rot, faces[interior], 0, 2);
    PlaneGraph g = PlaneGraph::make(4, rot);
    CHECK(g.edge_count() == 5);
    CHECK(face_sizes(g) == std::multiset<int>{3, 3, 4});
    CHECK(euler_check(g));
}

TEST_CASE("malformed rotation systems are rejected") {
    CHECK_THROWS_AS(PlaneGraph::make(2, {{1, 1}, {0}}), MalformedRotation);   // repeat
    CHECK_THROWS_AS(PlaneGraph::make(2, {{0}, {1}}), MalformedRotation);      // loops
    CHECK_THROWS_AS(PlaneGraph::make(3, {{1}, {0, 2}, {}}), MalformedRotation);  // asymmetric
    CHECK_THROWS_AS(PlaneGraph::make(4, {{1}, {0}, {3}, {2}}), MalformedRotation);  // split
    CHECK_THROWS_AS(PlaneGraph::make(2, {{1}, {0}, {}}), MalformedRotation);  // size
    CHECK_THROWS_AS(PlaneGraph::make(2, {{5}, {0}}), MalformedRotation);      // range
}

TEST_CASE("no rotation system embeds K5 in the sphere") {
    // Fix each vertex's first neighbor and permute the rest: 3!^5 systems,
    // every cyclic rotation class exactly once.
    std::vector<std::vector<VertexId>> rot(5);
    for (int v = 0; v < 5; ++v)
        for (int u = 0; u < 5; ++u)
            if (u != v) rot[v].push_back(u);

    long long systems = 0;
    bool any_planar = false;
    while (true) {
        long long f = static_cast<long long>(trace_faces_raw(rot).size());
        any_planar |= (5 - 10 + f == 2);
        ++systems;
        int v = 0;
        while (v < 5 && !std::next_permutation(rot[v].begin() + 1, rot[v].end())) ++v;
        if (v == 5) break;
    }
    CHECK(systems == 6 * 6 * 6 * 6 * 6);
    CHECK_FALSE(any_planar);
}

TEST_CASE("every directed edge lies on exactly one face") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        PlaneGraph g = fixtures::random_chorded_cycle(rng);
        std::map<std::pair<VertexId, VertexId>, int> uses;
        long long total = 0;
        for (const Face& f : trace_faces(g)) {
            const auto& b = f.boundary;
            for (std::size_t i = 0; i < b.size(); ++i) {
                ++uses[{b[i], b[(i + 1) % b.size()]}];
                ++total;
            }
        }
        CHECK(total == 2 * g.edge_count());
        bool all_once = true;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (VertexId u : g.neighbors(v)) all_once &= (uses[{v, u}] == 1);
        CHECK(all_once);
        CHECK(euler_check(g));
    }
}

TEST_CASE("tracing is deterministic") {
    std::mt19937 rng(7);
    PlaneGraph g = fixtures::random_chorded_cycle(rng);
    CHECK(trace_faces(g) == trace_faces(g));
}

TEST_CASE("fan triangulation of a face") {
    std::vector<std::vector<VertexId>> rot = fixtures::cycle(5).rotation();
    auto faces = trace_faces_raw(rot);
    add_fan_in_face(rot, faces[face_with_directed_edge(faces, 0, 1)], 0);
    PlaneGraph g = PlaneGraph::make(5, rot);
    CHECK(g.edge_count() == 7);
    CHECK(face_sizes(g) == std::multiset<int>{3, 3, 3, 5});
    CHECK(euler_check(g));
}

TEST_CASE("hub insertion triangulates a face") {
    std::vector<std::vector<VertexId>> rot = fixtures::cycle(4).rotation();
    auto faces = trace_faces_raw(rot);
    add_hub_in_face(rot, faces[0], 4);
    PlaneGraph g = PlaneGraph::make(5, rot);
    CHECK(g.edge_count() == 8);
    CHECK(face_sizes(g) == std::multiset<int>{3, 3, 3, 3, 4});
    CHECK(euler_check(g));
}
