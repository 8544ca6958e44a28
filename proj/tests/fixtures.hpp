#pragma once

#include <random>
#include <vector>

#include "kgon/plane_graph.hpp"

namespace fixtures {

// Wheel on 7 vertices: hub 0 inside the rim cycle 1..6.
inline kgon::PlaneGraph w6() {
    std::vector<std::vector<kgon::VertexId>> rot(7);
    rot[0] = {1, 2, 3, 4, 5, 6};
    for (int i = 1; i <= 6; ++i) {
        int next = i == 6 ? 1 : i + 1;
        int prev = i == 1 ? 6 : i - 1;
        rot[i] = {next, 0, prev};
    }
    return kgon::PlaneGraph::make(7, rot);
}

// Tetrahedron; the smallest maximal plane graph.
inline kgon::PlaneGraph k4() {
    return kgon::PlaneGraph::make(4, {{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {2, 1, 0}});
}

// Two triangles sharing vertex 2: connected but with a cut vertex, so its
// outer face repeats a vertex.
inline kgon::PlaneGraph bowtie() {
    return kgon::PlaneGraph::make(
        5, {{2, 1}, {0, 2}, {3, 4, 1, 0}, {4, 2}, {3, 2}});
}

// Plain cycle with ascending rotation.
inline kgon::PlaneGraph cycle(int n) {
    std::vector<std::vector<kgon::VertexId>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return kgon::PlaneGraph::make(n, rot);
}

// Random 2-connected plane graph: a cycle with chords repeatedly dropped
// into faces of size >= 4 (either side of the sphere).
inline kgon::PlaneGraph random_chorded_cycle(std::mt19937& rng) {
    const int n = 4 + static_cast<int>(rng() % 21);
    std::vector<std::vector<kgon::VertexId>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};

    const int want = static_cast<int>(rng() % static_cast<unsigned>(n));
    int added = 0;
    for (int attempt = 0; attempt < 8 * n && added < want; ++attempt) {
        auto faces = kgon::trace_faces_raw(rot);
        std::vector<std::size_t> big;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (faces[f].size() >= 4) big.push_back(f);
        if (big.empty()) break;
        const kgon::Face& face = faces[big[rng() % big.size()]];
        const int s = face.size();
        int i = static_cast<int>(rng() % static_cast<unsigned>(s));
        int j = static_cast<int>(rng() % static_cast<unsigned>(s));
        kgon::VertexId u = face.boundary[i], v = face.boundary[j];
        if (u == v) continue;
        bool adjacent = false;
        for (kgon::VertexId x : rot[u]) adjacent |= (x == v);
        if (adjacent) continue;
        kgon::add_chord_in_face(rot, face, u, v);
        ++added;
    }
    return kgon::PlaneGraph::make(n, rot);
}

}  // namespace fixtures
