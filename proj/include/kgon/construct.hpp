#pragma once

#include <utility>
#include <vector>

#include "kgon/formula.hpp"
#include "kgon/plane_graph.hpp"

namespace kgon {

// Blueprint of the extremal witness for (k, n): a row of cycles joined by
// three-edge junctions, up to two chords in the last (long) cycle, and an
// outer fan. Global vertex ids are assigned cycle by cycle; vertex i of
// cycle t sits at cycle_starts[t] + i, with local positions running
// clockwise around the drawn polygon.
struct ConstructionPlan {
    ExtremalParams params;

    std::vector<int> cycle_lengths;  // quotient-1 copies of k, then k+residue
    std::vector<int> cycle_starts;

    // Junction between consecutive cycles: (a,b) adjacent on the left
    // cycle, (c,d) adjacent on the right one; edges a-c, b-c, b-d make
    // two triangles and keep the outer boundary one simple n-cycle.
    struct Junction {
        VertexId a, b, c, d;
    };
    std::vector<Junction> junctions;

    std::vector<std::pair<VertexId, VertexId>> chords;
    VertexId apex = -1;  // outer-face fan apex

    long long cycle_edges = 0;
    long long junction_edges = 0;
    long long chord_edges = 0;
    long long fan_edges = 0;
    long long total_edges() const {
        return cycle_edges + junction_edges + chord_edges + fan_edges;
    }
};

struct Construction {
    PlaneGraph graph;
    ConstructionPlan plan;
};

// Builds a plane graph on n vertices with exactly max_edges(k, n) edges in
// which every vertex bounds a face of size >= k. Requires n >= k >= 4;
// k = 3 falls back to a doubly fanned cycle (a maximal plane graph with
// 3n-6 edges, where the property is automatic). Vertices carry labels
// "cycle:<t>", "junction:<t>" or "apex:<t>" recording the cycle index.
// Throws InvalidParams outside the domain and InternalInvariantViolation
// if the assembled embedding ever failed its own Euler check.
Construction construct(long long k, long long n);

struct EdgeBudget {
    long long cycle_edges = 0;
    long long junction_edges = 0;
    long long fan_edges = 0;
    long long chord_edges = 0;
    long long total = 0;
};

// The witness's edge count split by source; total always equals
// max_edges(k, n). Requires n >= k >= 4.
EdgeBudget edge_budget(long long k, long long n);

namespace detail {

// The witness before its outer fan: cycles, junctions and chords only.
// Exposed so tests can check that the outer boundary at this stage is one
// simple cycle through all n vertices.
struct Prefan {
    std::vector<std::vector<VertexId>> rotation;
    ConstructionPlan plan;
};
Prefan build_prefan(long long k, long long n);

}  // namespace detail

}  // namespace kgon
