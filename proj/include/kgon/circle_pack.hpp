#pragma once

#include <map>
#include <vector>

#include "kgon/plane_graph.hpp"

namespace kgon {

// The input graph with a hub vertex dropped into every face of size >= 4
// and joined to the face boundary. The result is a full triangulation
// (every traced face a triangle); hubs get the ids n, n+1, ... in face
// trace order.
struct Augmentation {
    PlaneGraph augmented;
    int original_vertex_count = 0;
    std::map<std::size_t, VertexId> hub_for_face;  // input face index -> hub id
};

// Throws NotTwoConnected when some face of size >= 4 repeats a vertex.
Augmentation augment(const PlaneGraph& g, int k);

struct PackOptions {
    double angle_tol = 1e-10;       // per-vertex angle-sum residual target
    long long max_sweeps = 1'000'000;
    double radius_floor = 1e-12;    // DegenerateRadius below this
    double tangency_tol = 1e-6;     // relative, for reports and reconstruction
};

struct Circle {
    double x = 0, y = 0, r = 0;
    bool operator==(const Circle&) const = default;
};

// Radii and centers for every vertex of a triangulation. The first traced
// face is the boundary: its three radii are fixed at 1, every other
// vertex's angle sum is driven to 2*pi, and centers are laid out from the
// boundary face with its first edge on the horizontal axis.
struct TriangulationPacking {
    std::vector<Circle> circles;       // indexed by vertex id
    std::vector<VertexId> boundary;    // the three fixed vertices
    long long sweeps = 0;
    double angle_residual = 0;         // max |angle sum - 2*pi| over interior
    bool converged = false;
};

// Radius iteration plus layout on the full triangulation. Throws
// DegenerateRadius on underflow; returns converged = false (rather than
// throwing) when sweeps run out, so callers can inspect the residual.
TriangulationPacking pack_triangulation(const PlaneGraph& triangulation,
                                        const PackOptions& options = {});

// Angle sum at v computed from radii alone (sum over the corners between
// rotation-consecutive neighbors). Every face at v must be a triangle.
double angle_sum(const PlaneGraph& triangulation, const std::vector<double>& radii,
                 VertexId v);

// A coin representation of the original graph: per-vertex circles with
// hub circles computed, used for the layout, then dropped.
struct Packing {
    std::vector<Circle> circles;   // indexed by vertex id of the input graph
    double tangency_residual = 0;  // max relative |dist - r_u - r_v| over edges
    double overlap_residual = 0;   // max relative overlap over non-adjacent pairs
    long long iterations = 0;
    bool converged = false;

    bool operator==(const Packing&) const = default;
};

// Packs aug.augmented and keeps the circles of the original vertices.
// Throws NoConvergence when the radius iteration fails to reach
// options.angle_tol within options.max_sweeps.
Packing pack(const Augmentation& aug, const PackOptions& options = {});

struct CoinReport {
    double tangency_residual = 0;
    double overlap_residual = 0;
    double radius_ratio = 0;  // max radius / min radius
    std::vector<VertexId> flower_centers;
    long long edge_count = 0;
    bool adjacency_ok = false;
};

// Cross-checks a packing against the graph it was made for: recomputes
// residuals, rebuilds adjacency from tangency within tolerance, and runs
// the combinatorial flower test. Throws AdjacencyMismatch when the
// reconstructed adjacency differs from g.
CoinReport coin_report(const Packing& p, const PlaneGraph& g,
                       double tangency_tol = 1e-6);

}  // namespace kgon
