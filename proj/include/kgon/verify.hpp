#pragma once

#include <map>
#include <vector>

#include "kgon/plane_graph.hpp"

namespace kgon {

// Face counts relative to a size threshold k: exact counts per size below
// k, and the aggregate count / boundary-length sum of the big faces. The
// augmented quantities describe the triangulation obtained by dropping a
// hub into every face of size >= 4 and joining it to the face boundary.
struct FaceCensus {
    int threshold = 0;                           // k
    std::map<int, long long> small_faces;        // size -> count, 3 <= size < k
    long long big_face_count = 0;                // faces of size >= k
    long long big_face_degree_sum = 0;           // total boundary length of those
    long long face_count = 0;
    long long hub_count = 0;                     // faces of size >= 4
    long long augmented_vertices = 0;            // n + hub_count
    long long augmented_edges = 0;               // m + total size of faces >= 4

    long long small(int size) const {
        auto it = small_faces.find(size);
        return it == small_faces.end() ? 0 : it->second;
    }
};

struct VerifyReport {
    bool property_holds = false;   // every vertex bounds a face of size >= k
    FaceCensus census;
    long long edge_count = 0;
    long long formula_target = 0;  // max_edges(k, n)
    bool extremal = false;         // property_holds and edge_count == target
    std::vector<VertexId> flower_centers;
    bool euler_ok = false;
};

// True iff every vertex lies on at least one traced face of size >= k.
// Throws InvalidParams when k < 3.
bool check_kgon_property(const PlaneGraph& g, int k);

// Exact face counts from the tracer, plus the augmented-graph quantities.
FaceCensus census(const PlaneGraph& g, int k);

// The Euler identity m = 3n - 6 - (sum over 4<=i<k of (i-3) f_i
// + d_k - 3 f_k), which must hold exactly whenever every face boundary is
// a simple cycle; checking it doubles as a self-test of the tracer.
// Throws NotTwoConnected when a face repeats a vertex or is shorter than
// a triangle.
bool face_census_identity(const PlaneGraph& g, int k);

// Full report: property, census, edge count against the formula target,
// flower centers and the Euler check.
VerifyReport check_extremal(const PlaneGraph& g, int k);

// Vertices all of whose incident faces are triangles -- the hubs of
// potential flowers. Empty result == the graph is non-flowered.
std::vector<VertexId> flower_centers(const PlaneGraph& g);

}  // namespace kgon
