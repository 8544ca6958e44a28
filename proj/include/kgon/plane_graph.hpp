#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kgon {

using VertexId = int;

// One face of an embedded graph: the vertices visited by the trace, in
// order. The boundary is cyclic; size() is the walk length (number of
// directed edges on the face).
struct Face {
    std::vector<VertexId> boundary;

    int size() const { return static_cast<int>(boundary.size()); }
    bool operator==(const Face&) const = default;
};

// A simple connected graph together with a combinatorial embedding given
// as a rotation system: for each vertex, the cyclic order of its
// neighbors as drawn clockwise around it. Vertex ids are dense 0..n-1.
//
// Immutable after construction; all operations on it are pure.
class PlaneGraph {
public:
    // Validates and builds. Throws MalformedRotation when the rotation
    // system has loops, repeated neighbors, asymmetric adjacency, ids out
    // of range, or more than one connected component.
    static PlaneGraph make(int vertex_count,
                           std::vector<std::vector<VertexId>> rotation,
                           std::map<VertexId, std::string> labels = {});

    int vertex_count() const { return n_; }
    long long edge_count() const { return edges_; }

    const std::vector<std::vector<VertexId>>& rotation() const { return rotation_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return rotation_[v]; }
    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
    bool adjacent(VertexId u, VertexId v) const;

    const std::map<VertexId, std::string>& labels() const { return labels_; }

    bool operator==(const PlaneGraph&) const = default;

private:
    PlaneGraph() = default;

    int n_ = 0;
    long long edges_ = 0;
    std::vector<std::vector<VertexId>> rotation_;
    std::map<VertexId, std::string> labels_;
};

// Face tracing. Each directed edge (u,v) lies on exactly one face; the
// successor of (u,v) is (v,w) where w follows u in rotation(v). With
// clockwise rotation lists this walks every face with the face region on
// the left of each directed edge. Traces start from the lowest unused
// directed edge (ordered by (u, position in rotation(u))), so the output
// order is deterministic.
std::vector<Face> trace_faces(const PlaneGraph& g);

// Same tracer on a bare rotation system; no validation. Used by the
// construction code and the exhaustive search, where graphs are assembled
// or enumerated before they are worth validating.
std::vector<Face> trace_faces_raw(const std::vector<std::vector<VertexId>>& rotation);

// True iff V - E + F = 2 with F from trace_faces, i.e. the rotation
// system embeds the graph in the sphere.
bool euler_check(const PlaneGraph& g);

// --- embedding edits ------------------------------------------------------
//
// Helpers that splice new edges into an existing face of a raw rotation
// system. They implement the one rule everything here is built from: new
// edges drawn inside a face must enter each boundary vertex's rotation
// inside that face's corner, i.e. immediately after the face's arriving
// neighbor.

// Index of the face whose boundary walk contains the directed edge u->v.
// Throws InvalidParams when absent.
std::size_t face_with_directed_edge(const std::vector<Face>& faces,
                                    VertexId u, VertexId v);

// Adds chord u-v inside `face`, splitting it in two. Both endpoints must
// occur exactly once on the boundary and must not already be adjacent.
void add_chord_in_face(std::vector<std::vector<VertexId>>& rotation,
                       const Face& face, VertexId u, VertexId v);

// Fan-triangulates `face` from the boundary vertex `apex` (adds
// size-3 fewer edges than the face has). Endpoints reached by the fan
// must not already be adjacent to the apex.
void add_fan_in_face(std::vector<std::vector<VertexId>>& rotation,
                     const Face& face, VertexId apex);

// Puts a brand-new vertex `hub` inside `face` and joins it to every
// boundary vertex. The boundary must be a simple cycle. rotation grows by
// one list; `hub` must equal the previous rotation.size().
void add_hub_in_face(std::vector<std::vector<VertexId>>& rotation,
                     const Face& face, VertexId hub);

}  // namespace kgon
