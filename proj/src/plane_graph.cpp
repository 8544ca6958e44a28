#include "kgon/plane_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "kgon/errors.hpp"

namespace kgon {

namespace {

std::string vtx(VertexId v) { return std::to_string(v); }

}  // namespace

PlaneGraph PlaneGraph::make(int vertex_count,
                            std::vector<std::vector<VertexId>> rotation,
                            std::map<VertexId, std::string> labels) {
    if (vertex_count <= 0)
        throw MalformedRotation("vertex count must be positive");
    if (rotation.size() != static_cast<std::size_t>(vertex_count))
        throw MalformedRotation("rotation has " + std::to_string(rotation.size()) +
                                " lists for " + std::to_string(vertex_count) + " vertices");

    long long directed = 0;
    for (VertexId v = 0; v < vertex_count; ++v) {
        for (VertexId u : rotation[v]) {
            if (u < 0 || u >= vertex_count)
                throw MalformedRotation("neighbor " + vtx(u) + " of " + vtx(v) + " out of range");
            if (u == v)
                throw MalformedRotation("loop at vertex " + vtx(v));
        }
        directed += static_cast<long long>(rotation[v].size());
    }

    // Repeats and symmetry in one pass over the sorted directed pairs;
    // scanning each neighbor list against the other side would go
    // quadratic at a fan apex.
    {
        std::vector<std::pair<VertexId, VertexId>> arcs;
        arcs.reserve(static_cast<std::size_t>(directed));
        for (VertexId v = 0; v < vertex_count; ++v)
            for (VertexId u : rotation[v]) arcs.emplace_back(v, u);
        std::sort(arcs.begin(), arcs.end());
        for (std::size_t i = 1; i < arcs.size(); ++i)
            if (arcs[i] == arcs[i - 1])
                throw MalformedRotation("repeated neighbor " + vtx(arcs[i].second) +
                                        " at vertex " + vtx(arcs[i].first));
        for (const auto& [v, u] : arcs)
            if (!std::binary_search(arcs.begin(), arcs.end(), std::pair{u, v}))
                throw MalformedRotation("edge " + vtx(v) + "-" + vtx(u) +
                                        " present at " + vtx(v) + " but not at " + vtx(u));
    }

    // Connectivity.
    if (vertex_count > 1) {
        std::vector<char> visited(vertex_count, 0);
        std::queue<VertexId> q;
        q.push(0);
        visited[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId u : rotation[v])
                if (!visited[u]) {
                    visited[u] = 1;
                    ++reached;
                    q.push(u);
                }
        }
        if (reached != vertex_count)
            throw MalformedRotation("graph is not connected (" + std::to_string(reached) +
                                    " of " + std::to_string(vertex_count) + " vertices reachable)");
    }

    PlaneGraph g;
    g.n_ = vertex_count;
    g.edges_ = directed / 2;
    g.rotation_ = std::move(rotation);
    g.labels_ = std::move(labels);

    for (const auto& [v, text] : g.labels_) {
        (void)text;
        if (v < 0 || v >= vertex_count)
            throw MalformedRotation("label for vertex " + vtx(v) + " out of range");
    }
    return g;
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
    const auto& r = rotation_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

std::vector<Face> trace_faces_raw(const std::vector<std::vector<VertexId>>& rotation) {
    const int n = static_cast<int>(rotation.size());

    // pos[v] maps neighbor -> index in rotation[v].
    std::vector<std::map<VertexId, int>> pos(n);
    std::vector<int> offset(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i)
            pos[v][rotation[v][i]] = i;
        offset[v + 1] = offset[v] + static_cast<int>(rotation[v].size());
    }

    // Directed edge id: offset[u] + index of v in rotation(u). Traces
    // start from the lowest unused directed edge (u, v) by vertex ids.
    std::vector<char> used(offset[n], 0);
    std::vector<Face> faces;

    for (VertexId u = 0; u < n; ++u) {
        for (const auto& [v, i] : pos[u]) {
            (void)v;
            if (used[offset[u] + i]) continue;
            Face face;
            VertexId a = u;
            int ai = i;
            do {
                used[offset[a] + ai] = 1;
                face.boundary.push_back(a);
                VertexId b = rotation[a][ai];
                int j = pos[b].at(a);
                int deg = static_cast<int>(rotation[b].size());
                ai = (j + 1) % deg;
                a = b;
            } while (!(a == u && ai == i));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

std::vector<Face> trace_faces(const PlaneGraph& g) {
    return trace_faces_raw(g.rotation());
}

bool euler_check(const PlaneGraph& g) {
    long long f = static_cast<long long>(trace_faces(g).size());
    return g.vertex_count() - g.edge_count() + f == 2;
}

// --- embedding edits ------------------------------------------------------

namespace {

// Inserts `item` into rotation[v] immediately after neighbor `after`.
void insert_after(std::vector<std::vector<VertexId>>& rotation,
                  VertexId v, VertexId after, VertexId item) {
    auto& r = rotation[v];
    auto it = std::find(r.begin(), r.end(), after);
    if (it == r.end())
        throw InternalInvariantViolation("corner anchor " + std::to_string(after) +
                                         " missing at vertex " + std::to_string(v));
    r.insert(it + 1, item);
}

std::size_t position_on_boundary(const Face& face, VertexId v) {
    std::size_t found = face.boundary.size();
    for (std::size_t i = 0; i < face.boundary.size(); ++i) {
        if (face.boundary[i] == v) {
            if (found != face.boundary.size())
                throw NotTwoConnected("vertex " + std::to_string(v) +
                                      " occurs twice on the face boundary");
            found = i;
        }
    }
    if (found == face.boundary.size())
        throw InvalidParams("vertex " + std::to_string(v) + " not on the face");
    return found;
}

}  // namespace

std::size_t face_with_directed_edge(const std::vector<Face>& faces,
                                    VertexId u, VertexId v) {
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& b = faces[f].boundary;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] == u && b[(i + 1) % b.size()] == v) return f;
    }
    throw InvalidParams("no face contains directed edge " + std::to_string(u) +
                        "->" + std::to_string(v));
}

void add_chord_in_face(std::vector<std::vector<VertexId>>& rotation,
                       const Face& face, VertexId u, VertexId v) {
    const auto& b = face.boundary;
    const std::size_t s = b.size();
    std::size_t pu = position_on_boundary(face, u);
    std::size_t pv = position_on_boundary(face, v);
    if ((pu + 1) % s == pv || (pv + 1) % s == pu)
        throw InvalidParams("chord endpoints are consecutive on the face");

    // Corner rule: at u the face arrives from boundary[pu-1]; the new edge
    // goes right after that neighbor in u's rotation.
    insert_after(rotation, u, b[(pu + s - 1) % s], v);
    insert_after(rotation, v, b[(pv + s - 1) % s], u);
}

void add_fan_in_face(std::vector<std::vector<VertexId>>& rotation,
                     const Face& face, VertexId apex) {
    const std::size_t s = face.boundary.size();
    if (s < 4) return;  // triangles need no fan
    std::size_t pa = position_on_boundary(face, apex);

    // Boundary re-rooted at the apex.
    std::vector<VertexId> b(s);
    for (std::size_t i = 0; i < s; ++i) b[i] = face.boundary[(pa + i) % s];

    // At the apex the whole bundle sits in one corner, ordered so that the
    // edge to b[s-2] ends up next to the boundary edge to b[s-1]. Spliced
    // in as one block; element-wise inserts would rescan the apex list.
    {
        auto& r = rotation[apex];
        auto it = std::find(r.begin(), r.end(), b[s - 1]);
        if (it == r.end())
            throw InternalInvariantViolation("fan anchor missing at the apex");
        std::vector<VertexId> block(b.rbegin() + 1, b.rend() - 2);  // b[s-2] .. b[2]
        r.insert(it + 1, block.begin(), block.end());
    }
    for (std::size_t i = 2; i <= s - 2; ++i)
        insert_after(rotation, b[i], b[i - 1], apex);
}

void add_hub_in_face(std::vector<std::vector<VertexId>>& rotation,
                     const Face& face, VertexId hub) {
    if (hub != static_cast<VertexId>(rotation.size()))
        throw InternalInvariantViolation("hub id must extend the rotation system");
    const auto& b = face.boundary;
    const std::size_t s = b.size();

    std::set<VertexId> distinct(b.begin(), b.end());
    if (distinct.size() != s)
        throw NotTwoConnected("cannot place a hub: face boundary repeats a vertex");

    // Hub sees the boundary reversed; each boundary vertex gets the hub in
    // the face corner.
    std::vector<VertexId> hub_rot(b.rbegin(), b.rend());
    rotation.push_back(std::move(hub_rot));
    for (std::size_t i = 0; i < s; ++i)
        insert_after(rotation, b[i], b[(i + s - 1) % s], hub);
}

}  // namespace kgon
