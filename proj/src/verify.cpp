#include "kgon/verify.hpp"

#include <set>
#include <string>

#include "kgon/errors.hpp"
#include "kgon/formula.hpp"

namespace kgon {

namespace {

void check_threshold(int k) {
    if (k < 3)
        throw InvalidParams("face-size threshold must be at least 3, got " +
                            std::to_string(k));
}

}  // namespace

bool check_kgon_property(const PlaneGraph& g, int k) {
    check_threshold(k);
    std::vector<char> covered(g.vertex_count(), 0);
    for (const Face& f : trace_faces(g))
        if (f.size() >= k)
            for (VertexId v : f.boundary) covered[v] = 1;
    for (char c : covered)
        if (!c) return false;
    return true;
}

FaceCensus census(const PlaneGraph& g, int k) {
    check_threshold(k);
    FaceCensus c;
    c.threshold = k;
    long long big4_sum = 0;  // total size of faces >= 4
    for (const Face& f : trace_faces(g)) {
        ++c.face_count;
        const int s = f.size();
        if (s >= k) {
            ++c.big_face_count;
            c.big_face_degree_sum += s;
        } else {
            ++c.small_faces[s];
        }
        if (s >= 4) {
            ++c.hub_count;
            big4_sum += s;
        }
    }
    c.augmented_vertices = g.vertex_count() + c.hub_count;
    c.augmented_edges = g.edge_count() + big4_sum;
    return c;
}

bool face_census_identity(const PlaneGraph& g, int k) {
    check_threshold(k);
    for (const Face& f : trace_faces(g)) {
        std::set<VertexId> distinct(f.boundary.begin(), f.boundary.end());
        if (f.size() < 3 || distinct.size() != f.boundary.size())
            throw NotTwoConnected("a face is not a simple cycle; the census identity "
                                  "is undefined");
    }
    FaceCensus c = census(g, k);
    long long penalty = c.big_face_degree_sum - 3 * c.big_face_count;
    for (const auto& [size, count] : c.small_faces)
        if (size >= 4) penalty += static_cast<long long>(size - 3) * count;
    return g.edge_count() == 3LL * g.vertex_count() - 6 - penalty;
}

std::vector<VertexId> flower_centers(const PlaneGraph& g) {
    const int n = g.vertex_count();
    std::vector<char> has_face(n, 0), has_big(n, 0);
    for (const Face& f : trace_faces(g))
        for (VertexId v : f.boundary) {
            has_face[v] = 1;
            if (f.size() != 3) has_big[v] = 1;
        }
    std::vector<VertexId> centers;
    for (VertexId v = 0; v < n; ++v)
        if (has_face[v] && !has_big[v]) centers.push_back(v);
    return centers;
}

VerifyReport check_extremal(const PlaneGraph& g, int k) {
    check_threshold(k);
    VerifyReport r;
    r.property_holds = check_kgon_property(g, k);
    r.census = census(g, k);
    r.edge_count = g.edge_count();
    r.formula_target = max_edges(k, g.vertex_count());
    r.extremal = r.property_holds && r.edge_count == r.formula_target;
    r.flower_centers = flower_centers(g);
    r.euler_ok = euler_check(g);
    return r;
}

}  // namespace kgon
