#include "kgon/construct.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "kgon/errors.hpp"

namespace kgon {

namespace {

constexpr long long kMaxConstructN = 5'000'000;  // materialized graphs only

// Outer-face orbit: the one through the directed edge 0 -> 1 (the top
// edge of the first cycle walked eastwards).
std::size_t outer_face_index(const std::vector<Face>& faces) {
    return face_with_directed_edge(faces, 0, 1);
}

// Interior orbit of the last cycle goes through local 1 -> local 0.
std::size_t last_interior_index(const std::vector<Face>& faces, int start) {
    return face_with_directed_edge(faces, start + 1, start + 0);
}

Construction construct_k3(long long n) {
    // Cycle plus a fan on each side: a maximal plane graph, so every
    // vertex bounds a triangle and the edge count is 3n-6.
    const int nn = static_cast<int>(n);
    std::vector<std::vector<VertexId>> rotation(nn);
    for (int i = 0; i < nn; ++i)
        rotation[i] = {(i + nn - 1) % nn, (i + 1) % nn};

    ConstructionPlan plan;
    plan.params = ExtremalParams::make(3, n);
    plan.cycle_lengths = {nn};
    plan.cycle_starts = {0};
    plan.cycle_edges = n;
    plan.fan_edges = n > 3 ? 2 * (n - 3) : 0;

    if (nn > 3) {
        plan.apex = 1;
        auto faces = trace_faces_raw(rotation);
        add_fan_in_face(rotation, faces[face_with_directed_edge(faces, 1, 0)], 0);
        faces = trace_faces_raw(rotation);
        add_fan_in_face(rotation, faces[outer_face_index(faces)], 1);
    }

    std::map<VertexId, std::string> labels;
    for (int v = 0; v < nn; ++v) labels[v] = "cycle:0";
    if (plan.apex >= 0) labels[plan.apex] = "apex:0";

    PlaneGraph g = PlaneGraph::make(nn, std::move(rotation), std::move(labels));
    if (!euler_check(g) || g.edge_count() != plan.params.max_edges)
        throw InternalInvariantViolation("k=3 fan construction failed its checks");
    return {std::move(g), std::move(plan)};
}

}  // namespace

namespace detail {

Prefan build_prefan(long long k, long long n) {
    if (k < 4) throw InvalidParams("prefan construction requires k >= 4");
    if (n > kMaxConstructN)
        throw InvalidParams("construct materializes at most 5*10^6 vertices");

    Prefan out;
    ConstructionPlan& plan = out.plan;
    plan.params = ExtremalParams::make(k, n);
    const int kk = static_cast<int>(k);
    const int quotient = static_cast<int>(plan.params.quotient);
    const int residue = static_cast<int>(plan.params.residue);

    for (int t = 0; t + 1 < quotient; ++t) plan.cycle_lengths.push_back(kk);
    plan.cycle_lengths.push_back(kk + residue);
    plan.cycle_starts.resize(plan.cycle_lengths.size());
    int acc = 0;
    for (std::size_t t = 0; t < plan.cycle_lengths.size(); ++t) {
        plan.cycle_starts[t] = acc;
        acc += plan.cycle_lengths[t];
    }

    auto global = [&](int t, int i) { return plan.cycle_starts[t] + i; };

    // Disjoint cycles, each a clockwise polygon: rotation [prev, next].
    std::vector<std::vector<VertexId>>& rotation = out.rotation;
    rotation.resize(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < plan.cycle_lengths.size(); ++t) {
        const int len = plan.cycle_lengths[t];
        for (int i = 0; i < len; ++i)
            rotation[global(t, i)] = {global(t, (i + len - 1) % len),
                                      global(t, (i + 1) % len)};
    }
    plan.cycle_edges = n;

    // Junctions. The left cycle's east pair is (local 1, local 2), the
    // right cycle's west pair (local 0, local last); edges a-c, b-c, b-d.
    // All three land between prev and next in each endpoint's rotation,
    // so every cycle keeps its interior face intact.
    auto insert_between = [&](VertexId v, VertexId item) {
        auto& r = rotation[v];
        r.insert(r.begin() + 1, item);
    };
    for (int t = 0; t + 1 < quotient; ++t) {
        const int right_len = plan.cycle_lengths[t + 1];
        ConstructionPlan::Junction jn{global(t, 1), global(t, 2), global(t + 1, 0),
                                      global(t + 1, right_len - 1)};
        insert_between(jn.a, jn.c);
        insert_between(jn.b, jn.d);
        insert_between(jn.b, jn.c);
        insert_between(jn.c, jn.a);
        insert_between(jn.c, jn.b);
        insert_between(jn.d, jn.b);
        plan.junctions.push_back(jn);
    }
    plan.junction_edges = 3LL * (quotient - 1);

    // Chords in the long cycle, drawn inside its interior face.
    const int last = quotient - 1;
    const int start = plan.cycle_starts[last];
    if (residue >= kk - 2) {
        auto faces = trace_faces_raw(rotation);
        const Face& interior = faces[last_interior_index(faces, start)];
        add_chord_in_face(rotation, interior, start + 0, start + kk - 1);
        plan.chords.emplace_back(start + 0, start + kk - 1);
        if (residue == kk - 1) {
            faces = trace_faces_raw(rotation);
            // The region holding locals 0 and k-1..2k-2 is the face the
            // first chord closes with the directed edge (k-1) -> 0.
            const Face& second =
                faces[face_with_directed_edge(faces, start + kk - 1, start + 0)];
            add_chord_in_face(rotation, second, start + kk - 1, start + 2 * kk - 2);
            plan.chords.emplace_back(start + kk - 1, start + 2 * kk - 2);
        }
    }
    plan.chord_edges = static_cast<long long>(plan.chords.size());

    plan.apex = global(last, 1);
    plan.fan_edges = n - 3;
    return out;
}

}  // namespace detail

Construction construct(long long k, long long n) {
    if (k < 3)
        throw InvalidParams("k must be at least 3, got " + std::to_string(k));
    if (n < k)
        throw InvalidParams("n must be at least k");
    if (n > kMaxConstructN)
        throw InvalidParams("construct materializes at most 5*10^6 vertices");
    if (k == 3) return construct_k3(n);

    detail::Prefan prefan = detail::build_prefan(k, n);
    auto& rotation = prefan.rotation;
    ConstructionPlan& plan = prefan.plan;

    auto faces = trace_faces_raw(rotation);
    const Face& outer = faces[outer_face_index(faces)];
    {
        std::set<VertexId> distinct(outer.boundary.begin(), outer.boundary.end());
        if (outer.size() != n || distinct.size() != static_cast<std::size_t>(n))
            throw InternalInvariantViolation(
                "pre-fan boundary is not a simple cycle through all vertices");
    }
    add_fan_in_face(rotation, outer, plan.apex);

    std::map<VertexId, std::string> labels;
    for (std::size_t t = 0; t < plan.cycle_lengths.size(); ++t)
        for (int i = 0; i < plan.cycle_lengths[t]; ++i)
            labels[plan.cycle_starts[t] + i] = "cycle:" + std::to_string(t);
    for (std::size_t t = 0; t < plan.junctions.size(); ++t) {
        const auto& jn = plan.junctions[t];
        labels[jn.a] = labels[jn.b] = "junction:" + std::to_string(t);
        labels[jn.c] = labels[jn.d] = "junction:" + std::to_string(t + 1);
    }
    labels[plan.apex] = "apex:" + std::to_string(plan.cycle_lengths.size() - 1);

    PlaneGraph g = PlaneGraph::make(static_cast<int>(n), std::move(rotation),
                                    std::move(labels));
    if (!euler_check(g))
        throw InternalInvariantViolation("assembled witness fails the Euler check");
    if (g.edge_count() != plan.params.max_edges || g.edge_count() != plan.total_edges())
        throw InternalInvariantViolation("assembled witness has the wrong edge count");
    return {std::move(g), std::move(plan)};
}

EdgeBudget edge_budget(long long k, long long n) {
    if (k < 4)
        throw InvalidParams("edge budget requires k >= 4");
    ExtremalParams p = ExtremalParams::make(k, n);
    EdgeBudget b;
    b.cycle_edges = n;
    b.junction_edges = 3 * (p.quotient - 1);
    b.fan_edges = n - 3;
    if (p.residue == k - 1)
        b.chord_edges = 2;
    else if (p.residue == k - 2)
        b.chord_edges = 1;
    b.total = b.cycle_edges + b.junction_edges + b.fan_edges + b.chord_edges;
    if (b.total != p.max_edges)
        throw InternalInvariantViolation("edge budget disagrees with the formula");
    return b;
}

}  // namespace kgon
