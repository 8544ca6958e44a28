#include "kgon/circle_pack.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kgon/errors.hpp"
#include "kgon/verify.hpp"

namespace kgon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Corner angle at the vertex of radius rv between tangent neighbors of
// radii ru and rw: half-angle form of the law of cosines on the triangle
// with sides rv+ru, rv+rw, ru+rw. Free of cancellation.
double corner_angle(double rv, double ru, double rw) {
    double s = std::sqrt((ru / (rv + ru)) * (rw / (rv + rw)));
    return 2.0 * std::asin(std::min(1.0, s));
}

}  // namespace

Augmentation augment(const PlaneGraph& g, int k) {
    if (k < 3)
        throw InvalidParams("face-size threshold must be at least 3, got " +
                            std::to_string(k));
    auto faces = trace_faces(g);
    auto rotation = g.rotation();
    auto labels = g.labels();

    std::map<std::size_t, VertexId> hub_for_face;
    VertexId next_id = g.vertex_count();
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (faces[f].size() < 4) continue;
        add_hub_in_face(rotation, faces[f], next_id);
        labels[next_id] = "hub";
        hub_for_face[f] = next_id;
        ++next_id;
    }
    return Augmentation{PlaneGraph::make(next_id, std::move(rotation), std::move(labels)),
                        g.vertex_count(), std::move(hub_for_face)};
}

double angle_sum(const PlaneGraph& tri, const std::vector<double>& radii, VertexId v) {
    const auto& nbrs = tri.neighbors(v);
    const int d = static_cast<int>(nbrs.size());
    double sum = 0;
    for (int i = 0; i < d; ++i)
        sum += corner_angle(radii[v], radii[nbrs[i]], radii[nbrs[(i + 1) % d]]);
    return sum;
}

TriangulationPacking pack_triangulation(const PlaneGraph& tri, const PackOptions& opt) {
    const int n = tri.vertex_count();
    if (n < 4)
        throw InvalidParams("packing needs a triangulation with at least 4 vertices");
    auto faces = trace_faces(tri);
    for (const Face& f : faces)
        if (f.size() != 3)
            throw InvalidParams("packing input must be a full triangulation");

    // Boundary face: the first traced face whose sorted vertex degrees
    // are lexicographically largest. Anchoring the packing at the busiest
    // corner keeps the radius range tame; fan apexes otherwise push the
    // far coins exponentially small and position roundoff swamps them.
    std::size_t boundary_face = 0;
    std::array<int, 3> best_key{-1, -1, -1};
    for (std::size_t f = 0; f < faces.size(); ++f) {
        std::array<int, 3> key{tri.degree(faces[f].boundary[0]),
                               tri.degree(faces[f].boundary[1]),
                               tri.degree(faces[f].boundary[2])};
        std::sort(key.rbegin(), key.rend());
        if (key > best_key) {
            best_key = key;
            boundary_face = f;
        }
    }

    TriangulationPacking out;
    out.boundary = faces[boundary_face].boundary;

    std::vector<char> interior(n, 1);
    for (VertexId v : out.boundary) interior[v] = 0;

    std::vector<double> radii(n, 1.0);

    // Radius iteration: measure all interior angle sums, then replace
    // each interior radius by the one that would give an exact 2*pi sum
    // against a uniform neighbor radius matching its current sum.
    // Measuring before updating makes the reported residual a property of
    // the returned radii, not of a half-updated sweep.
    auto measure = [&] {
        double residual = 0;
        for (VertexId v = 0; v < n; ++v)
            if (interior[v])
                residual = std::max(residual, std::abs(angle_sum(tri, radii, v) - kTwoPi));
        return residual;
    };
    // Layout inconsistency grows like angle residual times the packing's
    // radius ratio, so once the required tolerance is met the radii are
    // polished toward machine precision with the same update rule.
    const double polish_tol = std::min(opt.angle_tol, 1e-14);
    double stalled_at = std::numeric_limits<double>::infinity();
    long long stalled_since = 0;
    while (true) {
        out.angle_residual = measure();
        if (out.angle_residual <= opt.angle_tol) out.converged = true;
        if (out.angle_residual <= polish_tol) break;
        if (out.angle_residual < stalled_at * 0.999) {
            stalled_at = out.angle_residual;
            stalled_since = out.sweeps;
        } else if (out.converged && out.sweeps - stalled_since >= 64) {
            break;  // polishing stopped paying; keep the converged radii
        }
        if (out.sweeps >= opt.max_sweeps) break;
        ++out.sweeps;
        for (VertexId v = 0; v < n; ++v) {
            if (!interior[v]) continue;
            const int d = tri.degree(v);
            double theta = angle_sum(tri, radii, v);
            double s = std::sin(theta / (2 * d));
            double target = std::sin(std::numbers::pi / d);
            double uniform = radii[v] * s / (1 - s);
            double next = uniform * (1 - target) / target;
            if (!(next >= opt.radius_floor))
                throw DegenerateRadius("radius at vertex " + std::to_string(v) +
                                       " fell below the floor");
            radii[v] = next;
        }
    }

    // Layout. The boundary face (A,B,C) is drawn with A at the origin and
    // B on the positive x axis; every other face is traversed with its
    // region on the left, so its third vertex sits left of the directed
    // shared edge. The boundary face itself is the one exception: its
    // third vertex goes right.
    out.circles.assign(n, Circle{});
    for (VertexId v = 0; v < n; ++v) out.circles[v].r = radii[v];

    // Positions are chained face by face, so roundoff committed at one
    // scale is inherited by everything placed later. Seeding the chain at
    // the face with the smallest coins and growing outward keeps every
    // placement's error proportional to its own scale, which matters when
    // radii span many orders of magnitude; extended precision adds slack.
    std::vector<std::array<long double, 2>> at(n, {0.0L, 0.0L});
    std::vector<char> placed(n, 0);

    std::size_t seed_face = faces.size();
    double seed_size = 0;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (f == boundary_face) continue;
        const auto& b = faces[f].boundary;
        double big = std::max({radii[b[0]], radii[b[1]], radii[b[2]]});
        if (seed_face == faces.size() || big < seed_size) {
            seed_face = f;
            seed_size = big;
        }
    }

    auto place_third = [&](VertexId x, VertexId y, VertexId z, long double side) {
        // z from x with the angle at x between x->y and x->z.
        long double ru = radii[y], rw = radii[z], rv = radii[x];
        long double alpha =
            2.0L * std::asin(std::sqrt((ru / (rv + ru)) * (rw / (rv + rw))));
        long double dx = at[y][0] - at[x][0];
        long double dy = at[y][1] - at[x][1];
        long double len = std::sqrt(dx * dx + dy * dy);
        long double ux = dx / len, uy = dy / len;
        long double c = std::cos(alpha), s = std::sin(alpha) * side;
        long double rx = ux * c - uy * s, ry = ux * s + uy * c;
        long double dist = rv + rw;
        at[z][0] = at[x][0] + rx * dist;
        at[z][1] = at[x][1] + ry * dist;
        placed[z] = 1;
    };

    // Seed triangle: first edge horizontal, third vertex on the left
    // (interior faces run counterclockwise; only the boundary face runs
    // the other way and it never seeds).
    {
        const auto& b = faces[seed_face].boundary;
        at[b[1]][0] =
            static_cast<long double>(radii[b[0]]) + static_cast<long double>(radii[b[1]]);
        placed[b[0]] = placed[b[1]] = 1;
        place_third(b[0], b[1], b[2], +1.0L);
    }

    // Fixed-point sweep over faces; each face with two placed corners
    // places its third. Deterministic order, no overwrites.
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (f == boundary_face) continue;
            const auto& b = faces[f].boundary;
            for (int i = 0; i < 3; ++i) {
                VertexId x = b[i], y = b[(i + 1) % 3], z = b[(i + 2) % 3];
                if (placed[x] && placed[y] && !placed[z]) {
                    place_third(x, y, z, +1.0L);
                    progress = true;
                }
            }
        }
    }
    for (char p : placed)
        if (!p) throw InternalInvariantViolation("layout left a circle unplaced");

    // Re-center on the smallest coin before rounding to double. The
    // smallest coins huddle together, and a coin's stored coordinates are
    // only accurate to eps times their magnitude, so parking the origin
    // there keeps even the tiniest tangencies representable.
    VertexId smallest = 0;
    for (VertexId v = 1; v < n; ++v)
        if (radii[v] < radii[smallest]) smallest = v;
    const long double ox = at[smallest][0], oy = at[smallest][1];
    for (VertexId v = 0; v < n; ++v) {
        out.circles[v].x = static_cast<double>(at[v][0] - ox);
        out.circles[v].y = static_cast<double>(at[v][1] - oy);
    }
    return out;
}

namespace {

double relative_gap(const Circle& a, const Circle& b) {
    double dist = std::hypot(a.x - b.x, a.y - b.y);
    double sum = a.r + b.r;
    return (dist - sum) / sum;
}

void fill_residuals(Packing& p, const PlaneGraph& g) {
    const int n = g.vertex_count();
    p.tangency_residual = 0;
    p.overlap_residual = 0;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            double gap = relative_gap(p.circles[u], p.circles[v]);
            if (g.adjacent(u, v))
                p.tangency_residual = std::max(p.tangency_residual, std::abs(gap));
            else
                p.overlap_residual = std::max(p.overlap_residual, -gap);
        }
    p.overlap_residual = std::max(0.0, p.overlap_residual);
}

}  // namespace

Packing pack(const Augmentation& aug, const PackOptions& opt) {
    TriangulationPacking full = pack_triangulation(aug.augmented, opt);
    if (!full.converged)
        throw NoConvergence("angle sums did not reach tolerance within " +
                                std::to_string(opt.max_sweeps) + " sweeps",
                            full.sweeps, full.angle_residual);

    Packing p;
    p.circles.assign(full.circles.begin(),
                     full.circles.begin() + aug.original_vertex_count);
    p.iterations = full.sweeps;
    p.converged = true;

    // Residuals over the original graph only; the hubs are gone.
    // Rebuild it from the augmented rotation minus hub entries.
    const PlaneGraph& ga = aug.augmented;
    std::vector<std::vector<VertexId>> rotation(aug.original_vertex_count);
    for (VertexId v = 0; v < aug.original_vertex_count; ++v)
        for (VertexId u : ga.neighbors(v))
            if (u < aug.original_vertex_count) rotation[v].push_back(u);
    PlaneGraph original = PlaneGraph::make(aug.original_vertex_count, std::move(rotation));
    fill_residuals(p, original);
    return p;
}

CoinReport coin_report(const Packing& p, const PlaneGraph& g, double tangency_tol) {
    const int n = g.vertex_count();
    if (static_cast<int>(p.circles.size()) != n)
        throw InvalidParams("packing and graph disagree on the vertex count");

    CoinReport rep;
    rep.edge_count = g.edge_count();
    rep.flower_centers = flower_centers(g);

    double rmin = p.circles[0].r, rmax = p.circles[0].r;
    for (const Circle& c : p.circles) {
        rmin = std::min(rmin, c.r);
        rmax = std::max(rmax, c.r);
    }
    rep.radius_ratio = rmax / rmin;

    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            double gap = relative_gap(p.circles[u], p.circles[v]);
            bool tangent = std::abs(gap) <= tangency_tol;
            bool edge = g.adjacent(u, v);
            if (edge) {
                rep.tangency_residual = std::max(rep.tangency_residual, std::abs(gap));
                if (!tangent)
                    throw AdjacencyMismatch("edge " + std::to_string(u) + "-" +
                                            std::to_string(v) +
                                            " is not realized by a tangency");
            } else {
                rep.overlap_residual = std::max(rep.overlap_residual, std::max(0.0, -gap));
                if (tangent)
                    throw AdjacencyMismatch("non-adjacent coins " + std::to_string(u) +
                                            "," + std::to_string(v) + " are tangent");
            }
        }
    rep.adjacency_ok = true;
    return rep;
}

}  // namespace kgon
