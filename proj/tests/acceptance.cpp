// Acceptance suite: one pass/fail line per criterion, exit 0 only when
// everything holds. Build with optimizations; the sweeps are sized for
// minutes, not hours.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "kgon/circle_pack.hpp"
#include "kgon/construct.hpp"
#include "kgon/errors.hpp"
#include "kgon/formula.hpp"
#include "kgon/io.hpp"
#include "kgon/ip_oracle.hpp"
#include "kgon/search.hpp"
#include "kgon/verify.hpp"

using namespace kgon;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, double seconds,
            const std::string& detail = "") {
    std::printf("%s  %d. %-34s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", idx, name, seconds,
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace

int main() {
    bool sweep_flowers_empty = true;  // filled by criterion 3, reported under 7

    {  // 1. formula vs brute-force integer program
        Timer t;
        bool ok = true;
        for (long long k = 4; k <= 64 && ok; ++k)
            for (long long n = k; n <= 2000; ++n)
                if (max_edges(k, n) != 3 * n - 6 - ip_minimum_bruteforce(n, k).value) {
                    ok = false;
                    break;
                }
        report(1, "formula equals IP oracle", ok, t.seconds(), "k in 4..64, n to 2000");
    }

    {  // 2. the two anchor minima with their minimizers
        Timer t;
        IpSolution a = ip_minimum_bruteforce(8, 6);
        IpSolution b = ip_minimum_bruteforce(7, 4);
        bool ok = a.value == 5 && a.minimizer == IpPoint{8, 1} && b.value == 2 &&
                  b.minimizer == IpPoint{8, 2};
        report(2, "anchor minimizers (8,6) and (7,4)", ok, t.seconds());
    }

    {  // 3. constructions are extremal across the sweep
        Timer t;
        bool ok = true;
        std::string detail;
        for (long long k = 4; k <= 12 && ok; ++k)
            for (long long n = k; n <= 200; ++n) {
                Construction c = construct(k, n);
                long long residue = n % k;
                long long chords = residue == k - 1 ? 2 : residue == k - 2 ? 1 : 0;
                bool here = euler_check(c.graph) &&
                            check_kgon_property(c.graph, static_cast<int>(k)) &&
                            face_census_identity(c.graph, static_cast<int>(k)) &&
                            c.graph.edge_count() == max_edges(k, n) &&
                            static_cast<long long>(c.plan.chords.size()) == chords;
                sweep_flowers_empty &= flower_centers(c.graph).empty();
                if (!here) {
                    ok = false;
                    detail = "failed at k=" + std::to_string(k) + " n=" + std::to_string(n);
                    break;
                }
            }
        report(3, "constructions extremal (k to 12, n to 200)", ok, t.seconds(), detail);
    }

    {  // 4. exhaustive search confirms the formula for every tiny case
        Timer t;
        bool ok = true;
        std::string detail;
        for (long long k = 3; k <= 6 && ok; ++k)
            for (long long n = k; n <= 6; ++n) {
                SearchResult r = search(k, n);
                if (r.best_m != max_edges(k, n)) {
                    ok = false;
                    detail = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                             " got " + std::to_string(r.best_m);
                    break;
                }
            }
        report(4, "independent maximum (3<=k<=n<=6)", ok, t.seconds(), detail);
    }

    {  // 5. the k=4 corollary, entrywise to a million
        Timer t;
        bool ok = true;
        for (long long n = 4; n <= 1'000'000; ++n) {
            ExtremalParams p = ExtremalParams::make(4, n);
            if (p.correction != 0 || p.max_edges != max_edges_k4(n)) {
                ok = false;
                break;
            }
        }
        report(5, "k=4 table to n=10^6, correction 0", ok, t.seconds());
    }

    {  // 6. packing soundness on four witnesses
        Timer t;
        bool ok = true;
        std::string detail;
        for (auto [k, n] : {std::pair{4, 8}, {4, 12}, {5, 9}, {6, 8}}) {
            PlaneGraph g = construct(k, n).graph;
            Augmentation aug = augment(g, k);
            TriangulationPacking full = pack_triangulation(aug.augmented);
            Packing p = pack(aug);
            bool here = full.converged && full.angle_residual <= 1e-10 && p.converged &&
                        p.tangency_residual <= 1e-6;
            try {
                CoinReport rep = coin_report(p, g);
                here = here && rep.adjacency_ok && rep.flower_centers.empty();
            } catch (const Error&) {
                here = false;
            }
            if (!here) {
                ok = false;
                detail = "failed at k=" + std::to_string(k) + " n=" + std::to_string(n);
            }
        }
        report(6, "packing soundness (4 witnesses)", ok, t.seconds(), detail);
    }

    {  // 7. flower detection
        Timer t;
        auto centers = flower_centers(fixtures::w6());
        bool ok = centers == std::vector<VertexId>{0} && sweep_flowers_empty;
        report(7, "flower detection (wheel hub; sweep empty)", ok, t.seconds());
    }

    {  // 8. byte-exact round trips and deterministic SVG on 50 fixtures
        Timer t;
        bool ok = true;
        int fixtures_used = 0;

        std::vector<PlaneGraph> graphs;
        for (long long k = 4; k <= 10 && static_cast<int>(graphs.size()) < 35; ++k)
            for (long long n : {k, k + 1, k + 2, k + 5, 2 * k + 1})
                if (static_cast<int>(graphs.size()) < 35)
                    graphs.push_back(construct(k, n).graph);
        graphs.push_back(fixtures::w6());
        graphs.push_back(fixtures::k4());
        graphs.push_back(construct(3, 9).graph);

        for (const PlaneGraph& g : graphs) {
            ++fixtures_used;
            std::string once = io::graph_to_json(g);
            PlaneGraph back = io::graph_from_json(once);
            ok = ok && back == g && io::graph_to_json(back) == once;
        }
        // SVG determinism on a subset of the graphs.
        for (int i = 0; i < 6; ++i) {
            const PlaneGraph& g = graphs[static_cast<std::size_t>(i) * 5];
            ok = ok && io::graph_to_svg(g) == io::graph_to_svg(g);
        }

        for (auto [k, n] : {std::pair{4, 8}, {4, 9}, {4, 12}, {5, 9}, {5, 11}, {6, 8},
                            {6, 10}, {7, 9}, {4, 15}, {5, 14}, {6, 13}, {4, 20}}) {
            ++fixtures_used;
            PlaneGraph g = construct(k, n).graph;
            Packing p = pack(augment(g, k));
            std::string once = io::packing_to_json(p);
            Packing back = io::packing_from_json(once);
            ok = ok && back == p && io::packing_to_json(back) == once;
            ok = ok && io::packing_to_svg(p, g) == io::packing_to_svg(back, g);
        }
        report(8, "round trips + deterministic SVG", ok, t.seconds(),
               std::to_string(fixtures_used) + " fixtures");
    }

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
