#include "kgon/search.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "kgon/errors.hpp"

namespace kgon {

namespace {

constexpr int kMaxN = 7;

struct Candidate {
    long long subset_rank;
    long long rotation_rank;
    std::vector<std::vector<VertexId>> rotation;
};

// One edge subset with the full rotation-system odometer over it.
struct SubsetScan {
    int n;
    int k;
    int m;
    int deg[kMaxN];
    int rot[kMaxN][kMaxN - 1];
    int pos[kMaxN][kMaxN];

    // Returns false when the subset is disconnected.
    bool load(int n_, int k_, const std::vector<std::pair<int, int>>& edges,
              const std::vector<int>& picked) {
        n = n_;
        k = k_;
        m = static_cast<int>(picked.size());
        unsigned nbr_mask[kMaxN] = {};
        for (int e : picked) {
            nbr_mask[edges[e].first] |= 1u << edges[e].second;
            nbr_mask[edges[e].second] |= 1u << edges[e].first;
        }
        unsigned seen = 1u, frontier = 1u;
        while (frontier) {
            unsigned next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier & (1u << v)) next |= nbr_mask[v];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != (1u << n) - 1) return false;

        for (int v = 0; v < n; ++v) {
            deg[v] = 0;
            for (int u = 0; u < n; ++u)
                if (nbr_mask[v] & (1u << u)) rot[v][deg[v]++] = u;
        }
        return true;
    }

    // Advances the per-vertex permutations (first neighbor pinned);
    // false once every combination has been produced.
    bool advance() {
        for (int v = 0; v < n; ++v) {
            if (deg[v] >= 3 && std::next_permutation(rot[v] + 1, rot[v] + deg[v]))
                return true;
            // wrapped back to sorted order; carry to the next vertex
        }
        return false;
    }

    // Euler check plus the face-size property for the current rotations.
    bool evaluate() {
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < deg[v]; ++i) pos[v][rot[v][i]] = i;

        std::uint64_t used = 0;
        int faces = 0;
        bool covered[kMaxN] = {};
        for (int v0 = 0; v0 < n; ++v0) {
            for (int i0 = 0; i0 < deg[v0]; ++i0) {
                if (used & (1ULL << (v0 * (kMaxN - 1) + i0))) continue;
                ++faces;
                int walk[2 * 3 * kMaxN];
                int len = 0;
                int v = v0, i = i0;
                do {
                    used |= 1ULL << (v * (kMaxN - 1) + i);
                    walk[len++] = v;
                    int b = rot[v][i];
                    i = (pos[b][v] + 1) % deg[b];
                    v = b;
                } while (!(v == v0 && i == i0));
                if (len >= k)
                    for (int j = 0; j < len; ++j) covered[walk[j]] = true;
            }
        }
        if (n - m + faces != 2) return false;
        for (int v = 0; v < n; ++v)
            if (!covered[v]) return false;
        return true;
    }

    std::vector<std::vector<VertexId>> snapshot() const {
        std::vector<std::vector<VertexId>> r(n);
        for (int v = 0; v < n; ++v) r[v].assign(rot[v], rot[v] + deg[v]);
        return r;
    }
};

// First witness in this thread's share of one edge-count level.
std::optional<Candidate> scan_level(int n, int k, int m,
                                    const std::vector<std::pair<int, int>>& edges,
                                    int tid, int threads,
                                    std::atomic<long long>& examined,
                                    long long budget,
                                    std::atomic<bool>& over_budget) {
    const int total = static_cast<int>(edges.size());
    std::vector<int> picked(m);
    for (int i = 0; i < m; ++i) picked[i] = i;

    SubsetScan scan;
    long long rank = 0;
    long long local = 0;
    while (true) {
        if (rank % threads == tid && scan.load(n, k, edges, picked)) {
            long long rotation_rank = 0;
            do {
                ++local;
                if ((local & 1023) == 0) {
                    if (examined.fetch_add(1024) + 1024 > budget) {
                        over_budget = true;
                    }
                    local = 0;
                }
                if (over_budget) {
                    examined.fetch_add(local);
                    return std::nullopt;
                }
                if (scan.evaluate())  {
                    examined.fetch_add(local);
                    return Candidate{rank, rotation_rank, scan.snapshot()};
                }
                ++rotation_rank;
            } while (scan.advance());
        }

        // next m-combination in lexicographic order
        int i = m - 1;
        while (i >= 0 && picked[i] == total - m + i) --i;
        if (i < 0) break;
        ++picked[i];
        for (int j = i + 1; j < m; ++j) picked[j] = picked[j - 1] + 1;
        ++rank;
    }
    examined.fetch_add(local);
    return std::nullopt;
}

}  // namespace

SearchResult search(long long k, long long n, const SearchOptions& options) {
    if (k < 3) throw InvalidParams("k must be at least 3");
    if (n < k) throw InvalidParams("n must be at least k");
    if (n == 7 && !options.allow_n7)
        throw InvalidParams("n = 7 must be enabled explicitly; expect a long run");
    if (n > 7) throw InvalidParams("exhaustive search supports n up to 7");
    const int nn = static_cast<int>(n);
    const int kk = static_cast<int>(k);
    const int threads = std::max(1, options.threads);

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < nn; ++u)
        for (int v = u + 1; v < nn; ++v) edges.emplace_back(u, v);

    std::atomic<long long> examined{0};
    std::atomic<bool> over_budget{false};

    const long long top = std::min<long long>(3 * n - 6, static_cast<long long>(edges.size()));
    for (long long m = top; m >= 1; --m) {
        std::vector<std::optional<Candidate>> found(threads);
        if (threads == 1) {
            found[0] = scan_level(nn, kk, static_cast<int>(m), edges, 0, 1, examined,
                                  options.budget, over_budget);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&, t] {
                    found[t] = scan_level(nn, kk, static_cast<int>(m), edges, t, threads,
                                          examined, options.budget, over_budget);
                });
            for (auto& th : pool) th.join();
        }
        if (over_budget)
            throw BudgetExceeded("rotation budget of " + std::to_string(options.budget) +
                                     " exhausted at edge count " + std::to_string(m),
                                 examined.load());

        const Candidate* best = nullptr;
        for (const auto& c : found)
            if (c && (!best || c->subset_rank < best->subset_rank ||
                      (c->subset_rank == best->subset_rank &&
                       c->rotation_rank < best->rotation_rank)))
                best = &*c;
        if (best)
            return SearchResult{kk, nn, m, PlaneGraph::make(nn, best->rotation),
                                examined.load()};
    }
    throw InternalInvariantViolation("search found no witness at any edge count");
}

}  // namespace kgon
