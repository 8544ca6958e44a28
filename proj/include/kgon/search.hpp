#pragma once

#include "kgon/plane_graph.hpp"

namespace kgon {

struct SearchOptions {
    bool allow_n7 = false;          // n = 7 is slow; opt in explicitly
    long long budget = 1'000'000'000;  // rotation systems examined before aborting
    int threads = 1;
};

struct SearchResult {
    int k;
    int n;
    long long best_m;        // the exact maximum
    PlaneGraph witness;      // lexicographically smallest attaining graph
    long long graphs_examined;  // rotation systems evaluated (diagnostic)
};

// Exact maximum edge count over all simple connected graphs on n labeled
// vertices that admit a genus-0 rotation system in which every vertex
// bounds a face of size >= k. Independent of the closed-form formula:
// edge counts descend from 3n-6; for each count, every edge subset is
// tried with every rotation system (first neighbor of each cyclic order
// pinned to quotient rotations of the same embedding); a candidate counts
// when the traced faces satisfy Euler's formula and the face-size
// property. The first witness in (edge-subset, rotation) enumeration
// order is returned, which is the same graph for any thread count.
//
// Supports 3 <= k <= n <= 6, and n = 7 behind options.allow_n7. Throws
// InvalidParams outside that range and BudgetExceeded when the rotation
// budget runs out (the search never truncates silently).
SearchResult search(long long k, long long n, const SearchOptions& options = {});

}  // namespace kgon
