#pragma once

#include <cstdint>

namespace kgon {

// Case parameters of the closed-form edge maximum for plane graphs in
// which every vertex bounds a face of size >= k. Writing n = k*quotient +
// residue with 0 <= residue <= k-1:
//
//   shift      = 1 when residue = k-1, 2 when residue = k-2, else 0;
//   correction = 0                 when residue = k-1,
//                floor(2 - 6/k)    when residue = k-2,
//                floor(3*residue/k) otherwise;
//   max_edges  = floor((2k+3)n/k - 6) - correction.
//
// The same maximum equals 3n - 6 - ip_minimum(n, k); both routes are
// computed exactly in 64-bit integers.
struct ExtremalParams {
    long long k = 0;
    long long n = 0;
    long long quotient = 0;    // n div k
    long long residue = 0;     // n mod k
    long long shift = 0;       // offset added to n inside the IP minimum
    long long correction = 0;  // subtracted from the floor expression
    long long max_edges = 0;

    // Throws InvalidParams unless 3 <= k <= n <= 10^12.
    static ExtremalParams make(long long k, long long n);
};

// floor((2k+3)n/k - 6) - correction, evaluated as 2n + floor(3n/k) - 6 -
// correction (identical value, no 64-bit overflow for n <= 10^12).
long long max_edges(long long k, long long n);

// min{ x - 3y : x,y >= 0, x >= n, ky <= x } in closed form:
// n + shift - 3*floor((n + shift)/k).
long long ip_minimum(long long n, long long k);

// The k = 4 case, floor(11n/4) - 6. Always equals max_edges(4, n); the
// correction term vanishes for k = 4.
long long max_edges_k4(long long n);

// Upper bound for the edge count of a coin graph on n coins containing no
// flower (no coin completely ringed by mutually tangent coins). Equals
// max_edges_k4(n); whether the bound is attained for every n is open.
long long nonflowerable_edge_bound(long long n);

}  // namespace kgon
