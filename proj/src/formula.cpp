#include "kgon/formula.hpp"

#include <string>

#include "kgon/errors.hpp"

namespace kgon {

namespace {

constexpr long long kMaxN = 1'000'000'000'000LL;  // keeps 3n, 11n in 64 bits

void check_domain(long long k, long long n) {
    if (k < 3)
        throw InvalidParams("k must be at least 3, got " + std::to_string(k));
    if (n < k)
        throw InvalidParams("n must be at least k, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
    if (n > kMaxN)
        throw InvalidParams("n exceeds the 10^12 exactness guard");
}

}  // namespace

ExtremalParams ExtremalParams::make(long long k, long long n) {
    check_domain(k, n);
    ExtremalParams p;
    p.k = k;
    p.n = n;
    p.quotient = n / k;
    p.residue = n % k;
    if (p.residue == k - 1)
        p.shift = 1;
    else if (p.residue == k - 2)
        p.shift = 2;
    else
        p.shift = 0;

    if (p.residue == k - 1)
        p.correction = 0;
    else if (p.residue == k - 2)
        p.correction = (2 * k - 6) / k;  // floor(2 - 6/k), nonnegative numerator
    else
        p.correction = (3 * p.residue) / k;

    // floor((2k+3)n/k) = 2n + floor(3n/k) since 2kn is divisible by k.
    p.max_edges = 2 * n + (3 * n) / k - 6 - p.correction;
    return p;
}

long long max_edges(long long k, long long n) {
    return ExtremalParams::make(k, n).max_edges;
}

long long ip_minimum(long long n, long long k) {
    ExtremalParams p = ExtremalParams::make(k, n);
    return n + p.shift - 3 * ((n + p.shift) / k);
}

long long max_edges_k4(long long n) {
    if (n < 4)
        throw InvalidParams("n must be at least 4, got " + std::to_string(n));
    if (n > kMaxN)
        throw InvalidParams("n exceeds the 10^12 exactness guard");
    return (11 * n) / 4 - 6;
}

long long nonflowerable_edge_bound(long long n) {
    return max_edges_k4(n);
}

}  // namespace kgon
