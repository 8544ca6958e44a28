#include "kgon/ip_oracle.hpp"

#include <ostream>
#include <string>

#include "kgon/errors.hpp"

namespace kgon {

namespace {

constexpr long long kMaxOracleK = 10'000'000;  // the scan is O(k)

void check_domain(long long n, long long k) {
    if (k < 3)
        throw InvalidParams("k must be at least 3, got " + std::to_string(k));
    if (n < k)
        throw InvalidParams("n must be at least k, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
    if (k > kMaxOracleK)
        throw InvalidParams("brute-force oracle supports k up to 10^7");
}

}  // namespace

IpSolution ip_minimum_bruteforce(long long n, long long k) {
    check_domain(n, k);
    IpSolution best;
    bool have = false;
    for (long long x = n; x <= n + 3 * k; ++x) {
        IpPoint p{x, x / k};
        if (!have || p.objective() < best.value) {
            best.minimizer = p;
            best.value = p.objective();
            have = true;
        }
    }
    return best;
}

IpSolution ip_minimum_full_scan(long long n, long long k) {
    check_domain(n, k);
    if (n > 100'000'000)
        throw InvalidParams("full scan supports n up to 10^8");
    IpSolution best;
    bool have = false;
    for (long long x = n; x <= n + 3 * k; ++x)
        for (long long y = 0; y <= x / k; ++y) {
            IpPoint p{x, y};
            if (!have || p.objective() < best.value) {
                best.minimizer = p;
                best.value = p.objective();
                have = true;
            }
        }
    return best;
}

void write_region_scan(std::ostream& out, long long n, long long k) {
    check_domain(n, k);
    const long long x_max = n + 3 * k;
    const long long y_max = x_max / k + 1;
    if ((x_max + 1) * (y_max + 1) > 2'000'000)
        throw InvalidParams("region scan too large to emit; reduce n or k");
    out << "x,y,objective,feasible\n";
    for (long long x = 0; x <= x_max; ++x)
        for (long long y = 0; y <= y_max; ++y) {
            bool feasible = x >= n && k * y <= x;
            out << x << ',' << y << ',' << (x - 3 * y) << ',' << (feasible ? 1 : 0) << '\n';
        }
}

}  // namespace kgon
