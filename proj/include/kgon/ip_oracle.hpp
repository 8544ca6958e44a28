#pragma once

#include <iosfwd>

namespace kgon {

// A lattice point of the integer program behind the edge maximum:
// degree_sum is the total boundary length of big faces, face_count their
// number. Feasible means degree_sum >= n and k*face_count <= degree_sum.
struct IpPoint {
    long long degree_sum = 0;  // the program's x
    long long face_count = 0;  // the program's y

    long long objective() const { return degree_sum - 3 * face_count; }
    bool operator==(const IpPoint&) const = default;
};

struct IpSolution {
    IpPoint minimizer;
    long long value = 0;
};

// Brute-force minimizer of degree_sum - 3*face_count, used as ground
// truth against ip_minimum. Scans degree_sum in [n, n+3k]; for each, the
// maximal feasible face_count floor(x/k) is the only candidate (the
// objective falls as face_count grows). One period of k already contains
// the minimum since k steps change the objective by k-3 >= 0; three
// periods are scanned anyway. Ties resolve to the smallest degree_sum.
// Throws InvalidParams unless 3 <= k <= n (and k within a size guard).
IpSolution ip_minimum_bruteforce(long long n, long long k);

// The same minimum by full two-dimensional enumeration over
// degree_sum in [n, n+3k], face_count in [0, degree_sum/k]; exists to
// check the reduction above on small inputs. Ties resolve to smallest
// degree_sum, then smallest face_count.
IpSolution ip_minimum_full_scan(long long n, long long k);

// Writes the feasible-region scan as CSV (x, y, objective, feasible) for
// x in [0, n+3k]; useful for plotting the program's geometry.
void write_region_scan(std::ostream& out, long long n, long long k);

}  // namespace kgon
