#include <doctest.h>

#include <sstream>

#include "kgon/errors.hpp"
#include "kgon/formula.hpp"
#include "kgon/ip_oracle.hpp"

using namespace kgon;

TEST_CASE("anchor minima with their minimizers") {
    IpSolution s = ip_minimum_bruteforce(8, 6);
    CHECK(s.value == 5);
    CHECK(s.minimizer == IpPoint{8, 1});

    s = ip_minimum_bruteforce(7, 4);
    CHECK(s.value == 2);
    CHECK(s.minimizer == IpPoint{8, 2});
}

TEST_CASE("n = k pins the minimizer to one period") {
    for (long long k = 4; k <= 12; ++k) {
        IpSolution s = ip_minimum_bruteforce(k, k);
        CHECK(s.value == k - 3);
        CHECK(s.minimizer == IpPoint{k, 1});
    }
}

TEST_CASE("brute force equals the closed form") {
    for (long long k = 4; k <= 16; ++k)
        for (long long n = k; n <= 300; ++n)
            REQUIRE(ip_minimum_bruteforce(n, k).value == ip_minimum(n, k));
}

TEST_CASE("closed-form value holds for k = 3 (minimizer not unique)") {
    for (long long n = 3; n <= 100; ++n)
        REQUIRE(ip_minimum_bruteforce(n, 3).value == ip_minimum(n, 3));
}

TEST_CASE("reduced scan agrees with full 2-D enumeration") {
    for (long long k = 4; k <= 10; ++k)
        for (long long n = k; n <= 100; ++n) {
            IpSolution fast = ip_minimum_bruteforce(n, k);
            IpSolution full = ip_minimum_full_scan(n, k);
            REQUIRE(fast.value == full.value);
            REQUIRE(fast.minimizer == full.minimizer);
        }
}

TEST_CASE("the minimizer sits at the shifted corner") {
    for (long long k = 4; k <= 10; ++k)
        for (long long n = k; n <= 100; ++n) {
            ExtremalParams p = ExtremalParams::make(k, n);
            IpSolution s = ip_minimum_bruteforce(n, k);
            REQUIRE(s.minimizer.degree_sum == n + p.shift);
            REQUIRE(s.minimizer.face_count == (n + p.shift) / k);
        }
}

TEST_CASE("region scan emits the program's geometry") {
    std::ostringstream out;
    write_region_scan(out, 8, 6);
    std::string text = out.str();
    CHECK(text.starts_with("x,y,objective,feasible\n"));
    CHECK(text.find("\n8,1,5,1\n") != std::string::npos);   // the minimizer
    CHECK(text.find("\n7,1,4,0\n") != std::string::npos);   // infeasible: x < n
    CHECK(text.find("\n8,2,2,0\n") != std::string::npos);   // infeasible: ky > x
}

TEST_CASE("oracle domain guards") {
    CHECK_THROWS_AS(ip_minimum_bruteforce(5, 2), InvalidParams);
    CHECK_THROWS_AS(ip_minimum_bruteforce(3, 4), InvalidParams);
}
