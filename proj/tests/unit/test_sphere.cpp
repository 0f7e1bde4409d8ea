#include <doctest.h>

#include "kohn/sphere.hpp"
#include "oracles.hpp"

using namespace kohn;

TEST_CASE("dim_hpq examples") {
    CHECK(dim_hpq(2, {1, 1}) == 3);
    CHECK(dim_hpq(2, {0, 0}) == 1);
    CHECK(dim_hpq(3, {2, 1}) == oracle::harmonic_dim(3, 2, 1));
    CHECK(dim_hpq(3, {2, 1}) == 15);
    CHECK_THROWS_AS(dim_hpq(1, {1, 1}), Error);
}

TEST_CASE("dim_hpq matches the monomial count of P_{p,q} minus P_{p-1,q-1}") {
    for (int n = 2; n <= 5; ++n) {
        for (int p = 0; p <= 9; ++p) {
            for (int q = 0; q <= 9; ++q) {
                CAPTURE(n);
                CAPTURE(p);
                CAPTURE(q);
                CHECK(dim_hpq(n, {p, q}) == oracle::harmonic_dim(n, p, q));
            }
        }
    }
}

TEST_CASE("dim_hpq is integral and symmetric on the full range") {
    // Exact division is asserted inside dim_hpq, so reaching the value is the check.
    for (int n = 2; n <= 8; ++n) {
        for (int p = 0; p <= 60; ++p) {
            for (int q = 0; q <= p; ++q) {
                const auto a = dim_hpq(n, {p, q});
                CHECK(a > 0);
                CHECK(a == dim_hpq(n, {q, p}));
            }
        }
    }
}

TEST_CASE("eigenvalue examples") {
    CHECK(eigenvalue(2, {2, 1}).value == 6);
    CHECK(eigenvalue(2, {5, 0}).value == 0);
    CHECK(eigenvalue(4, {1, 2}).value == 16);
    const auto e = sphere_eigenspace(3, {2, 1});
    CHECK(e.dim == 15);
    CHECK(e.eigenvalue.value == 8);
}

TEST_CASE("sphere_counting examples") {
    CHECK(sphere_counting(2, 2) == 2);
    CHECK(sphere_counting(2, 4) == 8);
    CHECK(sphere_counting(2, 0) == 0);
}

TEST_CASE("sphere_counting against an exhaustive (p,q) scan") {
    constexpr int kMax = 80;
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::vector<std::int64_t>> dims(kMax + 1, std::vector<std::int64_t>(kMax + 1));
        for (int p = 0; p <= kMax; ++p) {
            for (int q = 1; 2 * q * (p + n - 1) <= kMax; ++q) dims[p][q] = oracle::harmonic_dim(n, p, q);
        }
        BigInt previous = 0;
        for (std::int64_t lambda = 0; lambda <= kMax; ++lambda) {
            std::int64_t expected = 0;
            for (int p = 0; p <= lambda; ++p) {
                for (int q = 1; 2LL * q * (p + n - 1) <= lambda; ++q) expected += dims[p][q];
            }
            const auto got = sphere_counting(n, lambda);
            CAPTURE(n);
            CAPTURE(lambda);
            CHECK(got == expected);
            CHECK(got >= previous);
            previous = got;
        }
    }
}
