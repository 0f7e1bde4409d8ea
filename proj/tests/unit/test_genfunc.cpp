#include <doctest.h>

#include <cmath>

#include "kohn/genfunc.hpp"
#include "kohn/invariant.hpp"
#include "oracles.hpp"

using namespace kohn;

TEST_CASE("closed form constant term and domain") {
    CHECK(std::abs(genfunc_closed(sphere(2), {0.0, 0.0}) - 1.0) < 1e-15);
    CHECK(std::abs(genfunc_closed(make_lens_space(2, 7, {1, 3}), {0.0, 0.0}) - 1.0) < 1e-15);
    CHECK(std::abs(genfunc_series(make_lens_space(3, 5, {1, 2, 3}), {0.0, 0.0}, 4, 7) - 1.0) < 1e-15);
    for (Complex bad : {Complex(0.95, 0.0), Complex(0.0, -1.2), Complex(0.7, 0.7)}) {
        try {
            genfunc_closed(sphere(2), {bad, 0.1});
            FAIL("expected DomainViolation");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DomainViolation);
        }
        CHECK_THROWS_AS(genfunc_series(sphere(2), {0.1, bad}, 3, 3), Error);
    }
}

TEST_CASE("closed form against the series") {
    const auto l = make_lens_space(2, 3, {1, 2});
    const GenFuncPoint pt{0.3, 0.2};
    CHECK(std::abs(genfunc_closed(l, pt) - genfunc_series(l, pt, 60, 60)) < 1e-9);

    const GenFuncPoint s{0.4, 0.1};
    CHECK(std::abs(genfunc_closed(sphere(2), s) - genfunc_series(sphere(2), s, 80, 80)) < 1e-9);
    // k = 1: (1 - zw) / ((1 - z)(1 - w))^n.
    const Complex z = s.z;
    const Complex w = s.w;
    CHECK(std::abs(genfunc_closed(sphere(2), s) - (1.0 - z * w) / std::pow((1.0 - z) * (1.0 - w), 2)) < 1e-14);
    CHECK(std::abs(genfunc_closed(sphere(3), s) - (1.0 - z * w) / std::pow((1.0 - z) * (1.0 - w), 3)) < 1e-14);
}

TEST_CASE("real points give real values") {
    const auto l = make_lens_space(2, 2, {1, 1});
    CHECK(std::abs(genfunc_closed(l, {0.5, 0.5}).imag()) < 1e-12);
    oracle::Gen gen(77);
    for (int trial = 0; trial < 100; ++trial) {
        const auto lens = gen.lens_space(23, gen.uniform(2, 4));
        const double x = gen.uniform(-80, 80) / 100.0;
        const double y = gen.uniform(-80, 80) / 100.0;
        CHECK(std::abs(genfunc_closed(lens, {x, y}).imag()) < 1e-12);
    }
}

TEST_CASE("property: closed form matches the series at seeded points") {
    oracle::Gen gen(11);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = gen.uniform(2, 3);
        const auto l = gen.lens_space(9, n);
        for (const auto& pt : seeded_points(static_cast<std::uint64_t>(trial), 5, 0.5)) {
            CAPTURE(format_lens_space(l));
            CHECK(std::abs(genfunc_closed(l, pt) - genfunc_series(l, pt, 60, 60)) < 1e-9);
        }
    }
}

TEST_CASE("coefficients recovered from the closed form") {
    for (const auto& l : {make_lens_space(2, 3, {1, 2}), make_lens_space(2, 5, {1, 1}), make_lens_space(2, 4, {1, 3}),
                          make_lens_space(3, 3, {1, 1, 2}), sphere(2)}) {
        const auto coeffs = genfunc_coefficients(l, 5, 5);
        for (int p = 0; p <= 5; ++p) {
            for (int q = 0; q <= 5; ++q) {
                const double exact = to_double(dim_invariant_dp(l, {p, q}));
                CAPTURE(format_lens_space(l));
                CAPTURE(p);
                CAPTURE(q);
                CHECK(std::abs(coeffs[p][q] - exact) < 0.5);
                CHECK(std::llround(coeffs[p][q].real()) == static_cast<long long>(exact));
            }
        }
    }
}

TEST_CASE("independence probe") {
    CHECK(independence_probe(3, seeded_points(1, 12, 0.5)) == 6);
    CHECK(independence_probe(2, seeded_points(2, 5, 0.5)) == 3);
    CHECK(independence_probe(5, seeded_points(3, 30, 0.5)) == 15);

    const auto one = seeded_points(4, 1, 0.5);
    const std::vector<GenFuncPoint> repeated(6, one.front());
    CHECK(independence_probe(3, repeated) < 6);

    try {
        independence_probe(3, seeded_points(5, 5, 0.5));
        FAIL("expected InsufficientSamples");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InsufficientSamples);
    }
    CHECK_THROWS_AS(independence_probe(1, seeded_points(5, 5, 0.5)), Error);
}

TEST_CASE("seeded points are deterministic and bounded") {
    const auto a = seeded_points(42, 20, 0.5);
    const auto b = seeded_points(42, 20, 0.5);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].z == b[i].z);
        CHECK(a[i].w == b[i].w);
        CHECK(std::abs(a[i].z) <= 0.5);
        CHECK(std::abs(a[i].w) <= 0.5);
    }
    CHECK(seeded_points(43, 1, 0.5).front().z != a.front().z);
}
