#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kohn/asymptotics.hpp"
#include "kohn/sphere.hpp"
#include "kohn/spectrum.hpp"
#include "oracles.hpp"

using namespace kohn;

namespace {

// u_2 from int_R (x/sinh x)^2 dx = pi^2/3.
constexpr double kU2 = 1.0 / 48.0;

BigRational rat(std::int64_t num, std::int64_t den = 1) { return BigRational(num, den); }

} // namespace

TEST_CASE("lower bound lemma examples") {
    auto c = check_lower_bound({10, 2, 3, 3});
    CHECK(c.lhs == rat(28));
    CHECK(c.rhs == rat(-88, 3));
    CHECK(c.holds);

    c = check_lower_bound({0, 1, 1, 3});
    CHECK(c.lhs == rat(1));
    CHECK(c.rhs == rat(-4));
    CHECK(c.holds);

    c = check_lower_bound({25, 1, 5, 4});
    CHECK(c.lhs == rat(3445));
    CHECK(c.rhs == rat(351, 10));
    CHECK(c.holds);
}

TEST_CASE("upper bound lemma examples") {
    auto c = check_upper_bound({10, 2, 3, 3});
    CHECK(c.lhs == rat(74));
    CHECK(c.rhs == rat(132));
    CHECK(c.holds);

    c = check_upper_bound({0, 1, 1, 3});
    CHECK(c.lhs == rat(1));
    CHECK(c.rhs == rat(11, 2));

    c = check_upper_bound({40, 3, 2, 5});
    CHECK(c.lhs == rat(268072));
    CHECK(c.rhs == rat(4578511, 12));
    CHECK(c.holds);
}

TEST_CASE("bound lemmas reject n < 3 and bad parameters") {
    for (auto fn : {check_lower_bound, check_upper_bound}) {
        try {
            fn({5, 1, 1, 2});
            FAIL("expected UnsupportedDimension");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnsupportedDimension);
        }
        CHECK_THROWS_AS(fn({5, 0, 1, 3}), Error);
        CHECK_THROWS_AS(fn({-1, 1, 1, 3}), Error);
    }
}

TEST_CASE("bound lemma left sides against direct counting") {
    // Lower: sum_r C(r+n-3, n-3) #{(j, t) : 0 <= j < floor((N-r+1)/m), 1 <= t, t d <= j m + 1}.
    oracle::Gen gen(55);
    for (int trial = 0; trial < 60; ++trial) {
        const int N = gen.uniform(0, 20);
        const int m = gen.uniform(1, 6);
        const int d = gen.uniform(1, 6);
        const int n = gen.uniform(3, 5);
        BigInt lower = 0;
        BigInt upper = 0;
        for (int r = 0; r <= N; ++r) {
            std::int64_t lo = 0;
            for (int j = 0; (j + 1) * m <= N - r + 1; ++j) {
                for (int t = 1; t * d <= j * m + 1; ++t) ++lo;
            }
            std::int64_t hi = 0;
            for (int j = 1; (j - 1) * m < N - r + 1; ++j) {
                for (int t = 1; (t - 1) * d < j * m; ++t) ++hi;
            }
            lower += binomial(r + n - 3, n - 3) * lo;
            upper += binomial(r + n - 3, n - 3) * hi;
        }
        CAPTURE(N);
        CAPTURE(m);
        CAPTURE(d);
        CAPTURE(n);
        CHECK(check_lower_bound({N, m, d, n}).lhs == BigRational(lower));
        CHECK(check_upper_bound({N, m, d, n}).lhs == BigRational(upper));
    }
}

TEST_CASE("bound lemmas hold on the grid") {
    for (int n = 3; n <= 5; ++n) {
        for (int N = 0; N <= 30; ++N) {
            for (int m = 1; m <= 6; ++m) {
                for (int d = 1; d <= 6; ++d) {
                    CAPTURE(N);
                    CAPTURE(m);
                    CAPTURE(d);
                    CAPTURE(n);
                    CHECK(check_lower_bound({N, m, d, n}).holds);
                    CHECK(check_upper_bound({N, m, d, n}).holds);
                }
            }
        }
    }
}

TEST_CASE("weyl ratio series") {
    for (const auto& s : weyl_ratio_series(sphere(2), 200, 10)) CHECK(s.ratio == 1);
    for (const auto& s : weyl_ratio_series(sphere(3), 100, 2)) {
        CHECK(s.n_lens == s.n_sphere);
        // N(2) = 0 for n = 3; the ratio of two empty counts is reported as 0.
        CHECK(s.ratio == (s.n_sphere > 0 ? 1 : 0));
    }

    const auto l31 = weyl_ratio_series(make_lens_space(2, 3, {1, 1}), 2000, 2000);
    REQUIRE(l31.size() == 1);
    CHECK(l31[0].lambda == 2000);
    CHECK(std::abs(l31[0].ratio_value - 1.0 / 3.0) < 0.02);
    CHECK(l31[0].ratio == BigRational(l31[0].n_lens, l31[0].n_sphere));

    const auto l512 = weyl_ratio_series(make_lens_space(2, 5, {1, 2}), 2000, 400);
    REQUIRE(l512.size() == 5);
    CHECK(std::abs(l512.back().ratio_value - 0.2) < 0.02);

    const auto series = weyl_ratio_series(make_lens_space(2, 3, {1, 2}), 60, 6);
    CHECK(series.size() == 10);
    for (const auto& s : series) {
        CHECK(s.n_lens == lens_counting(make_lens_space(2, 3, {1, 2}), s.lambda));
        CHECK(s.n_sphere == sphere_counting(2, s.lambda));
    }
    for (std::int64_t stride : {0, 3, -2}) {
        CHECK_THROWS_AS(weyl_ratio_series(sphere(2), 100, stride), Error);
    }
}

TEST_CASE("universal constant") {
    CHECK(weyl_integrand(2, 0.0) == 1.0);
    CHECK(weyl_integrand(3, 1e-12) == doctest::Approx(1.0));
    CHECK(weyl_integrand(2, 2.0) == doctest::Approx(std::pow(2.0 / std::sinh(2.0), 2)).epsilon(1e-14));
    CHECK(weyl_integrand(4, -3.0) ==
          doctest::Approx(std::pow(3.0 / std::sinh(3.0), 4) * std::exp(6.0)).epsilon(1e-13));

    CHECK(std::abs(universal_constant(2) - kU2) < 1e-9);
    const double u3_40 = universal_constant(3, {40.0, 1e-10, 50});
    const double u3_60 = universal_constant(3, {60.0, 1e-10, 50});
    CHECK(std::abs(u3_40 - u3_60) < 1e-8);
    CHECK(u3_40 > 0.0);

    try {
        universal_constant(3, {50.0, 1e-15, 1});
        FAIL("expected NonConvergence");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonConvergence);
    }
    CHECK_THROWS_AS(universal_constant(1), Error);
}

TEST_CASE("sphere volume") {
    CHECK(sphere_volume(2) == doctest::Approx(2.0 * std::numbers::pi * std::numbers::pi));
    CHECK(sphere_volume(3) == doctest::Approx(std::pow(std::numbers::pi, 3)));
}

TEST_CASE("weyl constant experiment") {
    const double target = std::numbers::pi * std::numbers::pi / 24.0;
    const auto s = weyl_constant_experiment(sphere(2), 4000);
    CHECK(s.predicted == doctest::Approx(target).epsilon(1e-9));
    CHECK(std::abs(s.empirical - target) < 0.1 * target);

    const auto l = weyl_constant_experiment(make_lens_space(2, 2, {1, 1}), 4000);
    CHECK(std::abs(l.empirical - target / 2.0) < 0.1 * target / 2.0);

    const auto empty = weyl_constant_experiment(make_lens_space(2, 5, {1, 2}), 2);
    CHECK(empty.empirical == 0.0);
    CHECK(empty.predicted > 0.0);
}

TEST_CASE("lemma ratio") {
    CHECK(lemma_ratio_exact(2, 1) == rat(1, 2));
    CHECK(lemma_ratio_exact(2, 0) == 0);
    const auto r = lemma_ratio_decay(2, {10, 1000});
    CHECK(r[1] < r[0]);
    CHECK(to_double(lemma_ratio_exact(3, 500)) < 0.1);
    for (int n : {2, 3}) {
        const auto v = lemma_ratio_decay(n, {20, 2000});
        CHECK(v[0] > 0.0);
        CHECK(v[0] < 1.0);
        CHECK(v[1] < v[0]);
    }
}

TEST_CASE("lemma ratio against a direct double sum") {
    for (int n = 2; n <= 4; ++n) {
        for (std::int64_t lambda = 1; lambda <= 40; ++lambda) {
            BigInt a = 0;
            BigRational b = 0;
            for (std::int64_t p = 0; p + n - 1 <= lambda; ++p) {
                for (std::int64_t q = 1; q * (p + n - 1) <= lambda; ++q) {
                    const BigInt apq = binomial(p + n - 2, n - 2) * binomial(q + n - 2, n - 2);
                    a += apq;
                    b += (BigRational(p + q, n - 1) + 1) * BigRational(apq);
                }
            }
            CAPTURE(n);
            CAPTURE(lambda);
            CHECK(lemma_ratio_exact(n, lambda) == (b == 0 ? BigRational(0) : BigRational(a) / b));
        }
    }
}

TEST_CASE("remainder experiment") {
    const auto rows = remainder_experiment(sphere(2), 4000, 8);
    REQUIRE(rows.size() == 8);
    CHECK(rows.back().lambda == 4000);
    const double first = std::abs(rows.front().per_power / rows.front().lambda);
    const double last = std::abs(rows.back().per_power / rows.back().lambda);
    CHECK(last < first);
    CHECK(last < 0.01);
    for (const auto& row : rows) {
        const double lam = static_cast<double>(row.lambda);
        CHECK(row.per_power == doctest::Approx(row.residual / lam));
        CHECK(row.per_power_log == doctest::Approx(row.residual / (lam * std::log(lam))));
    }

    const auto lens_rows = remainder_experiment(make_lens_space(2, 3, {1, 1}), 4000, 4);
    CHECK(std::abs(lens_rows.back().per_power / 4000.0) < 0.01);

    CHECK(remainder_experiment(make_lens_space(2, 5, {1, 2}), 100, 1).size() == 1);
    CHECK_THROWS_AS(remainder_experiment(sphere(2), 10, 6), Error);
}
