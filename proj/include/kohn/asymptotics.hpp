#pragma once

#include <vector>

#include "kohn/core.hpp"
#include "kohn/invariant.hpp"

namespace kohn {

/// Parameters of the floor/ceiling sum bounds. Here m = gcd(k, l_1 - l_2)
/// and d = k / m, which is not the d of gcd_invariant.
struct BoundParams {
    std::int64_t N = 0;
    std::int64_t m = 1;
    std::int64_t d = 1;
    int n = 3;
};

struct BoundCheck {
    BigRational lhs;
    BigRational rhs;
    bool holds = false;
};

/// Floor-sum lower bound, evaluated exactly. An inner sum whose upper index
/// is -1 is empty. Requires n >= 3 (UnsupportedDimension otherwise).
BoundCheck check_lower_bound(const BoundParams& params);

/// Ceiling-sum upper bound, evaluated exactly. Requires n >= 3.
BoundCheck check_upper_bound(const BoundParams& params);

struct RatioSample {
    std::int64_t lambda = 0;
    BigInt n_lens;
    BigInt n_sphere;
    BigRational ratio;  // n_lens / n_sphere, 0 when n_sphere == 0
    double ratio_value = 0.0;
};

/// N_L(lambda) / N(lambda) at lambda = stride, 2 stride, ..., <= lambda_max.
std::vector<RatioSample> weyl_ratio_series(const LensSpace& lens, std::int64_t lambda_max, std::int64_t stride,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

struct QuadratureConfig {
    double truncation = 50.0;
    double tolerance = 1e-10;
    int max_refinements = 50;
};

/// (x / sinh x)^n e^{-(n-2) x}, with value 1 at x = 0.
double weyl_integrand(int n, double x);

/// u_n = (n-1) / (n (2 pi)^n Gamma(n+1)) * integral of weyl_integrand over R,
/// by adaptive Simpson quadrature on [-T, T]. Throws NonConvergence when the
/// refinement depth runs out before the tolerance is met.
double universal_constant(int n, const QuadratureConfig& cfg = {});

/// vol(S^{2n-1}) = 2 pi^n / Gamma(n).
double sphere_volume(int n);

struct WeylConstant {
    double empirical = 0.0;  // N_L(lambda) / lambda^n
    double predicted = 0.0;  // u_n vol(S^{2n-1}) / k
};

WeylConstant weyl_constant_experiment(const LensSpace& lens, std::int64_t lambda_max,
                                      const QuadratureConfig& cfg = {});

/// sum a_{p,q} / sum b_{p,q} over 0 <= p <= lambda - n + 1,
/// 1 <= q <= floor(lambda / (p + n - 1)), with a = C(p+n-2,n-2) C(q+n-2,n-2)
/// and b = ((p+q)/(n-1) + 1) a. Returns 0 for an empty index set.
BigRational lemma_ratio_exact(int n, std::int64_t lambda);
std::vector<double> lemma_ratio_decay(int n, const std::vector<std::int64_t>& lambdas);

struct RemainderRow {
    std::int64_t lambda = 0;
    double residual = 0.0;          // N_L(lambda) - predicted lambda^n
    double per_power = 0.0;         // residual / lambda^{n-1}
    double per_power_log = 0.0;     // residual / (lambda^{n-1} log lambda)
};

/// Sample points lambda_i = i * s, i = 1..samples, with s the largest even
/// step such that samples * s <= lambda_max.
std::vector<RemainderRow> remainder_experiment(const LensSpace& lens, std::int64_t lambda_max, int samples,
                                               const QuadratureConfig& cfg = {},
                                               std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace kohn
