#include "kohn/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "kohn/spectrum.hpp"

namespace kohn {

namespace {

void require_bound_params(const BoundParams& params) {
    if (params.n < 3) {
        throw Error(ErrorCode::UnsupportedDimension,
                    "bound lemmas need n >= 3 for C(r+n-3, n-3), got n = " + std::to_string(params.n));
    }
    if (params.N < 0 || params.m < 1 || params.d < 1) {
        throw Error(ErrorCode::DomainViolation, "bound parameters need N >= 0, m >= 1, d >= 1");
    }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

void require_dimension(int n) {
    if (n < 2) {
        throw Error(ErrorCode::DimensionTooSmall, "dimension parameter n must be >= 2, got " + std::to_string(n));
    }
}

// sum_{q=0}^{N} (coefficient(q)) C(q+n-2, n-2) / (m d), where the bracket is
// (q+n-1)/(n-1) + sign * (d + 3m/2) + tail * (n-2)/(q+n-2).
BigRational bound_rhs(const BoundParams& bp, int sign, const BigRational& tail) {
    const std::int64_t n = bp.n;
    const BigRational shift = BigRational(bp.d) + BigRational(3 * bp.m, 2);
    BigRational total = 0;
    for (std::int64_t q = 0; q <= bp.N; ++q) {
        BigRational bracket = BigRational(q + n - 1, n - 1) + sign * shift + tail * BigRational(n - 2, q + n - 2);
        total += bracket * BigRational(binomial(q + n - 2, n - 2));
    }
    return total / BigRational(bp.m * bp.d);
}

BigRational ratio_or_zero(const BigInt& num, const BigInt& den) {
    if (den == 0) return 0;
    return BigRational(num, den);
}

} // namespace

BoundCheck check_lower_bound(const BoundParams& params) {
    require_bound_params(params);
    const auto [N, m, d, n] = params;
    BigInt lhs = 0;
    for (std::int64_t r = 0; r <= N; ++r) {
        const std::int64_t upper = floor_div(N - r + 1, m) - 1;  // -1 means empty
        std::int64_t inner = 0;
        for (std::int64_t j = 0; j <= upper; ++j) inner += floor_div(j * m + 1, d);
        lhs += binomial(r + n - 3, n - 3) * inner;
    }
    BoundCheck out;
    out.lhs = BigRational(lhs);
    out.rhs = bound_rhs(params, -1, -(BigRational(d) + BigRational(3 * m, 2)));
    out.holds = out.lhs >= out.rhs;
    return out;
}

BoundCheck check_upper_bound(const BoundParams& params) {
    require_bound_params(params);
    const auto [N, m, d, n] = params;
    BigInt lhs = 0;
    for (std::int64_t r = 0; r <= N; ++r) {
        const std::int64_t upper = ceil_div(N - r + 1, m);
        std::int64_t inner = 0;
        for (std::int64_t j = 1; j <= upper; ++j) inner += ceil_div(j * m, d);
        lhs += binomial(r + n - 3, n - 3) * inner;
    }
    BoundCheck out;
    out.lhs = BigRational(lhs);
    out.rhs = bound_rhs(params, +1, BigRational(m * m + m * d));
    out.holds = out.lhs <= out.rhs;
    return out;
}

std::vector<RatioSample> weyl_ratio_series(const LensSpace& lens, std::int64_t lambda_max, std::int64_t stride,
                                           std::uint64_t budget) {
    if (stride < 2 || stride % 2 != 0) {
        throw Error(ErrorCode::DomainViolation, "stride must be an even integer >= 2, got " + std::to_string(stride));
    }
    const auto lens_counts = counting_series(lens, lambda_max, budget);
    const auto sphere_counts = counting_series(sphere(lens.n()), lambda_max, budget);
    std::vector<RatioSample> out;
    for (std::int64_t lambda = stride; lambda <= lambda_max; lambda += stride) {
        const auto j = static_cast<std::size_t>(lambda / 2);
        RatioSample sample;
        sample.lambda = lambda;
        sample.n_lens = lens_counts[j];
        sample.n_sphere = sphere_counts[j];
        sample.ratio = ratio_or_zero(sample.n_lens, sample.n_sphere);
        sample.ratio_value = to_double(sample.ratio);
        out.push_back(std::move(sample));
    }
    return out;
}

double weyl_integrand(int n, double x) {
    const double ax = std::fabs(x);
    if (ax < 1e-8) return 1.0;
    if (ax < 1.0) return std::pow(x / std::sinh(x), n) * std::exp(-(n - 2) * x);
    // log|sinh x| = |x| + log1p(-e^{-2|x|}) - log 2
    const double log_sinh = ax + std::log1p(-std::exp(-2.0 * ax)) - std::numbers::ln2;
    return std::exp(n * (std::log(ax) - log_sinh) - (n - 2) * x);
}

namespace {

template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb, double whole, double eps,
                        int depth) {
    const double mid = 0.5 * (a + b);
    const double lm = 0.5 * (a + mid);
    const double rm = 0.5 * (mid + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (mid - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - mid) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    if (depth <= 0) {
        throw Error(ErrorCode::NonConvergence, "adaptive quadrature hit its refinement limit");
    }
    return adaptive_simpson(f, a, mid, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson(f, mid, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

} // namespace

double universal_constant(int n, const QuadratureConfig& cfg) {
    require_dimension(n);
    if (!(cfg.truncation > 0.0) || !(cfg.tolerance > 0.0)) {
        throw Error(ErrorCode::DomainViolation, "quadrature truncation and tolerance must be positive");
    }
    auto f = [n](double x) { return weyl_integrand(n, x); };
    // Unit-width panels keep the initial Simpson estimate from missing the
    // peak at the origin.
    const int panels = std::max(2, static_cast<int>(std::ceil(2.0 * cfg.truncation)));
    const double width = 2.0 * cfg.truncation / panels;
    const double eps = cfg.tolerance / panels;
    double integral = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double a = -cfg.truncation + i * width;
        const double b = a + width;
        const double fa = f(a);
        const double fb = f(b);
        const double fm = f(0.5 * (a + b));
        const double whole = width / 6.0 * (fa + 4.0 * fm + fb);
        integral += adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, cfg.max_refinements);
    }
    const double pi = std::numbers::pi;
    const double prefactor = (n - 1) / (n * std::pow(2.0 * pi, n) * std::tgamma(n + 1.0));
    return prefactor * integral;
}

double sphere_volume(int n) {
    require_dimension(n);
    return 2.0 * std::pow(std::numbers::pi, n) / std::tgamma(static_cast<double>(n));
}

WeylConstant weyl_constant_experiment(const LensSpace& lens, std::int64_t lambda_max, const QuadratureConfig& cfg) {
    WeylConstant out;
    const int n = lens.n();
    out.predicted = universal_constant(n, cfg) * sphere_volume(n) / lens.k();
    if (lambda_max > 0) {
        out.empirical = to_double(lens_counting(lens, lambda_max)) / std::pow(static_cast<double>(lambda_max), n);
    }
    return out;
}

BigRational lemma_ratio_exact(int n, std::int64_t lambda) {
    require_dimension(n);
    BigInt a_sum = 0;
    BigInt b_scaled = 0;  // (n-1) * sum b
    for (std::int64_t p = 0; p <= lambda - n + 1; ++p) {
        const BigInt ap = binomial(p + n - 2, n - 2);
        const std::int64_t q_max = floor_div(lambda, p + n - 1);
        for (std::int64_t q = 1; q <= q_max; ++q) {
            const BigInt a = ap * binomial(q + n - 2, n - 2);
            a_sum += a;
            b_scaled += a * (p + q + n - 1);
        }
    }
    return ratio_or_zero(a_sum * (n - 1), b_scaled);
}

std::vector<double> lemma_ratio_decay(int n, const std::vector<std::int64_t>& lambdas) {
    std::vector<double> out;
    out.reserve(lambdas.size());
    for (std::int64_t lambda : lambdas) out.push_back(to_double(lemma_ratio_exact(n, lambda)));
    return out;
}

std::vector<RemainderRow> remainder_experiment(const LensSpace& lens, std::int64_t lambda_max, int samples,
                                               const QuadratureConfig& cfg, std::uint64_t budget) {
    if (samples < 1 || lambda_max < 2 * static_cast<std::int64_t>(samples)) {
        throw Error(ErrorCode::DomainViolation, "remainder experiment needs samples >= 1 and lambda_max >= 2 samples");
    }
    const int n = lens.n();
    const double predicted = universal_constant(n, cfg) * sphere_volume(n) / lens.k();
    const std::int64_t step = 2 * (lambda_max / (2 * static_cast<std::int64_t>(samples)));
    const auto counts = counting_series(lens, step * samples, budget);
    std::vector<RemainderRow> rows;
    rows.reserve(static_cast<std::size_t>(samples));
    for (int i = 1; i <= samples; ++i) {
        const std::int64_t lambda = step * i;
        const double lam = static_cast<double>(lambda);
        RemainderRow row;
        row.lambda = lambda;
        row.residual = to_double(counts[static_cast<std::size_t>(lambda / 2)]) - predicted * std::pow(lam, n);
        row.per_power = row.residual / std::pow(lam, n - 1);
        row.per_power_log = row.per_power / std::log(lam);
        rows.push_back(row);
    }
    return rows;
}

} // namespace kohn
