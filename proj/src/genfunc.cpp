#include "kohn/genfunc.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "kohn/invariant.hpp"

namespace kohn {

namespace {

void require_domain(const GenFuncPoint& pt) {
    if (std::abs(pt.z) > kGenFuncRadius || std::abs(pt.w) > kGenFuncRadius) {
        throw Error(ErrorCode::DomainViolation, "generating function needs |z|, |w| <= 0.9");
    }
}

// zeta^e for zeta = exp(2 pi i / k), evaluated directly from the exponent.
Complex root_power(std::int64_t exponent, int k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod_floor(exponent, k)) / k;
    return {std::cos(angle), std::sin(angle)};
}

Complex closed_term(const LensSpace& lens, const GenFuncPoint& pt, int m) {
    Complex denom = 1.0;
    for (int l : lens.weights()) {
        const std::int64_t e = static_cast<std::int64_t>(m) * l;
        denom *= (1.0 - root_power(e, lens.k()) * pt.z) * (1.0 - root_power(-e, lens.k()) * pt.w);
    }
    return (1.0 - pt.z * pt.w) / denom;
}

} // namespace

Complex genfunc_closed(const LensSpace& lens, const GenFuncPoint& pt) {
    require_domain(pt);
    const int k = lens.k();
    Complex total = closed_term(lens, pt, 0);
    for (int m = 1; 2 * m < k; ++m) {
        total += closed_term(lens, pt, m) + closed_term(lens, pt, k - m);
    }
    if (k % 2 == 0 && k > 1) total += closed_term(lens, pt, k / 2);
    return total / static_cast<double>(k);
}

Complex genfunc_series(const LensSpace& lens, const GenFuncPoint& pt, int p_max, int q_max) {
    require_domain(pt);
    const InvariantCounter counter(lens, p_max, q_max);
    Complex total = 0.0;
    Complex zp = 1.0;
    for (int p = 0; p <= p_max; ++p) {
        Complex row = 0.0;
        Complex wq = 1.0;
        for (int q = 0; q <= q_max; ++q) {
            row += to_double(counter.dim({p, q})) * wq;
            wq *= pt.w;
        }
        total += row * zp;
        zp *= pt.z;
    }
    return total;
}

std::vector<std::vector<Complex>> genfunc_coefficients(const LensSpace& lens, int p_max, int q_max, double radius,
                                                       int samples) {
    std::vector<Complex> nodes(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) nodes[j] = std::polar(radius, 2.0 * std::numbers::pi * j / samples);
    std::vector<std::vector<Complex>> values(static_cast<std::size_t>(samples),
                                             std::vector<Complex>(static_cast<std::size_t>(samples)));
    for (int a = 0; a < samples; ++a) {
        for (int b = 0; b < samples; ++b) values[a][b] = genfunc_closed(lens, {nodes[a], nodes[b]});
    }
    std::vector<std::vector<Complex>> coeffs(static_cast<std::size_t>(p_max + 1),
                                             std::vector<Complex>(static_cast<std::size_t>(q_max + 1)));
    const double norm = static_cast<double>(samples) * samples;
    for (int p = 0; p <= p_max; ++p) {
        for (int q = 0; q <= q_max; ++q) {
            Complex acc = 0.0;
            for (int a = 0; a < samples; ++a) {
                for (int b = 0; b < samples; ++b) {
                    const double angle = -2.0 * std::numbers::pi * ((static_cast<std::int64_t>(a) * p +
                                                                     static_cast<std::int64_t>(b) * q) % samples) /
                                         samples;
                    acc += values[a][b] * std::polar(1.0, angle);
                }
            }
            coeffs[p][q] = acc / (norm * std::pow(radius, p + q));
        }
    }
    return coeffs;
}

Complex independence_function(int k, int l, int m, const GenFuncPoint& pt) {
    return 1.0 / ((pt.z - root_power(l, k)) * (pt.w - root_power(-l, k)) * (pt.z - root_power(m, k)) *
                  (pt.w - root_power(-m, k)));
}

int independence_probe(int k, const std::vector<GenFuncPoint>& points) {
    if (k < 2) throw Error(ErrorCode::InvalidOrder, "independence probe needs k >= 2");
    const int functions = k * (k + 1) / 2;
    if (static_cast<int>(points.size()) < functions) {
        throw Error(ErrorCode::InsufficientSamples, "need at least " + std::to_string(functions) +
                                                        " sample points, got " + std::to_string(points.size()));
    }
    Eigen::MatrixXcd matrix(static_cast<Eigen::Index>(points.size()), functions);
    for (std::size_t row = 0; row < points.size(); ++row) {
        int col = 0;
        for (int l = 0; l < k; ++l) {
            for (int m = l; m < k; ++m) {
                matrix(static_cast<Eigen::Index>(row), col++) = independence_function(k, l, m, points[row]);
            }
        }
    }
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > 1e-8 * sv(0)) ++rank;
    }
    return rank;
}

std::vector<GenFuncPoint> seeded_points(std::uint64_t seed, int count, double radius) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> modulus(0.0, radius);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<GenFuncPoint> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double rz = modulus(rng);
        const double tz = angle(rng);
        const double rw = modulus(rng);
        const double tw = angle(rng);
        out.push_back({std::polar(rz, tz), std::polar(rw, tw)});
    }
    return out;
}

} // namespace kohn
