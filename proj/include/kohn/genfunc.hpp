#pragma once

#include <complex>
#include <vector>

#include "kohn/core.hpp"

namespace kohn {

using Complex = std::complex<double>;

/// Evaluation point (z, w) of F(z, w) = sum dim H^G_{p,q} z^p w^q.
struct GenFuncPoint {
    Complex z;
    Complex w;
};

/// Largest modulus accepted for z and w; the poles sit on the unit circle.
inline constexpr double kGenFuncRadius = 0.9;

/// (1/k) sum_m (1 - zw) / prod_i (1 - zeta^{m l_i} z)(1 - zeta^{-m l_i} w),
/// summed in conjugate pairs m, k - m. Throws DomainViolation when
/// |z| or |w| exceeds kGenFuncRadius.
Complex genfunc_closed(const LensSpace& lens, const GenFuncPoint& pt);

/// Truncated series over p <= p_max, q <= q_max using exact dimensions.
/// For |z|, |w| <= r the dropped tail is bounded by
/// sum_{p > p_max or q > q_max} dim H_{p,q} r^{p+q}.
Complex genfunc_series(const LensSpace& lens, const GenFuncPoint& pt, int p_max, int q_max);

/// Coefficients of F recovered from genfunc_closed alone, by a discrete
/// Cauchy integral over a torus of the given radius with `samples` nodes per
/// variable. Returns a (p_max+1) x (q_max+1) table (row p, column q).
std::vector<std::vector<Complex>> genfunc_coefficients(const LensSpace& lens, int p_max, int q_max,
                                                       double radius = 0.5, int samples = 64);

/// f_{l,m}(z, w) = 1 / ((z - zeta^l)(w - zeta^{-l})(z - zeta^m)(w - zeta^{-m})).
Complex independence_function(int k, int l, int m, const GenFuncPoint& pt);

/// Numerical rank (singular values > 1e-8 * largest) of the matrix
/// [f_{l,m}(pt)] over points x pairs 0 <= l <= m < k. Throws
/// InsufficientSamples with fewer than k(k+1)/2 points.
int independence_probe(int k, const std::vector<GenFuncPoint>& points);

/// Deterministic points with |z|, |w| <= radius.
std::vector<GenFuncPoint> seeded_points(std::uint64_t seed, int count, double radius);

} // namespace kohn
