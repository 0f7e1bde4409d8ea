#include "kohn/sphere.hpp"

namespace kohn {

namespace {

void require_dimension(int n) {
    if (n < 2) {
        throw Error(ErrorCode::DimensionTooSmall, "dimension parameter n must be >= 2, got " + std::to_string(n));
    }
}

} // namespace

BigInt dim_hpq(int n, Bidegree b) {
    require_dimension(n);
    if (b.p < 0 || b.q < 0) return 0;
    BigInt numerator = BigInt(b.p + b.q + n - 1) * binomial(b.p + n - 2, n - 2) * binomial(b.q + n - 2, n - 2);
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(numerator, BigInt(n - 1), quotient, remainder);
    if (remainder != 0) {
        throw std::logic_error("dim H_{p,q} formula produced a non-integer value");
    }
    return quotient;
}

Eigenvalue eigenvalue(int n, Bidegree b) {
    require_dimension(n);
    return {2 * static_cast<std::int64_t>(b.q) * (b.p + n - 1)};
}

SphereEigenspace sphere_eigenspace(int n, Bidegree b) {
    return {n, b, dim_hpq(n, b), eigenvalue(n, b)};
}

BigInt sphere_counting(int n, std::int64_t lambda) {
    require_dimension(n);
    // N(2L) = sum_{p=0}^{L-n+1} sum_{q=1}^{floor(L/(p+n-1))} dim H_{p,q}
    const std::int64_t half = lambda < 0 ? 0 : lambda / 2;
    BigInt total = 0;
    for (std::int64_t p = 0; p <= half - n + 1; ++p) {
        const std::int64_t q_max = half / (p + n - 1);
        for (std::int64_t q = 1; q <= q_max; ++q) {
            total += dim_hpq(n, {static_cast<int>(p), static_cast<int>(q)});
        }
    }
    return total;
}

} // namespace kohn
