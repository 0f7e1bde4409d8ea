#pragma once

#include "kohn/core.hpp"

namespace kohn {

/// Eigenspace H_{p,q}(S^{2n-1}) of the Kohn Laplacian on the sphere.
struct SphereEigenspace {
    int n = 2;
    Bidegree bidegree;
    BigInt dim;
    Eigenvalue eigenvalue;
};

/// dim H_{p,q} = ((p+q)/(n-1) + 1) C(p+n-2, n-2) C(q+n-2, n-2).
/// Throws DimensionTooSmall for n < 2.
BigInt dim_hpq(int n, Bidegree b);

/// 2q(p+n-1).
Eigenvalue eigenvalue(int n, Bidegree b);

SphereEigenspace sphere_eigenspace(int n, Bidegree b);

/// N(lambda): positive eigenvalues <= lambda on S^{2n-1}, with multiplicity.
BigInt sphere_counting(int n, std::int64_t lambda);

} // namespace kohn
