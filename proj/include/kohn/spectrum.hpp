#pragma once

#include <map>
#include <vector>

#include "kohn/core.hpp"
#include "kohn/invariant.hpp"

namespace kohn {

struct Contributor {
    Bidegree bidegree;
    BigInt dim;

    friend bool operator==(const Contributor&, const Contributor&) = default;
};

struct SpectrumEntry {
    BigInt multiplicity;
    std::vector<Contributor> contributors;  // sorted by bidegree, dim > 0

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Positive Kohn Laplacian eigenvalues up to lambda_max with multiplicities.
/// The sphere is the k = 1 case. Eigenvalues whose invariant eigenspaces are
/// all trivial do not appear.
struct SpectrumTable {
    LensSpace space;
    std::int64_t lambda_max = 0;
    std::map<std::int64_t, SpectrumEntry> entries;
};

/// Bidegrees with 2q(p+n-1) = lambda, in increasing p. Found by enumerating
/// the divisors q of lambda/2. lambda must be positive and even.
std::vector<Bidegree> bidegrees_for_eigenvalue(int n, std::int64_t lambda);

/// Number of (p, q) cells with 0 < 2q(p+n-1) <= lambda_max.
std::uint64_t grid_size(int n, std::int64_t lambda_max);

SpectrumTable build_spectrum(const LensSpace& lens, std::int64_t lambda_max,
                             std::uint64_t budget = kDefaultEnumerationBudget);

/// Throws InvalidEigenvalue if lambda is odd or not positive.
BigInt multiplicity(const LensSpace& lens, std::int64_t lambda);

/// N_L(lambda).
BigInt lens_counting(const LensSpace& lens, std::int64_t lambda);

/// counts[j] = N_L(2j) for j = 0 .. lambda_max / 2, computed in one pass.
std::vector<BigInt> counting_series(const LensSpace& lens, std::int64_t lambda_max,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace kohn
