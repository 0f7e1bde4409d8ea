#include "kohn/spectrum.hpp"

#include <algorithm>

namespace kohn {

namespace {

void require_nonnegative(std::int64_t lambda_max) {
    if (lambda_max < 0) {
        throw Error(ErrorCode::InvalidEigenvalue, "eigenvalue cutoff must be >= 0, got " + std::to_string(lambda_max));
    }
}

void check_budget(int n, std::int64_t lambda_max, std::uint64_t budget) {
    const auto cells = grid_size(n, lambda_max);
    if (cells > budget) {
        throw Error(ErrorCode::ResourceLimit, "spectrum up to " + std::to_string(lambda_max) + " needs " +
                                                  std::to_string(cells) + " bidegrees, budget is " +
                                                  std::to_string(budget));
    }
}

// Profile window large enough for every bidegree with 2q(p+n-1) <= lambda_max.
InvariantCounter counter_for(const LensSpace& lens, std::int64_t lambda_max) {
    const std::int64_t half = lambda_max / 2;
    const int n = lens.n();
    const auto p_max = static_cast<int>(std::max<std::int64_t>(half - n + 1, 0));
    const auto q_max = static_cast<int>(half / (n - 1));
    return InvariantCounter(lens, p_max, q_max);
}

} // namespace

std::vector<Bidegree> bidegrees_for_eigenvalue(int n, std::int64_t lambda) {
    if (lambda <= 0 || lambda % 2 != 0) {
        throw Error(ErrorCode::InvalidEigenvalue,
                    "eigenvalue must be a positive even integer, got " + std::to_string(lambda));
    }
    const std::int64_t half = lambda / 2;
    std::vector<Bidegree> out;
    auto add = [&](std::int64_t q) {
        const std::int64_t cofactor = half / q;  // p + n - 1
        if (cofactor >= n - 1) out.push_back({static_cast<int>(cofactor - (n - 1)), static_cast<int>(q)});
    };
    for (std::int64_t q = 1; q * q <= half; ++q) {
        if (half % q != 0) continue;
        add(q);
        if (q * q != half) add(half / q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t grid_size(int n, std::int64_t lambda_max) {
    const std::int64_t half = lambda_max / 2;
    std::uint64_t cells = 0;
    for (std::int64_t p = 0; p <= half - n + 1; ++p) {
        cells += static_cast<std::uint64_t>(half / (p + n - 1));
    }
    return cells;
}

SpectrumTable build_spectrum(const LensSpace& lens, std::int64_t lambda_max, std::uint64_t budget) {
    require_nonnegative(lambda_max);
    check_budget(lens.n(), lambda_max, budget);
    SpectrumTable table{lens, lambda_max, {}};
    if (lambda_max < 2) return table;
    const auto counter = counter_for(lens, lambda_max);
    for (std::int64_t lambda = 2; lambda <= lambda_max; lambda += 2) {
        SpectrumEntry entry;
        for (Bidegree b : bidegrees_for_eigenvalue(lens.n(), lambda)) {
            BigInt dim = counter.dim(b);
            if (dim == 0) continue;
            entry.multiplicity += dim;
            entry.contributors.push_back({b, std::move(dim)});
        }
        if (entry.multiplicity != 0) table.entries.emplace(lambda, std::move(entry));
    }
    return table;
}

BigInt multiplicity(const LensSpace& lens, std::int64_t lambda) {
    const auto bidegrees = bidegrees_for_eigenvalue(lens.n(), lambda);
    const auto counter = counter_for(lens, lambda);
    BigInt total = 0;
    for (Bidegree b : bidegrees) total += counter.dim(b);
    return total;
}

std::vector<BigInt> counting_series(const LensSpace& lens, std::int64_t lambda_max, std::uint64_t budget) {
    require_nonnegative(lambda_max);
    check_budget(lens.n(), lambda_max, budget);
    const std::int64_t half = lambda_max / 2;
    const int n = lens.n();
    std::vector<BigInt> counts(static_cast<std::size_t>(half + 1), 0);
    if (half == 0) return counts;
    const auto counter = counter_for(lens, lambda_max);
    for (std::int64_t p = 0; p <= half - n + 1; ++p) {
        const std::int64_t step = p + n - 1;
        for (std::int64_t q = 1; q * step <= half; ++q) {
            counts[static_cast<std::size_t>(q * step)] += counter.dim({static_cast<int>(p), static_cast<int>(q)});
        }
    }
    for (std::size_t j = 1; j < counts.size(); ++j) counts[j] += counts[j - 1];
    return counts;
}

BigInt lens_counting(const LensSpace& lens, std::int64_t lambda) {
    require_nonnegative(lambda);
    return counting_series(lens, lambda, std::numeric_limits<std::uint64_t>::max()).back();
}

} // namespace kohn
