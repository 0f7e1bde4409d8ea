#pragma once

#include <cstdint>
#include <vector>

#include "kohn/core.hpp"

namespace kohn {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Residue-class sizes of exponent vectors of a fixed degree:
/// counts[r] = #{alpha : |alpha| = degree, sum_i w_i alpha_i = r mod k}.
struct ExponentProfile {
    std::vector<BigInt> counts;
    int degree = 0;
};

/// Profiles for degrees 0..max_degree of the given weight list mod k.
/// An empty weight list yields the profile of the zero-length vector.
std::vector<ExponentProfile> exponent_profiles(std::span<const int> weights, int k, int max_degree);

/// Number of pairs with residues summing to 0 mod k: sum_r a[r] * b[(k-r) % k].
BigInt zero_pairing(const ExponentProfile& a, const ExponentProfile& b);

/// Solution counts of the two reduced congruences for n = 2:
/// m_pq over beta_1 in [0, q] with alpha_1 = 0, n_pq over alpha_1 in [0, p]
/// with beta_1 = 0.
struct MNCounts {
    std::int64_t m_pq = 0;
    std::int64_t n_pq = 0;

    friend bool operator==(const MNCounts&, const MNCounts&) = default;
};

/// Exhaustive count of exponent pairs (alpha, beta) with |alpha| = p,
/// |beta| = q, alpha_1 beta_1 = 0 and sum_j l_j (alpha_j - beta_j) = 0 mod k.
/// This is the reference oracle for every faster path.
///
/// Throws ResourceLimit when C(p+n-1,n-1) C(q+n-1,n-1) exceeds `budget`.
BigInt dim_invariant_bruteforce(const LensSpace& lens, Bidegree b,
                                std::uint64_t budget = kDefaultEnumerationBudget);

/// Same count through residue-class convolution and inclusion-exclusion
/// over the alpha_1 = 0 / beta_1 = 0 cases.
BigInt dim_invariant_dp(const LensSpace& lens, Bidegree b);

MNCounts mn_counts(const LensSpace& lens, Bidegree b);

/// n = 2 only: 0 unless d | p - q, otherwise
/// dim H^G_{p%k, q%k} + d (floor(p/k) + floor(q/k)).
BigInt dim_invariant_recurrence(const LensSpace& lens, Bidegree b);

/// Precomputed profiles for all bidegrees up to (p_max, q_max); dim() is then
/// O(k) per query. Immutable after construction, so safe to share.
class InvariantCounter {
public:
    InvariantCounter(const LensSpace& lens, int p_max, int q_max);

    const LensSpace& lens() const { return lens_; }
    int p_max() const { return p_max_; }
    int q_max() const { return q_max_; }

    /// Throws std::out_of_range outside the precomputed window.
    BigInt dim(Bidegree b) const;

private:
    LensSpace lens_;
    int p_max_;
    int q_max_;
    std::vector<ExponentProfile> alpha_all_;   // all n coordinates, weights l
    std::vector<ExponentProfile> alpha_tail_;  // alpha_1 = 0
    std::vector<ExponentProfile> beta_all_;    // weights -l
    std::vector<ExponentProfile> beta_tail_;   // beta_1 = 0
};

/// Memoized k x k base table for the n = 2 reduction. Filled eagerly from
/// the residue-convolution path.
class DimensionTable {
public:
    explicit DimensionTable(const LensSpace& lens);

    const LensSpace& lens() const { return lens_; }
    int d() const { return d_; }
    const BigInt& base(int p, int q) const;

    BigInt dim(Bidegree b) const;

    friend bool operator==(const DimensionTable& a, const DimensionTable& b) {
        return a.lens_.k() == b.lens_.k() && a.d_ == b.d_ && a.base_ == b.base_;
    }

private:
    LensSpace lens_;
    int d_;
    std::vector<BigInt> base_;
};

} // namespace kohn
