#pragma once

#include <optional>
#include <vector>

#include "kohn/core.hpp"
#include "kohn/spectrum.hpp"

namespace kohn {

/// Arithmetic certificate that L' = L(k; a l_{sigma(1)}, ..., a l_{sigma(n)}).
/// sigma is 0-based: weights'[i] = a * weights[sigma[i]] mod k.
struct IsometryWitness {
    int a = 1;
    std::vector<int> sigma;

    friend bool operator==(const IsometryWitness&, const IsometryWitness&) = default;
};

/// Square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * size, 0) {}

    static IntMatrix identity(int size);

    int size() const { return size_; }
    std::int64_t& operator()(int row, int col) { return data_[index(row, col)]; }
    std::int64_t operator()(int row, int col) const { return data_[index(row, col)]; }
    std::span<const std::int64_t> data() const { return data_; }

    bool is_symmetric() const;
    IntMatrix transpose() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b);
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b);

private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(col);
    }

    int size_ = 0;
    std::vector<std::int64_t> data_;
};

/// Unit matrix E_{i,j} of the given size.
IntMatrix unit_matrix(int size, int row, int col);

/// c^lambda_{a,b} = #{(p,q) : p = a, q = b mod k, 2q(p+1) = lambda}.
struct CMatrix {
    int k = 0;
    std::int64_t lambda = 0;
    IntMatrix entries;
};

/// Exhaustive search over units a (ascending) and permutations sigma
/// (lexicographic); returns the first witness. Throws MismatchedSpaces if
/// k or n differ.
std::optional<IsometryWitness> condition4_witness(const LensSpace& lens, const LensSpace& other);

/// Recomputes a * l_{sigma(i)} mod k and compares with other's weights.
bool witness_holds(const IsometryWitness& witness, const LensSpace& lens, const LensSpace& other);

/// Smallest eigenvalue <= lambda_max where the multiplicity tables differ.
std::optional<std::int64_t> first_spectral_difference(const SpectrumTable& a, const SpectrumTable& b);

bool spectra_equal_up_to(const LensSpace& lens, const LensSpace& other, std::int64_t lambda_max);

/// Equality of dim H^G_{p,q}. For n = 2 this compares d and the k x k base
/// tables, which decides equality for all (p, q); the cutoffs are ignored.
/// For n >= 3 it compares the finite grid p <= p_max, q <= q_max only.
bool dims_equal(const LensSpace& lens, const LensSpace& other, int p_max, int q_max);

CMatrix c_matrix(int k, std::int64_t lambda);

/// T: top row moves to the bottom, other rows shift up.
IntMatrix t_apply(const IntMatrix& m);
/// T^{-1}: bottom row moves to the top.
IntMatrix t_inverse(const IntMatrix& m);

/// Rank over Q of the given integer vectors (fraction-free elimination).
int rational_rank(std::vector<std::vector<BigInt>> rows);

/// Rank over Q of {C^lambda} viewed as vectors of length k^2.
int span_dimension(int k, const std::vector<std::int64_t>& lambdas);

struct LensClass {
    std::pair<int, int> representative;
    std::vector<std::pair<int, int>> members;  // sorted
    int d = 0;
};

struct Classification {
    int k = 0;
    /// True when k is an odd prime, the only case where (a, sigma) orbit classes
    /// are guaranteed to coincide with spectral classes.
    bool spectral_equivalence_guaranteed = false;
    std::vector<LensClass> classes;  // sorted by representative
};

/// Partitions all unit weight pairs (l_1, l_2) mod k into (a, sigma) orbit
/// classes. The representative is the lexicographically least member, which
/// always has l_1 = 1.
Classification classify_all(int k);

/// gcd_invariant(L) == gcd_invariant(L'); n = 2 and equal k required.
bool d_invariant_check(const LensSpace& lens, const LensSpace& other);

} // namespace kohn
