#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kohn {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
    InvalidOrder,
    InvalidWeight,
    DimensionTooSmall,
    UnsupportedDimension,
    ResourceLimit,
    InvalidEigenvalue,
    NonConvergence,
    MismatchedSpaces,
    DomainViolation,
    InsufficientSamples,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every module. The message names the violated
/// invariant; code() lets callers (and the CLI) branch on the failure kind.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Bidegree (p, q) of the harmonic space H_{p,q}: degree p in z, q in zbar.
struct Bidegree {
    int p = 0;
    int q = 0;

    friend bool operator==(const Bidegree&, const Bidegree&) = default;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Kohn Laplacian eigenvalue 2q(p+n-1). Always a nonnegative even integer.
struct Eigenvalue {
    std::int64_t value = 0;

    friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
    friend auto operator<=>(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Exponent pair (alpha, beta) of a basis element of H_{p,q}.
struct MultiIndexPair {
    std::vector<int> alpha;
    std::vector<int> beta;

    int alpha_degree() const;
    int beta_degree() const;
};

/// The lens space L(k; l_1, ..., l_n), stored as its parameter tuple.
///
/// Weights are kept as canonical residues in [0, k), each coprime to k.
/// Instances are only produced by make_lens_space / parse_lens_space, so a
/// LensSpace value always satisfies its invariants.
class LensSpace {
public:
    int n() const { return static_cast<int>(weights_.size()); }
    int k() const { return k_; }
    std::span<const int> weights() const { return weights_; }
    int weight(int i) const { return weights_.at(static_cast<std::size_t>(i)); }

    bool is_sphere() const { return k_ == 1; }

    friend bool operator==(const LensSpace&, const LensSpace&) = default;

private:
    friend LensSpace make_lens_space(int n, int k, std::span<const std::int64_t> weights);

    LensSpace(int k, std::vector<int> weights) : k_(k), weights_(std::move(weights)) {}

    int k_;
    std::vector<int> weights_;
};

LensSpace make_lens_space(int n, int k, std::span<const std::int64_t> weights);
LensSpace make_lens_space(int n, int k, std::initializer_list<std::int64_t> weights);

/// The unit sphere S^{2n-1}, i.e. the lens space with trivial group (k = 1).
LensSpace sphere(int n);

/// Parses the `k:l1,l2,...,ln` text format; n is the length of the list.
LensSpace parse_lens_space(std::string_view text);
std::string format_lens_space(const LensSpace& lens);

/// d = gcd(k, l_1 - l_2) on the stored representatives, gcd(k, 0) = k.
/// Only defined for n = 2.
int gcd_invariant(const LensSpace& lens);

// Integer helpers shared across modules.

/// Least nonnegative residue of a mod k (k > 0).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t k) {
    std::int64_t r = a % k;
    return r < 0 ? r + k : r;
}

/// 1 if k divides a (a may be negative), else 0.
constexpr int divides(std::int64_t k, std::int64_t a) {
    if (k == 0) return a == 0 ? 1 : 0;
    return a % k == 0 ? 1 : 0;
}

BigInt binomial(std::int64_t top, std::int64_t bottom);

/// Units of Z/k in increasing order; for k = 1 this is {0}.
std::vector<int> units_mod(int k);

bool is_prime(std::int64_t value);

/// Number of candidates C(p+n-1, n-1) * C(q+n-1, n-1) for the brute-force
/// enumeration over exponent pairs.
BigInt enumeration_size(int n, Bidegree b);

/// Converts a big integer to double, rounding to nearest.
double to_double(const BigInt& value);
double to_double(const BigRational& value);

} // namespace kohn
