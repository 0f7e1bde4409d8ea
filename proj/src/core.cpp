#include "kohn/core.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace kohn {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::InvalidEigenvalue: return "InvalidEigenvalue";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::MismatchedSpaces: return "MismatchedSpaces";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

int MultiIndexPair::alpha_degree() const {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

int MultiIndexPair::beta_degree() const {
    return std::accumulate(beta.begin(), beta.end(), 0);
}

LensSpace make_lens_space(int n, int k, std::span<const std::int64_t> weights) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidOrder, "group order k must be >= 1, got " + std::to_string(k));
    }
    if (n < 2) {
        throw Error(ErrorCode::DimensionTooSmall, "dimension parameter n must be >= 2, got " + std::to_string(n));
    }
    if (weights.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorCode::DimensionTooSmall,
                    "expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()));
    }
    std::vector<int> canonical;
    canonical.reserve(weights.size());
    for (std::int64_t w : weights) {
        std::int64_t r = mod_floor(w, k);
        if (std::gcd(r, static_cast<std::int64_t>(k)) != 1) {
            throw Error(ErrorCode::InvalidWeight,
                        "weight " + std::to_string(w) + " is not coprime to k = " + std::to_string(k));
        }
        canonical.push_back(static_cast<int>(r));
    }
    return LensSpace(k, std::move(canonical));
}

LensSpace make_lens_space(int n, int k, std::initializer_list<std::int64_t> weights) {
    return make_lens_space(n, k, std::span<const std::int64_t>(weights.begin(), weights.size()));
}

LensSpace sphere(int n) {
    std::vector<std::int64_t> ones(static_cast<std::size_t>(std::max(n, 0)), 1);
    return make_lens_space(n, 1, ones);
}

namespace {

std::int64_t parse_integer(std::string_view token, std::string_view whole) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw Error(ErrorCode::ParseError,
                    "malformed lens space '" + std::string(whole) + "': expected k:l1,...,ln");
    }
    return value;
}

} // namespace

LensSpace parse_lens_space(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorCode::ParseError,
                    "malformed lens space '" + std::string(text) + "': expected k:l1,...,ln");
    }
    std::int64_t k = parse_integer(text.substr(0, colon), text);
    std::vector<std::int64_t> weights;
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        auto comma = rest.find(',');
        weights.push_back(parse_integer(rest.substr(0, comma), text));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (k < 1 || k > std::numeric_limits<int>::max()) {
        throw Error(ErrorCode::InvalidOrder, "group order k must be >= 1, got " + std::to_string(k));
    }
    return make_lens_space(static_cast<int>(weights.size()), static_cast<int>(k), weights);
}

std::string format_lens_space(const LensSpace& lens) {
    std::ostringstream out;
    out << lens.k() << ':';
    for (int i = 0; i < lens.n(); ++i) {
        if (i) out << ',';
        out << lens.weight(i);
    }
    return out.str();
}

int gcd_invariant(const LensSpace& lens) {
    if (lens.n() != 2) {
        throw Error(ErrorCode::UnsupportedDimension,
                    "gcd invariant is defined for n = 2 only, got n = " + std::to_string(lens.n()));
    }
    // std::gcd(k, 0) == k covers l_1 == l_2.
    return std::gcd(lens.k(), lens.weight(0) - lens.weight(1));
}

BigInt binomial(std::int64_t top, std::int64_t bottom) {
    if (bottom < 0 || top < 0 || bottom > top) return 0;
    bottom = std::min(bottom, top - bottom);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= bottom; ++i) {
        result *= top - bottom + i;
        result /= i;
    }
    return result;
}

std::vector<int> units_mod(int k) {
    if (k == 1) return {0};
    std::vector<int> units;
    for (int a = 1; a < k; ++a) {
        if (std::gcd(a, k) == 1) units.push_back(a);
    }
    return units;
}

bool is_prime(std::int64_t value) {
    if (value < 2) return false;
    for (std::int64_t f = 2; f * f <= value; ++f) {
        if (value % f == 0) return false;
    }
    return true;
}

BigInt enumeration_size(int n, Bidegree b) {
    return binomial(b.p + n - 1, n - 1) * binomial(b.q + n - 1, n - 1);
}

double to_double(const BigInt& value) {
    return value.convert_to<double>();
}

double to_double(const BigRational& value) {
    return value.convert_to<double>();
}

} // namespace kohn
