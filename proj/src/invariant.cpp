#include "kohn/invariant.hpp"

#include <stdexcept>

namespace kohn {

namespace {

struct Exponent {
    int residue;  // sum_j l_j e_j mod k
    int first;    // e_1
};

// All e in Z_{>=0}^n with |e| = degree, in lexicographic order.
std::vector<Exponent> enumerate_exponents(const LensSpace& lens, int degree) {
    const int n = lens.n();
    const int k = lens.k();
    std::vector<Exponent> out;
    std::vector<int> e(static_cast<std::size_t>(n), 0);

    // Recursive fill of coordinates i..n-1 with `left` remaining.
    auto fill = [&](auto&& self, int i, int left, std::int64_t residue) -> void {
        if (i == n - 1) {
            e[i] = left;
            std::int64_t r = mod_floor(residue + static_cast<std::int64_t>(lens.weight(i)) * left, k);
            out.push_back({static_cast<int>(r), e[0]});
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[i] = v;
            self(self, i + 1, left - v, residue + static_cast<std::int64_t>(lens.weight(i)) * v);
        }
    };
    fill(fill, 0, degree, 0);
    return out;
}

void require_n2(const LensSpace& lens, const char* what) {
    if (lens.n() != 2) {
        throw Error(ErrorCode::UnsupportedDimension,
                    std::string(what) + " is defined for n = 2 only, got n = " + std::to_string(lens.n()));
    }
}

void require_bidegree(Bidegree b) {
    if (b.p < 0 || b.q < 0) {
        throw Error(ErrorCode::DomainViolation, "bidegree must be nonnegative");
    }
}

} // namespace

std::vector<ExponentProfile> exponent_profiles(std::span<const int> weights, int k, int max_degree) {
    // Multiplying the generating series by 1/(1 - t x^w) for each coordinate:
    // P_j(p) = P_{j-1}(p) + shift_w(P_j(p-1)).
    const auto uk = static_cast<std::size_t>(k);
    std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(max_degree + 1), std::vector<BigInt>(uk, 0));
    table[0][0] = 1;
    for (int w : weights) {
        const auto shift = static_cast<std::size_t>(mod_floor(w, k));
        for (int p = 1; p <= max_degree; ++p) {
            auto& row = table[static_cast<std::size_t>(p)];
            const auto& prev = table[static_cast<std::size_t>(p - 1)];
            for (std::size_t r = 0; r < uk; ++r) {
                row[(r + shift) % uk] += prev[r];
            }
        }
    }
    std::vector<ExponentProfile> out;
    out.reserve(table.size());
    for (int p = 0; p <= max_degree; ++p) {
        out.push_back({std::move(table[static_cast<std::size_t>(p)]), p});
    }
    return out;
}

BigInt zero_pairing(const ExponentProfile& a, const ExponentProfile& b) {
    const std::size_t k = a.counts.size();
    BigInt total = 0;
    for (std::size_t r = 0; r < k; ++r) {
        const auto& lhs = a.counts[r];
        if (lhs == 0) continue;
        total += lhs * b.counts[(k - r) % k];
    }
    return total;
}

BigInt dim_invariant_bruteforce(const LensSpace& lens, Bidegree b, std::uint64_t budget) {
    require_bidegree(b);
    if (enumeration_size(lens.n(), b) > budget) {
        throw Error(ErrorCode::ResourceLimit,
                    "brute-force enumeration for (p,q) = (" + std::to_string(b.p) + "," + std::to_string(b.q) +
                        ") exceeds the budget of " + std::to_string(budget) + " candidate pairs");
    }
    const auto alphas = enumerate_exponents(lens, b.p);
    const auto betas = enumerate_exponents(lens, b.q);
    std::uint64_t count = 0;
    for (const auto& alpha : alphas) {
        for (const auto& beta : betas) {
            if (alpha.first != 0 && beta.first != 0) continue;
            if ((alpha.residue - beta.residue) % lens.k() == 0) ++count;
        }
    }
    return BigInt(count);
}

InvariantCounter::InvariantCounter(const LensSpace& lens, int p_max, int q_max)
    : lens_(lens), p_max_(p_max), q_max_(q_max) {
    if (p_max < 0 || q_max < 0) {
        throw Error(ErrorCode::DomainViolation, "profile window must be nonnegative");
    }
    const int k = lens.k();
    std::vector<int> weights(lens.weights().begin(), lens.weights().end());
    std::vector<int> negated;
    negated.reserve(weights.size());
    for (int w : weights) negated.push_back(static_cast<int>(mod_floor(-w, k)));

    std::span<const int> all(weights);
    std::span<const int> neg_all(negated);
    alpha_all_ = exponent_profiles(all, k, p_max);
    alpha_tail_ = exponent_profiles(all.subspan(1), k, p_max);
    beta_all_ = exponent_profiles(neg_all, k, q_max);
    beta_tail_ = exponent_profiles(neg_all.subspan(1), k, q_max);
}

BigInt InvariantCounter::dim(Bidegree b) const {
    if (b.p < 0 || b.q < 0 || b.p > p_max_ || b.q > q_max_) {
        throw std::out_of_range("bidegree outside the precomputed profile window");
    }
    const auto p = static_cast<std::size_t>(b.p);
    const auto q = static_cast<std::size_t>(b.q);
    // alpha_1 = 0 or beta_1 = 0, by inclusion-exclusion.
    return zero_pairing(alpha_tail_[p], beta_all_[q]) + zero_pairing(alpha_all_[p], beta_tail_[q]) -
           zero_pairing(alpha_tail_[p], beta_tail_[q]);
}

BigInt dim_invariant_dp(const LensSpace& lens, Bidegree b) {
    require_bidegree(b);
    return InvariantCounter(lens, b.p, b.q).dim(b);
}

MNCounts mn_counts(const LensSpace& lens, Bidegree b) {
    require_n2(lens, "mn_counts");
    require_bidegree(b);
    const std::int64_t k = lens.k();
    const std::int64_t l1 = lens.weight(0);
    const std::int64_t l2 = lens.weight(1);
    const std::int64_t diff = b.p - b.q;
    MNCounts out;
    for (std::int64_t beta1 = 0; beta1 <= b.q; ++beta1) {
        if (mod_floor(-l1 * beta1 + l2 * (diff + beta1), k) == 0) ++out.m_pq;
    }
    for (std::int64_t alpha1 = 0; alpha1 <= b.p; ++alpha1) {
        if (mod_floor(l1 * alpha1 + l2 * (diff - alpha1), k) == 0) ++out.n_pq;
    }
    return out;
}

DimensionTable::DimensionTable(const LensSpace& lens) : lens_(lens), d_(gcd_invariant(lens)) {
    const int k = lens.k();
    InvariantCounter counter(lens, k - 1, k - 1);
    base_.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) {
        for (int q = 0; q < k; ++q) base_.push_back(counter.dim({p, q}));
    }
}

const BigInt& DimensionTable::base(int p, int q) const {
    const int k = lens_.k();
    if (p < 0 || q < 0 || p >= k || q >= k) throw std::out_of_range("base table index");
    return base_[static_cast<std::size_t>(p) * static_cast<std::size_t>(k) + static_cast<std::size_t>(q)];
}

BigInt DimensionTable::dim(Bidegree b) const {
    require_bidegree(b);
    if (!divides(d_, static_cast<std::int64_t>(b.p) - b.q)) return 0;
    const int k = lens_.k();
    return base(b.p % k, b.q % k) + BigInt(d_) * (b.p / k + b.q / k);
}

BigInt dim_invariant_recurrence(const LensSpace& lens, Bidegree b) {
    require_n2(lens, "dim_invariant_recurrence");
    return DimensionTable(lens).dim(b);
}

} // namespace kohn
