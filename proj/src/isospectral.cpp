#include "kohn/isospectral.hpp"

#include <algorithm>
#include <numeric>

#include "kohn/invariant.hpp"

namespace kohn {

IntMatrix IntMatrix::identity(int size) {
    IntMatrix m(size);
    for (int i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < size_; ++i) {
        for (int j = i + 1; j < size_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(size_);
    for (int i = 0; i < size_; ++i) {
        for (int j = 0; j < size_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_.at(i);
    return a;
}

IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_.at(i);
    return a;
}

IntMatrix unit_matrix(int size, int row, int col) {
    IntMatrix m(size);
    m(row, col) = 1;
    return m;
}

namespace {

void require_same_group(const LensSpace& lens, const LensSpace& other) {
    if (lens.k() != other.k() || lens.n() != other.n()) {
        throw Error(ErrorCode::MismatchedSpaces, "lens spaces " + format_lens_space(lens) + " and " +
                                                     format_lens_space(other) + " differ in k or n");
    }
}

} // namespace

bool witness_holds(const IsometryWitness& witness, const LensSpace& lens, const LensSpace& other) {
    if (lens.k() != other.k() || lens.n() != other.n()) return false;
    if (witness.sigma.size() != static_cast<std::size_t>(lens.n())) return false;
    const std::int64_t k = lens.k();
    for (int i = 0; i < lens.n(); ++i) {
        const std::int64_t image = mod_floor(static_cast<std::int64_t>(witness.a) * lens.weight(witness.sigma[i]), k);
        if (image != other.weight(i)) return false;
    }
    return true;
}

std::optional<IsometryWitness> condition4_witness(const LensSpace& lens, const LensSpace& other) {
    require_same_group(lens, other);
    const int k = lens.k();
    std::vector<int> sigma(static_cast<std::size_t>(lens.n()));
    for (int a = 1; a <= std::max(k - 1, 1); ++a) {
        if (std::gcd(a, k) != 1) continue;
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            IsometryWitness candidate{a, sigma};
            if (witness_holds(candidate, lens, other)) return candidate;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return std::nullopt;
}

std::optional<std::int64_t> first_spectral_difference(const SpectrumTable& a, const SpectrumTable& b) {
    const std::int64_t cutoff = std::min(a.lambda_max, b.lambda_max);
    auto ia = a.entries.begin();
    auto ib = b.entries.begin();
    while (true) {
        const bool a_done = ia == a.entries.end() || ia->first > cutoff;
        const bool b_done = ib == b.entries.end() || ib->first > cutoff;
        if (a_done && b_done) return std::nullopt;
        if (a_done) return ib->first;
        if (b_done) return ia->first;
        if (ia->first != ib->first) return std::min(ia->first, ib->first);
        if (ia->second.multiplicity != ib->second.multiplicity) return ia->first;
        ++ia;
        ++ib;
    }
}

bool spectra_equal_up_to(const LensSpace& lens, const LensSpace& other, std::int64_t lambda_max) {
    if (lens == other) return true;
    return !first_spectral_difference(build_spectrum(lens, lambda_max), build_spectrum(other, lambda_max));
}

bool dims_equal(const LensSpace& lens, const LensSpace& other, int p_max, int q_max) {
    require_same_group(lens, other);
    if (lens == other) return true;
    if (lens.n() == 2) return DimensionTable(lens) == DimensionTable(other);
    const InvariantCounter lhs(lens, p_max, q_max);
    const InvariantCounter rhs(other, p_max, q_max);
    for (int p = 0; p <= p_max; ++p) {
        for (int q = 0; q <= q_max; ++q) {
            if (lhs.dim({p, q}) != rhs.dim({p, q})) return false;
        }
    }
    return true;
}

CMatrix c_matrix(int k, std::int64_t lambda) {
    if (k < 2) throw Error(ErrorCode::InvalidOrder, "c_matrix needs k >= 2, got " + std::to_string(k));
    // n = 2 eigenvalue relation 2q(p+1) = lambda.
    CMatrix out{k, lambda, IntMatrix(k)};
    for (Bidegree b : bidegrees_for_eigenvalue(2, lambda)) {
        out.entries(b.p % k, b.q % k) += 1;
    }
    return out;
}

IntMatrix t_apply(const IntMatrix& m) {
    const int k = m.size();
    IntMatrix out(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) out(i, j) = m((i + 1) % k, j);
    }
    return out;
}

IntMatrix t_inverse(const IntMatrix& m) {
    const int k = m.size();
    IntMatrix out(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) out(i, j) = m((i + k - 1) % k, j);
    }
    return out;
}

int rational_rank(std::vector<std::vector<BigInt>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                  [col](const auto& row) { return row[col] != 0; });
        if (pivot == rows.end()) continue;
        std::swap(rows[rank], *pivot);
        const auto& pivot_row = rows[rank];
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            auto& row = rows[i];
            if (row[col] == 0) continue;
            const BigInt a = pivot_row[col];
            const BigInt b = row[col];
            BigInt content = 0;
            for (std::size_t j = col; j < cols; ++j) {
                row[j] = a * row[j] - b * pivot_row[j];
                content = boost::multiprecision::gcd(content, row[j]);
            }
            if (content > 1) {
                for (std::size_t j = col; j < cols; ++j) row[j] /= content;
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int span_dimension(int k, const std::vector<std::int64_t>& lambdas) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(lambdas.size());
    for (std::int64_t lambda : lambdas) {
        const CMatrix c = c_matrix(k, lambda);
        const auto data = c.entries.data();
        rows.emplace_back(data.begin(), data.end());
    }
    return rational_rank(std::move(rows));
}

Classification classify_all(int k) {
    if (k < 2) throw Error(ErrorCode::InvalidOrder, "classify_all needs k >= 2, got " + std::to_string(k));
    Classification out;
    out.k = k;
    out.spectral_equivalence_guaranteed = k > 2 && is_prime(k);
    std::vector<LensSpace> representatives;
    const auto units = units_mod(k);
    for (int l1 : units) {
        for (int l2 : units) {
            const LensSpace lens = make_lens_space(2, k, {l1, l2});
            bool placed = false;
            for (std::size_t c = 0; c < representatives.size(); ++c) {
                if (condition4_witness(representatives[c], lens)) {
                    out.classes[c].members.emplace_back(l1, l2);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                representatives.push_back(lens);
                out.classes.push_back({{l1, l2}, {{l1, l2}}, gcd_invariant(lens)});
            }
        }
    }
    return out;
}

bool d_invariant_check(const LensSpace& lens, const LensSpace& other) {
    if (lens.n() != 2 || other.n() != 2) {
        throw Error(ErrorCode::UnsupportedDimension, "d invariant is defined for n = 2 only");
    }
    require_same_group(lens, other);
    return gcd_invariant(lens) == gcd_invariant(other);
}

} // namespace kohn
