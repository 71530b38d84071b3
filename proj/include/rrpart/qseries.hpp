#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rrpart/count.hpp"
#include "rrpart/partition.hpp"
#include "rrpart/recurrences.hpp"

namespace rrpart {

/// Power series in q with exact integer coefficients, truncated after
/// degree N. Arithmetic never touches degrees above N.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t degree) : coeffs_(degree + 1) {}
    TruncatedSeries(std::size_t degree, std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(degree + 1);
    }

    static TruncatedSeries zero(std::size_t degree) { return TruncatedSeries(degree); }
    static TruncatedSeries one(std::size_t degree) {
        TruncatedSeries s(degree);
        s.coeffs_[0] = 1;
        return s;
    }
    /// 1 / (1 - q^step) = 1 + q^step + q^{2 step} + ...
    static TruncatedSeries geometric(std::size_t step, std::size_t degree) {
        if (step == 0) throw std::invalid_argument("geometric series needs a positive step");
        TruncatedSeries s(degree);
        for (std::size_t d = 0; d <= degree; d += step) s.coeffs_[d] = 1;
        return s;
    }

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const Count& operator[](std::size_t d) const { return coeffs_.at(d); }
    Count& operator[](std::size_t d) { return coeffs_.at(d); }
    std::span<const Count> coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Count> coeffs_;
};

inline void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("truncation degrees differ: " + std::to_string(a.degree()) + " vs " +
                                    std::to_string(b.degree()));
}

/// Cauchy product truncated at the common degree. Zero coefficients of `a`
/// are skipped, so sparse factors such as geometric series stay cheap.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_degree(a, b);
    const std::size_t n = a.degree();
    TruncatedSeries out(n);
    for (std::size_t s = 0; s <= n; ++s) {
        if (a[s].is_zero()) continue;
        for (std::size_t t = 0; s + t <= n; ++t)
            if (!b[t].is_zero()) out[s + t] += a[s] * b[t];
    }
    return out;
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

/// prod over allowed j of 1 / (1 - q^j), truncated at degree N. Factors with
/// j > N cannot reach degree N and are skipped.
template <typename Allowed>
TruncatedSeries restricted_parts_product(Allowed&& allowed, std::size_t degree) {
    TruncatedSeries acc = TruncatedSeries::one(degree);
    for (std::size_t j = 1; j <= degree; ++j)
        if (allowed(static_cast<Part>(j))) acc = series_mul(TruncatedSeries::geometric(j, degree), acc);
    return acc;
}

/// Generating function of A(i): parts not congruent to 0, i, 5-i mod 5.
inline TruncatedSeries rogers_ramanujan_product(int i, std::size_t degree) {
    if (i != 1 && i != 2) throw std::invalid_argument("i must be 1 or 2");
    return restricted_parts_product(
        [i](Part j) {
            const int r = j % 5;
            return r != 0 && r != i && r != 5 - i;
        },
        degree);
}

/// Coefficient n is count_family(n, f), by enumeration.
inline TruncatedSeries series_from_counts(const FamilySpec& f, std::size_t degree) {
    TruncatedSeries s(degree);
    for (std::size_t n = 0; n <= degree; ++n) s[n] = count_family(static_cast<int>(n), f);
    return s;
}

/// Coefficient n is the table's family count for index i.
inline TruncatedSeries series_from_table(const CountTable& t, int i, std::size_t degree) {
    if (static_cast<long long>(degree) > t.max_n()) throw std::invalid_argument("degree exceeds the table bound");
    TruncatedSeries s(degree);
    for (std::size_t n = 0; n <= degree; ++n) s[n] = t.family_count(i, static_cast<int>(n));
    return s;
}

struct SeriesComparison {
    bool equal = true;
    std::optional<std::size_t> first_mismatch;
    Count lhs;
    Count rhs;
};

inline SeriesComparison series_equal_upto(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_degree(a, b);
    for (std::size_t d = 0; d <= a.degree(); ++d)
        if (a[d] != b[d]) return {false, d, a[d], b[d]};
    return {};
}

}  // namespace rrpart
