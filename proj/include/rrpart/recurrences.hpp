#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrpart/count.hpp"
#include "rrpart/partition.hpp"

namespace rrpart {

enum class SystemKind { System1, System2, System3 };

/// One of the three recursion systems for the length-refined counts c_i(m,n)
/// (i = 1, 2). Each has the shape
///
///   c_2(m,n) - c_1(m,n) = c_2(m-1, n - drop_shift(m))
///   c_1(m,n)            = c_1(m-1, n - even_shift(m)) + c_2(m, n - 2m)
///
/// with c_i(0,0) = 1 and c_i(m,n) = 0 for m <= 0 or n <= 0 otherwise.
/// System1 governs min_part 1, System2(k) min_part 2k+1, System3(k) min_part 2k.
struct SystemVariant {
    SystemKind kind = SystemKind::System1;
    int k = 0;

    static SystemVariant system1() { return {SystemKind::System1, 0}; }
    static SystemVariant system2(int k) {
        if (k < 1) throw std::invalid_argument("System2 needs k >= 1");
        return {SystemKind::System2, k};
    }
    static SystemVariant system3(int k) {
        if (k < 1) throw std::invalid_argument("System3 needs k >= 1");
        return {SystemKind::System3, k};
    }
    static SystemVariant for_min_part(Part j) {
        if (j < 1) throw std::invalid_argument("min_part must be positive");
        if (j == 1) return system1();
        return j % 2 == 1 ? system2(j / 2) : system3(j / 2);
    }

    Part min_part() const noexcept {
        switch (kind) {
        case SystemKind::System1: return 1;
        case SystemKind::System2: return 2 * k + 1;
        case SystemKind::System3: return 2 * k;
        }
        return 1;
    }

    long long drop_shift(long long m) const noexcept {
        switch (kind) {
        case SystemKind::System1: return 2 * m - 1;
        case SystemKind::System2: return 2 * m + 2 * k - 1;
        case SystemKind::System3: return 2 * m + 2 * k - 2;
        }
        return 0;
    }

    long long even_shift(long long m) const noexcept {
        switch (kind) {
        case SystemKind::System1: return 2 * m;
        case SystemKind::System2: return 2 * m + 2 * k;
        case SystemKind::System3: return 2 * m + 2 * k - 1;
        }
        return 0;
    }

    std::string name() const {
        switch (kind) {
        case SystemKind::System1: return "System1";
        case SystemKind::System2: return "System2(k=" + std::to_string(k) + ")";
        case SystemKind::System3: return "System3(k=" + std::to_string(k) + ")";
        }
        return "?";
    }

    friend bool operator==(const SystemVariant&, const SystemVariant&) = default;
};

/// Dense DP table of c_i(m,n) for 0 <= m, n <= max_n, filled by increasing n,
/// then m, with i = 1 before i = 2. Every reference made while filling points
/// at a strictly smaller n, or the same (m, n) with i = 1 from i = 2.
/// Immutable once built.
class CountTable {
public:
    CountTable(SystemVariant variant, int max_n) : variant_(variant), max_n_(max_n) {
        if (max_n < 0) throw std::invalid_argument("table bound must be non-negative");
        const std::size_t side = static_cast<std::size_t>(max_n) + 1;
        for (auto& c : cells_) c.assign(side * side, Count(0));

        for (long long n = 0; n <= max_n; ++n) {
            for (long long m = 0; m <= max_n; ++m) {
                if (m == 0 || n == 0) {
                    const Count base = (m == 0 && n == 0) ? 1 : 0;
                    at(1, m, n) = base;
                    at(2, m, n) = base;
                    continue;
                }
                Count c1 = lookup(1, m - 1, n - variant_.even_shift(m)) + lookup(2, m, n - 2 * m);
                Count c2 = c1 + lookup(2, m - 1, n - variant_.drop_shift(m));
                at(1, m, n) = std::move(c1);
                at(2, m, n) = std::move(c2);
            }
        }
    }

    const SystemVariant& variant() const noexcept { return variant_; }
    int max_n() const noexcept { return max_n_; }

    /// c_i(m,n). Negative arguments hit the base case. Throws out_of_range for
    /// n beyond the built bound.
    Count value(int i, long long m, long long n) const {
        if (i != 1 && i != 2) throw std::invalid_argument("i must be 1 or 2");
        if (n > max_n_) throw std::out_of_range("n = " + std::to_string(n) + " exceeds table bound " +
                                                std::to_string(max_n_));
        return lookup(i, m, n);
    }

    /// sum over 0 <= m <= n of c_i(m,n).
    Count family_count(int i, int n) const {
        Count total = 0;
        for (int m = 0; m <= n; ++m) total += value(i, m, n);
        return total;
    }

private:
    // For m > n >= 0 the system forces zero (induction on n: every
    // referenced cell also has more parts than weight), and such m may exceed
    // the stored columns.
    Count lookup(int i, long long m, long long n) const {
        if (m < 0 || n < 0) return 0;
        if (m > max_n_) return 0;
        return cells_[static_cast<std::size_t>(i - 1)][index(m, n)];
    }
    Count& at(int i, long long m, long long n) { return cells_[static_cast<std::size_t>(i - 1)][index(m, n)]; }
    std::size_t index(long long m, long long n) const {
        return static_cast<std::size_t>(n) * (static_cast<std::size_t>(max_n_) + 1) + static_cast<std::size_t>(m);
    }

    SystemVariant variant_;
    int max_n_;
    std::array<std::vector<Count>, 2> cells_;
};

/// Defined for every (m, n); cells beyond t's bound come from a larger table.
inline Count table_value(const CountTable& t, int i, long long m, long long n) {
    if (n > t.max_n()) return CountTable(t.variant(), static_cast<int>(n)).value(i, m, n);
    return t.value(i, m, n);
}

inline Count family_count_via_table(const CountTable& t, int i, int n) { return t.family_count(i, n); }

// ---------------------------------------------------------------------------
// Verification

struct Violation {
    int i = 0;
    long long m = 0;
    long long n = 0;
    Count expected;
    Count actual;
    std::string equation;
};

struct VerificationReport {
    std::string system;
    std::string family;
    int max_n = 0;
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

inline void expect_equal(VerificationReport& r, int i, long long m, long long n, const Count& expected,
                         const Count& actual, const char* equation) {
    if (expected != actual) r.violations.push_back({i, m, n, expected, actual, equation});
}

inline std::string family_label(FamilyKind kind, Part min_part) {
    return std::string(to_string(kind)) + "(min_part=" + std::to_string(min_part) + ")";
}

}  // namespace detail

/// Checks that enumeration counts of family (f.kind, i, f.min_part) satisfy
/// the base cases and both equations of t's system, for i in {1, 2} and all
/// 0 <= m <= n <= max_n. f.i is ignored: both indices are always checked.
inline VerificationReport verify_system(const CountTable& t, const FamilySpec& f, int max_n) {
    f.validate();
    if (SystemVariant::for_min_part(f.min_part) != t.variant())
        throw std::invalid_argument("family " + to_string(f) + " does not match " + t.variant().name());

    VerificationReport r{t.variant().name(), detail::family_label(f.kind, f.min_part), max_n, {}};
    const RefinedCounts c1 = length_refined_counts(f.with_i(1), max_n);
    const RefinedCounts c2 = length_refined_counts(f.with_i(2), max_n);
    const SystemVariant& v = t.variant();

    for (long long n = 0; n <= max_n; ++n) {
        for (long long m = 0; m <= n; ++m) {
            if (m == 0 || n == 0) {
                const Count base = (m == 0 && n == 0) ? 1 : 0;
                detail::expect_equal(r, 1, m, n, base, refined_at(c1, m, n), "base case");
                detail::expect_equal(r, 2, m, n, base, refined_at(c2, m, n), "base case");
                continue;
            }
            detail::expect_equal(r, 2, m, n, refined_at(c2, m - 1, n - v.drop_shift(m)),
                                 refined_at(c2, m, n) - refined_at(c1, m, n), "difference equation");
            detail::expect_equal(r, 1, m, n,
                                 refined_at(c1, m - 1, n - v.even_shift(m)) + refined_at(c2, m, n - 2 * m),
                                 refined_at(c1, m, n), "split equation");
        }
    }
    return r;
}

/// Cellwise comparison of DP values (expected) against enumeration counts
/// (actual) for i in {1, 2} and 0 <= m <= n <= max_n.
inline VerificationReport compare_table_with_oracle(const CountTable& t, const FamilySpec& f, int max_n) {
    f.validate();
    if (max_n > t.max_n()) throw std::invalid_argument("max_n exceeds the table bound");
    VerificationReport r{t.variant().name(), detail::family_label(f.kind, f.min_part), max_n, {}};
    for (int i : {1, 2}) {
        const RefinedCounts c = length_refined_counts(f.with_i(i), max_n);
        for (long long n = 0; n <= max_n; ++n)
            for (long long m = 0; m <= n; ++m)
                detail::expect_equal(r, i, m, n, t.value(i, m, n), refined_at(c, m, n), "table vs enumeration");
    }
    return r;
}

/// Checks, from enumeration counts, for all 0 <= m <= n <= max_n:
///   p^{2k+1}(m,n) = p(m, n-2mk)        b^{2k+1}(m,n) = b(m, n-2mk)
///   p^{2k}(m,n)   = p^{2k+1}(m, n+m)   b^{2k}(m,n)   = b^{2k+1}(m, n+m)
inline VerificationReport shift_identity_check(int k, int i, int max_n) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    VerificationReport r{"shift(k=" + std::to_string(k) + ")", "P,B(i=" + std::to_string(i) + ")", max_n, {}};
    const Part odd = 2 * k + 1;
    const Part even = 2 * k;

    for (FamilyKind kind : {FamilyKind::P, FamilyKind::B}) {
        const RefinedCounts base = length_refined_counts(FamilySpec::make(kind, i, 1), max_n);
        const RefinedCounts odd_shift = length_refined_counts(FamilySpec::make(kind, i, odd), 2 * max_n);
        const RefinedCounts even_shift = length_refined_counts(FamilySpec::make(kind, i, even), max_n);
        const char* sub_eq = kind == FamilyKind::P ? "p^{2k+1}(m,n) = p(m,n-2mk)" : "b^{2k+1}(m,n) = b(m,n-2mk)";
        const char* add_eq = kind == FamilyKind::P ? "p^{2k}(m,n) = p^{2k+1}(m,n+m)" : "b^{2k}(m,n) = b^{2k+1}(m,n+m)";
        for (long long n = 0; n <= max_n; ++n) {
            for (long long m = 0; m <= n; ++m) {
                detail::expect_equal(r, i, m, n, refined_at(base, m, n - 2 * m * k), refined_at(odd_shift, m, n),
                                     sub_eq);
                detail::expect_equal(r, i, m, n, refined_at(odd_shift, m, n + m), refined_at(even_shift, m, n),
                                     add_eq);
            }
        }
    }
    return r;
}

struct RefinedWitness {
    int m = 0;
    int n = 0;
    Count count_a;
    Count count_b;
};

/// Smallest (n, m) with n <= max_n where the number of A(i) and B(i) members
/// of weight n and length m differ.
inline std::optional<RefinedWitness> refined_ab_witness(int i, int max_n) {
    const FamilySpec a = FamilySpec::a(i);
    const FamilySpec b = FamilySpec::b(i);
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::uint64_t> ca(static_cast<std::size_t>(n) + 1, 0), cb(ca);
        for_each_family_member(n, a, std::nullopt, [&](std::span<const Part> p) { ++ca[p.size()]; });
        for_each_family_member(n, b, std::nullopt, [&](std::span<const Part> p) { ++cb[p.size()]; });
        for (int m = 0; m <= n; ++m)
            if (ca[static_cast<std::size_t>(m)] != cb[static_cast<std::size_t>(m)])
                return RefinedWitness{m, n, Count(ca[static_cast<std::size_t>(m)]),
                                      Count(cb[static_cast<std::size_t>(m)])};
    }
    return std::nullopt;
}

}  // namespace rrpart
