#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rrpart/count.hpp"

namespace rrpart {

using Part = int;

/// A non-increasing sequence of positive parts. The empty partition is the
/// unique partition of 0. Construction validates the canonical form, so every
/// Partition value in the program is well formed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}
    explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
        Part prev = 0;
        for (std::size_t t = 0; t < parts_.size(); ++t) {
            if (parts_[t] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (t > 0 && parts_[t] > prev)
                throw std::invalid_argument("partition parts must be non-increasing");
            prev = parts_[t];
            weight_ += parts_[t];
        }
    }
    explicit Partition(std::span<const Part> parts)
        : Partition(std::vector<Part>(parts.begin(), parts.end())) {}

    static Partition from_unsorted(std::vector<Part> parts) {
        std::ranges::sort(parts, std::greater<>{});
        return Partition(std::move(parts));
    }

    std::span<const Part> parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }

    Part operator[](std::size_t t) const { return parts_[t]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    // Lexicographic on the part sequence; the canonical listing order is the
    // reverse of this.
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<Part> parts_;
    int weight_ = 0;
};

inline std::string to_string(std::span<const Part> parts) {
    std::string s = "(";
    for (std::size_t t = 0; t < parts.size(); ++t) {
        if (t) s += ',';
        s += std::to_string(parts[t]);
    }
    return s + ")";
}

inline std::string to_string(const Partition& p) { return to_string(p.parts()); }

/// Even and odd subsequences of a partition, each still non-increasing.
struct ParitySplit {
    std::vector<Part> evens;
    std::vector<Part> odds;

    int r1() const noexcept { return static_cast<int>(evens.size()); }
    int r2() const noexcept { return static_cast<int>(odds.size()); }
};

inline ParitySplit parity_split(std::span<const Part> parts) {
    ParitySplit s;
    for (Part x : parts) (x % 2 == 0 ? s.evens : s.odds).push_back(x);
    return s;
}

inline ParitySplit parity_split(const Partition& p) { return parity_split(p.parts()); }

// ---------------------------------------------------------------------------
// Families

enum class FamilyKind { A, B, P };

inline std::string_view to_string(FamilyKind k) {
    switch (k) {
    case FamilyKind::A: return "A";
    case FamilyKind::B: return "B";
    case FamilyKind::P: return "P";
    }
    return "?";
}

inline FamilyKind parse_family_kind(std::string_view s) {
    if (s == "A") return FamilyKind::A;
    if (s == "B") return FamilyKind::B;
    if (s == "P") return FamilyKind::P;
    throw std::invalid_argument("unknown family kind '" + std::string(s) + "' (expected A, B or P)");
}

/// Selects one counted family.
///
///  - A(i): parts not congruent to 0, i or 5-i modulo 5.
///  - B(i, j): parts >= j, at most i-1 parts equal to j, successive parts
///    differ by at least 2.
///  - P(i, j) with j = 2k+1 (k >= 0): parts >= j, at most i-1 parts equal
///    to j, smallest even part >= 2(m+k), odd parts two apart differ by >= 4.
///  - P(i, j) with j = 2k (k >= 1): parts >= j, at most i-1 parts equal to j,
///    smallest odd part + 1 >= 2(m+k), even parts two apart differ by >= 4.
///
/// m is always the total number of parts.
struct FamilySpec {
    FamilyKind kind = FamilyKind::P;
    int i = 2;
    Part min_part = 1;

    static FamilySpec make(FamilyKind kind, int i, Part min_part = 1) {
        FamilySpec f{kind, i, min_part};
        f.validate();
        return f;
    }
    static FamilySpec a(int i) { return make(FamilyKind::A, i, 1); }
    static FamilySpec b(int i, Part j = 1) { return make(FamilyKind::B, i, j); }
    static FamilySpec p(int i, Part j = 1) { return make(FamilyKind::P, i, j); }

    void validate() const {
        if (i != 1 && i != 2) throw std::invalid_argument("family index i must be 1 or 2");
        if (min_part < 1) throw std::invalid_argument("min_part must be positive");
        if (kind == FamilyKind::A && min_part != 1)
            throw std::invalid_argument("family A is only defined with min_part 1");
    }

    FamilySpec with_i(int other_i) const { return make(kind, other_i, min_part); }

    /// k in min_part = 2k+1 or min_part = 2k.
    int shift_k() const noexcept { return min_part / 2; }
    bool odd_min_part() const noexcept { return min_part % 2 == 1; }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string to_string(const FamilySpec& f) {
    return std::string(to_string(f.kind)) + "(i=" + std::to_string(f.i) +
           ",min_part=" + std::to_string(f.min_part) + ")";
}

/// Returns the first clause of the family definition that `parts` violates,
/// or nullopt if `parts` is a member. `parts` must be in canonical form.
inline std::optional<std::string_view> membership_failure(std::span<const Part> parts,
                                                          const FamilySpec& f) {
    const long long m = static_cast<long long>(parts.size());

    if (f.kind == FamilyKind::A) {
        for (Part x : parts) {
            const int r = x % 5;
            if (r == 0 || r == f.i || r == 5 - f.i) return "part in an excluded residue class mod 5";
        }
        return std::nullopt;
    }

    if (!parts.empty() && parts.back() < f.min_part) return "part below the minimum part";
    if (std::ranges::count(parts, f.min_part) > f.i - 1) return "too many parts equal to the minimum part";

    if (f.kind == FamilyKind::B) {
        for (std::size_t t = 1; t < parts.size(); ++t)
            if (parts[t - 1] - parts[t] < 2) return "equal or consecutive parts";
        return std::nullopt;
    }

    // Family P. The "bound" parity carries the smallest-part-vs-length clause,
    // the other parity carries the two-apart gap clause.
    const long long k = f.shift_k();
    const int bound_parity = f.odd_min_part() ? 0 : 1;
    const int bound_offset = f.odd_min_part() ? 0 : 1;
    Part gap1 = 0, gap2 = 0;  // last two gap-parity parts seen, gap1 most recent
    Part bound_min = 0;
    for (Part x : parts) {
        if (x % 2 == bound_parity) {
            bound_min = x;
        } else {
            if (gap2 != 0 && gap2 - x < 4)
                return f.odd_min_part() ? "odd parts two apart differ by less than 4"
                                        : "even parts two apart differ by less than 4";
            gap2 = gap1;
            gap1 = x;
        }
    }
    if (bound_min != 0 && bound_min + bound_offset < 2 * (m + k))
        return f.odd_min_part() ? "smallest even part below 2(m+k)"
                                : "smallest odd part plus one below 2(m+k)";
    return std::nullopt;
}

inline bool is_member(std::span<const Part> parts, const FamilySpec& f) {
    return !membership_failure(parts, f).has_value();
}

inline bool is_member(const Partition& p, const FamilySpec& f) { return is_member(p.parts(), f); }

// ---------------------------------------------------------------------------
// Enumeration. Visitors receive a span over an internal buffer that is only
// valid for the duration of the call. Order is lexicographically decreasing.

struct PartitionConstraints {
    std::optional<int> fixed_length;
    Part min_part = 1;
};

namespace detail {

template <typename Visitor>
void partitions_rec(std::vector<Part>& buf, int rem, Part cap, const PartitionConstraints& c,
                    Visitor& visit) {
    const int depth = static_cast<int>(buf.size());
    if (rem == 0) {
        if (!c.fixed_length || depth == *c.fixed_length) visit(std::span<const Part>(buf));
        return;
    }
    if (c.fixed_length && depth >= *c.fixed_length) return;
    for (Part x = std::min(cap, rem); x >= c.min_part; --x) {
        const int rest = rem - x;
        if (c.fixed_length) {
            const long long r = *c.fixed_length - depth - 1;
            if (rest > r * x) break;  // only gets worse as x shrinks
            if (rest < r * c.min_part) continue;
        } else if (rest != 0 && rest < c.min_part) {
            continue;
        }
        buf.push_back(x);
        partitions_rec(buf, rest, x, c, visit);
        buf.pop_back();
    }
}

// Can `rest` be written as exactly r (or any number of, if r is empty) parts
// in [lo, cap] with successive differences >= 2? The achievable sums for a
// fixed r form the interval [r*lo + r(r-1), r*cap - r(r-1)].
inline bool gap_two_feasible(long long rest, long long cap, long long lo, std::optional<long long> r) {
    auto fits = [&](long long cnt) {
        if (cnt == 0) return rest == 0;
        if (cap - 2 * (cnt - 1) < lo) return false;
        return cnt * lo + cnt * (cnt - 1) <= rest && rest <= cnt * cap - cnt * (cnt - 1);
    };
    if (r) return *r >= 0 && fits(*r);
    if (rest == 0) return true;
    for (long long cnt = 1; cnt * lo + cnt * (cnt - 1) <= rest; ++cnt)
        if (fits(cnt)) return true;
    return false;
}

// Pruned depth-first walk over the members of one family. Every emitted
// partition is re-checked with membership_failure, so pruning only needs to
// be sound (never discard a member), not complete.
class FamilyWalker {
public:
    FamilyWalker(const FamilySpec& f, std::optional<int> len) : f_(f), len_(len) {
        f_.validate();
        if (f_.kind == FamilyKind::A) {
            lo_ = (f_.i == 1) ? 2 : 1;
        } else if (f_.kind == FamilyKind::B) {
            lo_ = (f_.i == 1) ? f_.min_part + 1 : f_.min_part;
        } else {
            lo_ = f_.min_part;
            k_ = f_.shift_k();
            bound_parity_ = f_.odd_min_part() ? 0 : 1;
            bound_offset_ = f_.odd_min_part() ? 0 : 1;
        }
    }

    template <typename Visitor>
    void run(int n, Visitor& visit) {
        buf_.clear();
        if (n < 0) return;
        rec(n, n, State{}, visit);
    }

private:
    struct State {
        int min_count = 0;
        Part gap1 = 0, gap2 = 0;
        Part bound_min = 0;
    };

    template <typename Visitor>
    void rec(int rem, Part cap, State st, Visitor& visit) {
        const int depth = static_cast<int>(buf_.size());
        if (rem == 0) {
            if ((!len_ || depth == *len_) && !membership_failure(buf_, f_))
                visit(std::span<const Part>(buf_));
            return;
        }
        if (len_ && depth >= *len_) return;

        Part hi = std::min(cap, rem);
        if (f_.kind == FamilyKind::B && depth > 0) hi = std::min(hi, buf_.back() - 2);
        const std::optional<long long> r_after =
            len_ ? std::optional<long long>(*len_ - depth - 1) : std::nullopt;

        for (Part x = hi; x >= lo_; --x) {
            const int rest = rem - x;
            State next = st;
            if (!admissible(x, rest, depth, r_after, next)) continue;
            buf_.push_back(x);
            rec(rest, x, next, visit);
            buf_.pop_back();
        }
    }

    bool admissible(Part x, int rest, int depth, std::optional<long long> r_after, State& st) const {
        switch (f_.kind) {
        case FamilyKind::A: {
            const int r = x % 5;
            if (r == 0 || r == f_.i || r == 5 - f_.i) return false;
            if (r_after) return *r_after * lo_ <= rest && rest <= *r_after * x;
            return rest == 0 || rest >= lo_;
        }
        case FamilyKind::B:
            // lo_ already excludes the minimum part when i = 1, and the gap
            // rule forbids a second copy when i = 2.
            return gap_two_feasible(rest, x - 2, lo_, r_after);
        case FamilyKind::P:
            break;
        }

        if (x == f_.min_part && ++st.min_count > f_.i - 1) return false;
        if (r_after) {
            if (rest < *r_after * f_.min_part || rest > *r_after * x) return false;
        } else if (rest != 0 && rest < f_.min_part) {
            return false;
        }

        if (x % 2 == bound_parity_) {
            st.bound_min = x;
        } else {
            if (st.gap2 != 0 && st.gap2 - x < 4) return false;
            st.gap2 = st.gap1;
            st.gap1 = x;
        }
        if (st.bound_min != 0) {
            // Further parts are <= x, so at least ceil(rest / x) more follow.
            const long long m_lb = r_after ? *len_ : depth + 1 + (rest + x - 1) / x;
            if (st.bound_min + bound_offset_ < 2 * (m_lb + k_)) return false;
        }
        return true;
    }

    FamilySpec f_;
    std::optional<int> len_;
    Part lo_ = 1;
    long long k_ = 0;
    int bound_parity_ = 0;
    int bound_offset_ = 0;
    std::vector<Part> buf_;
};

}  // namespace detail

/// Visits every partition of n satisfying the constraints exactly once.
template <typename Visitor>
void for_each_partition(int n, const PartitionConstraints& c, Visitor&& visit) {
    if (n < 0 || c.min_part < 1) return;
    std::vector<Part> buf;
    detail::partitions_rec(buf, n, n, c, visit);
}

inline std::vector<Partition> enumerate_partitions(int n, const PartitionConstraints& c = {}) {
    std::vector<Partition> out;
    for_each_partition(n, c, [&](std::span<const Part> p) { out.emplace_back(p); });
    return out;
}

/// Visits every member of f with weight n (and length fixed_length, if
/// given) exactly once.
template <typename Visitor>
void for_each_family_member(int n, const FamilySpec& f, std::optional<int> fixed_length, Visitor&& visit) {
    detail::FamilyWalker walker(f, fixed_length);
    walker.run(n, visit);
}

inline std::vector<Partition> enumerate_family(int n, const FamilySpec& f,
                                               std::optional<int> fixed_length = std::nullopt) {
    std::vector<Partition> out;
    for_each_family_member(n, f, fixed_length, [&](std::span<const Part> p) { out.emplace_back(p); });
    return out;
}

inline Count count_family(int n, const FamilySpec& f, std::optional<int> fixed_length = std::nullopt) {
    std::uint64_t c = 0;
    for_each_family_member(n, f, fixed_length, [&](std::span<const Part>) { ++c; });
    return Count(c);
}

/// counts[n][m] = number of members of f with weight n and length m, for
/// 0 <= m <= n <= max_n. Filled from one enumeration pass per n.
using RefinedCounts = std::vector<std::vector<Count>>;

inline RefinedCounts length_refined_counts(const FamilySpec& f, int max_n) {
    RefinedCounts grid;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
        for_each_family_member(n, f, std::nullopt, [&](std::span<const Part> p) { ++row[p.size()]; });
        grid.emplace_back(row.begin(), row.end());
    }
    return grid;
}

/// Cell lookup that treats anything outside 0 <= m <= n <= max_n as zero.
/// Only valid for n within the grid; m > n is always zero.
inline Count refined_at(const RefinedCounts& g, long long m, long long n) {
    if (m < 0 || n < 0 || m > n) return 0;
    if (n >= static_cast<long long>(g.size())) throw std::out_of_range("refined count outside computed range");
    return g[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

}  // namespace rrpart
