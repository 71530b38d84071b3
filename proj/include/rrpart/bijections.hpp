#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rrpart/partition.hpp"

namespace rrpart {

/// A partition outside the domain of a map. The message names the failing clause.
class BijectionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

inline void require(bool cond, std::string_view map, std::string_view clause) {
    if (!cond) throw BijectionError(std::string(map) + ": " + std::string(clause));
}

inline void require_member(const Partition& p, const FamilySpec& f, std::string_view map) {
    if (auto why = membership_failure(p.parts(), f))
        throw BijectionError(std::string(map) + ": " + to_string(p) + " not in " + to_string(f) + ": " +
                             std::string(*why));
}

// A map whose image escapes its codomain means the proof step is wrong, not
// the input.
inline void ensure_member(const Partition& p, const FamilySpec& f, std::string_view map) {
    if (auto why = membership_failure(p.parts(), f))
        throw std::logic_error(std::string(map) + ": image " + to_string(p) + " not in " + to_string(f) + ": " +
                               std::string(*why));
}

inline std::vector<Part> add_to_all(std::span<const Part> parts, Part delta) {
    std::vector<Part> out(parts.begin(), parts.end());
    for (Part& x : out) x += delta;
    return out;
}

inline std::optional<Part> smallest_even(const Partition& p) {
    for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it)
        if (*it % 2 == 0) return *it;
    return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// P side, min_part 1

/// Domain: P(i=2) members with exactly one part equal to 1 (the cells counted
/// by p_2(m,n) - p_1(m,n)). Deletes the 1 and subtracts 2 from every other
/// part, landing in P(i=2) with m-1 parts and weight n-2m+1.
inline Partition p_drop_one(const Partition& p) {
    constexpr std::string_view name = "p_drop_one";
    detail::require_member(p, FamilySpec::p(2), name);
    detail::require(std::ranges::count(p.parts(), 1) == 1, name, "needs exactly one part equal to 1");
    Partition out(detail::add_to_all(p.parts().first(p.parts().size() - 1), -2));
    detail::ensure_member(out, FamilySpec::p(2), name);
    return out;
}

inline Partition p_drop_one_inverse(const Partition& q) {
    detail::require_member(q, FamilySpec::p(2), "p_drop_one_inverse");
    auto parts = detail::add_to_all(q.parts(), 2);
    parts.push_back(1);
    Partition out(std::move(parts));
    detail::ensure_member(out, FamilySpec::p(2), "p_drop_one_inverse");
    return out;
}

struct CaseImage {
    int case_no = 0;
    Partition image;
};

/// Which branch of the P(i=1) split a member takes:
///  1: smallest even part equals 2m;
///  2: otherwise, and the two smallest odd parts are both 3;
///  3: otherwise (at most one part equal to 3).
/// Members without even parts fall through to 2 or 3.
inline int p_case_of(const Partition& p) {
    constexpr std::string_view name = "p_case_map";
    detail::require_member(p, FamilySpec::p(1), name);
    detail::require(!p.empty(), name, "the empty partition has no branch");
    const auto even = detail::smallest_even(p);
    if (even && *even == 2 * p.length()) return 1;
    return std::ranges::count(p.parts(), 3) >= 2 ? 2 : 3;
}

/// Realizes p_1(m,n) = p_1(m-1, n-2m) + p_2(m, n-2m).
inline CaseImage p_case_map(const Partition& p) {
    constexpr std::string_view name = "p_case_map";
    const int c = p_case_of(p);
    const int m = p.length();
    std::vector<Part> parts(p.begin(), p.end());

    switch (c) {
    case 1: {
        // Delete one copy of the smallest even part 2m.
        auto it = std::ranges::find(std::ranges::reverse_view(parts), 2 * m);
        parts.erase(std::next(it).base());
        Partition out(std::move(parts));
        detail::ensure_member(out, FamilySpec::p(1), name);
        const auto e = detail::smallest_even(out);
        if (e && *e <= 2 * (m - 1)) throw std::logic_error("p_case_map: case 1 image has a small even part");
        return {1, std::move(out)};
    }
    case 2: {
        // Both 3s are the last two parts: nothing below 3 is allowed, and 2
        // would be an even part < 2m+2.
        parts.resize(parts.size() - 2);
        for (Part& x : parts) x -= 4;
        parts.push_back(2 * m - 2);
        Partition out = Partition::from_unsorted(std::move(parts));
        detail::ensure_member(out, FamilySpec::p(1), name);
        if (detail::smallest_even(out) != std::optional<Part>(2 * (m - 1)))
            throw std::logic_error("p_case_map: case 2 image has the wrong smallest even part");
        return {2, std::move(out)};
    }
    default: {
        Partition out(detail::add_to_all(parts, -2));
        detail::ensure_member(out, FamilySpec::p(2), name);
        return {3, std::move(out)};
    }
    }
}

/// Inverse of one branch of p_case_map. target_m is the length of the
/// reconstructed partition; it must agree with q's length (m-1 for branches
/// 1 and 2, m for branch 3).
inline Partition p_case_inverse(int case_no, const Partition& q, int target_m) {
    constexpr std::string_view name = "p_case_inverse";
    const int m = target_m;
    std::vector<Part> parts(q.begin(), q.end());
    switch (case_no) {
    case 1: {
        detail::require(q.length() == m - 1, name, "case 1 image must have target_m - 1 parts");
        detail::require_member(q, FamilySpec::p(1), name);
        const auto e = detail::smallest_even(q);
        detail::require(!e || *e > 2 * (m - 1), name, "case 1 image needs smallest even part > 2(m-1) or none");
        parts.push_back(2 * m);
        break;
    }
    case 2: {
        detail::require(m >= 2 && q.length() == m - 1, name, "case 2 image must have target_m - 1 >= 1 parts");
        detail::require_member(q, FamilySpec::p(1), name);
        detail::require(detail::smallest_even(q) == std::optional<Part>(2 * (m - 1)), name,
                        "case 2 image needs smallest even part equal to 2(m-1)");
        auto it = std::ranges::find(std::ranges::reverse_view(parts), 2 * (m - 1));
        parts.erase(std::next(it).base());
        for (Part& x : parts) x += 4;
        parts.push_back(3);
        parts.push_back(3);
        break;
    }
    case 3:
        detail::require(q.length() == m, name, "case 3 image must have target_m parts");
        detail::require_member(q, FamilySpec::p(2), name);
        for (Part& x : parts) x += 2;
        break;
    default:
        throw BijectionError("p_case_inverse: case must be 1, 2 or 3");
    }
    Partition out = Partition::from_unsorted(std::move(parts));
    detail::ensure_member(out, FamilySpec::p(1), name);
    if (p_case_of(out) != case_no) throw std::logic_error("p_case_inverse: result lands in another case");
    return out;
}

// ---------------------------------------------------------------------------
// B side, min_part 1

/// Domain: B(i=2) members containing a part 1. Deletes the 1 and subtracts 2
/// from the rest, landing in B(i=2) with m-1 parts and weight n-2m+1.
inline Partition b_drop_one(const Partition& p) {
    constexpr std::string_view name = "b_drop_one";
    detail::require_member(p, FamilySpec::b(2), name);
    detail::require(!p.empty() && p.parts().back() == 1, name, "needs exactly one part equal to 1");
    Partition out(detail::add_to_all(p.parts().first(p.parts().size() - 1), -2));
    detail::ensure_member(out, FamilySpec::b(2), name);
    return out;
}

inline Partition b_drop_one_inverse(const Partition& q) {
    detail::require_member(q, FamilySpec::b(2), "b_drop_one_inverse");
    auto parts = detail::add_to_all(q.parts(), 2);
    parts.push_back(1);
    Partition out(std::move(parts));
    detail::ensure_member(out, FamilySpec::b(2), "b_drop_one_inverse");
    return out;
}

/// Realizes b_1(m,n) = b_1(m-1, n-2m) + b_2(m, n-2m): branch 1 when the
/// smallest part is 2 (delete it, subtract 2 from the rest), branch 2 when it
/// is >= 3 (subtract 2 from every part).
inline CaseImage b_case_map(const Partition& p) {
    constexpr std::string_view name = "b_case_map";
    detail::require_member(p, FamilySpec::b(1), name);
    detail::require(!p.empty(), name, "the empty partition has no branch");
    if (p.parts().back() == 2) {
        Partition out(detail::add_to_all(p.parts().first(p.parts().size() - 1), -2));
        detail::ensure_member(out, FamilySpec::b(1), name);
        return {1, std::move(out)};
    }
    Partition out(detail::add_to_all(p.parts(), -2));
    detail::ensure_member(out, FamilySpec::b(2), name);
    return {2, std::move(out)};
}

inline Partition b_case_inverse(int case_no, const Partition& q, int target_m) {
    constexpr std::string_view name = "b_case_inverse";
    std::vector<Part> parts;
    if (case_no == 1) {
        detail::require(q.length() == target_m - 1, name, "case 1 image must have target_m - 1 parts");
        detail::require_member(q, FamilySpec::b(1), name);
        parts = detail::add_to_all(q.parts(), 2);
        parts.push_back(2);
    } else if (case_no == 2) {
        detail::require(q.length() == target_m && target_m >= 1, name, "case 2 image must have target_m >= 1 parts");
        detail::require_member(q, FamilySpec::b(2), name);
        parts = detail::add_to_all(q.parts(), 2);
    } else {
        throw BijectionError("b_case_inverse: case must be 1 or 2");
    }
    Partition out(std::move(parts));
    detail::ensure_member(out, FamilySpec::b(1), name);
    return out;
}

// ---------------------------------------------------------------------------
// Shifted families

/// Subtracts 2k from every part: kind(i, 2k+1) -> kind(i, 1), weight drops by
/// 2mk, parities unchanged.
inline Partition shift_sub_2k(const Partition& p, int k, FamilyKind kind = FamilyKind::P, int i = 2) {
    constexpr std::string_view name = "shift_sub_2k";
    detail::require(k >= 1, name, "k must be >= 1");
    detail::require(kind != FamilyKind::A, name, "family A has no shifted variant");
    detail::require_member(p, FamilySpec::make(kind, i, 2 * k + 1), name);
    Partition out(detail::add_to_all(p.parts(), -2 * k));
    detail::ensure_member(out, FamilySpec::make(kind, i, 1), name);
    return out;
}

inline Partition shift_sub_2k_inverse(const Partition& q, int k, FamilyKind kind = FamilyKind::P, int i = 2) {
    constexpr std::string_view name = "shift_sub_2k_inverse";
    detail::require(k >= 1, name, "k must be >= 1");
    detail::require(kind != FamilyKind::A, name, "family A has no shifted variant");
    detail::require_member(q, FamilySpec::make(kind, i, 1), name);
    Partition out(detail::add_to_all(q.parts(), 2 * k));
    detail::ensure_member(out, FamilySpec::make(kind, i, 2 * k + 1), name);
    return out;
}

/// Adds 1 to every part: kind(i, 2k) -> kind(i, 2k+1), weight grows by m and
/// every part changes parity.
inline Partition shift_add_one(const Partition& p, int k, FamilyKind kind = FamilyKind::P, int i = 2) {
    constexpr std::string_view name = "shift_add_one";
    detail::require(k >= 1, name, "k must be >= 1");
    detail::require(kind != FamilyKind::A, name, "family A has no shifted variant");
    detail::require_member(p, FamilySpec::make(kind, i, 2 * k), name);
    Partition out(detail::add_to_all(p.parts(), 1));
    detail::ensure_member(out, FamilySpec::make(kind, i, 2 * k + 1), name);
    return out;
}

inline Partition shift_add_one_inverse(const Partition& q, int k, FamilyKind kind = FamilyKind::P, int i = 2) {
    constexpr std::string_view name = "shift_add_one_inverse";
    detail::require(k >= 1, name, "k must be >= 1");
    detail::require(kind != FamilyKind::A, name, "family A has no shifted variant");
    detail::require_member(q, FamilySpec::make(kind, i, 2 * k + 1), name);
    Partition out(detail::add_to_all(q.parts(), -1));
    detail::ensure_member(out, FamilySpec::make(kind, i, 2 * k), name);
    return out;
}

// ---------------------------------------------------------------------------
// Named maps, tracing and exhaustive audits

enum class BijectionName {
    PDropOne,
    PCaseEvenEq,
    PCaseTwoThrees,
    PCaseGeneric,
    BDropOne,
    BCaseMin2,
    BCaseMin3,
    ShiftSub2k,
    ShiftAddOne,
};

enum class Direction { Forward, Inverse };

struct BijectionId {
    BijectionName name = BijectionName::PDropOne;
    Direction direction = Direction::Forward;
};

inline constexpr std::array<std::pair<BijectionName, std::string_view>, 9> kBijectionNames{{
    {BijectionName::PDropOne, "P-drop-one"},
    {BijectionName::PCaseEvenEq, "P-case-even-eq"},
    {BijectionName::PCaseTwoThrees, "P-case-two-threes"},
    {BijectionName::PCaseGeneric, "P-case-generic"},
    {BijectionName::BDropOne, "B-drop-one"},
    {BijectionName::BCaseMin2, "B-case-min2"},
    {BijectionName::BCaseMin3, "B-case-min3"},
    {BijectionName::ShiftSub2k, "shift-sub-2k"},
    {BijectionName::ShiftAddOne, "shift-add-one"},
}};

inline std::string_view to_string(BijectionName n) {
    for (const auto& [id, s] : kBijectionNames)
        if (id == n) return s;
    return "?";
}

inline BijectionName parse_bijection_name(std::string_view s) {
    for (const auto& [id, name] : kBijectionNames)
        if (name == s) return id;
    throw std::invalid_argument("unknown bijection '" + std::string(s) + "'");
}

/// Parameters for the shift maps; ignored by the min_part-1 maps.
struct ShiftContext {
    int k = 1;
    FamilyKind kind = FamilyKind::P;
    int i = 2;
};

/// Everything needed to run one map both ways and to enumerate both sides.
struct Route {
    std::string name;
    FamilySpec domain_family;
    std::function<bool(const Partition&)> in_domain;
    FamilySpec codomain_family;
    std::function<bool(const Partition&)> in_codomain;
    std::function<Partition(const Partition&)> forward;
    std::function<Partition(const Partition&)> inverse;
    std::optional<int> case_no;
    /// (m, n) of the domain cell -> (m', n') of the codomain cell.
    std::function<std::pair<int, int>(int, int)> target;
    int min_domain_length = 1;
};

inline Route make_route(BijectionName name, const ShiftContext& ctx = {}) {
    auto any = [](const Partition&) { return true; };
    auto nonempty = [](const Partition& p) { return !p.empty(); };
    const std::string label(to_string(name));
    switch (name) {
    case BijectionName::PDropOne:
        return {label, FamilySpec::p(2), [](const Partition& p) { return std::ranges::count(p.parts(), 1) == 1; },
                FamilySpec::p(2), any, p_drop_one, p_drop_one_inverse, std::nullopt,
                [](int m, int n) { return std::pair{m - 1, n - 2 * m + 1}; }, 1};
    case BijectionName::PCaseEvenEq:
    case BijectionName::PCaseTwoThrees:
    case BijectionName::PCaseGeneric: {
        const int c = name == BijectionName::PCaseEvenEq ? 1 : name == BijectionName::PCaseTwoThrees ? 2 : 3;
        std::function<bool(const Partition&)> codomain;
        if (c == 1)
            codomain = [](const Partition& q) {
                const auto e = detail::smallest_even(q);
                return !e || *e > 2 * q.length();
            };
        else if (c == 2)
            codomain = [](const Partition& q) { return detail::smallest_even(q) == std::optional<Part>(2 * q.length()); };
        else
            codomain = nonempty;
        return {label,
                FamilySpec::p(1),
                [c](const Partition& p) { return !p.empty() && p_case_of(p) == c; },
                c == 3 ? FamilySpec::p(2) : FamilySpec::p(1),
                codomain,
                [](const Partition& p) { return p_case_map(p).image; },
                [c](const Partition& q) { return p_case_inverse(c, q, c == 3 ? q.length() : q.length() + 1); },
                c,
                [c](int m, int n) { return std::pair{c == 3 ? m : m - 1, n - 2 * m}; },
                1};
    }
    case BijectionName::BDropOne:
        return {label, FamilySpec::b(2), [](const Partition& p) { return !p.empty() && p.parts().back() == 1; },
                FamilySpec::b(2), any, b_drop_one, b_drop_one_inverse, std::nullopt,
                [](int m, int n) { return std::pair{m - 1, n - 2 * m + 1}; }, 1};
    case BijectionName::BCaseMin2:
        return {label, FamilySpec::b(1), [](const Partition& p) { return !p.empty() && p.parts().back() == 2; },
                FamilySpec::b(1), any, [](const Partition& p) { return b_case_map(p).image; },
                [](const Partition& q) { return b_case_inverse(1, q, q.length() + 1); }, 1,
                [](int m, int n) { return std::pair{m - 1, n - 2 * m}; }, 1};
    case BijectionName::BCaseMin3:
        return {label, FamilySpec::b(1), [](const Partition& p) { return !p.empty() && p.parts().back() >= 3; },
                FamilySpec::b(2), nonempty, [](const Partition& p) { return b_case_map(p).image; },
                [](const Partition& q) { return b_case_inverse(2, q, q.length()); }, 2,
                [](int m, int n) { return std::pair{m, n - 2 * m}; }, 1};
    case BijectionName::ShiftSub2k: {
        const ShiftContext c = ctx;
        return {label + "(k=" + std::to_string(c.k) + ")",
                FamilySpec::make(c.kind, c.i, 2 * c.k + 1),
                any,
                FamilySpec::make(c.kind, c.i, 1),
                any,
                [c](const Partition& p) { return shift_sub_2k(p, c.k, c.kind, c.i); },
                [c](const Partition& q) { return shift_sub_2k_inverse(q, c.k, c.kind, c.i); },
                std::nullopt,
                [c](int m, int n) { return std::pair{m, n - 2 * m * c.k}; },
                0};
    }
    case BijectionName::ShiftAddOne: {
        const ShiftContext c = ctx;
        return {label + "(k=" + std::to_string(c.k) + ")",
                FamilySpec::make(c.kind, c.i, 2 * c.k),
                any,
                FamilySpec::make(c.kind, c.i, 2 * c.k + 1),
                any,
                [c](const Partition& p) { return shift_add_one(p, c.k, c.kind, c.i); },
                [c](const Partition& q) { return shift_add_one_inverse(q, c.k, c.kind, c.i); },
                std::nullopt,
                [](int m, int n) { return std::pair{m, n + m}; },
                0};
    }
    }
    throw std::invalid_argument("unknown bijection");
}

/// Members of the route's domain (or codomain) with weight n, canonical order.
inline std::vector<Partition> route_domain(const Route& r, int n, std::optional<int> length = std::nullopt) {
    std::vector<Partition> out;
    for (auto& p : enumerate_family(n, r.domain_family, length))
        if (p.length() >= r.min_domain_length && r.in_domain(p)) out.push_back(std::move(p));
    return out;
}

inline std::vector<Partition> route_codomain(const Route& r, int n, std::optional<int> length = std::nullopt) {
    std::vector<Partition> out;
    for (auto& p : enumerate_family(n, r.codomain_family, length))
        if (r.in_codomain(p)) out.push_back(std::move(p));
    return out;
}

struct TraceRow {
    std::string bijection;
    Direction direction = Direction::Forward;
    Partition input;
    std::optional<int> case_no;
    std::optional<Partition> output;
    bool domain_ok = false;
    bool codomain_ok = false;
    bool round_trip_ok = false;
    std::string error;

    bool ok() const noexcept { return domain_ok && codomain_ok && round_trip_ok; }
};

/// Applies the map (or its inverse) to every domain (codomain) member of
/// weight n and records the result and the round trip.
inline std::vector<TraceRow> trace_bijection(BijectionId id, int n, const ShiftContext& ctx = {}) {
    const Route r = make_route(id.name, ctx);
    const bool fwd = id.direction == Direction::Forward;
    std::vector<TraceRow> rows;
    for (const Partition& x : fwd ? route_domain(r, n) : route_codomain(r, n)) {
        TraceRow row;
        row.bijection = r.name;
        row.direction = id.direction;
        row.input = x;
        row.case_no = r.case_no;
        row.domain_ok = true;
        try {
            Partition y = fwd ? r.forward(x) : r.inverse(x);
            row.codomain_ok = fwd ? r.in_codomain(y) && is_member(y, r.codomain_family)
                                  : r.in_domain(y) && is_member(y, r.domain_family);
            row.round_trip_ok = (fwd ? r.inverse(y) : r.forward(y)) == x;
            row.output = std::move(y);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

struct BijectionAudit {
    std::string name;
    std::size_t domain_checked = 0;
    std::size_t codomain_checked = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Exhaustive check over all domain cells (m, n) with n <= max_n:
///  - forward images land in the codomain and invert back (round trip);
///  - every codomain member of the target cell maps back and forth;
///  - the image set of domain cell (m, n) is exactly the codomain cell
///    target(m, n), which also gives equal cardinalities.
inline BijectionAudit audit_route(const Route& r, int max_n) {
    BijectionAudit a{r.name, 0, 0, {}};
    auto fail = [&](std::string msg) { a.failures.push_back(r.name + ": " + std::move(msg)); };

    std::map<int, std::vector<Partition>> codomain_cache;
    auto codomain_cell = [&](int m, int n) {
        auto it = codomain_cache.find(n);
        if (it == codomain_cache.end()) it = codomain_cache.emplace(n, route_codomain(r, n)).first;
        std::vector<Partition> cell;
        for (const auto& q : it->second)
            if (q.length() == m) cell.push_back(q);
        return cell;
    };

    for (int n = 0; n <= max_n; ++n) {
        const std::vector<Partition> domain = route_domain(r, n);
        for (int m = r.min_domain_length; m <= n; ++m) {
            std::vector<Partition> images;
            for (const auto& x : domain) {
                if (x.length() != m) continue;
                ++a.domain_checked;
                try {
                    Partition y = r.forward(x);
                    if (!r.in_codomain(y) || !is_member(y, r.codomain_family))
                        fail(to_string(x) + " -> " + to_string(y) + " outside codomain");
                    if (r.inverse(y) != x) fail("round trip fails at " + to_string(x));
                    images.push_back(std::move(y));
                } catch (const std::exception& e) {
                    fail(to_string(x) + ": " + e.what());
                }
            }
            const auto [tm, tn] = r.target(m, n);
            std::vector<Partition> cell = (tm < 0 || tn < 0) ? std::vector<Partition>{} : codomain_cell(tm, tn);
            for (const auto& y : cell) {
                ++a.codomain_checked;
                try {
                    Partition x = r.inverse(y);
                    if (x.length() != m || x.weight() != n || !r.in_domain(x) || !is_member(x, r.domain_family))
                        fail("inverse of " + to_string(y) + " leaves the domain cell");
                    else if (r.forward(x) != y)
                        fail("reverse round trip fails at " + to_string(y));
                } catch (const std::exception& e) {
                    fail(to_string(y) + ": " + e.what());
                }
            }
            std::ranges::sort(images);
            std::ranges::sort(cell);
            if (images != cell)
                fail("cell (m=" + std::to_string(m) + ",n=" + std::to_string(n) + ") has " +
                     std::to_string(images.size()) + " images but target (m=" + std::to_string(tm) +
                     ",n=" + std::to_string(tn) + ") has " + std::to_string(cell.size()) + " members");
        }
    }
    return a;
}

/// The branches of a split map must partition its domain: every member with
/// m >= 1 and weight <= max_n is claimed by exactly one branch.
inline BijectionAudit audit_case_partition(std::span<const BijectionName> branches, const FamilySpec& domain,
                                           int max_n) {
    BijectionAudit a{"case partition of " + to_string(domain), 0, 0, {}};
    std::vector<Route> routes;
    for (BijectionName b : branches) routes.push_back(make_route(b));
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& p : enumerate_family(n, domain)) {
            ++a.domain_checked;
            int claims = 0;
            for (const auto& r : routes) claims += r.in_domain(p) ? 1 : 0;
            if (claims != 1)
                a.failures.push_back(to_string(p) + " claimed by " + std::to_string(claims) + " branches");
        }
    }
    return a;
}

}  // namespace rrpart
