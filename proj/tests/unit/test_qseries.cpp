#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "rrpart/qseries.hpp"

using namespace rrpart;

namespace {

TruncatedSeries from_ints(std::size_t degree, std::initializer_list<long long> cs) {
    std::vector<Count> v;
    for (long long c : cs) v.emplace_back(c);
    return TruncatedSeries(degree, std::move(v));
}

}  // namespace

TEST(TruncatedSeries, Identities) {
    const auto a = from_ints(5, {3, -1, 4, 1, -5, 9});
    EXPECT_EQ(series_mul(TruncatedSeries::one(5), a), a);
    EXPECT_EQ(series_mul(a, TruncatedSeries::one(5)), a);
    EXPECT_EQ(series_mul(TruncatedSeries::zero(5), a), TruncatedSeries::zero(5));
    EXPECT_EQ(a.degree(), 5u);
}

TEST(TruncatedSeries, SmallProducts) {
    EXPECT_EQ(series_mul(from_ints(4, {1, 1}), from_ints(4, {1, -1})), from_ints(4, {1, 0, -1}));
    EXPECT_EQ(TruncatedSeries::geometric(2, 6), from_ints(6, {1, 0, 1, 0, 1, 0, 1}));
    // long division: (1 - q^2) * geometric(2) = 1
    EXPECT_EQ(series_mul(from_ints(6, {1, 0, -1}), TruncatedSeries::geometric(2, 6)), TruncatedSeries::one(6));
}

TEST(TruncatedSeries, DegreeMismatchThrows) {
    EXPECT_THROW(series_mul(TruncatedSeries::one(3), TruncatedSeries::one(4)), std::invalid_argument);
    EXPECT_THROW(series_equal_upto(TruncatedSeries::one(3), TruncatedSeries::one(4)), std::invalid_argument);
    EXPECT_THROW(TruncatedSeries::geometric(0, 3), std::invalid_argument);
}

TEST(TruncatedSeries, CommutativeAndAssociative) {
    const auto a = from_ints(8, {1, 2, 0, -3, 5});
    const auto b = from_ints(8, {0, 1, 1, 1, 0, 0, 7});
    const auto c = TruncatedSeries::geometric(3, 8);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
}

TEST(RestrictedPartsProduct, RogersRamanujanCoefficients) {
    const auto a2 = rogers_ramanujan_product(2, 6);
    EXPECT_EQ(a2[6], 3);
    EXPECT_EQ(a2[0], 1);
    const auto a1 = rogers_ramanujan_product(1, 6);
    EXPECT_EQ(a1[6], 2);
    EXPECT_EQ(a1[0], 1);
    EXPECT_THROW(rogers_ramanujan_product(3, 6), std::invalid_argument);
}

TEST(RestrictedPartsProduct, MatchesBruteForceEnumeration) {
    auto odd = [](Part j) { return j % 2 == 1; };
    const auto s = restricted_parts_product(odd, 30);
    for (int n = 0; n <= 30; ++n) {
        const auto expect = brute::count_if(n, [](const brute::Parts& p) {
            return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 1; });
        });
        ASSERT_EQ(s[static_cast<std::size_t>(n)], Count(expect)) << n;
    }
    for (int i : {1, 2}) {
        const auto r = rogers_ramanujan_product(i, 30);
        for (int n = 0; n <= 30; ++n)
            ASSERT_EQ(r[static_cast<std::size_t>(n)],
                      Count(brute::count_if(n, [i](const brute::Parts& p) { return brute::in_a(p, i); })));
    }
}

TEST(RestrictedPartsProduct, TruncationConsistent) {
    const auto big = rogers_ramanujan_product(2, 80);
    for (std::size_t n : {0u, 1u, 17u, 50u}) EXPECT_EQ(rogers_ramanujan_product(2, n)[n], big[n]);
}

TEST(SeriesFromCounts, Examples) {
    EXPECT_EQ(series_from_counts(FamilySpec::a(2), 10), rogers_ramanujan_product(2, 10));
    EXPECT_EQ(series_from_counts(FamilySpec::b(2), 6)[6], 3);
    EXPECT_EQ(series_from_counts(FamilySpec::p(1), 0), TruncatedSeries::one(0));
}

TEST(SeriesFromTable, MatchesCountsAndRejectsOverreach) {
    const CountTable t(SystemVariant::system1(), 30);
    EXPECT_EQ(series_from_table(t, 2, 30), series_from_counts(FamilySpec::p(2), 30));
    EXPECT_THROW(series_from_table(t, 2, 31), std::invalid_argument);
}

TEST(SeriesEqualUpto, ReportsFirstMismatch) {
    const auto a = rogers_ramanujan_product(2, 60);
    EXPECT_TRUE(series_equal_upto(a, series_from_counts(FamilySpec::b(2), 60)).equal);
    EXPECT_TRUE(series_equal_upto(a, a).equal);

    const auto cmp = series_equal_upto(rogers_ramanujan_product(1, 6), rogers_ramanujan_product(2, 6));
    EXPECT_FALSE(cmp.equal);
    EXPECT_EQ(cmp.first_mismatch, std::optional<std::size_t>(1));
    EXPECT_EQ(cmp.lhs, 0);
    EXPECT_EQ(cmp.rhs, 1);
}
