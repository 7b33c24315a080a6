#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "orbicheck/census.hpp"
#include "orbicheck/errors.hpp"

using namespace orbicheck;

namespace {

// independent counter: partitions of n with every part >= minimum
long brute_partitions(long n, long minimum) {
    if (n == 0) return 1;
    long total = 0;
    for (long part = minimum; part <= n; ++part) total += brute_partitions(n - part, part);
    return total;
}

std::string encode(const InvStructure& s) {
    std::string out = "d" + std::to_string(s.fermat_dots);
    for (long c : s.chain_lengths) out += " c" + std::to_string(c);
    for (long l : s.loop_lengths) out += " l" + std::to_string(l);
    return out;
}

} // namespace

TEST_CASE("partition counts match the hand table") {
    const long expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 0; n <= 10; ++n) CHECK(partition_count(n) == expect[n]);
    CHECK(partition_count(-1) == 0);
    CHECK(partition_count(50) == 204226);
    CHECK(partition_count(100) == 190569292);
    CHECK(partition_count(200) == Integer("3972999029388"));
    CHECK_THROWS_AS(partition_count(-2), DomainError);
}

TEST_CASE("unit-free counts agree with direct enumeration") {
    CHECK(partition_count_no_units(0) == 1);
    CHECK(partition_count_no_units(1) == 0);
    CHECK(partition_count_no_units(3) == 1);
    for (long n = 0; n <= 30; ++n)
        CHECK(partition_count_no_units(n) == brute_partitions(n, 2));
    CHECK_THROWS_AS(partition_count_no_units(-1), DomainError);
}

TEST_CASE("a standalone table matches the shared one") {
    PartitionTable table;
    CHECK(table.count(3) == 3);
    CHECK(table.count(-1) == 0);
    CHECK(table.count_no_units(4) == 2);
    for (long n = 0; n <= 40; ++n) CHECK(table.count(n) == partition_count(n));
}

TEST_CASE("shape counts match the reference sequence") {
    const long expect[] = {1, 1, 3, 5, 10, 16, 29, 45, 75, 115};
    for (long n = 0; n <= 9; ++n) CHECK(inv_count(n) == expect[n]);
    CHECK(inv_count_conv(5) == 16);
    CHECK_THROWS_AS(inv_count(-1), DomainError);
    CHECK_THROWS_AS(inv_count_conv(-1), DomainError);
}

TEST_CASE("the closed form and the convolution agree far out") {
    for (long n = 0; n <= 200; ++n) CHECK(inv_count(n) == inv_count_conv(n));
}

TEST_CASE("series coefficients reproduce the counts") {
    SeriesCoeffs s = series_coefficients(200);
    REQUIRE(s.coeffs.size() == 201);
    const long expect[] = {1, 1, 3, 5, 10, 16, 29, 45, 75, 115};
    for (long n = 0; n <= 9; ++n) CHECK(s.coeffs[n] == expect[n]);
    for (long n = 0; n <= 200; ++n) CHECK(s.coeffs[n] == inv_count(n));
    CHECK_THROWS_AS(series_coefficients(-1), DomainError);
}

TEST_CASE("enumeration is complete and duplicate free") {
    auto zero = inv_enumerate(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].fermat_dots == 0);
    CHECK(zero[0].chain_lengths.empty());
    CHECK(zero[0].loop_lengths.empty());

    auto two = inv_enumerate(2);
    REQUIRE(two.size() == 3);
    std::set<std::string> seen2;
    for (const auto& s : two) seen2.insert(encode(s));
    CHECK(seen2 == std::set<std::string>{"d2", "d0 c2", "d0 l2"});

    CHECK(inv_enumerate(3).size() == 5);

    for (long n = 0; n <= 15; ++n) {
        auto all = inv_enumerate(n);
        CHECK(Integer(static_cast<long>(all.size())) == inv_count(n));
        std::set<std::string> seen;
        for (const auto& s : all) {
            long total = s.fermat_dots;
            CHECK(s.fermat_dots >= 0);
            CHECK(std::is_sorted(s.chain_lengths.begin(), s.chain_lengths.end()));
            CHECK(std::is_sorted(s.loop_lengths.begin(), s.loop_lengths.end()));
            for (long c : s.chain_lengths) {
                CHECK(c >= 2);
                total += c;
            }
            for (long l : s.loop_lengths) {
                CHECK(l >= 2);
                total += l;
            }
            CHECK(total == n);
            seen.insert(encode(s));
        }
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("structures with a dot match the previous count") {
    for (long n = 1; n <= 15; ++n) {
        auto all = inv_enumerate(n);
        long dotted = 0;
        for (const auto& s : all)
            if (s.fermat_dots >= 1) ++dotted;
        CHECK(Integer(dotted) == inv_count(n - 1));
    }
}

TEST_CASE("count increments follow the two-term rule") {
    for (long n = 2; n <= 120; ++n) {
        Integer rhs = 2 * partition_count_no_units(n);
        for (long i = 2; i <= n - 2; ++i)
            rhs += partition_count_no_units(i) * partition_count_no_units(n - i);
        CHECK(inv_count(n) - inv_count(n - 1) == rhs);
    }
}

TEST_CASE("enumeration respects its cap") {
    CHECK_THROWS_AS(inv_enumerate(26), ResourceLimitError);
    CHECK_THROWS_AS(inv_enumerate(13, 12), ResourceLimitError);
    CHECK(inv_enumerate(12, 12).size() == inv_enumerate(12).size());
    auto big = inv_enumerate(26, 40);
    CHECK(Integer(static_cast<long>(big.size())) == inv_count(26));
    CHECK_THROWS_AS(inv_enumerate(-1), DomainError);
}
