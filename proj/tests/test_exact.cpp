#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ramsey/exact.hpp"

using namespace ramsey;

namespace {

// Reference for g: the recursion taken literally, every partition, O(s^2) per
// value.  Only the production path uses the defect reformulation.
std::vector<std::int64_t> g_reference(std::int64_t s_max) {
    std::vector<std::int64_t> g(static_cast<std::size_t>(s_max) + 1, 0);
    for (std::int64_t s = 3; s <= s_max; ++s) {
        std::int64_t best = 0;
        for (std::int64_t a = 1; a <= s / 3; ++a)
            for (std::int64_t b = a; b <= (s - a) / 2; ++b) {
                std::int64_t c = s - a - b;
                best = std::max(best, g[static_cast<std::size_t>(a)] +
                                          g[static_cast<std::size_t>(b)] +
                                          g[static_cast<std::size_t>(c)] + a * b * c);
            }
        g[static_cast<std::size_t>(s)] = best;
    }
    return g;
}

// Near-equal-parts-only recursion; equality with the full max certifies that
// a balanced partition attains the maximum.
std::vector<std::int64_t> g_near_equal(std::int64_t s_max) {
    std::vector<std::int64_t> g(static_cast<std::size_t>(s_max) + 1, 0);
    for (std::int64_t s = 3; s <= s_max; ++s) {
        std::int64_t a = s / 3, c = (s + 2) / 3, b = s - a - c;
        g[static_cast<std::size_t>(s)] = g[static_cast<std::size_t>(a)] +
                                         g[static_cast<std::size_t>(b)] +
                                         g[static_cast<std::size_t>(c)] + a * b * c;
    }
    return g;
}

std::int64_t binom3(std::int64_t n) { return n * (n - 1) * (n - 2) / 6; }

}  // namespace

TEST_CASE("T closed form") {
    CHECK(T_closed(1) == 0);
    CHECK(T_closed(2) == 0);
    CHECK(T_closed(3) == 1);
    CHECK(T_closed(4) == 2);
    CHECK(T_closed(5) == 5);
    CHECK(T_closed(6) == 8);
    CHECK(T_closed(7) == 14);
    CHECK(T_closed(9) == 30);
    CHECK(T_closed(9) == binom3(10) / 4);
}

TEST_CASE("T brute force equals the closed form") {
    for (int s = 1; s <= 7; ++s) {
        auto result = T_brute(s);
        CHECK(result.value == T_closed(s));
        CHECK(count_cyclic_triangles(result.witness) == result.value);
    }
    for (int s = 8; s <= 9; ++s) {
        auto result = T_brute(s);
        CHECK(result.value == T_closed(s));
        CHECK(count_cyclic_triangles(result.witness) == result.value);
    }
}

TEST_CASE("g13 base cases and small values") {
    CHECK(g13(1) == 0);
    CHECK(g13(2) == 0);
    CHECK(g13(3) == 1);
    CHECK(g13(4) == 2);
    CHECK(g13(5) == 4);
    CHECK(g13(6) == 8);
    CHECK(g13(7) == 13);
    CHECK(g13(9) == 30);
    CHECK(g13(9) == binom3(10) / 4);
}

TEST_CASE("g13 equals the literal recursion on a long prefix") {
    auto ref = g_reference(800);
    for (std::int64_t s = 1; s <= 800; ++s) CHECK(g13(s) == ref[static_cast<std::size_t>(s)]);
}

TEST_CASE("a near-equal partition attains the maximum (s <= 1000)") {
    auto ne = g_near_equal(1000);
    for (std::int64_t s = 1; s <= 1000; ++s) CHECK(g13(s) == ne[static_cast<std::size_t>(s)]);
}

TEST_CASE("g13 witness partitions") {
    auto p5 = g13_partition(5);
    CHECK(p5 == std::array<std::int64_t, 3>{1, 1, 3});  // lexicographically least optimum
    CHECK(g13(1) + g13(1) + g13(3) + 1 * 1 * 3 == g13(5));
    for (std::int64_t s : {7, 30, 100, 1234}) {
        auto [a, b, c] = g13_partition(s);
        CHECK(a + b + c == s);
        CHECK(a >= 1);
        CHECK(a <= b);
        CHECK(b <= c);
        CHECK(g13(a) + g13(b) + g13(c) + a * b * c == g13(s));
    }
    auto tree = g13_partition_tree(9);
    CHECK(tree->parts == std::array<std::int64_t, 3>{3, 3, 3});
    CHECK(tree->children.size() == 3);
    CHECK(tree->children[0]->parts == std::array<std::int64_t, 3>{1, 1, 1});
}

TEST_CASE("defect values and powers of three") {
    CHECK(d_value(1) == 0);
    CHECK(d_value(2) == 0);
    CHECK(d_value(5) == 1);
    CHECK(d_value(7) == 1);
    for (std::int64_t s : {1, 3, 9, 27, 81}) {
        CHECK(d_value(s) == 0);
        CHECK(g13(s) == (s + 1) * s * (s - 1) / 24);  // (1/4) C(s+1,3)
    }
    // d(3s) = 3 d(s) for odd s
    for (std::int64_t s = 1; s <= 1001; s += 2) CHECK(d_value(3 * s) == 3 * d_value(s));
}

TEST_CASE("nice numbers up to 100") {
    std::vector<std::int64_t> expected = {1,  2,  3,  4,  6,  8,  9,  10, 12, 18, 24, 26,
                                          27, 28, 30, 36, 54, 72, 78, 80, 81, 82, 84, 90};
    CHECK(nice_numbers(100) == expected);
}

TEST_CASE("d recurrences, first cases by hand") {
    CHECK(d_value(6) == 3 * d_value(2));
    CHECK(d_value(7) == 2 * d_value(2) + d_value(3) + 1);
    CHECK(d_value(7) == 1);
    auto report = verify_d_recurrences(200);
    CHECK(report.ok);
}

TEST_CASE("growth report stays bounded") {
    auto report = d_growth_report(5000);
    CHECK(report.max_ratio > 0.0);
    CHECK(report.max_ratio < 1.0);  // comfortably below 1 at this scale
}

TEST_CASE("pattern counts on tiny colorings") {
    // s = 3, palette 3: only the coloring (01)=I, (12)=II, (02)=III scores 1
    EdgeColoring c(3, 3);
    c.set_color(0, 1, 0);
    c.set_color(1, 2, 1);
    c.set_color(0, 2, 2);
    CHECK(pattern_count(c) == 1);
    c.set_color(0, 2, 0);
    CHECK(pattern_count(c) == 0);
}

TEST_CASE("parity coloring achieves T") {
    CHECK(parity_pattern_count(6) == 8);
    for (int s = 1; s <= 12; ++s) CHECK(parity_pattern_count(s) == T_closed(s));
}

TEST_CASE("F2 brute force equals T") {
    CHECK(F2_brute(3).value == 1);
    CHECK(F2_brute(5).value == 5);
    CHECK(F2_brute(6).value == 8);
    for (int s = 3; s <= 6; ++s) {
        auto result = F2_brute(s);
        CHECK(result.value == T_closed(s));
        CHECK(result.exact);
        CHECK(pattern_count(result.witness) == result.value);
    }
}

TEST_CASE("F1 brute force on the desk slice") {
    CHECK(F1_brute(3).value == 1);
    CHECK(F1_brute(4).value == 2);
    auto f5 = F1_brute(5);
    CHECK(f5.value == 4);
    CHECK(pattern_count(f5.witness) == 4);
    // the strict gap at s = 5
    CHECK(F1_brute(5).value < F2_brute(5).value);
    for (int s = 3; s <= 5; ++s) CHECK(F1_brute(s).value == g13(s));
}

TEST_CASE("chain g <= F1 <= T where F1 is exact") {
    for (int s = 3; s <= 5; ++s) {
        std::int64_t f1 = F1_brute(s).value;
        CHECK(g13(s) <= f1);
        CHECK(f1 <= T_closed(s));
    }
}

TEST_CASE("F1 with a tiny node budget reports a lower bound") {
    auto capped = F1_brute(7, 50);
    CHECK_FALSE(capped.exact);
    CHECK(capped.value <= T_closed(7));
    CHECK_THROWS_AS(F1_brute(7), std::domain_error);
    CHECK_THROWS_AS(F1_brute(8, 100), std::domain_error);
}

TEST_CASE("function table") {
    auto rows = compute_table(1, 10);
    REQUIRE(rows.size() == 10);
    CHECK(rows[4].s == 5);
    CHECK(rows[4].T == 5);
    CHECK(rows[4].g == 4);
    CHECK(rows[4].d == 1);
    CHECK_FALSE(rows[4].nice);
    REQUIRE(rows[4].F1.has_value());
    CHECK(*rows[4].F1 == 4);
    REQUIRE(rows[4].F2.has_value());
    CHECK(*rows[4].F2 == 5);
    CHECK(rows[5].nice);  // s = 6
    CHECK(rows[6].F2_from == Provenance::brute_force);
    CHECK(rows[9].F2_from == Provenance::closed_form);  // s = 10: formula column
    std::string csv = table_to_csv(rows);
    CHECK(csv.rfind("s,T,g,F1,F1_mode,F2,d,nice\n", 0) == 0);
    std::string json = table_to_json(rows);
    CHECK(json.find("\"s\":5,\"T\":5,\"g\":4") != std::string::npos);
}
