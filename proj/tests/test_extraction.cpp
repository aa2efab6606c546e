#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ramsey/extraction.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

TEST_CASE("extraction bound values") {
    auto b = extraction_bound(4, 4, 0.5);
    CHECK(b.value == doctest::Approx(57344).epsilon(1e-12));
    CHECK(b.log2 == doctest::Approx(std::log2(57344.0)).epsilon(1e-12));

    // alpha = 1/2 collapses to (v+1) 2^m for every target pair
    for (int s = 3; s <= 6; ++s)
        for (int n = 3; n <= 6; ++n) {
            Budget inner = builder_budget(s - 1, n - 1);
            double expected = std::log2(static_cast<double>(inner.vertices + 1)) +
                              static_cast<double>(inner.total_edges);
            CHECK(extraction_bound(s, n, 0.5).log2 == doctest::Approx(expected).epsilon(1e-12));
        }
}

TEST_CASE("optimal alpha sits at r/m") {
    Budget inner = builder_budget(4, 19);
    double expected = static_cast<double>(inner.red_edges) /
                      static_cast<double>(inner.total_edges);
    double grid_best = optimal_alpha(5, 20, 1 << 16);
    CHECK(grid_best == doctest::Approx(expected).epsilon(1e-3));
}

TEST_CASE("off-diagonal exponent") {
    CHECK(offdiag_exponent(4, 4) == doctest::Approx(192.0).epsilon(1e-12));
    CHECK_THROWS_AS(offdiag_exponent(3, 5), std::domain_error);
    CHECK_THROWS_AS(offdiag_exponent(5, 4), std::domain_error);

    // growth order Theta(n^2 log n) at s = 4: the ratio decreases monotonically
    // toward 0.5 / ln 2 and stays within fixed bounds on [10, 10^4]
    double prev = 1e18;
    for (int n = 10; n <= 10000; n = n * 3 / 2) {
        double ratio = offdiag_exponent(4, n) /
                       (static_cast<double>(n) * n * std::log(static_cast<double>(n)));
        CHECK(ratio < prev);
        CHECK(ratio > 0.5 / std::log(2.0) * 0.99);
        CHECK(ratio < 4.0);
        prev = ratio;
    }

    // the relaxed exponent dominates the direct bound at its best alpha
    for (int s = 4; s <= 6; ++s)
        for (int n = s; n <= 30; n += 2) {
            double direct = extraction_bound(s, n, optimal_alpha(s, n, 1 << 12)).log2;
            CHECK(offdiag_exponent(s, n) >= direct - 1e-6);
        }
}

TEST_CASE("diagonal log-log bound") {
    // matches log2(log2(v+1) + m) exactly where the budget is exact
    Budget b = builder_budget(19, 19);
    double expected = std::log2(std::log2(static_cast<double>(b.vertices + 1)) +
                                static_cast<double>(b.total_edges));
    CHECK(diagonal_log2log2(20) == doctest::Approx(expected).epsilon(1e-12));
    // (2 + o(1)) k with slack factor 1.1 at k = 20, and for all k up to 50
    CHECK(diagonal_log2log2(20) <= 2.2 * 20);
    for (int k = 10; k <= 50; ++k) CHECK(diagonal_log2log2(k) <= 2.2 * k);
}

TEST_CASE("recursion tower bound") {
    auto base6 = [](int, int) { return 6.0; };
    auto tower = recursion_bound(3, 4, 4, base6);
    CHECK(tower.height == 1);
    CHECK(tower.top == doctest::Approx(15.0));  // C(6,2)

    // composing with the C(s+n-2, s-1) base reproduces the composition bound
    auto es = recursion_bound(3, 5, 6, [](int s, int n) {
        // plain C(s+n-2, s-1)
        double v = 1;
        for (int i = 1; i <= s - 1; ++i) v = v * (s + n - 2 - (s - 1) + i) / i;
        return v;
    });
    CHECK(es.height == 1);
    double arg = 1;
    for (int i = 1; i <= 3; ++i) arg = arg * (4 + 5 - 2 - 3 + i) / i;  // C(7,3) = 35
    CHECK(es.top == doctest::Approx(arg * (arg - 1) / 2));

    auto four = recursion_bound(4, 5, 5, base6);
    CHECK(four.height >= 1);
    CHECK(four.text.rfind("2^", 0) == 0);
}

TEST_CASE("extraction on constant oracles") {
    ExtractionConfig cfg;
    cfg.s = 4;
    cfg.n = 4;
    cfg.alpha = 0.5;
    cfg.universe = 57344;
    cfg.oracle = const_oracle(57344, kRed);
    auto red = erdos_rado_extract(cfg);
    CHECK(red.kind == ExtractionKind::red_set);
    CHECK(red.witness.size() == 4);
    CHECK(red.verified);
    CHECK(red.induction_ok);
    CHECK(red.threshold_ok);

    cfg.oracle = const_oracle(57344, kBlue);
    auto blue = erdos_rado_extract(cfg);
    CHECK(blue.kind == ExtractionKind::blue_set);
    CHECK(blue.witness.size() == 4);
    CHECK(blue.verified);
    CHECK(blue.induction_ok);
}

TEST_CASE("extraction over seeded random oracles always verifies") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        ExtractionConfig cfg;
        cfg.s = 4;
        cfg.n = 4;
        cfg.alpha = 0.5;
        cfg.universe = 57344;
        cfg.oracle = random_oracle(57344, 0.5, hash64(seed, 1));
        auto result = erdos_rado_extract(cfg);
        CHECK(result.kind != ExtractionKind::failure);
        CHECK(result.verified);
        CHECK(result.induction_ok);
        CHECK(result.threshold_ok);
        CHECK(result.witness.size() == 4);
    }
}

TEST_CASE("extraction with a starved universe reports failure honestly") {
    ExtractionConfig cfg;
    cfg.s = 4;
    cfg.n = 4;
    cfg.alpha = 0.5;
    cfg.universe = 12;  // far below (v+1) 2^m
    cfg.oracle = random_oracle(12, 0.5, 5);
    auto result = erdos_rado_extract(cfg);
    // tiny pools may still luck into a witness; a failure must be flagged
    if (result.kind == ExtractionKind::failure) {
        CHECK(result.witness.empty());
    } else {
        CHECK(result.verified);
    }
}

TEST_CASE("extraction json report") {
    ExtractionConfig cfg;
    cfg.s = 4;
    cfg.n = 4;
    cfg.alpha = 0.5;
    cfg.universe = 57344;
    cfg.oracle = const_oracle(57344, kRed);
    auto result = erdos_rado_extract(cfg);
    std::string json = result.to_json();
    CHECK(json.find("\"outcome\":\"red\"") != std::string::npos);
    CHECK(json.find("\"verified\":true") != std::string::npos);
    CHECK(json.find("\"pool_trace\"") != std::string::npos);
}

TEST_CASE("k43e: constant blue yields a blue set") {
    auto oracle = const_oracle(100, kBlue);
    auto result = k43e_extract(oracle, 4, 100);
    CHECK(result.kind == K43eKind::blue_set);
    CHECK(result.witness.size() == 4);
    CHECK(result.verified);
    CHECK(result.star_forest_ok);
}

TEST_CASE("k43e: constant red yields a red K4 minus an edge at once") {
    auto oracle = const_oracle(100, kRed);
    auto result = k43e_extract(oracle, 4, 100);
    CHECK(result.kind == K43eKind::red_k43e);
    CHECK(result.witness.size() == 4);
    CHECK(result.verified);
    CHECK_FALSE(result.star_forest_ok);
    CHECK(result.witness == std::vector<std::int64_t>{0, 1, 2, 3});
}

TEST_CASE("k43e: tournament colorings never produce the red witness") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto oracle = random_tournament_oracle(223600, seed);
        auto result = k43e_extract(oracle, 4, 223600);
        CHECK(result.kind != K43eKind::red_k43e);
    }
}

TEST_CASE("k43e respects explicit alpha and fails on a starved pool") {
    auto oracle = random_oracle(6, 0.5, 9);
    auto result = k43e_extract(oracle, 5, 6, 0.25);
    CHECK((result.kind == K43eKind::failure || result.verified));
}
