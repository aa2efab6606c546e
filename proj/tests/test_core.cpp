#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "ramsey/graph.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/search.hpp"
#include "ramsey/tournament.hpp"

using namespace ramsey;

namespace {

// Reference clique number: every subset, no pruning.  n <= 20.
int clique_number_naive(const BitGraph& g) {
    int n = g.order(), best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> set;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) set.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < set.size() && clique; ++i)
            for (std::size_t j = i + 1; j < set.size() && clique; ++j)
                if (!g.adjacent(set[i], set[j])) clique = false;
        if (clique) best = std::max(best, static_cast<int>(set.size()));
    }
    return best;
}

// Reference monochromatic q-set search: full subset enumeration.
std::optional<std::vector<std::int64_t>> mono_set_naive(const TripleOracle& oracle,
                                                        int n, int q, int color) {
    std::vector<int> idx(static_cast<std::size_t>(q));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        bool mono = true;
        for (int i = 0; i < q && mono; ++i)
            for (int j = i + 1; j < q && mono; ++j)
                for (int k = j + 1; k < q && mono; ++k)
                    if (oracle.color(idx[i], idx[j], idx[k]) != color) mono = false;
        if (mono) return std::vector<std::int64_t>(idx.begin(), idx.end());
        int pos = q - 1;
        while (pos >= 0 && idx[pos] == n - q + pos) --pos;
        if (pos < 0) return std::nullopt;
        ++idx[pos];
        for (int i = pos + 1; i < q; ++i) idx[i] = idx[i - 1] + 1;
    }
}

// Reference transitive subtournament: check every subset directly.
int max_transitive_naive(const Tournament& t) {
    int n = t.order(), best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> set;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) set.push_back(v);
        // transitive iff outdegrees within the set are all distinct
        std::set<int> degrees;
        for (int u : set) {
            int d = 0;
            for (int v : set)
                if (u != v && t.beats(u, v)) ++d;
            degrees.insert(d);
        }
        if (degrees.size() == set.size()) best = std::max(best, static_cast<int>(set.size()));
    }
    return best;
}

}  // namespace

TEST_CASE("bitset basics") {
    Bitset b(130);
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.lowest() == 0);
    CHECK(b.next(1) == 64);
    CHECK(b.next(65) == 129);
    CHECK(b.next(130) == -1);
    std::vector<int> seen;
    b.for_each([&](int i) { seen.push_back(i); });
    CHECK(seen == std::vector<int>{0, 64, 129});
}

TEST_CASE("max_clique on named graphs") {
    CHECK(max_clique(cycle_graph(5)).size == 2);  // triangle-free
    CHECK(max_clique(complete_graph(4)).size == 4);

    // Petersen: exhaustive check over all 3-subsets shows no triangle
    BitGraph p = petersen_graph();
    bool triangle = false;
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b)
            for (int c = b + 1; c < 10; ++c)
                if (p.adjacent(a, b) && p.adjacent(b, c) && p.adjacent(a, c)) triangle = true;
    CHECK_FALSE(triangle);
    CHECK(p.edge_count() == 15);
    CHECK(max_clique(p).size == 2);
}

TEST_CASE("max_clique witness is a clique and matches naive size") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        BitGraph g = random_graph(14, seed);
        auto result = max_clique(g);
        CHECK(result.size == clique_number_naive(g));
        CHECK(static_cast<int>(result.witness.size()) == result.size);
        for (std::size_t i = 0; i < result.witness.size(); ++i)
            for (std::size_t j = i + 1; j < result.witness.size(); ++j)
                CHECK(g.adjacent(result.witness[i], result.witness[j]));
    }
}

TEST_CASE("independence number equals clique number of the complement") {
    for (std::uint64_t seed = 100; seed < 116; ++seed) {
        BitGraph g = random_graph(16, seed, 0.4);
        CHECK(max_independent_set(g).size == max_clique(g.complement()).size);
    }
}

TEST_CASE("cyclic triangle counting: formula equals direct enumeration") {
    for (int n = 1; n <= 4; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Tournament t = tournament_from_mask(n, mask);
            CHECK(count_cyclic_triangles(t) == count_cyclic_triangles_direct(t));
        }
    }
    for (int n = 5; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 1500; ++seed) {
            Tournament t = random_tournament(n, hash64(seed, n));
            CHECK(count_cyclic_triangles(t) == count_cyclic_triangles_direct(t));
        }
}

TEST_CASE("named tournaments") {
    CHECK(count_cyclic_triangles(transitive_tournament(9)) == 0);
    CHECK(count_cyclic_triangles_direct(rotational_tournament(5)) == 5);

    // every tournament on 4 vertices has at most two cyclic triangles
    std::int64_t worst = 0;
    for (std::uint64_t mask = 0; mask < 64; ++mask)
        worst = std::max(worst, count_cyclic_triangles(tournament_from_mask(4, mask)));
    CHECK(worst == 2);
}

TEST_CASE("near-regular tournaments hit the balanced outdegree profile") {
    for (int n = 3; n <= 10; ++n) {
        Tournament t = near_regular_tournament(n);
        t.validate();
        for (int v = 0; v < n; ++v) {
            int d = t.outdegree(v);
            if (n % 2 == 1)
                CHECK(d == (n - 1) / 2);
            else
                CHECK((d == n / 2 || d == (n - 2) / 2));
        }
    }
}

TEST_CASE("max transitive subtournament") {
    CHECK(max_transitive_subtournament(transitive_tournament(6), 6).size == 6);

    Tournament r5 = rotational_tournament(5);
    CHECK(max_transitive_subtournament(r5, 5).size == max_transitive_naive(r5));
    CHECK(max_transitive_subtournament(r5, 5).size == 3);

    Tournament r7 = rotational_tournament(7);
    int naive7 = max_transitive_naive(r7);
    auto result = max_transitive_subtournament(r7, 7);
    CHECK(result.size == naive7);
    CHECK(result.size == 4);  // 0 > 1 > 2 > 3 is already transitive here
    // witness chain really is transitive
    for (std::size_t i = 0; i < result.order.size(); ++i)
        for (std::size_t j = i + 1; j < result.order.size(); ++j)
            CHECK(r7.beats(result.order[i], result.order[j]));

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Tournament t = random_tournament(8, seed);
        CHECK(max_transitive_subtournament(t, 8).size == max_transitive_naive(t));
    }
}

TEST_CASE("find_mono_set on constant and tournament oracles") {
    auto all_red = const_oracle(10, kRed);
    auto result = find_mono_set(*all_red, 4, kRed);
    REQUIRE(result.witness.has_value());
    CHECK(*result.witness == std::vector<std::int64_t>{0, 1, 2, 3});

    auto trans = tournament_oracle(transitive_tournament(8));
    CHECK_FALSE(find_mono_set(*trans, 3, kRed).witness.has_value());
}

TEST_CASE("find_mono_set agrees with naive enumeration on random oracles") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        int n = 8 + static_cast<int>(seed % 5);  // 8..12
        int q = 3 + static_cast<int>(seed % 3);  // 3..5
        double p = 0.2 + 0.15 * static_cast<double>(seed % 5);
        auto oracle = random_oracle(n, p, hash64(seed, 7));
        for (int color : {kRed, kBlue}) {
            auto fast = find_mono_set(*oracle, q, color);
            auto naive = mono_set_naive(*oracle, n, q, color);
            CHECK(fast.witness.has_value() == naive.has_value());
            if (fast.witness && naive) CHECK(*fast.witness == *naive);  // both lexicographic-least
        }
    }
}

TEST_CASE("find_mono_set respects the node cap") {
    auto oracle = random_oracle(40, 0.5, 11);
    MonoSearchOptions opts;
    opts.node_cap = 5;
    auto result = find_mono_set(*oracle, 6, kRed, opts);
    CHECK(result.budget_exceeded);
    CHECK_FALSE(result.witness.has_value());
}

TEST_CASE("sampled mode finds monochromatic sets where they are dense") {
    auto oracle = const_oracle(1 << 20, kBlue);
    MonoSearchOptions opts;
    opts.mode = SearchMode::sampled;
    opts.trials = 10;
    opts.seed = 3;
    auto result = find_mono_set(*oracle, 5, kBlue, opts);
    REQUIRE(result.witness.has_value());
    CHECK(result.nodes == 1);
    std::string json = result.to_json();
    CHECK(json.find("\"mode\":\"sampled\"") != std::string::npos);
}

TEST_CASE("oracle determinism over repeated evaluations") {
    auto oracle = random_oracle(1 << 20, 0.5, 99);
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 100000; ++trial) {
        std::int64_t a = static_cast<std::int64_t>(rng.next_below((1 << 20) - 300));
        std::int64_t b = a + 1 + static_cast<std::int64_t>(rng.next_below(100));
        std::int64_t c = b + 1 + static_cast<std::int64_t>(rng.next_below(100));
        int first = oracle->color(a, b, c);
        CHECK(oracle->color(a, b, c) == first);
    }
}

TEST_CASE("graph and tournament file round-trips") {
    BitGraph g = petersen_graph();
    std::stringstream buf;
    write_graph(buf, g);
    BitGraph g2 = read_graph(buf);
    CHECK(g2.order() == g.order());
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v) CHECK(g.adjacent(u, v) == g2.adjacent(u, v));

    Tournament t = random_tournament(9, 5);
    std::stringstream tbuf;
    write_tournament(tbuf, t);
    Tournament t2 = read_tournament(tbuf);
    for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v)
            if (u != v) CHECK(t.beats(u, v) == t2.beats(u, v));
}

TEST_CASE("oracle spec strings") {
    CHECK(parse_oracle_spec("const:red", 10)->color(0, 1, 2) == kRed);
    CHECK(parse_oracle_spec("const:blue", 10)->color(0, 1, 2) == kBlue);
    auto r1 = parse_oracle_spec("random:p=0.3:seed=7", 100);
    auto r2 = parse_oracle_spec("random:p=0.3:seed=7", 100);
    for (int i = 0; i < 50; ++i) CHECK(r1->color(i, i + 7, i + 20) == r2->color(i, i + 7, i + 20));
    auto stepup = parse_oracle_spec("stepup:graph=cycle(5)", 0);
    CHECK(stepup->universe() == 32);
    CHECK(stepup->palette() == 3);
    auto stepup2 = parse_oracle_spec("stepup:graph=cycle(5)", 0, true);
    CHECK(stepup2->palette() == 2);
    CHECK_THROWS(parse_oracle_spec("nonsense:foo", 10));
}
