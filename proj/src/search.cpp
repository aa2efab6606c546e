#include "ramsey/search.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

struct CliqueSearch {
    const BitGraph& g;
    std::vector<int> order;  // candidate expansion order
    CliqueResult best;
    std::vector<int> current;

    void expand(Bitset candidates) {
        ++best.nodes;
        for (int idx : order) {
            if (!candidates.test(idx)) continue;
            if (static_cast<int>(current.size()) + candidates.count() <= best.size) return;
            current.push_back(idx);
            if (static_cast<int>(current.size()) > best.size) {
                best.size = static_cast<int>(current.size());
                best.witness = current;
                std::sort(best.witness.begin(), best.witness.end());
            }
            Bitset next = candidates;
            next &= g.neighbors(idx);
            if (next.any()) expand(next);
            current.pop_back();
            candidates.reset(idx);
        }
    }
};

}  // namespace

CliqueResult max_clique(const BitGraph& g) {
    CliqueResult empty_result;
    if (g.order() == 0) return empty_result;
    CliqueSearch search{g, {}, {}, {}};
    search.order.resize(static_cast<std::size_t>(g.order()));
    std::iota(search.order.begin(), search.order.end(), 0);
    // high degree first, lowest index on ties
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    Bitset all(g.order());
    for (int v = 0; v < g.order(); ++v) all.set(v);
    search.expand(all);
    return search.best;
}

CliqueResult max_independent_set(const BitGraph& g) { return max_clique(g.complement()); }

namespace {

struct MonoDfs {
    const TripleOracle& oracle;
    const std::vector<std::int64_t>& universe;
    int q;
    int target;
    std::uint64_t node_cap;
    MonoSearchResult result;
    std::vector<std::int64_t> chosen;

    bool extends(std::int64_t w) const {
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = i + 1; j < chosen.size(); ++j)
                if (oracle.color(chosen[i], chosen[j], w) != target) return false;
        return true;
    }

    // Lexicographic DFS; a vertex joins only if every triple it closes has the
    // target color, so whole subtrees die on the first bad triple.
    bool dfs(std::size_t from) {
        if (static_cast<int>(chosen.size()) == q) {
            result.witness = chosen;
            return true;
        }
        std::size_t need = static_cast<std::size_t>(q) - chosen.size();
        if (universe.size() - from < need) return false;
        for (std::size_t i = from; i + need <= universe.size(); ++i) {
            ++result.nodes;
            if (node_cap && result.nodes > node_cap) {
                result.budget_exceeded = true;
                return false;
            }
            if (!extends(universe[i])) continue;
            chosen.push_back(universe[i]);
            if (dfs(i + 1)) return true;
            chosen.pop_back();
            if (result.budget_exceeded) return false;
        }
        return false;
    }
};

}  // namespace

MonoSearchResult find_mono_set(const TripleOracle& oracle,
                               const std::vector<std::int64_t>& universe, int q,
                               int color, const MonoSearchOptions& opts) {
    if (q < 3) throw std::invalid_argument("monochromatic search needs q >= 3");
    if (color < 0 || color >= oracle.palette())
        throw std::invalid_argument("color outside oracle palette");
    if (!std::is_sorted(universe.begin(), universe.end()))
        throw std::invalid_argument("universe must be sorted ascending");
    MonoSearchResult result;
    result.mode = opts.mode;
    if (static_cast<std::size_t>(q) > universe.size()) return result;

    if (opts.mode == SearchMode::exhaustive) {
        MonoDfs dfs{oracle, universe, q, color, opts.node_cap, std::move(result), {}};
        dfs.dfs(0);
        return std::move(dfs.result);
    }

    SplitMix64 rng(substream(opts.seed, "sampler"));
    std::vector<std::int64_t> pick(static_cast<std::size_t>(q));
    for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
        ++result.nodes;
        // sample q distinct indices
        std::vector<std::int64_t> idx;
        idx.reserve(static_cast<std::size_t>(q));
        while (static_cast<int>(idx.size()) < q) {
            std::int64_t cand =
                static_cast<std::int64_t>(rng.next_below(universe.size()));
            if (std::find(idx.begin(), idx.end(), cand) == idx.end()) idx.push_back(cand);
        }
        for (int i = 0; i < q; ++i) pick[static_cast<std::size_t>(i)] = universe[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        std::sort(pick.begin(), pick.end());
        bool mono = true;
        for (int i = 0; i < q && mono; ++i)
            for (int j = i + 1; j < q && mono; ++j)
                for (int k = j + 1; k < q && mono; ++k)
                    if (oracle.color(pick[static_cast<std::size_t>(i)],
                                     pick[static_cast<std::size_t>(j)],
                                     pick[static_cast<std::size_t>(k)]) != color)
                        mono = false;
        if (mono) {
            result.witness = pick;
            return result;
        }
    }
    return result;
}

MonoSearchResult find_mono_set(const TripleOracle& oracle, int q, int color,
                               const MonoSearchOptions& opts) {
    std::vector<std::int64_t> universe(static_cast<std::size_t>(oracle.universe()));
    std::iota(universe.begin(), universe.end(), std::int64_t{0});
    return find_mono_set(oracle, universe, q, color, opts);
}

std::string MonoSearchResult::to_json() const {
    std::ostringstream out;
    out << "{\"mode\":\"" << (mode == SearchMode::exhaustive ? "exhaustive" : "sampled")
        << "\",\"witness\":";
    if (witness) {
        out << "[";
        for (std::size_t i = 0; i < witness->size(); ++i) {
            if (i) out << ",";
            out << (*witness)[i];
        }
        out << "]";
    } else {
        out << "null";
    }
    out << ",\"nodes\":" << nodes << "}";
    return out.str();
}

}  // namespace ramsey
