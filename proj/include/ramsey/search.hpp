#ifndef RAMSEY_SEARCH_HPP
#define RAMSEY_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/oracle.hpp"

namespace ramsey {

struct CliqueResult {
    int size = 0;
    std::vector<int> witness;
    std::uint64_t nodes = 0;
};

// Exact maximum clique, branch and bound with candidates ordered by degree
// (ties: lowest index first).  Witness is the first optimum encountered.
CliqueResult max_clique(const BitGraph& g);
// Independent-set variant: clique of the complement.
CliqueResult max_independent_set(const BitGraph& g);

enum class SearchMode { exhaustive, sampled };

struct MonoSearchOptions {
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t node_cap = 0;      // 0 = unlimited (exhaustive mode)
    std::uint64_t trials = 100000;   // sampled mode
    std::uint64_t seed = 0;          // sampled mode
};

struct MonoSearchResult {
    SearchMode mode = SearchMode::exhaustive;
    std::optional<std::vector<std::int64_t>> witness;
    std::uint64_t nodes = 0;   // DFS nodes (exhaustive) or trials run (sampled)
    bool budget_exceeded = false;

    // Witness JSON: {"mode":"exhaustive|sampled","witness":[..]|null,"nodes":K}
    std::string to_json() const;
};

// Searches `universe` for a q-set all of whose triples have color `color`
// under the oracle.  Exhaustive mode is a lexicographic DFS with early
// triple-failure pruning and certifies absence (unless the node cap fires);
// sampled mode draws random q-subsets.
MonoSearchResult find_mono_set(const TripleOracle& oracle,
                               const std::vector<std::int64_t>& universe, int q,
                               int color, const MonoSearchOptions& opts = {});

// Convenience: universe = [0, oracle.universe()).
MonoSearchResult find_mono_set(const TripleOracle& oracle, int q, int color,
                               const MonoSearchOptions& opts = {});

}  // namespace ramsey

#endif
