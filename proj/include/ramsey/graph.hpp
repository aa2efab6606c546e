#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ramsey/bitset.hpp"

namespace ramsey {

// Simple undirected graph over [0, n) with per-vertex neighbor bitsets.
class BitGraph {
  public:
    BitGraph() = default;
    explicit BitGraph(int n);

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }
    void add_edge(int u, int v);
    const Bitset& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
    std::int64_t edge_count() const;

    BitGraph complement() const;

    // Checks symmetry, no self-loops, bits in range; throws on violation.
    void validate() const;

  private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

BitGraph empty_graph(int n);
BitGraph complete_graph(int n);
BitGraph cycle_graph(int n);
BitGraph petersen_graph();
// Each pair independently an edge with probability p, driven by `seed`.
BitGraph random_graph(int n, std::uint64_t seed, double p = 0.5);

// Text format: first line `p <n>`, then `e <u> <v>` per edge, 0-indexed.
BitGraph read_graph(std::istream& in);
BitGraph load_graph(const std::string& path);
void write_graph(std::ostream& out, const BitGraph& g);

}  // namespace ramsey

#endif
