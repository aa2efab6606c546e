#ifndef RAMSEY_HYPERGRAPH_HPP
#define RAMSEY_HYPERGRAPH_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/tournament.hpp"

namespace ramsey {

// 3-uniform hypergraph with an explicit (sorted, deduplicated) triple list.
struct Hypergraph3 {
    int n = 0;
    std::vector<std::array<int, 3>> edges;

    void normalize();  // sort each triple, sort and dedup the list
    void validate() const;
};

// Every edge of g joined with one extra apex vertex (index |V(g)|).
Hypergraph3 apex_hypergraph(const BitGraph& g);

// Edge set {v_i, v_{i+1 mod n}, v_j} over all i, j; n >= 4.
Hypergraph3 cycle_hypergraph(int n);

// Complete 3-uniform hypergraph on 4 vertices minus one triple.
Hypergraph3 k4_minus_edge();

// Brute-force isomorphism test; orders must match and stay small (<= 8).
bool hypergraphs_isomorphic(const Hypergraph3& a, const Hypergraph3& b);

// Balanced blow-up K_l^(k)(n): l parts of size n, edges = k-sets meeting k
// distinct parts.  Kept as a predicate; only k=3 is ever materialized.
struct Blowup {
    int k = 0, l = 0, n = 0;

    std::int64_t vertex_count() const { return static_cast<std::int64_t>(l) * n; }
    int part_of(std::int64_t v) const { return static_cast<int>(v / n); }
    bool is_edge(std::span<const std::int64_t> vertices) const;
    std::int64_t edge_count() const;  // C(l,k) * n^k

    Hypergraph3 materialize() const;  // k == 3 only
};

// Checks number-of-edges >= (1 - C(k,2)/l) * C(ln, k) in exact integers.
bool blowup_density_bound_holds(const Blowup& b);

struct OddCycleCheck {
    bool all_cyclic = false;
    // When !all_cyclic: first j with triple (apex, u_j, u_{j+1}) not cyclic.
    int index = -1;
    std::array<int, 3> triple{};
};

// Apex v plus a cycle u_0..u_{len-1}: were every triple (v, u_j, u_{j+1})
// cyclic, the edge directions at v would 2-color the cycle properly -- for odd
// cycles impossible, so some triple must break.  Returns it, or `all_cyclic`.
OddCycleCheck odd_cycle_red_check(const Tournament& t, int apex,
                                  std::span<const int> cycle);

// Text format: `h <n> <m>`, then `t a b c` per triple.
Hypergraph3 read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph3& h);

}  // namespace ramsey

#endif
