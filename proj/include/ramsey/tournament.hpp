#ifndef RAMSEY_TOURNAMENT_HPP
#define RAMSEY_TOURNAMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ramsey/bitset.hpp"

namespace ramsey {

// Tournament on [0, n): for every pair exactly one direction.
class Tournament {
  public:
    Tournament() = default;
    explicit Tournament(int n);

    int order() const { return n_; }
    bool beats(int u, int v) const { return beats_[static_cast<std::size_t>(u)].test(v); }
    // Orients u -> v, clearing the opposite direction.
    void set_winner(int u, int v);
    const Bitset& dominated(int v) const { return beats_[static_cast<std::size_t>(v)]; }
    int outdegree(int v) const { return beats_[static_cast<std::size_t>(v)].count(); }

    // Distinct triple forms a 3-cycle iff the three indicators around it
    // agree; symmetric in its arguments.
    bool cyclic(int a, int b, int c) const {
        bool ab = beats(a, b);
        return ab == beats(b, c) && ab == beats(c, a);
    }

    void validate() const;

  private:
    int n_ = 0;
    std::vector<Bitset> beats_;
};

// i beats i+1, ..., i+(n-1)/2 (mod n); n odd.
Tournament rotational_tournament(int n);
// i beats j for i < j.
Tournament transitive_tournament(int n);
// Outdegrees as equal as possible for any n (rotational for odd n).
Tournament near_regular_tournament(int n);
Tournament random_tournament(int n, std::uint64_t seed);
// Decodes a C(n,2)-bit mask, bit index of pair (i<j) in lexicographic order;
// bit set means i beats j.  Used by exhaustive enumerations, n <= 11.
Tournament tournament_from_mask(int n, std::uint64_t mask);

// Exact cyclic-triangle count via the outdegree identity
// C(n,3) - sum_i C(d_i, 2).
std::int64_t count_cyclic_triangles(const Tournament& t);
// Independent route: enumerate all triples.  Kept for cross-checks.
std::int64_t count_cyclic_triangles_direct(const Tournament& t);

struct TransitiveResult {
    int size = 0;
    std::vector<int> order;  // witness, beats-chain from first to last
    std::uint64_t nodes = 0;
    bool budget_exceeded = false;
};

// Largest transitive subtournament up to `cap` vertices, exhaustive
// branch-and-bound.  node_cap = 0 means unlimited.
TransitiveResult max_transitive_subtournament(const Tournament& t, int cap,
                                              std::uint64_t node_cap = 0);

// Text format: `t <n>`, then n rows of n chars 0/1 (row i col j = 1 iff
// i beats j, diagonal 0).
Tournament read_tournament(std::istream& in);
Tournament load_tournament(const std::string& path);
void write_tournament(std::ostream& out, const Tournament& t);

}  // namespace ramsey

#endif
