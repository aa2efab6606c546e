#ifndef RAMSEY_ORACLE_HPP
#define RAMSEY_ORACLE_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/tournament.hpp"

namespace ramsey {

inline constexpr int kRed = 0;
inline constexpr int kBlue = 1;

// Pure deterministic map from a sorted vertex triple to a color id.  Never
// materialized: universes up to ~10^5 (extraction) and 2^20 (sampling) stay
// cheap because colors are computed on demand.
class TripleOracle {
  public:
    virtual ~TripleOracle() = default;
    virtual std::int64_t universe() const = 0;
    virtual int palette() const = 0;
    // Requires a < b < c, all within the universe.
    virtual int color(std::int64_t a, std::int64_t b, std::int64_t c) const = 0;
    virtual std::string describe() const = 0;
};

using OraclePtr = std::shared_ptr<const TripleOracle>;

OraclePtr const_oracle(std::int64_t n, int color);
// Red with probability p, independently per triple via seeded hashing.
OraclePtr random_oracle(std::int64_t n, double p, std::uint64_t seed);
// Red iff the triple is a cyclic triangle of the tournament.
OraclePtr tournament_oracle(Tournament t);
// Same coloring rule on a hash-defined random tournament; no n x n storage,
// so it scales to large universes.
OraclePtr random_tournament_oracle(std::int64_t n, std::uint64_t seed);

struct LiftSpec {
    int r = 0;                 // palette size of the pair coloring c2
    EdgeColoring c1;           // red-blue coloring of pairs from [r]
    std::uint64_t seed = 0;    // drives c2
    std::int64_t n = 0;        // universe size

    // c2: seeded keyed hash of the sorted pair, reduced mod r.
    int c2(std::int64_t a, std::int64_t b) const;
};

// Triple {a<b<c} gets c1(c2(a,b), c2(a,c)) when the two pair colors differ,
// blue when they coincide.
int lift_color(std::int64_t a, std::int64_t b, std::int64_t c, const LiftSpec& spec);
OraclePtr lift_oracle(LiftSpec spec);

// Stepping-up coloring of triples of {0,1}^m driven by a base graph on the
// coordinate set; palette 3 (C1, C2, C3).  See stepup.hpp for the color rule.
OraclePtr stepup_oracle(BitGraph base);

// Palette-3 -> palette-2 adapter: `red_class` maps to red, the rest to blue.
OraclePtr binarize_oracle(OraclePtr inner, int red_class = 0);

// CLI spec strings:
//   const:red | const:blue
//   random:p=<f>:seed=<u64>
//   tournament:file=<path> | tournament:random:seed=<u64>
//   lift:r=<u>:c1=<path|pentagon>:seed=<u64>
//   stepup:graph=<path|cycle(<k>)>
// `n` supplies the universe size where the spec does not imply one; 3-color
// oracles are binarized with C1 -> red when `force_two_colors` is set.
OraclePtr parse_oracle_spec(const std::string& spec, std::int64_t n,
                            bool force_two_colors = false);

}  // namespace ramsey

#endif
