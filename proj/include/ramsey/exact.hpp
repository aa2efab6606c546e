#ifndef RAMSEY_EXACT_HPP
#define RAMSEY_EXACT_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/tournament.hpp"

namespace ramsey {

// Maximum number of cyclic triangles over tournaments on s vertices:
// (s+1)s(s-1)/24 for odd s, (s+2)s(s-2)/24 for even s.
std::int64_t T_closed(std::int64_t s);

struct TBruteResult {
    std::int64_t value = 0;
    Tournament witness;
};

// Independent route to T(s).  s <= 7: full 2^C(s,2) enumeration scored by the
// outdegree identity.  Larger s: maximum of C(s,3) - sum C(d_i,2) over
// Landau-feasible outdegree sequences, witness from the near-regular
// construction (re-counted, never assumed).  Throws std::domain_error beyond
// s = 24.
TBruteResult T_brute(int s);

// g recursion: g(1) = g(2) = 0,
// g(s) = max over a+b+c = s (parts >= 1) of g(a)+g(b)+g(c)+abc.
// Exact over all partitions; internally branch-and-bound on the defect
// d = T - g, which stays O(s log s) while the terms are cubic.
std::int64_t g13(std::int64_t s);
std::int64_t d_value(std::int64_t s);  // T_closed(s) - g13(s), >= 0

// Lexicographically least partition (a<=b<=c) attaining g13(s); s >= 3.
std::array<std::int64_t, 3> g13_partition(std::int64_t s);

struct PartitionTree {
    std::int64_t s = 0;
    std::array<std::int64_t, 3> parts{};  // zeros when s < 3 (leaf)
    std::vector<std::unique_ptr<PartitionTree>> children;
};
std::unique_ptr<PartitionTree> g13_partition_tree(std::int64_t s);

// s with d(s) = 0.
std::vector<std::int64_t> nice_numbers(std::int64_t limit);

struct RecurrenceReport {
    bool ok = true;
    std::int64_t x = 0;   // first violating x
    int which = -1;       // 0..5 = case s = 6x-2 .. 6x+3
    std::int64_t lhs = 0, rhs = 0;
};

// The six congruence-case identities
//   d(6x-2) = 2d(2x-1) + d(2x)        d(6x+1) = 2d(2x) + d(2x+1) + x
//   d(6x-1) = d(2x-1) + 2d(2x) + x    d(6x+2) = d(2x) + 2d(2x+1)
//   d(6x)   = 3d(2x)                  d(6x+3) = 3d(2x+1)
// checked for 1 <= x <= x_max.
RecurrenceReport verify_d_recurrences(std::int64_t x_max);

struct GrowthReport {
    double max_ratio = 0;       // sup of d(s) / (s ln s), 3 <= s <= s_max
    std::int64_t argmax = 0;
};
GrowthReport d_growth_report(std::int64_t s_max);

// Counts of the two counted triple patterns, over all a < b < c:
//   palette 3: (a,b) = I, (b,c) = II, (a,c) = III
//   palette 2: (a,b) = I, (b,c) = I,  (a,c) = II
std::int64_t pattern_count(const EdgeColoring& c);
std::int64_t parity_pattern_count(int s);

struct PatternMaxResult {
    std::int64_t value = 0;
    EdgeColoring witness;
    bool exact = true;          // false when the node budget fired first
    std::uint64_t nodes = 0;
};

// Maximum of the palette-3 pattern count over all 3^C(s,2) colorings.
// Exhaustive DFS with branch-and-bound on partial counts plus the T(s) cap.
// s <= 6 finishes unconditionally; s = 7 honors node_cap (0 = unlimited) and
// reports a lower bound when capped.  Throws std::domain_error for s > 7.
PatternMaxResult F1_brute(int s, std::uint64_t node_cap = 0);

// Maximum of the palette-2 pattern count over all 2^C(s,2) colorings;
// s <= 8 (s = 8 is ~2^28 colorings and is gated behind opt-in flags at the
// CLI).  Always exact.
PatternMaxResult F2_brute(int s);
inline std::int64_t F2_formula(std::int64_t s) { return T_closed(s); }

enum class Provenance { closed_form, recursion, brute_force, absent };
const char* provenance_name(Provenance p);

struct TableRow {
    std::int64_t s = 0;
    std::int64_t T = 0;
    std::int64_t g = 0;
    std::optional<std::int64_t> F1;
    std::string F1_mode = "unknown";  // exact | lower-bound | unknown
    std::optional<std::int64_t> F2;
    Provenance F2_from = Provenance::absent;
    std::int64_t d = 0;
    bool nice = false;
};

struct TableOptions {
    int f1_max = 6;                // compute F1 exactly up to here
    std::uint64_t f1_node_cap = 0; // for s = 7 opt-in
    int f2_brute_max = 7;          // brute F2 up to here, formula beyond
};

std::vector<TableRow> compute_table(std::int64_t lo, std::int64_t hi,
                                    const TableOptions& opts = {});

// CSV header: s,T,g,F1,F1_mode,F2,d,nice
std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json(const std::vector<TableRow>& rows);

}  // namespace ramsey

#endif
