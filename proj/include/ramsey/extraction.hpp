#ifndef RAMSEY_EXTRACTION_HPP
#define RAMSEY_EXTRACTION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/game.hpp"
#include "ramsey/oracle.hpp"

namespace ramsey {

struct ExtractionConfig {
    int s = 4, n = 4;
    double alpha = 0.5;        // threshold in (0, 1/2]
    std::int64_t universe = 0; // N
    OraclePtr oracle;          // 2-color

    void validate() const;  // throws on malformed fields (not on small N)
    // (v+1) alpha^-r (1-alpha)^(r-m) for the (s-1,n-1) builder budget;
    // N below this may legitimately end in `failure`.
    double required_universe() const;
};

enum class ExtractionKind { red_set, blue_set, failure };

struct ExtractionResult {
    ExtractionKind kind = ExtractionKind::failure;
    std::vector<std::int64_t> witness;  // monochromatic s- or n-set
    std::vector<std::int64_t> chosen;   // extracted universe vertices in order
    std::vector<ThresholdStep> steps;   // one per chi' edge
    std::vector<std::int64_t> pool_trace;  // survivor size after each vertex pass
    Transcript game;                    // the chi' graph as a game transcript
    bool verified = false;       // witness re-checked triple-by-triple
    bool induction_ok = false;   // survivor-size lower bound held at every pass
    bool threshold_ok = false;   // every red step saw >= alpha fraction red

    std::string to_json() const;
};

// The greedy extraction behind the (v+1) alpha^-r (1-alpha)^(r-m) bound:
// drives the string-labeling builder for targets (s-1, n-1) against the
// alpha-threshold painter, then appends one surviving vertex to the
// monochromatic clique of the drawn graph.  With N at least
// required_universe() this always returns a verified witness; smaller N may
// return `failure` with an empty pool (used by falsification tests).
ExtractionResult erdos_rado_extract(const ExtractionConfig& cfg);

enum class K43eKind { blue_set, red_k43e, failure };

struct K43eResult {
    K43eKind kind = K43eKind::failure;
    // red_k43e: 4 vertices carrying 3 red triples; blue_set: n vertices.
    std::vector<std::int64_t> witness;
    std::vector<std::int64_t> chosen;
    std::vector<ThresholdStep> steps;
    bool star_forest_ok = true;  // red chi' stayed a disjoint union of stars
    bool verified = false;

    std::string to_json() const;
};

// Variant that exposes all pairs among extracted vertices with threshold
// alpha (default 1/(2n)).  Two red chi' edges sharing a vertex that is not
// the latest endpoint of both force a red K_4^(3) minus an edge; otherwise a
// blue (n-1)-clique plus a survivor yields a blue n-set.
K43eResult k43e_extract(const OraclePtr& oracle, int n, std::int64_t N,
                        std::optional<double> alpha = std::nullopt);

struct BoundValue {
    double value = 0;  // may be +inf when it leaves double range
    double log2 = 0;
};

// (v+1) alpha^-r (1-alpha)^(r-m) with (v,r,m) the builder budget for
// (s-1, n-1); evaluated in log space.
BoundValue extraction_bound(int s, int n, double alpha);
// Grid minimizer of the bound over alpha in (0, 1/2].
double optimal_alpha(int s, int n, int grid = 1 << 20);

// Exponent (s-3)/(s-2)! * (s+n)^(s-2) * log2(64 n / s); requires 4 <= s <= n.
double offdiag_exponent(int s, int n);

// log2 log2 of the alpha = 1/2 bound for targets (k,k).
double diagonal_log2log2(int k);

struct TowerBound {
    int height = 1;   // number of 2^ applications above `top`
    double top = 0;   // topmost exponent
    std::string text; // rendered form, e.g. "2^15"
};

// r_k(s,n) <= 2^C(r_{k-1}(s-1,n-1), k-1), recursing down to the base table of
// graph Ramsey values/bounds.
TowerBound recursion_bound(int k, int s, int n,
                           const std::function<double(int, int)>& base);

// Known exact graph Ramsey numbers r(s,n) for tiny s,n, with the
// C(s+n-2, s-1) upper bound beyond the known range.
double classical_r2_bound(int s, int n);

}  // namespace ramsey

#endif
