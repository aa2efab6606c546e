#ifndef RAMSEY_STEPUP_HPP
#define RAMSEY_STEPUP_HPP

#include <cstdint>

#include "ramsey/graph.hpp"

namespace ramsey {

// Vertex of the stepping-up ground set {0,1}^m: an m-bit string g_1..g_m with
// value b = sum g_i 2^(i-1), so coordinate 1 is the least significant bit and
// the string order coincides with the integer order.
struct StepUpVertex {
    std::uint32_t value = 0;
    int m = 0;

    int bit(int i) const { return (value >> (i - 1)) & 1u; }  // 1-indexed
};

// Largest coordinate (1-indexed) at which the two strings differ; requires
// distinct inputs (throws std::invalid_argument otherwise).
int delta(StepUpVertex e1, StepUpVertex e2);
int delta(std::uint32_t v1, std::uint32_t v2);

// Color classes of the stepping-up coloring.
inline constexpr int kC1 = 0;
inline constexpr int kC2 = 1;
inline constexpr int kC3 = 2;

// Three-way rule on a triple of distinct strings: sort them, take
// d1 = delta(e1,e2), d2 = delta(e2,e3) (never equal), and color
//   C1 if {d1,d2} is an edge of `base` and d1 < d2,
//   C2 if {d1,d2} is an edge of `base` and d1 > d2,
//   C3 otherwise.
// `base` lives on the coordinate set {1..m}, stored 0-indexed.
int stepup_color(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                 const BitGraph& base);

}  // namespace ramsey

#endif
