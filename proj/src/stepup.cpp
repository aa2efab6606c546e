#include "ramsey/stepup.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ramsey {

int delta(std::uint32_t v1, std::uint32_t v2) {
    if (v1 == v2) throw std::invalid_argument("delta requires distinct strings");
    return std::bit_width(v1 ^ v2);
}

int delta(StepUpVertex e1, StepUpVertex e2) { return delta(e1.value, e2.value); }

int stepup_color(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                 const BitGraph& base) {
    std::uint32_t e1 = a, e2 = b, e3 = c;
    if (e1 > e2) std::swap(e1, e2);
    if (e2 > e3) std::swap(e2, e3);
    if (e1 > e2) std::swap(e1, e2);
    int d1 = delta(e1, e2);
    int d2 = delta(e2, e3);
    if (d1 == d2) throw std::logic_error("equal deltas on an increasing chain");
    if (base.adjacent(d1 - 1, d2 - 1)) return d1 < d2 ? kC1 : kC2;
    return kC3;
}

}  // namespace ramsey
