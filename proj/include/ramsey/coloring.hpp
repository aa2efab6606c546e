#ifndef RAMSEY_COLORING_HPP
#define RAMSEY_COLORING_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey {

// Index of unordered pair {a,b}, a<b, in lexicographic order over [0,n).
inline int pair_index(int a, int b, int n) {
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

// Total edge coloring of K_n with a small palette (2 or 3 colors).
// Palette-2 convention: 0 = red/I, 1 = blue/II.  Palette-3: 0,1,2 = I,II,III.
class EdgeColoring {
  public:
    EdgeColoring() = default;
    EdgeColoring(int n, int palette, int fill = 0);

    int order() const { return n_; }
    int palette() const { return palette_; }
    int color(int a, int b) const;
    void set_color(int a, int b, int c);

    void validate() const;

  private:
    int n_ = 0;
    int palette_ = 2;
    std::vector<std::uint8_t> colors_;
};

// Color II (=1) iff b-a is even.
inline int parity_color(int a, int b) { return (b - a) % 2 == 0 ? 1 : 0; }
EdgeColoring parity_coloring(int n);

// Red (=0) exactly on the edges of the 5-cycle 0-1-2-3-4-0.
EdgeColoring pentagon_coloring();

// Text format: `c <n> <palette>`, then `e <u> <v> <color>` per pair.
EdgeColoring read_coloring(std::istream& in);
EdgeColoring load_coloring(const std::string& path);
void write_coloring(std::ostream& out, const EdgeColoring& c);

}  // namespace ramsey

#endif
