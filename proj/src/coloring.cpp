#include "ramsey/coloring.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace ramsey {

EdgeColoring::EdgeColoring(int n, int palette, int fill)
    : n_(n), palette_(palette),
      colors_(static_cast<std::size_t>(n) * (n - 1) / 2, static_cast<std::uint8_t>(fill)) {
    if (n < 0) throw std::invalid_argument("coloring order must be nonnegative");
    if (palette != 2 && palette != 3) throw std::invalid_argument("palette must be 2 or 3");
    if (fill < 0 || fill >= palette) throw std::invalid_argument("fill color outside palette");
}

int EdgeColoring::color(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n_ || a == b) throw std::out_of_range("pair out of range");
    return colors_[static_cast<std::size_t>(pair_index(a, b, n_))];
}

void EdgeColoring::set_color(int a, int b, int c) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n_ || a == b) throw std::out_of_range("pair out of range");
    if (c < 0 || c >= palette_) throw std::invalid_argument("color outside palette");
    colors_[static_cast<std::size_t>(pair_index(a, b, n_))] = static_cast<std::uint8_t>(c);
}

void EdgeColoring::validate() const {
    for (auto c : colors_)
        if (c >= palette_) throw std::logic_error("color outside palette");
}

EdgeColoring parity_coloring(int n) {
    EdgeColoring c(n, 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) c.set_color(a, b, parity_color(a, b));
    return c;
}

EdgeColoring pentagon_coloring() {
    EdgeColoring c(5, 2, 1);
    for (int i = 0; i < 5; ++i) c.set_color(i, (i + 1) % 5, 0);
    return c;
}

EdgeColoring read_coloring(std::istream& in) {
    std::string tag;
    if (!(in >> tag) || tag != "c")
        throw std::runtime_error("coloring file: expected 'c <n> <palette>'");
    int n = 0, palette = 0;
    if (!(in >> n >> palette)) throw std::runtime_error("coloring file: bad header");
    EdgeColoring c(n, palette);
    std::vector<bool> seen(static_cast<std::size_t>(n) * (n - 1) / 2, false);
    int u, v, k;
    while (in >> tag) {
        if (tag != "e") throw std::runtime_error("coloring file: expected 'e <u> <v> <color>'");
        if (!(in >> u >> v >> k)) throw std::runtime_error("coloring file: bad edge line");
        c.set_color(u, v, k);
        if (u > v) std::swap(u, v);
        seen[static_cast<std::size_t>(pair_index(u, v, n))] = true;
    }
    for (bool s : seen)
        if (!s) throw std::runtime_error("coloring file: not every pair colored");
    return c;
}

EdgeColoring load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coloring file: " + path);
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
    out << "c " << c.order() << " " << c.palette() << "\n";
    for (int a = 0; a < c.order(); ++a)
        for (int b = a + 1; b < c.order(); ++b)
            out << "e " << a << " " << b << " " << c.color(a, b) << "\n";
}

}  // namespace ramsey
