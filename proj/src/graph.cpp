#include "ramsey/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

BitGraph::BitGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), Bitset(n)) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
}

void BitGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
}

std::int64_t BitGraph::edge_count() const {
    std::int64_t total = 0;
    for (const auto& row : adj_) total += row.count();
    return total / 2;
}

BitGraph BitGraph::complement() const {
    BitGraph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    return c;
}

void BitGraph::validate() const {
    for (int u = 0; u < n_; ++u) {
        if (adjacent(u, u)) throw std::logic_error("self-loop");
        for (int v = 0; v < n_; ++v)
            if (adjacent(u, v) != adjacent(v, u)) throw std::logic_error("asymmetric adjacency");
    }
}

BitGraph empty_graph(int n) { return BitGraph(n); }

BitGraph complete_graph(int n) {
    BitGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

BitGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    BitGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

BitGraph petersen_graph() {
    BitGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

BitGraph random_graph(int n, std::uint64_t seed, double p) {
    BitGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_from_hash(hash64(seed, static_cast<std::uint64_t>(u),
                                      static_cast<std::uint64_t>(v))) < p)
                g.add_edge(u, v);
    return g;
}

BitGraph read_graph(std::istream& in) {
    std::string tag;
    if (!(in >> tag) || tag != "p") throw std::runtime_error("graph file: expected 'p <n>'");
    int n = 0;
    if (!(in >> n) || n < 0) throw std::runtime_error("graph file: bad vertex count");
    BitGraph g(n);
    int u, v;
    while (in >> tag) {
        if (tag != "e") throw std::runtime_error("graph file: expected 'e <u> <v>'");
        if (!(in >> u >> v)) throw std::runtime_error("graph file: bad edge line");
        g.add_edge(u, v);
    }
    return g;
}

BitGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const BitGraph& g) {
    out << "p " << g.order() << "\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out << "e " << u << " " << v << "\n";
}

}  // namespace ramsey
