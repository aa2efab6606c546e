#include "ramsey/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace ramsey {

void Hypergraph3::normalize() {
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void Hypergraph3::validate() const {
    for (const auto& e : edges) {
        if (!(0 <= e[0] && e[0] < e[1] && e[1] < e[2] && e[2] < n))
            throw std::logic_error("triple not sorted-distinct in range");
    }
    if (!std::is_sorted(edges.begin(), edges.end()))
        throw std::logic_error("edge list not sorted");
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::logic_error("duplicate triple");
}

Hypergraph3 apex_hypergraph(const BitGraph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("apex construction needs a nonempty graph");
    Hypergraph3 h;
    h.n = g.order() + 1;
    int apex = g.order();
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) h.edges.push_back({u, v, apex});
    h.normalize();
    return h;
}

Hypergraph3 cycle_hypergraph(int n) {
    if (n < 4) throw std::invalid_argument("cycle hypergraph needs n >= 4");
    Hypergraph3 h;
    h.n = n;
    for (int i = 0; i < n; ++i) {
        int next = (i + 1) % n;
        for (int j = 0; j < n; ++j) {
            if (j == i || j == next) continue;
            h.edges.push_back({i, next, j});
        }
    }
    h.normalize();
    return h;
}

Hypergraph3 k4_minus_edge() {
    Hypergraph3 h;
    h.n = 4;
    h.edges = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
    h.normalize();
    return h;
}

bool hypergraphs_isomorphic(const Hypergraph3& a, const Hypergraph3& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    if (a.n > 8) throw std::invalid_argument("brute-force isomorphism limited to order 8");
    std::vector<int> perm(static_cast<std::size_t>(a.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Hypergraph3 mapped;
        mapped.n = a.n;
        mapped.edges.reserve(a.edges.size());
        for (const auto& e : a.edges)
            mapped.edges.push_back({perm[static_cast<std::size_t>(e[0])],
                                    perm[static_cast<std::size_t>(e[1])],
                                    perm[static_cast<std::size_t>(e[2])]});
        mapped.normalize();
        if (mapped.edges == b.edges) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

bool Blowup::is_edge(std::span<const std::int64_t> vertices) const {
    if (static_cast<int>(vertices.size()) != k) return false;
    std::vector<int> parts;
    parts.reserve(vertices.size());
    for (std::int64_t v : vertices) {
        if (v < 0 || v >= vertex_count()) return false;
        parts.push_back(part_of(v));
    }
    std::sort(parts.begin(), parts.end());
    return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

std::int64_t Blowup::edge_count() const {
    std::int64_t nk = 1;
    for (int i = 0; i < k; ++i) nk *= n;
    return binom(l, k) * nk;
}

Hypergraph3 Blowup::materialize() const {
    if (k != 3) throw std::invalid_argument("only k = 3 blow-ups are materialized");
    Hypergraph3 h;
    h.n = static_cast<int>(vertex_count());
    for (int a = 0; a < h.n; ++a)
        for (int b = a + 1; b < h.n; ++b)
            for (int c = b + 1; c < h.n; ++c) {
                std::int64_t v[3] = {a, b, c};
                if (is_edge(v)) h.edges.push_back({a, b, c});
            }
    h.normalize();
    return h;
}

bool blowup_density_bound_holds(const Blowup& b) {
    if (b.l < b.k) throw std::invalid_argument("blow-up needs l >= k");
    // l * C(l,k) * n^k >= (l - C(k,2)) * C(ln, k), exact integers
    std::int64_t lhs = b.l * b.edge_count();
    std::int64_t rhs = (b.l - binom(b.k, 2)) * binom(b.vertex_count(), b.k);
    return lhs >= rhs;
}

OddCycleCheck odd_cycle_red_check(const Tournament& t, int apex,
                                  std::span<const int> cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    for (int u : cycle)
        if (u == apex) throw std::invalid_argument("apex must not lie on the cycle");
    OddCycleCheck check;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
        int u = cycle[j];
        int v = cycle[(j + 1) % cycle.size()];
        if (!t.cyclic(apex, u, v)) {
            check.all_cyclic = false;
            check.index = static_cast<int>(j);
            check.triple = {apex, u, v};
            return check;
        }
    }
    check.all_cyclic = true;
    return check;
}

Hypergraph3 read_hypergraph(std::istream& in) {
    std::string tag;
    if (!(in >> tag) || tag != "h") throw std::runtime_error("hypergraph file: expected 'h <n> <m>'");
    int n = 0;
    std::int64_t m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("hypergraph file: bad header");
    Hypergraph3 h;
    h.n = n;
    int a, b, c;
    while (in >> tag) {
        if (tag != "t") throw std::runtime_error("hypergraph file: expected 't a b c'");
        if (!(in >> a >> b >> c)) throw std::runtime_error("hypergraph file: bad triple");
        h.edges.push_back({a, b, c});
    }
    if (static_cast<std::int64_t>(h.edges.size()) != m)
        throw std::runtime_error("hypergraph file: edge count mismatch");
    h.normalize();
    h.validate();
    return h;
}

void write_hypergraph(std::ostream& out, const Hypergraph3& h) {
    out << "h " << h.n << " " << h.edges.size() << "\n";
    for (const auto& e : h.edges) out << "t " << e[0] << " " << e[1] << " " << e[2] << "\n";
}

}  // namespace ramsey
