#include "ramsey/tournament.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

Tournament::Tournament(int n) : n_(n), beats_(static_cast<std::size_t>(n), Bitset(n)) {
    if (n < 0) throw std::invalid_argument("tournament order must be nonnegative");
}

void Tournament::set_winner(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("tournament vertex out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    beats_[static_cast<std::size_t>(u)].set(v);
    beats_[static_cast<std::size_t>(v)].reset(u);
}

void Tournament::validate() const {
    for (int u = 0; u < n_; ++u) {
        if (beats(u, u)) throw std::logic_error("self-loop");
        for (int v = u + 1; v < n_; ++v)
            if (beats(u, v) == beats(v, u))
                throw std::logic_error("pair without exactly one orientation");
    }
}

Tournament rotational_tournament(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("rotational tournament needs odd order");
    Tournament t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= (n - 1) / 2; ++j) t.set_winner(i, (i + j) % n);
    return t;
}

Tournament transitive_tournament(int n) {
    Tournament t(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) t.set_winner(u, v);
    return t;
}

Tournament near_regular_tournament(int n) {
    if (n % 2 == 1) return rotational_tournament(n);
    // Rotational on n-1 plus one vertex beating the first (n-2)/2 of them:
    // half the outdegrees land on (n-2)/2, half on n/2.
    Tournament t(n);
    int m = n - 1;
    for (int i = 0; i < m; ++i)
        for (int j = 1; j <= (m - 1) / 2; ++j) t.set_winner(i, (i + j) % m);
    for (int i = 0; i < m; ++i) {
        if (i < (n - 2) / 2)
            t.set_winner(m, i);
        else
            t.set_winner(i, m);
    }
    return t;
}

Tournament random_tournament(int n, std::uint64_t seed) {
    Tournament t(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (hash64(seed, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)) & 1u)
                t.set_winner(u, v);
            else
                t.set_winner(v, u);
        }
    return t;
}

Tournament tournament_from_mask(int n, std::uint64_t mask) {
    if (n * (n - 1) / 2 > 64) throw std::invalid_argument("mask form limited to C(n,2) <= 64");
    Tournament t(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1u)
                t.set_winner(u, v);
            else
                t.set_winner(v, u);
        }
    return t;
}

std::int64_t count_cyclic_triangles(const Tournament& t) {
    std::int64_t n = t.order();
    std::int64_t total = n * (n - 1) * (n - 2) / 6;
    for (int v = 0; v < t.order(); ++v) {
        std::int64_t d = t.outdegree(v);
        total -= d * (d - 1) / 2;
    }
    return total;
}

std::int64_t count_cyclic_triangles_direct(const Tournament& t) {
    std::int64_t count = 0;
    for (int a = 0; a < t.order(); ++a)
        for (int b = a + 1; b < t.order(); ++b)
            for (int c = b + 1; c < t.order(); ++c)
                if (t.cyclic(a, b, c)) ++count;
    return count;
}

namespace {

struct TransitiveSearch {
    const Tournament& t;
    int cap;
    std::uint64_t node_cap;
    TransitiveResult result;
    std::vector<int> chain;

    // Candidates are vertices dominated by every chain vertex; any extension
    // keeps the chain transitive, so plain DFS with a size bound is exact.
    void expand(const Bitset& candidates) {
        ++result.nodes;
        if (node_cap && result.nodes > node_cap) {
            result.budget_exceeded = true;
            return;
        }
        if (static_cast<int>(chain.size()) > result.size) {
            result.size = static_cast<int>(chain.size());
            result.order = chain;
        }
        if (static_cast<int>(chain.size()) == cap) return;
        if (static_cast<int>(chain.size()) + candidates.count() <= result.size) return;
        for (int v = candidates.lowest(); v != -1; v = candidates.next(v + 1)) {
            Bitset next = candidates;
            next &= t.dominated(v);
            chain.push_back(v);
            expand(next);
            chain.pop_back();
            if (result.budget_exceeded) return;
        }
    }
};

}  // namespace

TransitiveResult max_transitive_subtournament(const Tournament& t, int cap,
                                              std::uint64_t node_cap) {
    if (cap < 0 || cap > t.order()) throw std::invalid_argument("cap out of range");
    TransitiveSearch search{t, cap, node_cap, {}, {}};
    Bitset all(t.order());
    for (int v = 0; v < t.order(); ++v) all.set(v);
    search.expand(all);
    return search.result;
}

Tournament read_tournament(std::istream& in) {
    std::string tag;
    if (!(in >> tag) || tag != "t") throw std::runtime_error("tournament file: expected 't <n>'");
    int n = 0;
    if (!(in >> n) || n < 0) throw std::runtime_error("tournament file: bad vertex count");
    Tournament t(n);
    for (int i = 0; i < n; ++i) {
        std::string row;
        if (!(in >> row) || static_cast<int>(row.size()) != n)
            throw std::runtime_error("tournament file: bad matrix row");
        for (int j = 0; j < n; ++j)
            if (row[static_cast<std::size_t>(j)] == '1') {
                if (i == j) throw std::runtime_error("tournament file: nonzero diagonal");
                t.set_winner(i, j);
            }
    }
    t.validate();
    return t;
}

Tournament load_tournament(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tournament file: " + path);
    return read_tournament(in);
}

void write_tournament(std::ostream& out, const Tournament& t) {
    out << "t " << t.order() << "\n";
    for (int i = 0; i < t.order(); ++i) {
        for (int j = 0; j < t.order(); ++j) out << (i != j && t.beats(i, j) ? '1' : '0');
        out << "\n";
    }
}

}  // namespace ramsey
