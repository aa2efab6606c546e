#include "ramsey/game.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

std::int64_t checked_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > (std::int64_t{1} << 62) / (n - k + i))
            throw std::overflow_error("binomial exceeds 64 bits");
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

Budget builder_budget(int s, int n) {
    if (s < 2 || n < 2) throw std::invalid_argument("targets need s, n >= 2");
    std::int64_t c = checked_binomial(s + n - 2, s - 1);
    auto mul_add = [](std::int64_t f, std::int64_t c_, const char* what) {
        if (f != 0 && c_ > ((std::int64_t{1} << 62) - 1) / f)
            throw std::overflow_error(what);
        return f * c_ + 1;
    };
    Budget b;
    b.vertices = c;
    b.red_edges = mul_add(s - 2, c, "red-edge budget exceeds 64 bits");
    b.total_edges = mul_add(s + n - 4, c, "edge budget exceeds 64 bits");
    return b;
}

GameState::GameState(int s, int n, int max_vertices)
    : s_(s), n_(n), cap_(max_vertices),
      colors_(static_cast<std::size_t>(max_vertices) * max_vertices, -1),
      labels_(static_cast<std::size_t>(max_vertices)) {
    if (s < 2 || n < 2) throw std::invalid_argument("targets need s, n >= 2");
    if (max_vertices < 1) throw std::invalid_argument("need room for at least one vertex");
    adj_[0].assign(static_cast<std::size_t>(max_vertices), Bitset(max_vertices));
    adj_[1].assign(static_cast<std::size_t>(max_vertices), Bitset(max_vertices));
}

int GameState::expose_vertex() {
    if (exposed_ == cap_) throw std::logic_error("vertex capacity exhausted");
    ++used_.vertices;
    return exposed_++;
}

void GameState::draw_edge(int u, int v, EdgeColor c) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= exposed_ || u == v)
        throw std::invalid_argument("edge must join two exposed vertices");
    if (edge_color(u, v) != -1) throw std::invalid_argument("edge already drawn");
    colors_[static_cast<std::size_t>(u) * cap_ + v] = static_cast<std::int8_t>(c);
    colors_[static_cast<std::size_t>(v) * cap_ + u] = static_cast<std::int8_t>(c);
    int ci = static_cast<int>(c);
    adj_[ci][static_cast<std::size_t>(u)].set(v);
    adj_[ci][static_cast<std::size_t>(v)].set(u);
    ++used_.total_edges;
    if (c == EdgeColor::red) ++used_.red_edges;
}

int GameState::edge_color(int u, int v) const {
    return colors_[static_cast<std::size_t>(u) * cap_ + v];
}

const Bitset& GameState::colored_neighbors(int v, EdgeColor c) const {
    return adj_[static_cast<int>(c)][static_cast<std::size_t>(v)];
}

void GameState::set_label(int v, std::string label) {
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

namespace {

// Clique of size `need` inside `candidates`, all pairs colored c.
bool clique_in(const std::vector<Bitset>& adj, Bitset candidates, int need,
               std::vector<int>* out) {
    if (need == 0) return true;
    if (candidates.count() < need) return false;
    for (int v = candidates.lowest(); v != -1; v = candidates.next(v + 1)) {
        Bitset next = candidates;
        next &= adj[static_cast<std::size_t>(v)];
        if (out) out->push_back(v);
        if (clique_in(adj, next, need - 1, out)) return true;
        if (out) out->pop_back();
        candidates.reset(v);
        if (candidates.count() < need) return false;
    }
    return false;
}

int largest_clique_in(const std::vector<Bitset>& adj, Bitset candidates) {
    int best = 0;
    std::vector<int> stack;
    auto dfs = [&](auto&& self, Bitset cand) -> void {
        best = std::max(best, static_cast<int>(stack.size()));
        for (int v = cand.lowest(); v != -1; v = cand.next(v + 1)) {
            if (static_cast<int>(stack.size()) + cand.count() <= best) return;
            Bitset next = cand;
            next &= adj[static_cast<std::size_t>(v)];
            stack.push_back(v);
            self(self, next);
            stack.pop_back();
            cand.reset(v);
        }
    };
    dfs(dfs, candidates);
    return best;
}

}  // namespace

std::optional<std::vector<int>> GameState::clique_through(int u, int v, EdgeColor c,
                                                          int size) const {
    if (size < 2) throw std::invalid_argument("clique size below an edge");
    if (edge_color(u, v) != static_cast<int>(c)) return std::nullopt;
    std::vector<int> rest;
    Bitset common = colored_neighbors(u, c);
    common &= colored_neighbors(v, c);
    if (!clique_in(adj_[static_cast<int>(c)], common, size - 2, &rest)) return std::nullopt;
    rest.push_back(u);
    rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    return rest;
}

int GameState::max_clique_through(int u, int v, EdgeColor c) const {
    Bitset common = colored_neighbors(u, c);
    common &= colored_neighbors(v, c);
    return 2 + largest_clique_in(adj_[static_cast<int>(c)], common);
}

Transcript run_game(Builder& builder, Painter& painter, int s, int n,
                    const Budget& limits) {
    if (limits.vertices < 1) throw std::invalid_argument("vertex limit below 1");
    GameState st(s, n, static_cast<int>(limits.vertices));
    Transcript t;
    t.s = s;
    t.n = n;
    bool decided = false;
    try {
        while (!decided && st.vertex_count() < limits.vertices) {
            int v = st.expose_vertex();
            t.moves.push_back({false, -1, -1, EdgeColor::red});
            builder.on_vertex(st, v);
            painter.on_vertex(st, v);
            int last = -1;
            bool pass_open = true;
            while (pass_open) {
                auto target = builder.next_target(st, v);
                if (!target) break;
                int u = *target;
                if (u <= last || u >= v)
                    throw std::logic_error("builder targets must be increasing earlier vertices");
                last = u;
                if (st.used().total_edges == limits.total_edges) {
                    decided = true;  // edge budget spent; outcome stays exhausted
                    break;
                }
                EdgeColor c = painter.color_edge(st, u, v);
                st.draw_edge(u, v, c);
                t.moves.push_back({true, u, v, c});
                builder.on_edge(st, u, v, c);
                int goal = c == EdgeColor::red ? s : n;
                if (auto clique = st.clique_through(u, v, c, goal)) {
                    t.kind = c == EdgeColor::red ? OutcomeKind::red_clique
                                                 : OutcomeKind::blue_clique;
                    t.witness = *clique;
                    decided = true;
                    break;
                }
                if (st.used().red_edges > limits.red_edges) {
                    decided = true;
                    break;
                }
            }
            if (!decided) builder.on_pass_end(st, v);
        }
    } catch (const PainterAborted&) {
        t.aborted = true;
    }
    t.used = st.used();
    return t;
}

Transcript run_game(Builder& builder, Painter& painter, int s, int n) {
    return run_game(builder, painter, s, n, builder_budget(s, n));
}

namespace {

class LabelTreeBuilder final : public Builder {
  public:
    LabelTreeBuilder(int s, int n) : s_(s), n_(n) {}

    void on_vertex(const GameState&, int) override { path_.clear(); }

    std::optional<int> next_target(const GameState&, int) override {
        auto it = owners_.find(path_);
        if (it == owners_.end()) return std::nullopt;  // the vertex claims this label
        return it->second;
    }

    void on_edge(const GameState&, int, int, EdgeColor c) override {
        path_ += c == EdgeColor::red ? 'R' : 'B';
    }

    void on_pass_end(GameState& g, int v) override {
        owners_.emplace(path_, v);
        g.set_label(v, path_);
    }

  private:
    int s_, n_;
    std::map<std::string, int> owners_;
    std::string path_;
};

class CompleteBuilder final : public Builder {
  public:
    void on_vertex(const GameState&, int) override { next_ = 0; }
    std::optional<int> next_target(const GameState&, int v) override {
        if (next_ >= v) return std::nullopt;
        return next_++;
    }

  private:
    int next_ = 0;
};

class ConstPainter final : public Painter {
  public:
    explicit ConstPainter(EdgeColor c) : c_(c) {}
    EdgeColor color_edge(const GameState&, int, int) override { return c_; }

  private:
    EdgeColor c_;
};

class RandomPainter final : public Painter {
  public:
    RandomPainter(double p, std::uint64_t seed)
        : p_(p), rng_(substream(seed, "painter")) {}
    EdgeColor color_edge(const GameState&, int, int) override {
        return rng_.next_unit() < p_ ? EdgeColor::red : EdgeColor::blue;
    }

  private:
    double p_;
    SplitMix64 rng_;
};

class GreedyAdversarialPainter final : public Painter {
  public:
    EdgeColor color_edge(const GameState& g, int u, int v) override {
        int red_clique = g.max_clique_through(u, v, EdgeColor::red);
        int blue_clique = g.max_clique_through(u, v, EdgeColor::blue);
        bool red_safe = red_clique < g.target_red();
        bool blue_safe = blue_clique < g.target_blue();
        if (red_safe != blue_safe) return red_safe ? EdgeColor::red : EdgeColor::blue;
        // both safe: keep the larger distance from completion; both lost: red
        if (!red_safe) return EdgeColor::red;
        std::int64_t red_slack = g.target_red() - red_clique;
        std::int64_t blue_slack = g.target_blue() - blue_clique;
        return red_slack > blue_slack ? EdgeColor::red : EdgeColor::blue;
    }
};

class InteractivePainter final : public Painter {
  public:
    InteractivePainter(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    void on_vertex(const GameState& g, int v) override {
        out_ << "vertex " << v << " exposed (" << g.vertex_count() << " total)\n";
    }

    EdgeColor color_edge(const GameState& g, int u, int v) override {
        out_ << "drawn so far:";
        for (int w = 0; w < g.vertex_count(); ++w) {
            out_ << "  " << w << ":";
            bool first = true;
            for (int x = 0; x < g.vertex_count(); ++x) {
                int c = x == w ? -1 : g.edge_color(std::min(w, x), std::max(w, x));
                if (c != -1) {
                    out_ << (first ? " " : ",") << x << (c == 0 ? "r" : "b");
                    first = false;
                }
            }
        }
        out_ << "\n";
        while (true) {
            out_ << "color edge {" << u << "," << v << "} (r/b)? " << std::flush;
            std::string token;
            if (!(in_ >> token)) throw PainterAborted{};
            if (token == "r") return EdgeColor::red;
            if (token == "b") return EdgeColor::blue;
            out_ << "please answer r or b\n";
        }
    }

  private:
    std::istream& in_;
    std::ostream& out_;
};

}  // namespace

ThresholdPainter::ThresholdPainter(OraclePtr oracle, double alpha, std::int64_t universe)
    : oracle_(std::move(oracle)), alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 0.5))
        throw std::invalid_argument("threshold needs 0 < alpha <= 1/2");
    if (universe > oracle_->universe())
        throw std::invalid_argument("universe exceeds the oracle's");
    if (oracle_->palette() != 2)
        throw std::invalid_argument("threshold painter needs a 2-color oracle");
    pool_.resize(static_cast<std::size_t>(universe));
    for (std::int64_t i = 0; i < universe; ++i) pool_[static_cast<std::size_t>(i)] = i;
}

void ThresholdPainter::on_vertex(const GameState&, int) {
    if (pool_.empty()) {
        starved_ = true;
        chosen_.push_back(-1);
        return;
    }
    chosen_.push_back(pool_.front());  // lowest surviving universe vertex
    pool_.erase(pool_.begin());
}

EdgeColor ThresholdPainter::color_edge(const GameState&, int u, int v) {
    std::int64_t a = chosen_[static_cast<std::size_t>(u)];
    std::int64_t b = chosen_[static_cast<std::size_t>(v)];
    ThresholdStep step;
    step.u = u;
    step.v = v;
    step.pool_before = static_cast<std::int64_t>(pool_.size());
    if (a < 0 || b < 0) {  // starved; keep the literal threshold rule on an empty pool
        step.color = EdgeColor::red;
        step.pool_after = step.pool_before;
        steps_.push_back(step);
        return step.color;
    }
    std::int64_t red_count = 0;
    for (std::int64_t w : pool_)
        if (oracle_->color(a, b, w) == kRed) ++red_count;
    bool red = static_cast<double>(red_count) >=
               alpha_ * static_cast<double>(pool_.size());
    int keep = red ? kRed : kBlue;
    std::vector<std::int64_t> next;
    next.reserve(pool_.size());
    for (std::int64_t w : pool_)
        if (oracle_->color(a, b, w) == keep) next.push_back(w);
    pool_ = std::move(next);
    step.color = red ? EdgeColor::red : EdgeColor::blue;
    step.red_count = red_count;
    step.pool_after = static_cast<std::int64_t>(pool_.size());
    steps_.push_back(step);
    return step.color;
}

std::unique_ptr<Builder> label_tree_builder(int s, int n) {
    return std::make_unique<LabelTreeBuilder>(s, n);
}
std::unique_ptr<Builder> complete_builder() { return std::make_unique<CompleteBuilder>(); }
std::unique_ptr<Painter> all_red_painter() {
    return std::make_unique<ConstPainter>(EdgeColor::red);
}
std::unique_ptr<Painter> all_blue_painter() {
    return std::make_unique<ConstPainter>(EdgeColor::blue);
}
std::unique_ptr<Painter> random_painter(double p, std::uint64_t seed) {
    return std::make_unique<RandomPainter>(p, seed);
}
std::unique_ptr<Painter> greedy_adversarial_painter() {
    return std::make_unique<GreedyAdversarialPainter>();
}
std::unique_ptr<Painter> interactive_painter(std::istream& in, std::ostream& out) {
    return std::make_unique<InteractivePainter>(in, out);
}

std::string Transcript::to_json() const {
    nlohmann::ordered_json j;
    j["target"] = {s, n};
    j["moves"] = nlohmann::ordered_json::array();
    for (const auto& m : moves) {
        nlohmann::ordered_json jm;
        if (m.is_edge) {
            jm["op"] = "edge";
            jm["u"] = m.u;
            jm["v"] = m.v;
            jm["color"] = m.color == EdgeColor::red ? "r" : "b";
        } else {
            jm["op"] = "vertex";
        }
        j["moves"].push_back(std::move(jm));
    }
    const char* kind_name = kind == OutcomeKind::red_clique    ? "red"
                            : kind == OutcomeKind::blue_clique ? "blue"
                                                               : "exhausted";
    j["outcome"] = {{"kind", kind_name}, {"witness", witness}};
    j["budget"] = {{"v", used.vertices}, {"r", used.red_edges}, {"m", used.total_edges}};
    return j.dump();
}

Transcript Transcript::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Transcript t;
    t.s = j.at("target").at(0).get<int>();
    t.n = j.at("target").at(1).get<int>();
    for (const auto& jm : j.at("moves")) {
        GameMove m;
        if (jm.at("op") == "edge") {
            m.is_edge = true;
            m.u = jm.at("u").get<int>();
            m.v = jm.at("v").get<int>();
            m.color = jm.at("color") == "r" ? EdgeColor::red : EdgeColor::blue;
        }
        t.moves.push_back(m);
    }
    std::string kind = j.at("outcome").at("kind").get<std::string>();
    t.kind = kind == "red"    ? OutcomeKind::red_clique
             : kind == "blue" ? OutcomeKind::blue_clique
                              : OutcomeKind::exhausted;
    t.witness = j.at("outcome").at("witness").get<std::vector<int>>();
    t.used.vertices = j.at("budget").at("v").get<std::int64_t>();
    t.used.red_edges = j.at("budget").at("r").get<std::int64_t>();
    t.used.total_edges = j.at("budget").at("m").get<std::int64_t>();
    return t;
}

Transcript replay_transcript(const Transcript& t) {
    int vertices = 0;
    for (const auto& m : t.moves)
        if (!m.is_edge) ++vertices;
    GameState st(t.s, t.n, std::max(vertices, 1));
    Transcript out;
    out.s = t.s;
    out.n = t.n;
    out.moves = t.moves;
    for (const auto& m : t.moves) {
        if (!m.is_edge) {
            st.expose_vertex();
            continue;
        }
        st.draw_edge(m.u, m.v, m.color);
        int goal = m.color == EdgeColor::red ? t.s : t.n;
        if (auto clique = st.clique_through(m.u, m.v, m.color, goal)) {
            out.kind = m.color == EdgeColor::red ? OutcomeKind::red_clique
                                                 : OutcomeKind::blue_clique;
            out.witness = *clique;
        }
    }
    out.used = st.used();
    return out;
}

// ---------------------------------------------------------------------------
// Exact minimax for the vertex on-line game, tiny parameters only.

namespace {

struct MinimaxAborted {};

// Up to 7 vertices; adjacency masks per color plus the pass position.
struct SmallState {
    int t = 1;  // exposed vertices, vertex t-1 is current
    int p = 0;  // next pass decision concerns vertex p
    std::uint8_t adj[2][7] = {};

    int edge_color(int u, int v) const {
        if (adj[0][u] & (1u << v)) return 0;
        if (adj[1][u] & (1u << v)) return 1;
        return -1;
    }
    void add_edge(int u, int v, int c) {
        adj[c][u] |= static_cast<std::uint8_t>(1u << v);
        adj[c][v] |= static_cast<std::uint8_t>(1u << u);
    }
    bool wins(int u, int v, int c, int goal) const {
        // clique of size goal through (u,v) in color c
        std::uint8_t common = adj[c][u] & adj[c][v];
        if (goal <= 2) return true;
        return has_clique(common, c, goal - 2);
    }
    bool has_clique(std::uint8_t cand, int c, int need) const {
        if (need == 0) return true;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= static_cast<std::uint8_t>(cand - 1);
            if (has_clique(static_cast<std::uint8_t>(adj[c][v] & cand), c, need - 1))
                return true;
        }
        return false;
    }
};

struct MinimaxSolver {
    int s, n, cap;
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;
    // exact value when <= tested allowance, else the allowance that failed
    struct Entry {
        std::int16_t exact = -1;
        std::int16_t fail = -1;
    };
    std::unordered_map<std::uint64_t, Entry> memo;

    static constexpr int kInf = 1 << 12;

    // Relabel by (processed, signature) within the prefix/suffix groups, then
    // pack pairs as 2-bit codes.  Any such relabeling preserves the game, so
    // equal keys are safely merged (unequal keys may still be equivalent).
    std::uint64_t key(const SmallState& st) const {
        int order[7], rank[7];
        std::uint64_t sig[7];
        int t = st.t, p = st.p;
        for (int i = 0; i < t - 1; ++i) {
            int red_deg = std::popcount(st.adj[0][i]);
            int blue_deg = std::popcount(st.adj[1][i]);
            int to_cur = st.edge_color(i, t - 1) + 1;
            sig[i] = (static_cast<std::uint64_t>(i < p) << 32) |
                     (static_cast<std::uint64_t>(to_cur) << 16) |
                     (static_cast<std::uint64_t>(red_deg) << 8) |
                     static_cast<std::uint64_t>(blue_deg);
        }
        for (int i = 0; i < t - 1; ++i) order[i] = i;
        std::stable_sort(order, order + t - 1, [&](int a, int b) {
            bool pa = a < p, pb = b < p;
            if (pa != pb) return pa;  // processed group first
            return sig[a] < sig[b];
        });
        for (int i = 0; i < t - 1; ++i) rank[order[i]] = i;
        rank[t - 1] = t - 1;
        int inv[7];
        for (int i = 0; i < t; ++i) inv[rank[i]] = i;

        std::uint64_t k = 0;
        int pair = 0;
        for (int ru = 0; ru < t; ++ru)
            for (int rv = ru + 1; rv < t; ++rv, ++pair)
                k |= static_cast<std::uint64_t>(st.edge_color(inv[ru], inv[rv]) + 1)
                     << (2 * pair);
        k |= static_cast<std::uint64_t>(t) << 52;
        k |= static_cast<std::uint64_t>(p) << 56;
        return k;
    }

    std::uint64_t canonical(const SmallState& st) const {
        std::uint64_t k = key(st);
        if (s == n) {
            SmallState sw = st;
            for (int i = 0; i < st.t; ++i) std::swap(sw.adj[0][i], sw.adj[1][i]);
            k = std::min(k, key(sw));
        }
        return k;
    }

    // Minimum edges builder still needs, or allow+1 when that exceeds allow.
    int solve(const SmallState& st, int allow) {
        if (allow < 0) return allow + 1;
        ++nodes;
        if (node_cap && nodes > node_cap) throw MinimaxAborted{};
        std::uint64_t k = canonical(st);
        auto it = memo.find(k);
        if (it != memo.end()) {
            if (it->second.exact >= 0)
                return it->second.exact <= allow ? it->second.exact : allow + 1;
            if (it->second.fail >= allow) return allow + 1;
        }

        int value = kInf;
        if (st.p == st.t - 1) {
            if (st.t < cap) {
                SmallState next = st;
                ++next.t;
                next.p = 0;
                value = solve(next, allow);
            }
        } else {
            // draw the edge (p, t-1): painter answers worst-case
            int u = st.p, v = st.t - 1;
            int worst = 0;
            for (int c = 0; c < 2 && worst <= allow; ++c) {
                int goal = c == 0 ? s : n;
                int sub;
                if (st.wins(u, v, c, goal)) {
                    sub = 0;
                } else {
                    SmallState next = st;
                    next.add_edge(u, v, c);
                    ++next.p;
                    sub = solve(next, allow - 1);
                }
                worst = std::max(worst, 1 + sub);
            }
            value = worst;
            // skip
            SmallState next = st;
            ++next.p;
            int skip = solve(next, std::min(allow, value - 1));
            value = std::min(value, skip);
        }

        Entry& e = memo[k];
        if (value <= allow) {
            e.exact = static_cast<std::int16_t>(value);
        } else {
            e.fail = std::max(e.fail, static_cast<std::int16_t>(allow));
            value = allow + 1;
        }
        return value;
    }
};

}  // namespace

MinimaxResult minimax_online(int s, int n, int vertex_cap, std::uint64_t node_cap) {
    if (s < 2 || n < 2) throw std::invalid_argument("targets need s, n >= 2");
    if (vertex_cap < 2 || vertex_cap > 7)
        throw std::invalid_argument("minimax supports 2..7 vertices");
    MinimaxResult result;
    MinimaxSolver solver;
    solver.s = s;
    solver.n = n;
    solver.cap = vertex_cap;
    solver.node_cap = node_cap;
    int allow = 0;
    {
        // start from the Lemma budget when it fits, else C(cap,2)
        std::int64_t m = vertex_cap * (vertex_cap - 1) / 2;
        try {
            m = std::min<std::int64_t>(m, builder_budget(s, n).total_edges);
        } catch (const std::overflow_error&) {
        }
        allow = static_cast<int>(m);
    }
    SmallState root;
    try {
        int value = solver.solve(root, allow);
        result.nodes = solver.nodes;
        if (value <= allow) {
            result.solved = true;
            result.forced = true;
            result.value = value;
        } else {
            result.solved = true;
            result.forced = false;  // painter survives every line within the caps
        }
    } catch (const MinimaxAborted&) {
        result.nodes = solver.nodes;
        result.budget_exceeded = true;
        return result;
    }

    if (result.forced) {
        // principal variation: builder takes argmin (skip preferred on ties),
        // painter argmax (red preferred on ties), values read off the memo
        SmallState st;
        int need = result.value;
        result.line.push_back({false, -1, -1, EdgeColor::red});  // root vertex
        while (need > 0) {
            if (st.p == st.t - 1) {
                result.line.push_back({false, -1, -1, EdgeColor::red});
                ++st.t;
                st.p = 0;
                continue;
            }
            int u = st.p, v = st.t - 1;
            bool win_now[2] = {false, false};
            int sub[2] = {0, 0};
            int worst = 0, worst_c = 0;
            for (int c = 0; c < 2; ++c) {
                int goal = c == 0 ? s : n;
                if (st.wins(u, v, c, goal)) {
                    win_now[c] = true;
                } else {
                    SmallState next = st;
                    next.add_edge(u, v, c);
                    ++next.p;
                    sub[c] = solver.solve(next, need - 1);
                }
                if (1 + sub[c] > worst) {
                    worst = 1 + sub[c];
                    worst_c = c;
                }
            }
            SmallState skipped = st;
            ++skipped.p;
            if (solver.solve(skipped, need) <= worst) {
                st = skipped;  // skipping is no worse; not a transcript move
                continue;
            }
            result.line.push_back(
                {true, u, v, worst_c == 0 ? EdgeColor::red : EdgeColor::blue});
            if (win_now[worst_c]) break;
            st.add_edge(u, v, worst_c);
            ++st.p;
            need = sub[worst_c];
        }
    }
    return result;
}

}  // namespace ramsey
