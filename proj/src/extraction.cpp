#include "ramsey/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ramsey {

void ExtractionConfig::validate() const {
    if (s < 3 || n < 3) throw std::invalid_argument("extraction needs s, n >= 3");
    if (!(alpha > 0.0 && alpha <= 0.5))
        throw std::invalid_argument("alpha must lie in (0, 1/2]");
    if (!oracle) throw std::invalid_argument("missing oracle");
    if (oracle->palette() != 2) throw std::invalid_argument("extraction needs a 2-color oracle");
    if (universe < 1 || universe > oracle->universe())
        throw std::invalid_argument("universe out of oracle range");
}

double ExtractionConfig::required_universe() const {
    return extraction_bound(s, n, alpha).value;
}

namespace {

struct BudgetD {
    double v, r, m;
};

BudgetD budget_double(int s, int n) {
    double c = std::exp(std::lgamma(s + n - 1) - std::lgamma(s) - std::lgamma(n));
    return {c, (s - 2) * c + 1, (s + n - 4) * c + 1};
}

// Survivor-size lower bound after `a` extracted vertices and (R, M) red/total
// chi' edges: (v+1-a) alpha^(R-r) (1-alpha)^(r-m+M-R).  Exact in integers at
// alpha = 1/2, log-space with 1e-9 slack otherwise.
bool induction_holds(std::int64_t pool, std::int64_t a, const Budget& b, double alpha,
                     std::int64_t red, std::int64_t total) {
    std::int64_t lead = b.vertices + 1 - a;
    if (lead <= 0) return true;
    if (alpha == 0.5) {
        std::int64_t shift = b.total_edges - total;
        if (shift < 0) return false;
        if (shift > 62 || lead > (std::int64_t{1} << 62) >> shift)
            return false;  // bound exceeds any desk-scale pool
        return pool >= (lead << shift);
    }
    if (pool <= 0) return false;
    double rhs = std::log(static_cast<double>(lead)) +
                 static_cast<double>(red - b.red_edges) * std::log(alpha) +
                 static_cast<double>(b.red_edges - b.total_edges + total - red) *
                     std::log1p(-alpha);
    return std::log(static_cast<double>(pool)) >= rhs - 1e-9;
}

bool verify_monochromatic(const TripleOracle& oracle,
                          const std::vector<std::int64_t>& set, int color) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            for (std::size_t k = j + 1; k < set.size(); ++k)
                if (oracle.color(set[i], set[j], set[k]) != color) return false;
    return true;
}

nlohmann::ordered_json steps_to_json(const std::vector<ThresholdStep>& steps) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& st : steps)
        arr.push_back({{"u", st.u},
                       {"v", st.v},
                       {"color", st.color == EdgeColor::red ? "r" : "b"},
                       {"red_count", st.red_count},
                       {"pool_before", st.pool_before},
                       {"pool_after", st.pool_after}});
    return arr;
}

}  // namespace

ExtractionResult erdos_rado_extract(const ExtractionConfig& cfg) {
    cfg.validate();
    Budget inner = builder_budget(cfg.s - 1, cfg.n - 1);
    auto builder = label_tree_builder(cfg.s - 1, cfg.n - 1);
    ThresholdPainter painter(cfg.oracle, cfg.alpha, cfg.universe);

    ExtractionResult res;
    res.game = run_game(*builder, painter, cfg.s - 1, cfg.n - 1, inner);
    res.steps = painter.steps();
    res.chosen = painter.chosen();

    // replay pool sizes and the survivor induction over the move list
    res.induction_ok = true;
    res.threshold_ok = true;
    {
        std::int64_t pool = cfg.universe;
        std::int64_t a = 0, red = 0, total = 0;
        std::size_t step = 0;
        for (const auto& move : res.game.moves) {
            if (!move.is_edge) {
                if (pool > 0) --pool;
                ++a;
                res.pool_trace.push_back(pool);
            } else {
                const ThresholdStep& ts = res.steps.at(step++);
                if (ts.color == EdgeColor::red) {
                    ++red;
                    if (static_cast<double>(ts.red_count) <
                        cfg.alpha * static_cast<double>(ts.pool_before))
                        res.threshold_ok = false;
                } else {
                    if (static_cast<double>(ts.red_count) >=
                        cfg.alpha * static_cast<double>(ts.pool_before))
                        res.threshold_ok = false;
                }
                ++total;
                pool = ts.pool_after;
                res.pool_trace.back() = pool;
            }
            if (!induction_holds(pool, a, inner, cfg.alpha, red, total))
                res.induction_ok = false;
        }
    }

    if (painter.starved() || res.game.kind == OutcomeKind::exhausted ||
        painter.pool().empty()) {
        res.kind = ExtractionKind::failure;
        return res;
    }

    for (int v : res.game.witness)
        res.witness.push_back(res.chosen.at(static_cast<std::size_t>(v)));
    res.witness.push_back(painter.pool().front());
    std::sort(res.witness.begin(), res.witness.end());
    int color = res.game.kind == OutcomeKind::red_clique ? kRed : kBlue;
    res.kind = color == kRed ? ExtractionKind::red_set : ExtractionKind::blue_set;
    res.verified = verify_monochromatic(*cfg.oracle, res.witness, color);
    return res;
}

std::string ExtractionResult::to_json() const {
    nlohmann::ordered_json j;
    const char* kind_name = kind == ExtractionKind::red_set    ? "red"
                            : kind == ExtractionKind::blue_set ? "blue"
                                                               : "failure";
    j["outcome"] = kind_name;
    j["witness"] = witness;
    j["chosen"] = chosen;
    j["pool_trace"] = pool_trace;
    j["steps"] = steps_to_json(steps);
    j["verified"] = verified;
    j["induction_ok"] = induction_ok;
    j["threshold_ok"] = threshold_ok;
    j["game"] = nlohmann::ordered_json::parse(game.to_json());
    return j.dump();
}

namespace {

// Star-forest invariant of the red chi' graph: every component is a star
// whose center is the latest vertex, i.e. a vertex with a red edge to a later
// vertex has no other red edge.
bool red_star_forest(const std::vector<std::pair<int, int>>& red_edges) {
    std::map<int, std::vector<int>> at;
    for (auto [u, v] : red_edges) {
        at[u].push_back(v);
        at[v].push_back(u);
    }
    for (const auto& [x, nbrs] : at) {
        bool has_later = false;
        for (int y : nbrs)
            if (y > x) has_later = true;
        if (has_later && nbrs.size() > 1) return false;
    }
    return true;
}

}  // namespace

K43eResult k43e_extract(const OraclePtr& oracle, int n, std::int64_t N,
                        std::optional<double> alpha) {
    if (!oracle || oracle->palette() != 2)
        throw std::invalid_argument("k43e extraction needs a 2-color oracle");
    if (n < 3) throw std::invalid_argument("k43e extraction needs n >= 3");
    if (N < 1 || N > oracle->universe()) throw std::invalid_argument("bad universe size");
    double a = alpha.value_or(1.0 / (2.0 * n));
    if (!(a > 0.0 && a <= 0.5)) throw std::invalid_argument("alpha must lie in (0, 1/2]");

    int cap = 2 * n + 2;
    GameState st(2, 2, cap);
    auto builder = complete_builder();
    ThresholdPainter painter(oracle, a, N);
    K43eResult res;
    std::vector<std::pair<int, int>> red_edges;

    auto survivor = [&]() -> std::optional<std::int64_t> {
        if (painter.pool().empty()) return std::nullopt;
        return painter.pool().front();
    };

    while (st.vertex_count() < cap) {
        if (painter.pool().empty()) break;  // would starve; fail below
        int v = st.expose_vertex();
        painter.on_vertex(st, v);
        builder->on_vertex(st, v);
        while (auto target = builder->next_target(st, v)) {
            int u = *target;
            EdgeColor c = painter.color_edge(st, u, v);
            st.draw_edge(u, v, c);
            res.steps = painter.steps();
            if (c == EdgeColor::red) {
                red_edges.emplace_back(u, v);
                if (!red_star_forest(red_edges)) {
                    res.star_forest_ok = false;
                    // two red edges at u (u < v): red K4 minus an edge
                    int other = -1;
                    for (auto [x, y] : red_edges) {
                        if (x == u && y != v) other = y;
                        if (y == u && x != v) other = x;
                    }
                    auto h = survivor();
                    if (!h) break;
                    res.chosen = painter.chosen();
                    res.witness = {res.chosen.at(static_cast<std::size_t>(other)),
                                   res.chosen.at(static_cast<std::size_t>(u)),
                                   res.chosen.at(static_cast<std::size_t>(v)), *h};
                    std::sort(res.witness.begin(), res.witness.end());
                    res.kind = K43eKind::red_k43e;
                    // a red K4^(3) minus e: at least 3 of the 4 triples red
                    int red_triples = 0;
                    for (int skip = 0; skip < 4; ++skip) {
                        std::vector<std::int64_t> triple;
                        for (int i = 0; i < 4; ++i)
                            if (i != skip) triple.push_back(res.witness[static_cast<std::size_t>(i)]);
                        if (oracle->color(triple[0], triple[1], triple[2]) == kRed)
                            ++red_triples;
                    }
                    res.verified = red_triples >= 3;
                    return res;
                }
            } else {
                if (auto clique = st.clique_through(u, v, EdgeColor::blue, n - 1)) {
                    auto h = survivor();
                    if (!h) break;
                    res.chosen = painter.chosen();
                    for (int w : *clique)
                        res.witness.push_back(res.chosen.at(static_cast<std::size_t>(w)));
                    res.witness.push_back(*h);
                    std::sort(res.witness.begin(), res.witness.end());
                    res.kind = K43eKind::blue_set;
                    res.verified = verify_monochromatic(*oracle, res.witness, kBlue);
                    return res;
                }
            }
        }
    }
    res.chosen = painter.chosen();
    res.kind = K43eKind::failure;
    return res;
}

std::string K43eResult::to_json() const {
    nlohmann::ordered_json j;
    const char* kind_name = kind == K43eKind::blue_set   ? "blue"
                            : kind == K43eKind::red_k43e ? "red-k43e"
                                                         : "failure";
    j["outcome"] = kind_name;
    j["witness"] = witness;
    j["chosen"] = chosen;
    j["steps"] = steps_to_json(steps);
    j["star_forest_ok"] = star_forest_ok;
    j["verified"] = verified;
    return j.dump();
}

BoundValue extraction_bound(int s, int n, double alpha) {
    if (s < 3 || n < 3) throw std::invalid_argument("bound needs s, n >= 3");
    if (!(alpha > 0.0 && alpha <= 0.5))
        throw std::invalid_argument("alpha must lie in (0, 1/2]");
    double v, r, m;
    try {
        Budget b = builder_budget(s - 1, n - 1);
        v = static_cast<double>(b.vertices);
        r = static_cast<double>(b.red_edges);
        m = static_cast<double>(b.total_edges);
    } catch (const std::overflow_error&) {
        BudgetD b = budget_double(s - 1, n - 1);
        v = b.v;
        r = b.r;
        m = b.m;
    }
    BoundValue out;
    out.log2 = std::log2(v + 1) - r * std::log2(alpha) + (r - m) * std::log2(1 - alpha);
    out.value = out.log2 < 1023
                    ? (v + 1) * std::pow(alpha, -r) * std::pow(1 - alpha, r - m)
                    : std::numeric_limits<double>::infinity();
    return out;
}

double optimal_alpha(int s, int n, int grid) {
    double best_alpha = 0.5;
    double best = extraction_bound(s, n, 0.5).log2;
    for (int i = 1; i <= grid; ++i) {
        double a = 0.5 * static_cast<double>(i) / static_cast<double>(grid);
        double value = extraction_bound(s, n, a).log2;
        if (value < best) {
            best = value;
            best_alpha = a;
        }
    }
    return best_alpha;
}

double offdiag_exponent(int s, int n) {
    if (s < 4 || s > n) throw std::domain_error("exponent defined for 4 <= s <= n");
    double factorial = std::tgamma(static_cast<double>(s - 1));  // (s-2)!
    return (s - 3) / factorial * std::pow(static_cast<double>(s + n), s - 2) *
           std::log2(64.0 * n / s);
}

double diagonal_log2log2(int k) {
    if (k < 3) throw std::invalid_argument("diagonal bound needs k >= 3");
    double v, m;
    try {
        Budget b = builder_budget(k - 1, k - 1);
        v = static_cast<double>(b.vertices);
        m = static_cast<double>(b.total_edges);
    } catch (const std::overflow_error&) {
        BudgetD b = budget_double(k - 1, k - 1);
        v = b.v;
        m = b.m;
    }
    // at alpha = 1/2 the bound is (v+1) 2^m
    return std::log2(std::log2(v + 1) + m);
}

TowerBound recursion_bound(int k, int s, int n,
                           const std::function<double(int, int)>& base) {
    if (k < 2) throw std::invalid_argument("recursion starts at k = 2");
    if (k == 2) {
        TowerBound t;
        t.height = 0;
        t.top = base(s, n);
        std::ostringstream text;
        text << t.top;
        t.text = text.str();
        return t;
    }
    TowerBound inner = recursion_bound(k - 1, s - 1, n - 1, base);
    TowerBound t;
    std::ostringstream text;
    double lg_fact = std::lgamma(static_cast<double>(k)) / std::log(2.0);  // log2 (k-1)!
    if (inner.height == 0) {
        // C(inner, k-1) exactly when it fits a double comfortably
        double c;
        if (inner.top < 1e8) {
            c = 1;
            for (int i = 0; i < k - 1; ++i) c = c * (inner.top - i) / (i + 1);
        } else {
            c = std::exp2((k - 1) * std::log2(inner.top) - lg_fact);
        }
        t.height = 1;
        t.top = c;
        text << "2^" << c;
    } else if (inner.height == 1) {
        // log2 C(2^x, k-1) <= (k-1) x - log2 (k-1)!
        t.height = 2;
        t.top = (k - 1) * inner.top - lg_fact;
        text << "2^2^" << t.top;
    } else {
        // beyond double territory: C(N, k-1) <= N^(k-1), one more level
        t.height = inner.height + 1;
        t.top = inner.top;  // dominated by the inner tower
        for (int i = 0; i < t.height; ++i) text << "2^";
        text << t.top << " (inner-dominated)";
    }
    t.text = text.str();
    return t;
}

double classical_r2_bound(int s, int n) {
    if (s < 1 || n < 1) throw std::invalid_argument("r(s,n) needs s, n >= 1");
    if (s > n) std::swap(s, n);
    if (s == 1) return 1;
    if (s == 2) return n;
    static const std::map<std::pair<int, int>, int> known = {
        {{3, 3}, 6},  {{3, 4}, 9},  {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 23},
        {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25}};
    auto it = known.find({s, n});
    if (it != known.end()) return it->second;
    return std::exp(std::lgamma(s + n - 1) - std::lgamma(s) - std::lgamma(n));
}

}  // namespace ramsey
