// Command-line surface: compute the exact-function tables, certify the
// colorings and game budgets, run extractions, play the on-line game, and
// evaluate the bound calculators.  JSON is the machine interface; the text
// renderer walks the same JSON.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ramsey/exact.hpp"
#include "ramsey/extraction.hpp"
#include "ramsey/game.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/search.hpp"
#include "ramsey/stepup.hpp"

using nlohmann::ordered_json;
using namespace ramsey;

namespace {

struct Options {
    std::uint64_t seed = 0;
    std::string format = "json";  // json | text | csv (table only)
    std::uint64_t node_cap = 0;
    double time_cap = 0;  // seconds; 0 = unlimited
    std::string out;
};

void render_text(const ordered_json& j, std::ostream& os, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_object())) {
                os << pad << key << ":\n";
                render_text(value, os, indent + 1);
            } else {
                os << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) render_text(value, os, indent);
    } else {
        os << pad << j.dump() << "\n";
    }
}

int emit(const Options& opt, const ordered_json& report) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!opt.out.empty()) {
        file.open(opt.out);
        if (!file) {
            std::cerr << "cannot open output file: " << opt.out << "\n";
            return 2;
        }
        os = &file;
    }
    if (opt.format == "text")
        render_text(report, *os);
    else
        *os << report.dump() << "\n";
    return 0;
}

struct Deadline {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double limit;  // seconds, 0 = none
    bool expired() const {
        if (limit <= 0) return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
               limit;
    }
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        std::int64_t v = std::stoll(text);
        return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

ordered_json budget_json(const Budget& b) {
    return {{"v", b.vertices}, {"r", b.red_edges}, {"m", b.total_edges}};
}

// ---- compute ---------------------------------------------------------------

int cmd_compute(const Options& opt, const std::string& which, const std::string& range,
                const TableOptions& topts) {
    auto [lo, hi] = parse_range(range);
    ordered_json report;
    report["command"] = "compute";
    report["which"] = which;
    report["seed"] = opt.seed;

    if (which == "table") {
        auto rows = compute_table(lo, hi, topts);
        if (opt.format == "csv") {
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!opt.out.empty()) {
                file.open(opt.out);
                os = &file;
            }
            *os << table_to_csv(rows);
            return 0;
        }
        report["rows"] = ordered_json::parse(table_to_json(rows));
        return emit(opt, report);
    }
    if (which == "nice") {
        report["limit"] = hi;
        report["values"] = nice_numbers(hi);
        return emit(opt, report);
    }

    auto values = ordered_json::array();
    for (std::int64_t s = lo; s <= hi; ++s) {
        ordered_json row;
        row["s"] = s;
        if (which == "T") {
            row["value"] = T_closed(s);
        } else if (which == "g") {
            row["value"] = g13(s);
            if (s >= 3) row["partition"] = g13_partition(s);
        } else if (which == "d") {
            row["value"] = d_value(s);
        } else if (which == "F1") {
            auto f1 = F1_brute(static_cast<int>(s), opt.node_cap);
            row["value"] = f1.value;
            row["mode"] = f1.exact ? "exact" : "lower-bound";
            row["nodes"] = f1.nodes;
        } else if (which == "F2") {
            if (s <= topts.f2_brute_max) {
                row["value"] = F2_brute(static_cast<int>(s)).value;
                row["mode"] = "brute-force";
            } else {
                row["value"] = F2_formula(s);
                row["mode"] = "closed-form";
            }
        } else {
            std::cerr << "unknown function: " << which << "\n";
            return 2;
        }
        values.push_back(std::move(row));
    }
    report["values"] = std::move(values);
    return emit(opt, report);
}

// ---- verify ----------------------------------------------------------------

int verdict(const Options& opt, ordered_json& report, bool pass) {
    report["pass"] = pass;
    int rc = emit(opt, report);
    if (rc != 0) return rc;
    return pass ? 0 : 1;
}

int verify_four_tournaments(const Options& opt) {
    ordered_json report{{"command", "verify"}, {"target", "four-tournaments"}, {"seed", opt.seed}};
    std::int64_t worst = 0;
    std::uint64_t worst_mask = 0;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        std::int64_t c = count_cyclic_triangles(tournament_from_mask(4, mask));
        if (c > worst) {
            worst = c;
            worst_mask = mask;
        }
    }
    report["tournaments"] = 64;
    report["max_cyclic_triangles"] = worst;
    if (worst > 2) report["witness_mask"] = worst_mask;
    return verdict(opt, report, worst == 2);
}

int verify_d_recurrences_cmd(const Options& opt, std::int64_t xmax) {
    ordered_json report{{"command", "verify"}, {"target", "d-recurrences"}, {"seed", opt.seed}};
    report["xmax"] = xmax;
    auto r = verify_d_recurrences(xmax);
    if (!r.ok)
        report["witness"] = {{"x", r.x}, {"case", r.which}, {"lhs", r.lhs}, {"rhs", r.rhs}};
    return verdict(opt, report, r.ok);
}

int verify_delta_props(const Options& opt, std::uint64_t samples, int m_max) {
    ordered_json report{{"command", "verify"}, {"target", "delta-props"}, {"seed", opt.seed}};
    report["samples"] = samples;
    report["m_max"] = m_max;
    SplitMix64 rng(substream(opt.seed, "sampler"));
    for (std::uint64_t trial = 0; trial < samples; ++trial) {
        int m = 3 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m_max - 2)));
        std::uint32_t span = (1u << m) - 1;
        std::set<std::uint32_t> values;
        while (values.size() < 4) values.insert(static_cast<std::uint32_t>(rng.next()) & span);
        std::vector<std::uint32_t> chain(values.begin(), values.end());
        int d01 = delta(chain[0], chain[1]);
        int d12 = delta(chain[1], chain[2]);
        int maximum = 0, count = 0;
        for (int i = 0; i < 3; ++i) maximum = std::max(maximum, delta(chain[i], chain[i + 1]));
        for (int i = 0; i < 3; ++i)
            if (delta(chain[i], chain[i + 1]) == maximum) ++count;
        bool ok = d01 != d12 && delta(chain[0], chain[3]) == maximum && count == 1;
        if (!ok) {
            report["witness"] = {{"chain", chain}, {"m", m}};
            return verdict(opt, report, false);
        }
    }
    return verdict(opt, report, true);
}

int verify_stepup(const Options& opt, const std::string& graph, int q,
                  const std::string& mode, std::uint64_t trials) {
    ordered_json report{{"command", "verify"}, {"target", "stepup"}, {"seed", opt.seed}};
    auto oracle = parse_oracle_spec("stepup:graph=" + graph, 0);
    report["graph"] = graph;
    report["universe"] = oracle->universe();
    report["q"] = q;
    report["mode"] = mode;
    MonoSearchOptions sopts;
    sopts.mode = mode == "sample" ? SearchMode::sampled : SearchMode::exhaustive;
    sopts.node_cap = opt.node_cap;
    sopts.trials = trials;
    sopts.seed = opt.seed;
    auto classes = ordered_json::array();
    bool pass = true;
    for (int color : {kC1, kC2, kC3}) {
        auto result = find_mono_set(*oracle, q, color, sopts);
        if (result.budget_exceeded) {
            std::cerr << "node cap exhausted before certification\n";
            return 2;
        }
        ordered_json c = ordered_json::parse(result.to_json());
        c["color"] = "C" + std::to_string(color + 1);
        if (result.witness) pass = false;
        classes.push_back(std::move(c));
    }
    report["classes"] = std::move(classes);
    return verdict(opt, report, pass);
}

int verify_lift(const Options& opt, int r, const std::string& c1_arg, std::int64_t n,
                int q, bool mutate) {
    ordered_json report{{"command", "verify"}, {"target", "lift"}, {"seed", opt.seed}};
    LiftSpec spec;
    spec.r = r;
    spec.c1 = c1_arg == "pentagon" ? pentagon_coloring() : load_coloring(c1_arg);
    spec.seed = substream(opt.seed, "c2");
    spec.n = n;
    report["r"] = r;
    report["c1"] = c1_arg;
    report["n"] = n;
    report["q"] = q;
    report["mutated"] = mutate;
    if (mutate) {
        // plant a red triangle in c1; a red q-set must then appear
        spec.c1.set_color(0, 1, 0);
        spec.c1.set_color(1, 2, 0);
        spec.c1.set_color(0, 2, 0);
    }
    auto oracle = lift_oracle(spec);
    MonoSearchOptions sopts;
    sopts.node_cap = opt.node_cap;
    auto result = find_mono_set(*oracle, q, kRed, sopts);
    if (result.budget_exceeded) {
        std::cerr << "node cap exhausted before certification\n";
        return 2;
    }
    report["search"] = ordered_json::parse(result.to_json());
    bool pass = mutate ? result.witness.has_value() : !result.witness.has_value();
    return verdict(opt, report, pass);
}

int verify_game_budgets(const Options& opt, int max_target, std::uint64_t seeds) {
    ordered_json report{{"command", "verify"}, {"target", "game-budgets"}, {"seed", opt.seed}};
    report["max_target"] = max_target;
    report["random_seeds_per_pair"] = seeds;
    Deadline deadline{.limit = opt.time_cap};
    std::uint64_t games = 0;
    for (int s = 2; s <= max_target; ++s)
        for (int n = 2; n <= max_target; ++n) {
            Budget limit = builder_budget(s, n);
            auto run_one = [&](std::unique_ptr<Painter> painter,
                               const std::string& name) -> std::optional<ordered_json> {
                auto builder = label_tree_builder(s, n);
                Transcript t = run_game(*builder, *painter, s, n);
                ++games;
                if (t.kind == OutcomeKind::exhausted || !t.used.fits_within(limit)) {
                    return ordered_json{{"s", s},
                                        {"n", n},
                                        {"painter", name},
                                        {"transcript", ordered_json::parse(t.to_json())},
                                        {"budget", budget_json(limit)}};
                }
                return std::nullopt;
            };
            std::optional<ordered_json> bad;
            if (!bad) bad = run_one(all_red_painter(), "all-red");
            if (!bad) bad = run_one(all_blue_painter(), "all-blue");
            if (!bad) bad = run_one(greedy_adversarial_painter(), "greedy-adversarial");
            for (std::uint64_t k = 0; !bad && k < seeds; ++k)
                bad = run_one(random_painter(0.5, hash64(opt.seed, k, s, n)),
                              "seeded-random");
            if (bad) {
                report["witness"] = *bad;
                return verdict(opt, report, false);
            }
            if (deadline.expired()) {
                std::cerr << "time cap exhausted before certification\n";
                return 2;
            }
        }
    report["games"] = games;
    return verdict(opt, report, true);
}

// ---- bound -----------------------------------------------------------------

int cmd_bound(const Options& opt, const std::string& which, int s, int n, int k,
              double alpha, bool optimize) {
    ordered_json report{{"command", "bound"}, {"which", which}, {"seed", opt.seed}};
    if (which == "thm21") {
        if (optimize) alpha = optimal_alpha(s, n);
        auto b = extraction_bound(s, n, alpha);
        report["s"] = s;
        report["n"] = n;
        report["alpha"] = alpha;
        report["value"] = b.value;
        report["log2"] = b.log2;
    } else if (which == "cor23") {
        report["s"] = s;
        report["n"] = n;
        report["exponent_log2"] = offdiag_exponent(s, n);
    } else if (which == "thm25") {
        report["k"] = k;
        report["log2_log2"] = diagonal_log2log2(k);
    } else if (which == "erdos-rado") {
        report["k"] = k;
        report["s"] = s;
        report["n"] = n;
        auto tower = recursion_bound(k, s, n, classical_r2_bound);
        report["tower_height"] = tower.height;
        report["top_exponent"] = tower.top;
        report["text"] = tower.text;
    } else {
        std::cerr << "unknown bound: " << which << "\n";
        return 2;
    }
    return emit(opt, report);
}

// ---- extract ---------------------------------------------------------------

int cmd_extract(const Options& opt, const std::string& oracle_spec, int s, int n,
                double alpha, std::int64_t universe, bool k43e, double k43e_alpha) {
    ordered_json report{{"command", "extract"}, {"seed", opt.seed}};
    report["oracle"] = oracle_spec;
    auto oracle = parse_oracle_spec(oracle_spec, universe > 0 ? universe : 0, true);
    if (universe <= 0) universe = oracle->universe();
    report["N"] = universe;
    if (k43e) {
        report["kind"] = "k43e";
        report["n"] = n;
        auto result = k43e_extract(
            oracle, n, universe,
            k43e_alpha > 0 ? std::optional<double>(k43e_alpha) : std::nullopt);
        report["result"] = ordered_json::parse(result.to_json());
        int rc = emit(opt, report);
        if (rc != 0) return rc;
        return result.kind == K43eKind::failure ? 1 : 0;
    }
    ExtractionConfig cfg;
    cfg.s = s;
    cfg.n = n;
    cfg.alpha = alpha;
    cfg.universe = universe;
    cfg.oracle = oracle;
    report["kind"] = "erdos-rado";
    report["s"] = s;
    report["n"] = n;
    report["alpha"] = alpha;
    report["required_universe"] = cfg.required_universe();
    auto result = erdos_rado_extract(cfg);
    report["result"] = ordered_json::parse(result.to_json());
    int rc = emit(opt, report);
    if (rc != 0) return rc;
    bool ok = result.kind != ExtractionKind::failure && result.verified &&
              result.induction_ok && result.threshold_ok;
    return ok ? 0 : 1;
}

// ---- play ------------------------------------------------------------------

int cmd_play(const Options& opt, int s, int n) {
    auto builder = label_tree_builder(s, n);
    auto painter = interactive_painter(std::cin, std::cout);
    Budget limit = builder_budget(s, n);
    Transcript t = run_game(*builder, *painter, s, n);
    ordered_json report{{"command", "play"}, {"seed", opt.seed}};
    report["transcript"] = ordered_json::parse(t.to_json());
    report["limit"] = budget_json(limit);
    report["within_budget"] = t.used.fits_within(limit);
    report["aborted"] = t.aborted;
    const char* kind = t.kind == OutcomeKind::red_clique    ? "red"
                       : t.kind == OutcomeKind::blue_clique ? "blue"
                                                            : "exhausted";
    std::cout << "outcome: " << kind << " after " << t.used.total_edges << " edges, "
              << t.used.vertices << " vertices (budget v=" << limit.vertices
              << " r=" << limit.red_edges << " m=" << limit.total_edges << ")\n";
    int rc = emit(opt, report);
    if (rc != 0) return rc;
    return t.aborted ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph Ramsey toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--seed", opt.seed, "run seed; all randomness derives from it");
    app.add_option("--format", opt.format, "json | text | csv (table only)")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--node-cap", opt.node_cap, "search node budget (0 = unlimited)");
    app.add_option("--time-cap", opt.time_cap, "wall-clock budget in seconds (0 = unlimited)");
    app.add_option("--out", opt.out, "write the report to a file instead of stdout");

    // compute
    auto* compute = app.add_subcommand("compute", "exact functions T, g, F1, F2, d, nice");
    std::string which, range = "1..10";
    TableOptions topts;
    compute->add_option("which", which, "T | g | F1 | F2 | d | nice | table")->required();
    compute->add_option("--s", range, "value or range a..b")->required();
    compute->add_option("--f1-max", topts.f1_max, "largest s computed exactly for F1");
    compute->add_option("--f1-node-cap", topts.f1_node_cap, "node budget for F1 at s = 7");
    compute->add_option("--f2-brute-max", topts.f2_brute_max,
                        "largest s for brute-force F2 (8 needs ~2^28 colorings)");

    // verify
    auto* verify = app.add_subcommand("verify", "certify the named property");
    std::string target;
    verify->add_option("target", target,
                       "stepup | lift | delta-props | d-recurrences | four-tournaments | "
                       "game-budgets")
        ->required();
    std::int64_t xmax = 10000;
    std::uint64_t samples = 1000000;
    int m_max = 20;
    std::string graph = "cycle(5)";
    int q = 8;
    std::string mode = "exhaustive";
    std::uint64_t trials = 100000;
    int lift_r = 5;
    std::string lift_c1 = "pentagon";
    std::int64_t lift_n = 100;
    int lift_q = 4;
    bool mutate = false;
    int max_target = 6;
    std::uint64_t game_seeds = 400;
    verify->add_option("--xmax", xmax, "d-recurrences: check 1 <= x <= xmax");
    verify->add_option("--samples", samples, "delta-props: sampled chains");
    verify->add_option("--m-max", m_max, "delta-props: maximum string length");
    verify->add_option("--graph", graph, "stepup: base graph path or cycle(<k>)");
    verify->add_option("--q", q, "stepup: monochromatic set size to exclude");
    verify->add_option("--mode", mode, "stepup: exhaustive | sample")
        ->check(CLI::IsMember({"exhaustive", "sample"}));
    verify->add_option("--trials", trials, "stepup: sampled trials");
    verify->add_option("--r", lift_r, "lift: palette size of c2");
    verify->add_option("--c1", lift_c1, "lift: coloring file or 'pentagon'");
    verify->add_option("--n", lift_n, "lift: universe size");
    verify->add_option("--lift-q", lift_q, "lift: red set size to exclude");
    verify->add_flag("--mutate", mutate, "lift: plant a red triangle in c1 instead");
    verify->add_option("--max-target", max_target, "game-budgets: sweep 2..max");
    verify->add_option("--game-seeds", game_seeds, "game-budgets: random painters per pair");

    // play
    auto* play = app.add_subcommand("play", "be the painter against the builder strategy");
    int ps = 3, pn = 3;
    play->add_option("--s", ps, "red clique target");
    play->add_option("--n", pn, "blue clique target");

    // bound
    auto* bound = app.add_subcommand("bound", "bound calculators");
    std::string bwhich;
    int bs = 4, bn = 4, bk = 3;
    double alpha = 0.5;
    bool optimize = false;
    bound->add_option("which", bwhich, "thm21 | cor23 | erdos-rado | thm25")->required();
    bound->add_option("--s", bs);
    bound->add_option("--n", bn);
    bound->add_option("--k", bk);
    bound->add_option("--alpha", alpha);
    bound->add_flag("--optimize", optimize, "thm21: minimize over alpha");

    // extract
    auto* extract = app.add_subcommand("extract", "greedy extraction against an oracle");
    std::string oracle_spec = "const:red";
    int es = 4, en = 4;
    double ealpha = 0.5;
    std::int64_t universe = 0;
    bool k43e = false;
    double k43e_alpha = 0;
    extract->add_option("--oracle", oracle_spec,
                        "const:red|blue, random:p=..:seed=.., tournament:file=..|random:seed=.., "
                        "lift:r=..:c1=..:seed=.., stepup:graph=..");
    extract->add_option("--s", es);
    extract->add_option("--n", en);
    extract->add_option("--alpha", ealpha);
    extract->add_option("--N", universe, "universe size (default: oracle's own)");
    extract->add_flag("--k43e", k43e, "run the all-pairs variant");
    extract->add_option("--k43e-alpha", k43e_alpha, "override the default 1/(2n)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(opt, which, range, topts);
        if (verify->parsed()) {
            if (target == "four-tournaments") return verify_four_tournaments(opt);
            if (target == "d-recurrences") return verify_d_recurrences_cmd(opt, xmax);
            if (target == "delta-props") return verify_delta_props(opt, samples, m_max);
            if (target == "stepup") return verify_stepup(opt, graph, q, mode, trials);
            if (target == "lift") return verify_lift(opt, lift_r, lift_c1, lift_n, lift_q, mutate);
            if (target == "game-budgets") return verify_game_budgets(opt, max_target, game_seeds);
            std::cerr << "unknown verify target: " << target << "\n";
            return 2;
        }
        if (play->parsed()) return cmd_play(opt, ps, pn);
        if (bound->parsed()) return cmd_bound(opt, bwhich, bs, bn, bk, alpha, optimize);
        if (extract->parsed())
            return cmd_extract(opt, oracle_spec, es, en, ealpha, universe, k43e, k43e_alpha);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
