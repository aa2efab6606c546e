#ifndef RAMSEY_GAME_HPP
#define RAMSEY_GAME_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/bitset.hpp"
#include "ramsey/oracle.hpp"

namespace ramsey {

enum class EdgeColor : int { red = 0, blue = 1 };

struct Budget {
    std::int64_t vertices = 0;
    std::int64_t red_edges = 0;
    std::int64_t total_edges = 0;

    bool fits_within(const Budget& limit) const {
        return vertices <= limit.vertices && red_edges <= limit.red_edges &&
               total_edges <= limit.total_edges;
    }
};

// Budget sufficient for the string-labeling builder strategy to force a red
// K_s or blue K_n: C(s+n-2,s-1) vertices, (s-2)C(s+n-2,s-1)+1 red edges,
// (s+n-4)C(s+n-2,s-1)+1 total edges.  Throws std::overflow_error when the
// binomial leaves 64 bits.
Budget builder_budget(int s, int n);

struct GameMove {
    bool is_edge = false;
    int u = -1, v = -1;
    EdgeColor color = EdgeColor::red;
};

enum class OutcomeKind { red_clique, blue_clique, exhausted };

struct Transcript {
    int s = 0, n = 0;
    std::vector<GameMove> moves;
    OutcomeKind kind = OutcomeKind::exhausted;
    std::vector<int> witness;
    Budget used;
    bool aborted = false;  // interactive painter hit EOF mid-game

    std::string to_json() const;
    static Transcript from_json(const std::string& text);
};

// Re-derives outcome, witness and budget from the move list alone.  A valid
// transcript replays to itself byte-for-byte.
Transcript replay_transcript(const Transcript& t);

// Exposed vertices, drawn colored edges, and per-vertex label strings over
// {R,B}.  Labels are written by the string-labeling builder; edge colors to
// labeled ancestors must spell out the label.
class GameState {
  public:
    GameState(int s, int n, int max_vertices);

    int target_red() const { return s_; }
    int target_blue() const { return n_; }
    int vertex_count() const { return exposed_; }
    int max_vertices() const { return cap_; }

    int expose_vertex();  // returns the new vertex id
    void draw_edge(int u, int v, EdgeColor c);

    // -1 when absent, else static_cast<int>(EdgeColor).
    int edge_color(int u, int v) const;
    const Bitset& colored_neighbors(int v, EdgeColor c) const;

    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    void set_label(int v, std::string label);

    Budget used() const { return used_; }

    // Monochromatic clique of size `size` in color c containing edge (u,v),
    // if one exists among drawn edges.
    std::optional<std::vector<int>> clique_through(int u, int v, EdgeColor c,
                                                   int size) const;
    // Largest monochromatic clique through (u,v) assuming that edge were
    // colored c (the edge itself need not be drawn yet).
    int max_clique_through(int u, int v, EdgeColor c) const;

  private:
    int s_, n_, cap_;
    int exposed_ = 0;
    Budget used_;
    std::vector<std::int8_t> colors_;       // cap*cap matrix, -1/0/1
    std::vector<Bitset> adj_[2];            // per color
    std::vector<std::string> labels_;
};

class Builder {
  public:
    virtual ~Builder() = default;
    virtual void on_vertex(const GameState& g, int v) { (void)g, (void)v; }
    // Next earlier vertex to join to v; targets within one pass must be
    // strictly increasing.  nullopt ends the pass.
    virtual std::optional<int> next_target(const GameState& g, int v) = 0;
    virtual void on_edge(const GameState& g, int u, int v, EdgeColor c) {
        (void)g, (void)u, (void)v, (void)c;
    }
    // Called when v's pass is over; the labeling builder writes labels here.
    virtual void on_pass_end(GameState& g, int v) { (void)g, (void)v; }
};

class Painter {
  public:
    virtual ~Painter() = default;
    virtual void on_vertex(const GameState& g, int v) { (void)g, (void)v; }
    virtual EdgeColor color_edge(const GameState& g, int u, int v) = 0;
};

// Thrown by the interactive painter on EOF; run_game records a partial
// transcript with `aborted` set.
struct PainterAborted {};

// Plays one game.  Stops as soon as a red K_s or blue K_n exists among drawn
// edges, or when `limits` would be exceeded (recorded as exhausted).
Transcript run_game(Builder& builder, Painter& painter, int s, int n,
                    const Budget& limits);
// Limits default to builder_budget(s, n).
Transcript run_game(Builder& builder, Painter& painter, int s, int n);

// The string-labeling strategy: a new vertex is joined to the owner of the
// empty label, then along the color-consistent path w_{a1}, w_{a1a2}, ...
// until it reaches an unowned label, which it claims.  Forces the target
// within builder_budget(s, n) against every painter.
std::unique_ptr<Builder> label_tree_builder(int s, int n);

// Joins every new vertex to all earlier vertices.
std::unique_ptr<Builder> complete_builder();

std::unique_ptr<Painter> all_red_painter();
std::unique_ptr<Painter> all_blue_painter();
// Red with probability p per edge, from a named substream of `seed`.
std::unique_ptr<Painter> random_painter(double p, std::uint64_t seed);
// Avoids completing a monochromatic target clique while any safe color
// exists; ties broken toward the color with the smaller resulting clique,
// then blue.
std::unique_ptr<Painter> greedy_adversarial_painter();
// Prompts for r/b on `in`, echoing the position to `out`.  Invalid input is
// re-prompted; EOF throws PainterAborted.
std::unique_ptr<Painter> interactive_painter(std::istream& in, std::ostream& out);

// The alpha-threshold painter induced by a triple oracle: it walks the
// extraction pool, mapping each exposed game vertex to the lowest surviving
// universe vertex, and colors an edge red iff at least an alpha fraction of
// the surviving extensions are red.  See extraction.hpp for the wrapper.
struct ThresholdStep {
    int u = -1, v = -1;
    EdgeColor color = EdgeColor::red;
    std::int64_t red_count = 0;
    std::int64_t pool_before = 0;
    std::int64_t pool_after = 0;
};

class ThresholdPainter : public Painter {
  public:
    ThresholdPainter(OraclePtr oracle, double alpha, std::int64_t universe);

    void on_vertex(const GameState& g, int v) override;
    EdgeColor color_edge(const GameState& g, int u, int v) override;

    const std::vector<std::int64_t>& pool() const { return pool_; }
    const std::vector<std::int64_t>& chosen() const { return chosen_; }
    const std::vector<ThresholdStep>& steps() const { return steps_; }
    // Set when a vertex had to be exposed with an empty pool.
    bool starved() const { return starved_; }

  private:
    OraclePtr oracle_;
    double alpha_;
    std::vector<std::int64_t> pool_;    // sorted ascending
    std::vector<std::int64_t> chosen_;  // universe vertex per game vertex
    std::vector<ThresholdStep> steps_;
    bool starved_ = false;
};

struct MinimaxResult {
    bool solved = false;       // exact value established within caps
    int value = -1;            // minimum edges builder must draw
    bool forced = false;       // false: painter survives every line under caps
    std::uint64_t nodes = 0;
    bool budget_exceeded = false;
    std::vector<GameMove> line;  // optimal builder line vs. worst-case painter
};

// Exact minimum number of drawn edges with which builder can force a red K_s
// or blue K_n using at most `vertex_cap` vertices.  Game-tree search with
// memoization on canonicalized states; feasible only for tiny parameters.
MinimaxResult minimax_online(int s, int n, int vertex_cap,
                             std::uint64_t node_cap = 0);

}  // namespace ramsey

#endif
