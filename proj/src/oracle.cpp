#include "ramsey/oracle.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

#include "ramsey/rng.hpp"
#include "ramsey/stepup.hpp"

namespace ramsey {

namespace {

void check_triple(const TripleOracle& o, std::int64_t a, std::int64_t b, std::int64_t c) {
    if (!(0 <= a && a < b && b < c && c < o.universe()))
        throw std::out_of_range("triple must be sorted and within the universe");
}

class ConstOracle final : public TripleOracle {
  public:
    ConstOracle(std::int64_t n, int color) : n_(n), color_(color) {}
    std::int64_t universe() const override { return n_; }
    int palette() const override { return 2; }
    int color(std::int64_t a, std::int64_t b, std::int64_t c) const override {
        check_triple(*this, a, b, c);
        return color_;
    }
    std::string describe() const override {
        return color_ == kRed ? "const:red" : "const:blue";
    }

  private:
    std::int64_t n_;
    int color_;
};

class RandomOracle final : public TripleOracle {
  public:
    RandomOracle(std::int64_t n, double p, std::uint64_t seed) : n_(n), p_(p), seed_(seed) {}
    std::int64_t universe() const override { return n_; }
    int palette() const override { return 2; }
    int color(std::int64_t a, std::int64_t b, std::int64_t c) const override {
        check_triple(*this, a, b, c);
        double u = unit_from_hash(hash64(seed_, static_cast<std::uint64_t>(a),
                                         static_cast<std::uint64_t>(b),
                                         static_cast<std::uint64_t>(c)));
        return u < p_ ? kRed : kBlue;
    }
    std::string describe() const override {
        return "random:p=" + std::to_string(p_) + ":seed=" + std::to_string(seed_);
    }

  private:
    std::int64_t n_;
    double p_;
    std::uint64_t seed_;
};

class TournamentOracle final : public TripleOracle {
  public:
    explicit TournamentOracle(Tournament t) : t_(std::move(t)) {}
    std::int64_t universe() const override { return t_.order(); }
    int palette() const override { return 2; }
    int color(std::int64_t a, std::int64_t b, std::int64_t c) const override {
        check_triple(*this, a, b, c);
        return t_.cyclic(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c))
                   ? kRed
                   : kBlue;
    }
    std::string describe() const override {
        return "tournament:order=" + std::to_string(t_.order());
    }

  private:
    Tournament t_;
};

// Orientation decided per pair by a seeded hash; never materialized, so the
// universe can be far past what an n x n tournament would allow.
class HashTournamentOracle final : public TripleOracle {
  public:
    HashTournamentOracle(std::int64_t n, std::uint64_t seed) : n_(n), seed_(seed) {}
    std::int64_t universe() const override { return n_; }
    int palette() const override { return 2; }
    int color(std::int64_t a, std::int64_t b, std::int64_t c) const override {
        check_triple(*this, a, b, c);
        bool ab = beats(a, b), bc = beats(b, c), ca = beats(c, a);
        return (ab == bc && bc == ca) ? kRed : kBlue;
    }
    std::string describe() const override {
        return "tournament:random:seed=" + std::to_string(seed_);
    }

  private:
    bool beats(std::int64_t u, std::int64_t v) const {
        bool swapped = u > v;
        if (swapped) std::swap(u, v);
        bool low_beats_high =
            hash64(seed_, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)) & 1u;
        return swapped ? !low_beats_high : low_beats_high;
    }

    std::int64_t n_;
    std::uint64_t seed_;
};

class LiftOracle final : public TripleOracle {
  public:
    explicit LiftOracle(LiftSpec spec) : spec_(std::move(spec)) {}
    std::int64_t universe() const override { return spec_.n; }
    int palette() const override { return 2; }
    int color(std::int64_t a, std::int64_t b, std::int64_t c) const override {
        check_triple(*this, a, b, c);
        return lift_color(a, b, c, spec_);
    }
    std::string describe() const override {
        return "lift:r=" + std::to_string(spec_.r) + ":seed=" + std::to_string(spec_.seed);
    }

  private:
    LiftSpec spec_;
};

class StepUpOracle final : public TripleOracle {
  public:
    explicit StepUpOracle(BitGraph base)
        : base_(std::move(base)), n_(std::int64_t{1} << base_.order()) {
        if (base_.order() < 1 || base_.order() > 30)
            throw std::invalid_argument("stepping-up base must have 1..30 vertices");
    }
    std::int64_t universe() const override { return n_; }
    int palette() const override { return 3; }
    int color(std::int64_t a, std::int64_t b, std::int64_t c) const override {
        check_triple(*this, a, b, c);
        return stepup_color(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                            static_cast<std::uint32_t>(c), base_);
    }
    std::string describe() const override {
        return "stepup:m=" + std::to_string(base_.order());
    }

  private:
    BitGraph base_;
    std::int64_t n_;
};

class BinarizedOracle final : public TripleOracle {
  public:
    BinarizedOracle(OraclePtr inner, int red_class)
        : inner_(std::move(inner)), red_class_(red_class) {}
    std::int64_t universe() const override { return inner_->universe(); }
    int palette() const override { return 2; }
    int color(std::int64_t a, std::int64_t b, std::int64_t c) const override {
        return inner_->color(a, b, c) == red_class_ ? kRed : kBlue;
    }
    std::string describe() const override {
        return inner_->describe() + ":binary(red=C" + std::to_string(red_class_ + 1) + ")";
    }

  private:
    OraclePtr inner_;
    int red_class_;
};

}  // namespace

int LiftSpec::c2(std::int64_t a, std::int64_t b) const {
    if (a > b) std::swap(a, b);
    return static_cast<int>(hash64(seed, static_cast<std::uint64_t>(a),
                                   static_cast<std::uint64_t>(b)) %
                            static_cast<std::uint64_t>(r));
}

int lift_color(std::int64_t a, std::int64_t b, std::int64_t c, const LiftSpec& spec) {
    int x = spec.c2(a, b);
    int y = spec.c2(a, c);
    if (x == y) return kBlue;
    return spec.c1.color(x, y) == 0 ? kRed : kBlue;
}

OraclePtr const_oracle(std::int64_t n, int color) {
    if (color != kRed && color != kBlue) throw std::invalid_argument("const color must be red or blue");
    return std::make_shared<ConstOracle>(n, color);
}

OraclePtr random_oracle(std::int64_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
    return std::make_shared<RandomOracle>(n, p, seed);
}

OraclePtr tournament_oracle(Tournament t) {
    return std::make_shared<TournamentOracle>(std::move(t));
}

OraclePtr random_tournament_oracle(std::int64_t n, std::uint64_t seed) {
    return std::make_shared<HashTournamentOracle>(n, seed);
}

OraclePtr lift_oracle(LiftSpec spec) {
    if (spec.r < 2) throw std::invalid_argument("lift palette needs r >= 2");
    if (spec.c1.order() != spec.r) throw std::invalid_argument("c1 must color pairs of [r]");
    return std::make_shared<LiftOracle>(std::move(spec));
}

OraclePtr stepup_oracle(BitGraph base) { return std::make_shared<StepUpOracle>(std::move(base)); }

OraclePtr binarize_oracle(OraclePtr inner, int red_class) {
    if (red_class < 0 || red_class >= inner->palette())
        throw std::invalid_argument("red class outside inner palette");
    return std::make_shared<BinarizedOracle>(std::move(inner), red_class);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

// Key-value fields of the form key=value after the scheme token.
std::string field(const std::vector<std::string>& parts, const std::string& key,
                  const std::string& fallback = {}) {
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto eq = parts[i].find('=');
        if (eq != std::string::npos && parts[i].substr(0, eq) == key)
            return parts[i].substr(eq + 1);
    }
    if (fallback.empty())
        throw std::invalid_argument("oracle spec missing field '" + key + "'");
    return fallback;
}

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer in oracle spec: " + s);
    return v;
}

BitGraph graph_from_arg(const std::string& arg) {
    if (arg.rfind("cycle(", 0) == 0 && arg.back() == ')')
        return cycle_graph(static_cast<int>(parse_u64(arg.substr(6, arg.size() - 7))));
    return load_graph(arg);
}

}  // namespace

OraclePtr parse_oracle_spec(const std::string& spec, std::int64_t n, bool force_two_colors) {
    auto parts = split(spec, ':');
    if (parts.empty() || parts[0].empty()) throw std::invalid_argument("empty oracle spec");
    const std::string& kind = parts[0];

    if (kind == "const") {
        if (parts.size() != 2 || (parts[1] != "red" && parts[1] != "blue"))
            throw std::invalid_argument("const oracle wants const:red or const:blue");
        return const_oracle(n, parts[1] == "red" ? kRed : kBlue);
    }
    if (kind == "random") {
        double p = std::stod(field(parts, "p"));
        std::uint64_t seed = parse_u64(field(parts, "seed"));
        return random_oracle(n, p, seed);
    }
    if (kind == "tournament") {
        if (parts.size() >= 2 && parts[1] == "random")
            return random_tournament_oracle(n, parse_u64(field(parts, "seed")));
        return tournament_oracle(load_tournament(field(parts, "file")));
    }
    if (kind == "lift") {
        LiftSpec ls;
        ls.r = static_cast<int>(parse_u64(field(parts, "r")));
        ls.seed = parse_u64(field(parts, "seed"));
        ls.n = n;
        std::string c1 = field(parts, "c1");
        ls.c1 = (c1 == "pentagon") ? pentagon_coloring() : load_coloring(c1);
        return lift_oracle(std::move(ls));
    }
    if (kind == "stepup") {
        auto oracle = stepup_oracle(graph_from_arg(field(parts, "graph")));
        if (n > 0 && n != oracle->universe())
            throw std::invalid_argument("stepup universe is 2^m; pass N=" +
                                        std::to_string(oracle->universe()));
        if (force_two_colors) return binarize_oracle(std::move(oracle), kC1);
        return oracle;
    }
    throw std::invalid_argument("unknown oracle spec: " + spec);
}

}  // namespace ramsey
