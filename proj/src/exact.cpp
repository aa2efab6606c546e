#include "ramsey/exact.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ramsey {

std::int64_t T_closed(std::int64_t s) {
    if (s < 1) throw std::invalid_argument("T(s) needs s >= 1");
    if (s % 2 == 1) return (s + 1) * s * (s - 1) / 24;
    return (s + 2) * s * (s - 2) / 24;
}

namespace {

constexpr std::int64_t kMaxS = 200'000;  // keeps the pruning arithmetic in int64

// The g recursion is solved through its defect d(s) = T(s) - g(s):
//
//   d(s) = min over a+b+c=s of  E(a,b,c) + d(a) + d(b) + d(c),
//   E(a,b,c) = T(s) - T(a) - T(b) - T(c) - abc  >= 0.
//
// The identity is exact (substitute g = T - d); the gain is that d stays
// O(s log s) while the terms of the g recursion are cubic, so partitions far
// from balanced are hopeless and provably prunable.  With A = 3a-s,
// B = 3b-s, C = 3c-s (A+B+C = 0) the envelopes
// (x^3-4x)/24 <= T(x) <= (x^3-x)/24 give
//
//   72 E >= phi(a,b,c) := s(A^2+B^2+C^2) - 3ABC - 9s.
//
// For fixed a, phi is monotone in |b-c|; the direction flips at 9a = s:
//   9a >= s: minimized at the balanced split, phi >= phi0(A) with
//            4*phi0(A) = 6sA^2 - 3A^3 - 36s, and phi0 grows as a decreases;
//   9a <  s: phi >= 18aA^2 - 9s >= 8s^2 - 9s  (|A| > 2s/3 there).
// Since every d(x) >= 0, any branch with the phi bound at or above the best
// total found so far cannot win, which shrinks the scan to a narrow window
// around the balanced partition.

struct DefectTable {
    std::vector<std::int64_t> d{0, 0, 0};  // d[0] unused; d[1] = d[2] = 0
    std::mutex mu;

    static std::int64_t E(std::int64_t s, std::int64_t a, std::int64_t b, std::int64_t c) {
        return T_closed(s) - T_closed(a) - T_closed(b) - T_closed(c) - a * b * c;
    }

    static std::int64_t phi(std::int64_t s, std::int64_t a, std::int64_t b, std::int64_t c) {
        std::int64_t A = 3 * a - s, B = 3 * b - s, C = 3 * c - s;
        return s * (A * A + B * B + C * C) - 3 * A * B * C - 9 * s;
    }

    // 4*phi0, the per-a bound in the 9a >= s region.
    static std::int64_t phi0x4(std::int64_t s, std::int64_t a) {
        std::int64_t A = 3 * a - s;
        return 6 * s * A * A - 3 * A * A * A - 36 * s;
    }

    void ensure(std::int64_t s_max) {
        if (s_max > kMaxS) throw std::domain_error("g recursion limited to s <= 2e5");
        for (std::int64_t s = static_cast<std::int64_t>(d.size()); s <= s_max; ++s) {
            std::int64_t best = -1;
            // 9a >= s region, balanced split first so the bounds bite early
            for (std::int64_t a = s / 3; a >= 1 && 9 * a >= s; --a) {
                if (best >= 0 && phi0x4(s, a) >= 288 * best) break;
                for (std::int64_t b = (s - a) / 2; b >= a; --b) {
                    std::int64_t c = s - a - b;
                    if (best >= 0 && phi(s, a, b, c) >= 72 * best) break;
                    std::int64_t total = E(s, a, b, c) + d[static_cast<std::size_t>(a)] +
                                         d[static_cast<std::size_t>(b)] +
                                         d[static_cast<std::size_t>(c)];
                    if (best < 0 || total < best) best = total;
                }
            }
            // 9a < s region: 72E >= 8s^2 - 9s there, almost always pruned whole
            if (best < 0 || 8 * s * s - 9 * s < 72 * best) {
                for (std::int64_t a = 1; a <= s / 3 && 9 * a < s; ++a)
                    for (std::int64_t b = a; b <= (s - a) / 2; ++b) {
                        std::int64_t c = s - a - b;
                        std::int64_t total = E(s, a, b, c) + d[static_cast<std::size_t>(a)] +
                                             d[static_cast<std::size_t>(b)] +
                                             d[static_cast<std::size_t>(c)];
                        if (best < 0 || total < best) best = total;
                    }
            }
            if (best < 0) throw std::logic_error("empty partition scan");
            d.push_back(best);
        }
    }

    // Lexicographically least optimal partition; the same bounds, scanned in
    // ascending order against the known optimum.
    std::array<std::int64_t, 3> partition(std::int64_t s) {
        std::int64_t opt = d[static_cast<std::size_t>(s)];
        for (std::int64_t a = 1; a <= s / 3; ++a) {
            std::int64_t A = 3 * a - s;
            bool mid = 9 * a >= s;
            if (mid) {
                if (phi0x4(s, a) > 288 * opt) continue;
            } else {
                if (18 * a * A * A - 9 * s > 72 * opt) continue;
            }
            std::int64_t b_lo = a, b_hi = (s - a) / 2;
            if (mid) {
                // phi decreases as b grows; find the first b with phi <= 72*opt
                std::int64_t lo = b_lo, hi = b_hi + 1;
                while (lo < hi) {
                    std::int64_t m = lo + (hi - lo) / 2;
                    if (phi(s, a, m, s - a - m) <= 72 * opt)
                        hi = m;
                    else
                        lo = m + 1;
                }
                b_lo = lo;
            }
            for (std::int64_t b = b_lo; b <= b_hi; ++b) {
                std::int64_t c = s - a - b;
                std::int64_t ph = phi(s, a, b, c);
                if (!mid && ph > 72 * opt) break;  // phi grows with b here
                if (ph > 72 * opt) continue;
                std::int64_t total = E(s, a, b, c) + d[static_cast<std::size_t>(a)] +
                                     d[static_cast<std::size_t>(b)] +
                                     d[static_cast<std::size_t>(c)];
                if (total == opt) return {a, b, c};
            }
        }
        throw std::logic_error("optimal partition not refound");
    }

    static DefectTable& instance() {
        static DefectTable table;
        return table;
    }
};

}  // namespace

std::int64_t d_value(std::int64_t s) {
    if (s < 1) throw std::invalid_argument("d(s) needs s >= 1");
    auto& table = DefectTable::instance();
    std::lock_guard lock(table.mu);
    table.ensure(s);
    return table.d[static_cast<std::size_t>(s)];
}

std::int64_t g13(std::int64_t s) { return T_closed(s) - d_value(s); }

std::array<std::int64_t, 3> g13_partition(std::int64_t s) {
    if (s < 3) throw std::invalid_argument("partition witness needs s >= 3");
    auto& table = DefectTable::instance();
    std::lock_guard lock(table.mu);
    table.ensure(s);
    return table.partition(s);
}

std::unique_ptr<PartitionTree> g13_partition_tree(std::int64_t s) {
    auto node = std::make_unique<PartitionTree>();
    node->s = s;
    if (s >= 3) {
        node->parts = g13_partition(s);
        for (std::int64_t part : node->parts) node->children.push_back(g13_partition_tree(part));
    }
    return node;
}

std::vector<std::int64_t> nice_numbers(std::int64_t limit) {
    std::vector<std::int64_t> nice;
    for (std::int64_t s = 1; s <= limit; ++s)
        if (d_value(s) == 0) nice.push_back(s);
    return nice;
}

RecurrenceReport verify_d_recurrences(std::int64_t x_max) {
    RecurrenceReport report;
    d_value(6 * x_max + 3);  // one bulk fill
    auto d = [](std::int64_t s) { return d_value(s); };
    for (std::int64_t x = 1; x <= x_max; ++x) {
        const std::int64_t lhs[6] = {d(6 * x - 2), d(6 * x - 1), d(6 * x),
                                     d(6 * x + 1), d(6 * x + 2), d(6 * x + 3)};
        const std::int64_t rhs[6] = {2 * d(2 * x - 1) + d(2 * x),
                                     d(2 * x - 1) + 2 * d(2 * x) + x,
                                     3 * d(2 * x),
                                     2 * d(2 * x) + d(2 * x + 1) + x,
                                     d(2 * x) + 2 * d(2 * x + 1),
                                     3 * d(2 * x + 1)};
        for (int i = 0; i < 6; ++i) {
            if (lhs[i] != rhs[i]) {
                report.ok = false;
                report.x = x;
                report.which = i;
                report.lhs = lhs[i];
                report.rhs = rhs[i];
                return report;
            }
        }
    }
    return report;
}

GrowthReport d_growth_report(std::int64_t s_max) {
    if (s_max < 3) throw std::invalid_argument("growth report needs s_max >= 3");
    GrowthReport report;
    d_value(s_max);
    for (std::int64_t s = 3; s <= s_max; ++s) {
        double ratio = static_cast<double>(d_value(s)) /
                       (static_cast<double>(s) * std::log(static_cast<double>(s)));
        if (ratio > report.max_ratio) {
            report.max_ratio = ratio;
            report.argmax = s;
        }
    }
    return report;
}

TBruteResult T_brute(int s) {
    if (s < 1) throw std::invalid_argument("T_brute needs s >= 1");
    if (s > 12) throw std::domain_error("T_brute limited to s <= 12");
    TBruteResult result;
    if (s <= 2) {
        result.value = 0;
        result.witness = transitive_tournament(s);
        return result;
    }
    if (s <= 7) {
        int pairs = s * (s - 1) / 2;
        std::int64_t best = -1;
        std::uint64_t best_mask = 0;
        std::vector<int> outdeg(static_cast<std::size_t>(s));
        const std::int64_t triples =
            static_cast<std::int64_t>(s) * (s - 1) * (s - 2) / 6;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            std::fill(outdeg.begin(), outdeg.end(), 0);
            int bit = 0;
            for (int u = 0; u < s; ++u)
                for (int v = u + 1; v < s; ++v, ++bit)
                    ++outdeg[static_cast<std::size_t>((mask >> bit) & 1u ? u : v)];
            std::int64_t count = triples;
            for (int deg : outdeg) count -= static_cast<std::int64_t>(deg) * (deg - 1) / 2;
            if (count > best) {
                best = count;
                best_mask = mask;
            }
        }
        result.value = best;
        result.witness = tournament_from_mask(s, best_mask);
        return result;
    }

    // Maximize C(s,3) - sum C(d_i,2) over Landau-feasible nondecreasing
    // outdegree sequences.
    const std::int64_t total = static_cast<std::int64_t>(s) * (s - 1) / 2;
    const std::int64_t triples = static_cast<std::int64_t>(s) * (s - 1) * (s - 2) / 6;
    std::int64_t best = -1;
    std::vector<std::int64_t> seq(static_cast<std::size_t>(s));
    auto dfs = [&](auto&& self, int i, std::int64_t lo, std::int64_t sum,
                   std::int64_t penalty) -> void {
        if (i == s) {
            if (sum == total && triples - penalty > best) best = triples - penalty;
            return;
        }
        for (std::int64_t v = lo; v <= s - 1; ++v) {
            std::int64_t ns = sum + v;
            // Landau: prefix sums at least C(k,2); remaining slots must be
            // able to reach the total even at the cap s-1.
            if (ns < static_cast<std::int64_t>(i + 1) * i / 2) continue;
            if (ns + static_cast<std::int64_t>(s - 1 - i) * (s - 1) < total) continue;
            if (ns > total) break;
            seq[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v, ns, penalty + v * (v - 1) / 2);
        }
    };
    dfs(dfs, 0, 0, 0, 0);
    result.value = best;
    result.witness = near_regular_tournament(s);
    if (count_cyclic_triangles(result.witness) != best)
        throw std::logic_error("near-regular witness misses the score-sequence maximum");
    return result;
}

namespace {

// Shared engine for the two pattern maxima: DFS over edges in lexicographic
// pair order, counting each triple at its last-assigned edge (b,c), with the
// suffix bound and (optionally) the T(s) value cap.
struct PatternSearch {
    int s;
    int palette;
    std::uint64_t node_cap;       // 0 = unlimited
    std::optional<std::int64_t> value_cap;

    std::vector<std::pair<int, int>> edges;
    std::vector<std::int64_t> rem;  // triples decided at edge index >= k
    EdgeColoring current;
    PatternMaxResult result;

    explicit PatternSearch(int s_, int palette_, std::uint64_t cap,
                           std::optional<std::int64_t> vcap)
        : s(s_), palette(palette_), node_cap(cap), value_cap(vcap),
          current(s_, palette_), result{0, EdgeColoring(s_, palette_), true, 0} {
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) edges.emplace_back(u, v);
        rem.assign(edges.size() + 1, 0);
        for (std::size_t k = edges.size(); k-- > 0;)
            rem[k] = rem[k + 1] + edges[k].first;  // b choices of a < b at edge (b,c)
    }

    // Pattern contribution of triple (a,b,c) given the color of (b,c):
    // palette 3 wants I,II,III on (a,b),(b,c),(a,c); palette 2 wants I,I,II.
    std::int64_t delta(int b, int c, int color_bc) const {
        int want_bc = palette == 3 ? 1 : 0;
        if (color_bc != want_bc) return 0;
        int want_ac = palette == 3 ? 2 : 1;
        std::int64_t count = 0;
        for (int a = 0; a < b; ++a)
            if (current.color(a, b) == 0 && current.color(a, c) == want_ac) ++count;
        return count;
    }

    void dfs(std::size_t k, std::int64_t count) {
        ++result.nodes;
        if (node_cap && result.nodes > node_cap) {
            result.exact = false;
            return;
        }
        if (k == edges.size()) {
            if (count > result.value) {
                result.value = count;
                result.witness = current;
            }
            return;
        }
        if (count + rem[k] <= result.value) return;
        if (value_cap && result.value >= *value_cap) return;
        auto [b, c] = edges[k];
        for (int col = 0; col < palette; ++col) {
            current.set_color(b, c, col);
            dfs(k + 1, count + delta(b, c, col));
            if (!result.exact) return;
        }
    }
};

}  // namespace

std::int64_t pattern_count(const EdgeColoring& c) {
    int want_bc = c.palette() == 3 ? 1 : 0;
    int want_ac = c.palette() == 3 ? 2 : 1;
    std::int64_t count = 0;
    for (int a = 0; a < c.order(); ++a)
        for (int b = a + 1; b < c.order(); ++b) {
            if (c.color(a, b) != 0) continue;
            for (int cc = b + 1; cc < c.order(); ++cc)
                if (c.color(b, cc) == want_bc && c.color(a, cc) == want_ac) ++count;
        }
    return count;
}

std::int64_t parity_pattern_count(int s) { return pattern_count(parity_coloring(s)); }

PatternMaxResult F1_brute(int s, std::uint64_t node_cap) {
    if (s < 3) {
        if (s < 1) throw std::invalid_argument("F1 needs s >= 1");
        return {0, EdgeColoring(std::max(s, 2), 3), true, 0};
    }
    if (s > 7) throw std::domain_error("F1_brute limited to s <= 7");
    if (s == 7 && node_cap == 0)
        throw std::domain_error("F1_brute(7) requires an explicit node budget");
    PatternSearch search(s, 3, node_cap, T_closed(s));
    search.dfs(0, 0);
    return std::move(search.result);
}

PatternMaxResult F2_brute(int s) {
    if (s < 3) {
        if (s < 1) throw std::invalid_argument("F2 needs s >= 1");
        return {0, EdgeColoring(std::max(s, 2), 2), true, 0};
    }
    if (s > 8) throw std::domain_error("F2_brute limited to s <= 8");
    PatternSearch search(s, 2, 0, std::nullopt);
    search.dfs(0, 0);
    return std::move(search.result);
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::closed_form: return "closed-form";
        case Provenance::recursion: return "recursion";
        case Provenance::brute_force: return "brute-force";
        case Provenance::absent: return "absent";
    }
    return "?";
}

std::vector<TableRow> compute_table(std::int64_t lo, std::int64_t hi,
                                    const TableOptions& opts) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad table range");
    std::vector<TableRow> rows;
    for (std::int64_t s = lo; s <= hi; ++s) {
        TableRow row;
        row.s = s;
        row.T = T_closed(s);
        row.g = g13(s);
        row.d = row.T - row.g;
        row.nice = row.d == 0;
        if (s <= opts.f1_max && s <= 7) {
            std::uint64_t cap = s >= 7 ? opts.f1_node_cap : 0;
            if (s < 7 || cap > 0) {
                auto f1 = F1_brute(static_cast<int>(s), cap);
                row.F1 = f1.value;
                row.F1_mode = f1.exact ? "exact" : "lower-bound";
            }
        }
        if (s <= opts.f2_brute_max && s <= 8) {
            row.F2 = F2_brute(static_cast<int>(s)).value;
            row.F2_from = Provenance::brute_force;
        } else {
            row.F2 = F2_formula(s);
            row.F2_from = Provenance::closed_form;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "s,T,g,F1,F1_mode,F2,d,nice\n";
    for (const auto& row : rows) {
        out << row.s << "," << row.T << "," << row.g << ",";
        if (row.F1) out << *row.F1;
        out << "," << row.F1_mode << ",";
        if (row.F2) out << *row.F2;
        out << "," << row.d << "," << (row.nice ? 1 : 0) << "\n";
    }
    return out.str();
}

std::string table_to_json(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (i) out << ",";
        out << "{\"s\":" << row.s << ",\"T\":" << row.T << ",\"g\":" << row.g << ",\"F1\":";
        if (row.F1) out << *row.F1; else out << "null";
        out << ",\"F1_mode\":\"" << row.F1_mode << "\",\"F2\":";
        if (row.F2) out << *row.F2; else out << "null";
        out << ",\"F2_from\":\"" << provenance_name(row.F2_from) << "\"";
        out << ",\"d\":" << row.d << ",\"nice\":" << (row.nice ? "true" : "false") << "}";
    }
    out << "]";
    return out.str();
}

}  // namespace ramsey
