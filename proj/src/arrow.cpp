#include "oramsey/arrow.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

namespace oramsey {

namespace {

// ---- mask arithmetic over one, two or more 64-bit words ----

int mask_popcount(std::uint64_t m) { return std::popcount(m); }
int mask_ctz(std::uint64_t m) { return std::countr_zero(m); }
std::uint64_t clear_lowest(std::uint64_t m) { return m & (m - 1); }
bool single_bit(std::uint64_t m) { return m && clear_lowest(m) == 0; }
void set_bit(std::uint64_t& m, int e) { m |= std::uint64_t{1} << e; }

using U128 = unsigned __int128;
int mask_popcount(U128 m) {
    return std::popcount(static_cast<std::uint64_t>(m)) +
           std::popcount(static_cast<std::uint64_t>(m >> 64));
}
int mask_ctz(U128 m) {
    auto lo = static_cast<std::uint64_t>(m);
    if (lo) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}
U128 clear_lowest(U128 m) { return m & (m - 1); }
bool single_bit(U128 m) { return m != 0 && clear_lowest(m) == 0; }
void set_bit(U128& m, int e) { m |= U128{1} << e; }

template <int W>
struct BitMask {
    std::array<std::uint64_t, W> w{};

    friend BitMask operator&(BitMask a, const BitMask& b) {
        for (int i = 0; i < W; ++i) a.w[static_cast<std::size_t>(i)] &= b.w[static_cast<std::size_t>(i)];
        return a;
    }
    friend BitMask operator|(BitMask a, const BitMask& b) {
        for (int i = 0; i < W; ++i) a.w[static_cast<std::size_t>(i)] |= b.w[static_cast<std::size_t>(i)];
        return a;
    }
    BitMask operator~() const {
        BitMask r;
        for (int i = 0; i < W; ++i) r.w[static_cast<std::size_t>(i)] = ~w[static_cast<std::size_t>(i)];
        return r;
    }
    explicit operator bool() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    friend bool operator==(const BitMask&, const BitMask&) = default;
    friend bool operator<(const BitMask& a, const BitMask& b) {
        for (int i = W - 1; i >= 0; --i)
            if (a.w[static_cast<std::size_t>(i)] != b.w[static_cast<std::size_t>(i)])
                return a.w[static_cast<std::size_t>(i)] < b.w[static_cast<std::size_t>(i)];
        return false;
    }
};

template <int W>
int mask_popcount(const BitMask<W>& m) {
    int c = 0;
    for (auto x : m.w) c += std::popcount(x);
    return c;
}
template <int W>
int mask_ctz(const BitMask<W>& m) {
    for (int i = 0; i < W; ++i)
        if (m.w[static_cast<std::size_t>(i)])
            return 64 * i + std::countr_zero(m.w[static_cast<std::size_t>(i)]);
    return 64 * W;
}
template <int W>
BitMask<W> clear_lowest(BitMask<W> m) {
    for (int i = 0; i < W; ++i)
        if (m.w[static_cast<std::size_t>(i)]) {
            m.w[static_cast<std::size_t>(i)] &= m.w[static_cast<std::size_t>(i)] - 1;
            break;
        }
    return m;
}
template <int W>
bool single_bit(const BitMask<W>& m) {
    return mask_popcount(m) == 1;
}
template <int W>
void set_bit(BitMask<W>& m, int e) {
    m.w[static_cast<std::size_t>(e >> 6)] |= std::uint64_t{1} << (e & 63);
}

// ---- clause collection ----

template <typename Mask>
std::vector<Mask> minimalize(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end(), [](const Mask& a, const Mask& b) {
        int pa = mask_popcount(a), pb = mask_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> keep;
    for (const Mask& m : masks) {
        bool dominated = false;
        for (const Mask& k : keep)
            if ((k & m) == k) { dominated = true; break; }
        if (!dominated) keep.push_back(m);
    }
    return keep;
}

template <typename Mask>
std::vector<Mask> raw_masks(const OrderedGraph& f, const OrderedGraph& pattern,
                            Vertex anchor /* 0 = none */) {
    std::vector<Mask> out;
    for (const auto& emb : find_embeddings(f, pattern)) {
        if (anchor != 0 && std::find(emb.map.begin(), emb.map.end(), anchor) == emb.map.end())
            continue;
        Mask mask{};
        for (const auto& [u, v] : pattern.edges())
            set_bit(mask, f.edge_index(emb.at(u), emb.at(v)));
        out.push_back(mask);
    }
    return out;
}

// ---- the search core ----
// Backtracking over edge colors with unit propagation. A "red clause" records a
// copy of h: at least one of its edges must be blue; blue clauses symmetrically.
template <typename Mask>
struct Solver {
    int m = 0;
    std::vector<Mask> red_clauses, blue_clauses;
    std::vector<std::vector<int>> red_by_edge, blue_by_edge;
    Mask red{}, blue{};
    // live-embedding counts per edge drive the branching heuristic; clauses
    // flip to satisfied exactly once per branch and are restored on undo
    std::vector<int> live_count;
    std::vector<bool> red_sat, blue_sat;
    std::vector<int> sat_log; // red clause c as c, blue clause c as c + R
    struct TrailEntry {
        int edge_color;          // (edge << 1) | blue-bit
        std::size_t sat_mark;    // sat_log size before this assignment
    };
    std::vector<TrailEntry> trail;
    SearchStats stats;
    std::uint64_t budget = 0;
    int assigned_count = 0;

    enum class Result { Sat, Unsat, Budget };

    Solver(int edges, std::vector<Mask> rc, std::vector<Mask> bc, std::uint64_t node_budget)
        : m(edges), red_clauses(std::move(rc)), blue_clauses(std::move(bc)), budget(node_budget) {
        red_by_edge.assign(static_cast<std::size_t>(m), {});
        blue_by_edge.assign(static_cast<std::size_t>(m), {});
        live_count.assign(static_cast<std::size_t>(m), 0);
        red_sat.assign(red_clauses.size(), false);
        blue_sat.assign(blue_clauses.size(), false);
        for (std::size_t c = 0; c < red_clauses.size(); ++c)
            for (Mask w = red_clauses[c]; static_cast<bool>(w); w = clear_lowest(w)) {
                int e = mask_ctz(w);
                red_by_edge[static_cast<std::size_t>(e)].push_back(static_cast<int>(c));
                ++live_count[static_cast<std::size_t>(e)];
            }
        for (std::size_t c = 0; c < blue_clauses.size(); ++c)
            for (Mask w = blue_clauses[c]; static_cast<bool>(w); w = clear_lowest(w)) {
                int e = mask_ctz(w);
                blue_by_edge[static_cast<std::size_t>(e)].push_back(static_cast<int>(c));
                ++live_count[static_cast<std::size_t>(e)];
            }
    }

    bool assigned(int e) const {
        Mask bit{};
        set_bit(bit, e);
        return static_cast<bool>((red | blue) & bit);
    }

    void satisfy(int global_id, const Mask& mask) {
        sat_log.push_back(global_id);
        for (Mask w = mask; static_cast<bool>(w); w = clear_lowest(w))
            --live_count[static_cast<std::size_t>(mask_ctz(w))];
    }

    bool enqueue_and_propagate(int e0, Color c0) {
        std::vector<std::pair<int, Color>> queue{{e0, c0}};
        std::size_t qi = 0;
        while (qi < queue.size()) {
            auto [e, c] = queue[qi++];
            Mask bit{};
            set_bit(bit, e);
            if (static_cast<bool>(red & bit)) {
                if (c == Color::Blue) return false;
                continue;
            }
            if (static_cast<bool>(blue & bit)) {
                if (c == Color::Red) return false;
                continue;
            }
            if (c == Color::Red) red = red | bit; else blue = blue | bit;
            trail.push_back({(e << 1) | (c == Color::Blue ? 1 : 0), sat_log.size()});
            ++assigned_count;
            ++stats.propagations;
            // a red assignment satisfies blue clauses through e, and vice versa
            const auto& satisfy_watch = c == Color::Red ? blue_by_edge[static_cast<std::size_t>(e)]
                                                        : red_by_edge[static_cast<std::size_t>(e)];
            const auto& satisfy_clauses = c == Color::Red ? blue_clauses : red_clauses;
            auto& satisfy_flags = c == Color::Red ? blue_sat : red_sat;
            const int offset = c == Color::Red ? static_cast<int>(red_clauses.size()) : 0;
            for (int ci : satisfy_watch)
                if (!satisfy_flags[static_cast<std::size_t>(ci)]) {
                    satisfy_flags[static_cast<std::size_t>(ci)] = true;
                    satisfy(ci + offset, satisfy_clauses[static_cast<std::size_t>(ci)]);
                }
            // same-color clauses through e shrink and may turn unit or empty
            const auto& watch = c == Color::Red ? red_by_edge[static_cast<std::size_t>(e)]
                                                : blue_by_edge[static_cast<std::size_t>(e)];
            const auto& clauses = c == Color::Red ? red_clauses : blue_clauses;
            const auto& flags = c == Color::Red ? red_sat : blue_sat;
            for (int ci : watch) {
                if (flags[static_cast<std::size_t>(ci)]) continue;
                const Mask& mask = clauses[static_cast<std::size_t>(ci)];
                Mask open = mask & ~(red | blue);
                if (!static_cast<bool>(open)) return false; // monochromatic copy completed
                if (single_bit(open)) queue.emplace_back(mask_ctz(open), other(c));
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            auto entry = trail.back();
            trail.pop_back();
            --assigned_count;
            while (sat_log.size() > entry.sat_mark) {
                int id = sat_log.back();
                sat_log.pop_back();
                const int reds = static_cast<int>(red_clauses.size());
                const Mask& mask = id < reds ? red_clauses[static_cast<std::size_t>(id)]
                                             : blue_clauses[static_cast<std::size_t>(id - reds)];
                if (id < reds) red_sat[static_cast<std::size_t>(id)] = false;
                else blue_sat[static_cast<std::size_t>(id - reds)] = false;
                for (Mask w = mask; static_cast<bool>(w); w = clear_lowest(w))
                    ++live_count[static_cast<std::size_t>(mask_ctz(w))];
            }
            Mask bit{};
            set_bit(bit, entry.edge_color >> 1);
            if (entry.edge_color & 1) blue = blue & ~bit; else red = red & ~bit;
        }
    }

    // most-constrained edge: highest count of live embeddings through it
    int pick_edge() const {
        if (assigned_count == m) return -1;
        int best = -1, best_count = -1;
        for (int e = 0; e < m; ++e) {
            if (assigned(e)) continue;
            if (live_count[static_cast<std::size_t>(e)] > best_count) {
                best_count = live_count[static_cast<std::size_t>(e)];
                best = e;
            }
        }
        return best;
    }

    Result dfs() {
        if (stats.nodes >= budget) return Result::Budget;
        ++stats.nodes;
        int e = pick_edge();
        if (e < 0) return Result::Sat;
        for (Color c : {Color::Red, Color::Blue}) {
            std::size_t mark = trail.size();
            if (enqueue_and_propagate(e, c)) {
                Result r = dfs();
                if (r != Result::Unsat) return r;
            }
            undo_to(mark);
        }
        return Result::Unsat;
    }
};

template <typename Mask>
ArrowCertificate solve_with(const OrderedGraph& f, const OrderedGraph& h, const OrderedGraph& hp,
                            Vertex blue_anchor, const ArrowOptions& opts) {
    Solver<Mask> solver(f.edge_count(), minimalize(raw_masks<Mask>(f, h, 0)),
                        minimalize(raw_masks<Mask>(f, hp, blue_anchor)), opts.node_budget);
    ArrowCertificate cert;
    switch (solver.dfs()) {
    case Solver<Mask>::Result::Unsat:
        cert.verdict = ArrowVerdict::Arrows;
        break;
    case Solver<Mask>::Result::Budget:
        cert.verdict = ArrowVerdict::Unknown;
        break;
    case Solver<Mask>::Result::Sat: {
        cert.verdict = ArrowVerdict::NotArrows;
        std::vector<Color> colors(static_cast<std::size_t>(f.edge_count()), Color::Blue);
        for (int e = 0; e < f.edge_count(); ++e) {
            Mask bit{};
            set_bit(bit, e);
            if (static_cast<bool>(solver.red & bit)) colors[static_cast<std::size_t>(e)] = Color::Red;
        }
        cert.witness = EdgeColoring(f, std::move(colors));
        break;
    }
    }
    cert.stats = solver.stats;
    return cert;
}

ArrowCertificate arrows_impl(const OrderedGraph& f, const OrderedGraph& h, const OrderedGraph& hp,
                             Vertex blue_anchor, const ArrowOptions& opts) {
    if (h.edge_count() < 1 || hp.edge_count() < 1)
        throw std::invalid_argument("arrows: both patterns need at least one edge");
    const int m = f.edge_count();
    if (m <= 64) return solve_with<std::uint64_t>(f, h, hp, blue_anchor, opts);
    if (m <= 128) return solve_with<U128>(f, h, hp, blue_anchor, opts);
    if (m <= 192) return solve_with<BitMask<3>>(f, h, hp, blue_anchor, opts);
    if (m <= kMaxSolverEdges) return solve_with<BitMask<4>>(f, h, hp, blue_anchor, opts);
    throw std::invalid_argument("arrows: host exceeds the solver edge cap");
}

} // namespace

std::vector<std::uint64_t> copy_edge_masks(const OrderedGraph& f, const OrderedGraph& pattern) {
    if (f.edge_count() > 64)
        throw std::invalid_argument("copy_edge_masks: host exceeds the single-word mask width");
    return minimalize(raw_masks<std::uint64_t>(f, pattern, 0));
}

ArrowCertificate arrows(const OrderedGraph& f, const OrderedGraph& h, const OrderedGraph& hp,
                        const ArrowOptions& opts) {
    return arrows_impl(f, h, hp, 0, opts);
}

ArrowCertificate arrows_with_blue_anchor(const OrderedGraph& f, const OrderedGraph& h,
                                         const OrderedGraph& hp, Vertex anchor,
                                         const ArrowOptions& opts) {
    if (anchor < 1 || anchor > f.vertex_count())
        throw std::invalid_argument("arrows_with_blue_anchor: anchor out of range");
    return arrows_impl(f, h, hp, anchor, opts);
}

MinimalityCertificate is_minimal_ramsey(const OrderedGraph& f, const OrderedGraph& h,
                                        const OrderedGraph& hp, const ArrowOptions& opts) {
    MinimalityCertificate cert;
    cert.base = arrows(f, h, hp, opts).verdict;
    if (cert.base != ArrowVerdict::Arrows) {
        cert.unknown = cert.base == ArrowVerdict::Unknown;
        return cert;
    }
    for (const auto& e : f.edges()) {
        auto sub = arrows(delete_edge(f, e), h, hp, opts);
        if (sub.verdict == ArrowVerdict::Arrows) {
            cert.failing_edge = e;
            return cert;
        }
        if (sub.verdict == ArrowVerdict::Unknown) cert.unknown = true;
    }
    for (Vertex v : f.isolated_vertices()) {
        auto sub = arrows(delete_vertex(f, v), h, hp, opts);
        if (sub.verdict == ArrowVerdict::Arrows) {
            cert.failing_isolated_vertex = v;
            return cert;
        }
        if (sub.verdict == ArrowVerdict::Unknown) cert.unknown = true;
    }
    cert.is_minimal = !cert.unknown;
    return cert;
}

EnumerateResult enumerate_minimal(const OrderedGraph& h, const OrderedGraph& hp, int max_vertices,
                                  int max_edges, const ArrowOptions& opts) {
    EnumerateResult result;
    for (int n = 1; n <= max_vertices; ++n) {
        const int slots = n * (n - 1) / 2;
        if (slots > 62)
            throw std::invalid_argument("enumerate_minimal: vertex bound too large for subset sweep");
        std::vector<Edge> slot_edges;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v) slot_edges.emplace_back(u, v);
        auto graph_of = [&](std::uint64_t mask) {
            std::vector<Edge> edges;
            for (std::uint64_t w = mask; w; w &= w - 1)
                edges.push_back(slot_edges[static_cast<std::size_t>(std::countr_zero(w))]);
            return OrderedGraph(n, std::move(edges));
        };
        std::unordered_map<std::uint64_t, ArrowVerdict> memo;
        auto eval = [&](std::uint64_t mask) {
            auto it = memo.find(mask);
            if (it != memo.end()) return it->second;
            auto verdict = arrows(graph_of(mask), h, hp, opts).verdict;
            memo.emplace(mask, verdict);
            return verdict;
        };
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
            if (std::popcount(mask) > max_edges) continue;
            auto base = eval(mask);
            if (base == ArrowVerdict::Unknown) { result.complete = false; continue; }
            if (base != ArrowVerdict::Arrows) continue;
            bool minimal = true;
            bool undecided = false;
            for (std::uint64_t w = mask; w && minimal; w &= w - 1) {
                std::uint64_t bit = w & (0 - w);
                auto sub = eval(mask & ~bit);
                if (sub == ArrowVerdict::Arrows) minimal = false;
                if (sub == ArrowVerdict::Unknown) undecided = true;
            }
            if (minimal) {
                auto g = graph_of(mask);
                for (Vertex v : g.isolated_vertices()) {
                    if (!minimal) break;
                    auto sub = arrows(delete_vertex(g, v), h, hp, opts).verdict;
                    if (sub == ArrowVerdict::Arrows) minimal = false;
                    if (sub == ArrowVerdict::Unknown) undecided = true;
                }
            }
            if (undecided && minimal) { result.complete = false; continue; }
            if (minimal) result.graphs.push_back(graph_of(mask));
        }
    }
    std::sort(result.graphs.begin(), result.graphs.end());
    return result;
}

RamseyNumberResult ordered_ramsey_number(const OrderedGraph& h, const OrderedGraph& hp, int cap,
                                         const ArrowOptions& opts) {
    RamseyNumberResult out;
    for (int r = 1; r <= cap; ++r) {
        auto cert = arrows(complete_graph(r), h, hp, opts);
        if (cert.verdict == ArrowVerdict::Arrows) {
            out.value = r;
            return out;
        }
        if (cert.verdict == ArrowVerdict::Unknown) {
            out.budget_exceeded = true;
            return out;
        }
    }
    return out;
}

} // namespace oramsey
