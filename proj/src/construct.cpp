#include "oramsey/construct.hpp"

#include "oramsey/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>

namespace oramsey {

// ---- combinators ----

OrderedGraph union_intervally(const OrderedGraph& a, const OrderedGraph& b) {
    std::vector<Edge> edges = a.edges();
    for (const auto& [u, v] : b.edges())
        edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return OrderedGraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

OrderedGraph union_copies(const OrderedGraph& g, int count) {
    OrderedGraph out(0, {});
    for (int k = 0; k < count; ++k) out = union_intervally(out, g);
    return out;
}

OrderedGraph concatenate(const OrderedGraph& a, const OrderedGraph& b) {
    if (a.vertex_count() < 1 || b.vertex_count() < 1)
        throw std::invalid_argument("concatenate: both sides need a vertex");
    const int shift = a.vertex_count() - 1;
    std::vector<Edge> edges = a.edges();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return OrderedGraph(a.vertex_count() + b.vertex_count() - 1, std::move(edges));
}

OrderedGraph concatenate_copies(const OrderedGraph& g, int count) {
    if (count < 1) throw std::invalid_argument("concatenate_copies: count must be positive");
    OrderedGraph out = g;
    for (int k = 1; k < count; ++k) out = concatenate(out, g);
    return out;
}

OrderedGraph hang(int star_edges, int copies, const OrderedGraph& g) {
    if (star_edges < 0 || copies < 0) throw std::invalid_argument("hang: negative count");
    if (copies > 0 && g.vertex_count() < 1) throw std::invalid_argument("hang: empty block");
    const int ng = g.vertex_count();
    std::vector<Edge> edges;
    for (int t = 0; t < star_edges; ++t) edges.emplace_back(1, t + 2);
    for (int k = 0; k < copies; ++k) {
        const int base = star_edges + 1 + k * ng;
        edges.emplace_back(1, base + 1); // spoke to the block's leftmost vertex
        for (const auto& [u, v] : g.edges()) edges.emplace_back(u + base, v + base);
    }
    return OrderedGraph(star_edges + 1 + copies * ng, std::move(edges));
}

OrderedGraph build_caterpillar(const DefiningSequence& d) {
    if (d.d.empty()) throw std::invalid_argument("build_caterpillar: empty sequence");
    for (int x : d.d)
        if (x < 1) throw std::invalid_argument("build_caterpillar: entries must be positive");
    OrderedGraph g = right_star(d.d.back()); // leftmost segment
    for (int k = static_cast<int>(d.d.size()) - 2; k >= 0; --k)
        g = concatenate(g, right_star(d.d[static_cast<std::size_t>(k)]));
    return g;
}

OrderedGraph caterpillar_suffix(const DefiningSequence& d, int i, int j) {
    if (i < 0 || j < 1 || j > i + 1 || i > static_cast<int>(d.d.size()))
        throw std::invalid_argument("caterpillar_suffix: bad segment range");
    if (j == i + 1) return single_vertex();
    DefiningSequence part;
    part.d.assign(d.d.begin() + (j - 1), d.d.begin() + i);
    return build_caterpillar(part);
}

OrderedGraph caterpillar_prefix(const DefiningSequence& d, int t) {
    if (t < 0 || t > static_cast<int>(d.d.size()))
        throw std::invalid_argument("caterpillar_prefix: bad segment count");
    if (t == 0) return single_vertex();
    DefiningSequence part;
    part.d.assign(d.d.begin(), d.d.begin() + t);
    return build_caterpillar(part);
}

OrderedGraph build_pseudoforest_ramsey_monp3() {
    return OrderedGraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 4}});
}

// ---- forest hosts ----

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

struct ForestCore {
    BuildStatus status = BuildStatus::Ok;
    OrderedGraph graph;
};

ForestCore build_core(const OrderedGraph& h, const OrderedGraph& hp, const BuildOptions& opts);

// wrapper handling isolated vertices by stripping and re-padding
ForestCore build_padded(const OrderedGraph& h, const OrderedGraph& hp, const BuildOptions& opts) {
    const int t = static_cast<int>(h.isolated_vertices().size() + hp.isolated_vertices().size());
    auto core = build_core(strip_isolated(h), strip_isolated(hp), opts);
    if (core.status != BuildStatus::Ok || t == 0) return core;
    // t isolated vertices to the left, the right, and into every middle gap
    const int m = core.graph.vertex_count();
    std::vector<Edge> edges;
    for (const auto& [u, v] : core.graph.edges())
        edges.emplace_back(u + t * u, v + t * v);
    return ForestCore{BuildStatus::Ok, OrderedGraph(m + t * (m + 1), std::move(edges))};
}

// the matching construction: one block of disjoint pattern copies per copy in a
// complete host of the pair's least arrowing order
ForestCore matching_core(const OrderedGraph& matching, const OrderedGraph& other,
                         const BuildOptions& opts) {
    // the sweep dominates the builder's cost; cache it per pair
    static std::mutex memo_mutex;
    static std::map<std::string, std::optional<int>> memo;
    const std::string key = to_dsl(matching) + "|" + to_dsl(other) + "|" +
                            std::to_string(opts.ramsey_cap) + "|" +
                            std::to_string(opts.arrow.node_budget);
    std::optional<int> rvalue;
    bool cached = false;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) {
            rvalue = it->second;
            cached = true;
        }
    }
    if (!cached) {
        auto rn = ordered_ramsey_number(matching, other, opts.ramsey_cap, opts.arrow);
        rvalue = rn.value;
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo.emplace(key, rvalue);
    }
    if (!rvalue) return ForestCore{BuildStatus::BudgetExceeded, OrderedGraph()};
    const int r = *rvalue;
    const int k = other.vertex_count();
    const long long m = binom(r - 1, k - 1);
    // enumerate k-subsets of [r] in lexicographic order; each one carries a copy
    std::vector<int> used(static_cast<std::size_t>(r) + 1, 0);
    std::vector<Edge> edges;
    std::vector<int> subset(static_cast<std::size_t>(k));
    auto vertex_id = [&](int i, int j) { return (i - 1) * static_cast<int>(m) + j + 1; };
    auto emit = [&]() {
        std::vector<int> slot(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t)
            slot[static_cast<std::size_t>(t)] = used[static_cast<std::size_t>(subset[static_cast<std::size_t>(t)])]++;
        for (const auto& [x, y] : other.edges())
            edges.emplace_back(vertex_id(subset[static_cast<std::size_t>(x - 1)], slot[static_cast<std::size_t>(x - 1)]),
                               vertex_id(subset[static_cast<std::size_t>(y - 1)], slot[static_cast<std::size_t>(y - 1)]));
    };
    // iterative k-subset enumeration
    for (int t = 0; t < k; ++t) subset[static_cast<std::size_t>(t)] = t + 1;
    while (true) {
        emit();
        int pos = k - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == r - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int t = pos + 1; t < k; ++t)
            subset[static_cast<std::size_t>(t)] = subset[static_cast<std::size_t>(t - 1)] + 1;
    }
    return ForestCore{BuildStatus::Ok, OrderedGraph(r * static_cast<int>(m), std::move(edges))};
}

// right-star forest against unique left neighbors, by peeling the rightmost
// vertex of hp and blowing the smaller host up
ForestCore star_blowup_core(const OrderedGraph& h, const OrderedGraph& hp,
                            const BuildOptions& opts) {
    if (hp.edge_count() == 1) return ForestCore{BuildStatus::Ok, h};
    const Vertex w = hp.vertex_count(); // rightmost; a leaf since left degrees are <= 1
    auto inner = build_padded(h, delete_vertex(hp, w), opts);
    if (inner.status != BuildStatus::Ok) return inner;
    const int f = inner.graph.vertex_count();
    const int n = h.vertex_count();
    std::vector<Edge> edges;
    auto id = [&](int block, int k) { return (block - 1) * f + k; };
    for (Vertex v = 1; v <= n; ++v)
        if (h.right_degree(v) >= 1)
            for (const auto& [x, y] : inner.graph.edges()) edges.emplace_back(id(v, x), id(v, y));
    for (const auto& [x, y] : h.edges())
        for (int k = 1; k <= f; ++k) edges.emplace_back(id(x, k), id(y, k));
    return ForestCore{BuildStatus::Ok, OrderedGraph(n * f, std::move(edges))};
}

ForestCore mirrored(ForestCore core) {
    if (core.status == BuildStatus::Ok) core.graph = mirror(core.graph);
    return core;
}

// star components against monotone-path components
ForestCore star_path_core(const OrderedGraph& h, const OrderedGraph& hp, const BuildOptions& opts) {
    auto comps = components(h);
    if (comps.size() == 1) {
        if (classify_structure(h).is_right_star) return star_blowup_core(h, hp, opts);
        return mirrored(star_blowup_core(mirror(h), mirror(hp), opts));
    }
    if (hp.edge_count() == 1) return ForestCore{BuildStatus::Ok, h};

    auto first_comp = induced_subgraph(h, comps.front());
    if (!classify_structure(first_comp).is_right_star) {
        // mirror the whole instance so the chosen component is a right star
        return mirrored(star_path_core(mirror(h), mirror(hp), opts));
    }
    const int star_size = first_comp.edge_count();
    std::vector<Vertex> rest;
    for (std::size_t c = 1; c < comps.size(); ++c)
        rest.insert(rest.end(), comps[c].begin(), comps[c].end());
    std::sort(rest.begin(), rest.end());
    auto a_part = build_padded(induced_subgraph(h, rest), hp, opts);
    if (a_part.status != BuildStatus::Ok) return a_part;
    auto b_part = build_padded(h, delete_vertex(hp, hp.vertex_count()), opts);
    if (b_part.status != BuildStatus::Ok) return b_part;
    const auto& A = a_part.graph;
    const auto& B = b_part.graph;
    const int na = A.vertex_count(), nb = B.vertex_count();

    // layout: B_1, leaves_1, a_1, B_2, leaves_2, a_2, ..., B_{n+1}, leaves_{n+1}
    std::vector<int> block_base(static_cast<std::size_t>(na) + 2, 0);
    std::vector<int> a_pos(static_cast<std::size_t>(na) + 1, 0);
    int pos = 0;
    std::vector<Edge> edges;
    for (int jblk = 1; jblk <= na + 1; ++jblk) {
        block_base[static_cast<std::size_t>(jblk)] = pos;
        for (const auto& [x, y] : B.edges()) edges.emplace_back(pos + x, pos + y);
        pos += nb;
        // leaves for every block i <= jblk and every vertex in B_i
        for (int iblk = 1; iblk <= jblk; ++iblk)
            for (int u = 1; u <= nb; ++u)
                for (int t = 0; t < star_size; ++t) {
                    ++pos;
                    edges.emplace_back(block_base[static_cast<std::size_t>(iblk)] + u, pos);
                }
        if (jblk <= na) {
            ++pos;
            a_pos[static_cast<std::size_t>(jblk)] = pos;
        }
    }
    for (const auto& [x, y] : A.edges())
        edges.emplace_back(a_pos[static_cast<std::size_t>(x)], a_pos[static_cast<std::size_t>(y)]);
    return ForestCore{BuildStatus::Ok, OrderedGraph(pos, std::move(edges))};
}

ForestCore build_core(const OrderedGraph& h, const OrderedGraph& hp, const BuildOptions& opts) {
    auto verdict = ramsey_forest_case(h, hp);
    if (verdict.answer != Answer::Yes) return ForestCore{BuildStatus::NotCovered, OrderedGraph()};
    const OrderedGraph& a = verdict.swapped ? hp : h;
    const OrderedGraph& b = verdict.swapped ? h : hp;
    switch (verdict.case_number) {
    case 1:
        return matching_core(a, b, opts);
    case 2:
        return star_blowup_core(a, b, opts);
    case 3:
        return mirrored(star_blowup_core(mirror(a), mirror(b), opts));
    case 4:
        return star_path_core(a, b, opts);
    default:
        throw std::logic_error("unexpected forest case");
    }
}

} // namespace

ForestBuild build_forest_ramsey(const OrderedGraph& h, const OrderedGraph& hp,
                                const BuildOptions& opts) {
    ForestBuild out;
    auto verdict = ramsey_forest_case(h, hp);
    if (verdict.answer != Answer::Yes) {
        out.status = BuildStatus::NotCovered;
        return out;
    }
    out.case_number = verdict.case_number;
    auto core = build_padded(h, hp, opts);
    out.status = core.status;
    if (core.status != BuildStatus::Ok) return out;
    out.graph = core.graph;
    if (!is_forest(out.graph)) throw std::logic_error("forest builder produced a cycle");
    if (out.graph.edge_count() <= opts.verify_edge_limit) {
        out.verify_attempted = true;
        auto cert = arrows(out.graph, h, hp, opts.arrow);
        if (cert.verdict == ArrowVerdict::NotArrows)
            throw std::logic_error("forest builder output fails to arrow its pair");
        out.verified = cert.verdict == ArrowVerdict::Arrows;
    }
    return out;
}

// ---- determiners ----

namespace {

void check_spec(const DeterminerSpec& spec, Side side) {
    if (spec.star_edges < 1) throw std::invalid_argument("determiner: star needs an edge");
    const int need = side == Side::Left ? spec.i : spec.i;
    if (spec.i < 0 || need > static_cast<int>(spec.d.d.size()))
        throw std::invalid_argument("determiner: sequence shorter than the segment index");
    for (int x : spec.d.d)
        if (x < 1) throw std::invalid_argument("determiner: segment sizes must be positive");
    if (side == Side::Right && (spec.j < 2 || spec.j > spec.i + 1))
        throw std::invalid_argument("determiner: right index must satisfy 2 <= j <= i+1");
}

} // namespace

OrderedGraph left_determiner(const DeterminerSpec& spec) {
    check_spec(spec, Side::Left);
    if (spec.i == 0) return single_vertex();
    if (spec.i == 1) return right_star(spec.star_edges + spec.d.d[0] - 1);
    DeterminerSpec inner = spec;
    inner.i = spec.i - 1;
    return hang(spec.d.d[static_cast<std::size_t>(spec.i - 1)] - 1, spec.star_edges,
                left_determiner(inner));
}

OrderedGraph right_determiner(const DeterminerSpec& spec) {
    check_spec(spec, Side::Right);
    if (spec.j == spec.i + 1) return single_vertex();
    DeterminerSpec right_inner = spec;
    right_inner.j = spec.j + 1;
    DeterminerSpec left_inner = spec;
    left_inner.i = spec.j - 1;
    auto dright = right_determiner(right_inner);
    auto dprime = hang(spec.d.d[static_cast<std::size_t>(spec.j - 1)] - 1, spec.star_edges - 1,
                       left_determiner(left_inner));
    auto body = concatenate(dright, dprime);
    const Vertex x = dright.vertex_count();
    const Vertex y = body.vertex_count() + 1;
    std::vector<Edge> edges = body.edges();
    edges.emplace_back(x, y);
    return OrderedGraph(y, std::move(edges));
}

namespace {

// shift an embedding into a block placed at `base`
void append_shifted(std::vector<Vertex>& map, const Embedding& sub, int base, bool skip_first) {
    for (std::size_t q = skip_first ? 1 : 0; q < sub.map.size(); ++q)
        map.push_back(sub.map[q] + base);
}

GoodColoring good_left(const DeterminerSpec& spec);
GoodColoring good_right(const DeterminerSpec& spec);

void merge_block(std::vector<std::optional<Color>>& slots, const OrderedGraph& host,
                 const EdgeColoring& block, int base) {
    for (std::size_t e = 0; e < block.color.size(); ++e) {
        const auto& [u, v] = block.host.edges()[e];
        int idx = host.edge_index(u + base, v + base);
        if (idx < 0) throw std::logic_error("good coloring: block edge missing in host");
        slots[static_cast<std::size_t>(idx)] = block.color[e];
    }
}

EdgeColoring finish(const OrderedGraph& host, std::vector<std::optional<Color>>& slots) {
    std::vector<Color> colors;
    colors.reserve(slots.size());
    for (const auto& c : slots) {
        if (!c) throw std::logic_error("good coloring left an edge uncolored");
        colors.push_back(*c);
    }
    return EdgeColoring(host, std::move(colors));
}

GoodColoring good_left(const DeterminerSpec& spec) {
    const int s = spec.star_edges;
    if (spec.i == 0) return GoodColoring{EdgeColoring(single_vertex(), {}), Embedding{{1}}};
    if (spec.i == 1) {
        const int d1 = spec.d.d[0];
        auto host = right_star(s + d1 - 1);
        std::vector<Color> colors(static_cast<std::size_t>(s + d1 - 1), Color::Blue);
        for (int t = 0; t < s - 1; ++t) colors[static_cast<std::size_t>(t)] = Color::Red;
        std::vector<Vertex> map{1};
        for (int t = 0; t < d1; ++t) map.push_back(s + 1 + t);
        return GoodColoring{EdgeColoring(host, std::move(colors)), Embedding{std::move(map)}};
    }
    DeterminerSpec inner = spec;
    inner.i = spec.i - 1;
    auto sub = left_determiner(inner);
    auto sub_good = good_left(inner);
    auto host = left_determiner(spec);
    const int a = spec.d.d[static_cast<std::size_t>(spec.i - 1)] - 1;
    const int nsub = sub.vertex_count();
    std::vector<std::optional<Color>> slots(host.edges().size());
    auto set = [&](Vertex u, Vertex v, Color c) {
        slots[static_cast<std::size_t>(host.edge_index(u, v))] = c;
    };
    for (int t = 0; t < a; ++t) set(1, t + 2, Color::Blue);
    for (int k = 0; k < s; ++k) {
        const int base = a + 1 + k * nsub;
        set(1, base + 1, k == 0 ? Color::Blue : Color::Red);
        merge_block(slots, host, sub_good.coloring, base);
    }
    std::vector<Vertex> map{1};
    for (int t = 0; t < a; ++t) map.push_back(t + 2); // the short blue leaves
    append_shifted(map, sub_good.distinguished, a + 1, false);
    return GoodColoring{finish(host, slots), Embedding{std::move(map)}};
}

GoodColoring good_right(const DeterminerSpec& spec) {
    if (spec.j == spec.i + 1) return GoodColoring{EdgeColoring(single_vertex(), {}), Embedding{{1}}};
    const int s = spec.star_edges;
    DeterminerSpec right_inner = spec;
    right_inner.j = spec.j + 1;
    DeterminerSpec left_inner = spec;
    left_inner.i = spec.j - 1;
    auto dright = right_determiner(right_inner);
    auto dright_good = good_right(right_inner);
    auto lsub = left_determiner(left_inner);
    auto lsub_good = good_left(left_inner);

    auto host = right_determiner(spec);
    const int nr = dright.vertex_count();
    const int aj = spec.d.d[static_cast<std::size_t>(spec.j - 1)] - 1;
    const int nls = lsub.vertex_count();
    std::vector<std::optional<Color>> slots(host.edges().size());
    auto set = [&](Vertex u, Vertex v, Color c) {
        slots[static_cast<std::size_t>(host.edge_index(u, v))] = c;
    };
    merge_block(slots, host, dright_good.coloring, 0);
    const Vertex x = nr;
    for (int t = 0; t < aj; ++t) set(x, nr + t + 1, Color::Blue); // short star leaves
    for (int k = 0; k < s - 1; ++k) {
        const int base = nr - 1 + (aj + 1) + k * nls;
        set(x, base + 1, Color::Red); // spokes stay red
        merge_block(slots, host, lsub_good.coloring, base);
    }
    const Vertex y = host.vertex_count();
    set(x, y, Color::Blue);

    std::vector<Vertex> map = dright_good.distinguished.map; // ends at x
    if (map.back() != x) throw std::logic_error("right determiner anchor misaligned");
    for (int t = 0; t < aj; ++t) map.push_back(nr + t + 1);
    map.push_back(y);
    return GoodColoring{finish(host, slots), Embedding{std::move(map)}};
}

// the blue pattern a good coloring must avoid entirely
OrderedGraph good_blue_limit(const DeterminerSpec& spec, Side side) {
    if (side == Side::Right) return caterpillar_prefix(spec.d, spec.i);
    // one segment beyond the target; absent entries count as single edges,
    // which is the strictest choice
    const int next = spec.i < static_cast<int>(spec.d.d.size())
                         ? spec.d.d[static_cast<std::size_t>(spec.i)]
                         : 1;
    auto head = right_star(next);
    if (spec.i == 0) return head;
    return concatenate(head, caterpillar_prefix(spec.d, spec.i));
}

OrderedGraph good_target(const DeterminerSpec& spec, Side side) {
    return side == Side::Left ? caterpillar_prefix(spec.d, spec.i)
                              : caterpillar_suffix(spec.d, spec.i, spec.j);
}

bool embedding_blue_induced_isolated(const EdgeColoring& col, const OrderedGraph& target,
                                     const Embedding& emb) {
    std::vector<bool> in_copy(static_cast<std::size_t>(col.host.vertex_count()) + 1, false);
    for (Vertex v : emb.map) in_copy[static_cast<std::size_t>(v)] = true;
    std::set<Edge> copy_edges;
    for (const auto& [u, v] : target.edges())
        copy_edges.insert({emb.at(u), emb.at(v)});
    for (std::size_t e = 0; e < col.color.size(); ++e) {
        if (col.color[e] != Color::Blue) continue;
        const auto& [u, v] = col.host.edges()[e];
        const bool iu = in_copy[static_cast<std::size_t>(u)], iv = in_copy[static_cast<std::size_t>(v)];
        if (iu && iv && !copy_edges.count({u, v})) return false; // not induced
        if (iu != iv) return false;                              // not isolated
    }
    for (const auto& e : copy_edges)
        if (col.at(e.first, e.second) != Color::Blue) return false;
    return true;
}

// full check of the good-coloring contract; anchor is the host's leftmost or
// rightmost vertex depending on the side
bool good_coloring_ok(const EdgeColoring& col, const DeterminerSpec& spec, Side side,
                      const Embedding& distinguished) {
    if (has_monochromatic_copy(col, right_star(spec.star_edges), Color::Red)) return false;
    if (good_blue_limit(spec, side).edge_count() > 0 &&
        has_monochromatic_copy(col, good_blue_limit(spec, side), Color::Blue))
        return false;
    auto target = good_target(spec, side);
    const Vertex anchor = side == Side::Left ? 1 : col.host.vertex_count();
    auto blue = color_class(col, Color::Blue);
    int anchored = 0;
    bool matches = false;
    for (const auto& emb : find_embeddings(blue, target)) {
        if (std::find(emb.map.begin(), emb.map.end(), anchor) == emb.map.end()) continue;
        ++anchored;
        if (emb.map == distinguished.map) matches = true;
    }
    if (anchored != 1 || !matches) return false;
    return embedding_blue_induced_isolated(col, target, distinguished);
}

} // namespace

GoodColoring good_coloring_of(const OrderedGraph& det, const DeterminerSpec& spec, Side side) {
    if (det != (side == Side::Left ? left_determiner(spec) : right_determiner(spec)))
        throw std::invalid_argument("good_coloring_of: not the constructed determiner");
    auto good = side == Side::Left ? good_left(spec) : good_right(spec);
    if (!good_coloring_ok(good.coloring, spec, side, good.distinguished))
        throw std::logic_error("good coloring failed its self-check");
    return good;
}

DeterminerCheck verify_determiner(const OrderedGraph& candidate, const DeterminerSpec& spec,
                                  Side side, int max_edges) {
    check_spec(spec, side);
    DeterminerCheck out;
    const int m = candidate.edge_count();
    if (m > max_edges || m >= 64) { // the exhaustive sweep uses single-word masks
        out.budget_exceeded = true;
        out.detail = "too many edges for exhaustive coloring enumeration";
        return out;
    }
    auto star_masks = copy_edge_masks(candidate, right_star(spec.star_edges));
    auto target = good_target(spec, side);
    auto full = caterpillar_prefix(spec.d, spec.i);
    const Vertex anchor = side == Side::Left ? 1 : candidate.vertex_count();

    // anchored target masks, full-pattern masks, plus raw anchored embeddings
    std::vector<std::uint64_t> anchored_masks;
    for (const auto& emb : find_embeddings(candidate, target)) {
        if (std::find(emb.map.begin(), emb.map.end(), anchor) == emb.map.end()) continue;
        std::uint64_t mask = 0;
        for (const auto& [u, v] : target.edges())
            mask |= std::uint64_t{1} << candidate.edge_index(emb.at(u), emb.at(v));
        anchored_masks.push_back(mask);
    }
    auto full_masks = copy_edge_masks(candidate, full);

    auto any_subset = [](const std::vector<std::uint64_t>& masks, std::uint64_t set) {
        for (auto m2 : masks)
            if ((m2 & set) == m2) return true;
        return false;
    };

    bool universal = true;
    for (std::uint64_t red = 0; red < (std::uint64_t{1} << m) && universal; ++red) {
        const std::uint64_t blue = ~red;
        if (any_subset(star_masks, red)) continue;
        if (side == Side::Right && any_subset(full_masks, blue)) continue;
        if (!any_subset(anchored_masks, blue)) universal = false;
    }
    if (!universal) {
        out.detail = "a coloring without the red star avoids every anchored blue copy";
        return out;
    }

    // existence of a good coloring, by exhaustive search
    auto blue_limit = good_blue_limit(spec, side);
    auto limit_masks =
        blue_limit.edge_count() > 0 ? copy_edge_masks(candidate, blue_limit) : std::vector<std::uint64_t>{};
    bool good_found = false;
    for (std::uint64_t red = 0; red < (std::uint64_t{1} << m) && !good_found; ++red) {
        const std::uint64_t blue = ~red;
        if (any_subset(star_masks, red)) continue;
        if (any_subset(limit_masks, blue)) continue;
        std::vector<Color> colors(static_cast<std::size_t>(m), Color::Blue);
        for (int e = 0; e < m; ++e)
            if (red & (std::uint64_t{1} << e)) colors[static_cast<std::size_t>(e)] = Color::Red;
        EdgeColoring col(candidate, colors);
        auto blue_class = color_class(col, Color::Blue);
        for (const auto& emb : find_embeddings(blue_class, target)) {
            if (std::find(emb.map.begin(), emb.map.end(), anchor) == emb.map.end()) continue;
            if (good_coloring_ok(col, spec, side, emb)) {
                good_found = true;
                break;
            }
        }
    }
    if (!good_found) {
        out.detail = "no good coloring exists";
        return out;
    }
    out.ok = true;
    return out;
}

// ---- infinite families ----

namespace {

struct Assembly {
    OrderedGraph graph{0, {}};
    std::vector<Vertex> marks; // tracked positions, stable across appends

    // concatenate a block (identifying the junction when the assembly is nonempty)
    int append(const OrderedGraph& block) {
        if (graph.vertex_count() == 0) {
            graph = block;
            return 0;
        }
        int shift = graph.vertex_count() - 1;
        graph = concatenate(graph, block);
        return shift;
    }
};

OrderedGraph add_long_edge(const OrderedGraph& g) {
    std::vector<Edge> edges = g.edges();
    edges.emplace_back(1, g.vertex_count());
    return OrderedGraph(g.vertex_count(), std::move(edges));
}

} // namespace

GammaBuild build_gamma_n(int star_edges, const DefiningSequence& d, int j, int n, int tail_index) {
    const int i = static_cast<int>(d.d.size());
    if (star_edges < 2) throw std::invalid_argument("build_gamma_n: star needs two edges");
    if (j < 1 || j > i - 2) throw std::invalid_argument("build_gamma_n: need 1 <= j <= i-2");
    if (n < 1) throw std::invalid_argument("build_gamma_n: need n >= 1");
    if (tail_index < 0 || tail_index > i)
        throw std::invalid_argument("build_gamma_n: tail index out of range");
    const int dj = d.d[static_cast<std::size_t>(j - 1)];
    const int a = std::max(d.d[static_cast<std::size_t>(j)], d.d[static_cast<std::size_t>(j + 1)]) - 1;
    if (dj <= a + 1) throw std::invalid_argument("build_gamma_n: requires d_j > max(d_{j+1}, d_{j+2})");

    DeterminerSpec below{star_edges, d, j, 0};
    DeterminerSpec below1{star_edges, d, j + 1, 0};
    DeterminerSpec tail{star_edges, d, tail_index, 0};
    DeterminerSpec above{star_edges, d, i, j + 3};

    auto gamma_block = [&](const DeterminerSpec& low) {
        return add_long_edge(
            union_intervally(hang(a, star_edges - 1, left_determiner(low)), right_determiner(above)));
    };
    auto gpp = gamma_block(below1); // leading block
    auto gp = gamma_block(below);   // repeated block

    GammaBuild out;
    out.block_vertices = gp.vertex_count();
    Assembly asm_;
    asm_.append(right_determiner(above));
    {
        int shift = asm_.append(gpp);
        out.dashed.emplace_back(1 + shift, gpp.vertex_count() + shift);
    }
    for (int k = 0; k < n; ++k) {
        int shift = asm_.append(gp);
        out.dashed.emplace_back(1 + shift, gp.vertex_count() + shift);
    }
    asm_.append(left_determiner(tail));
    out.graph = asm_.graph;
    return out;
}

FnBuild build_f_n(int star_edges, const DefiningSequence& d, int j, int n) {
    const int i = static_cast<int>(d.d.size());
    if (star_edges < 2) throw std::invalid_argument("build_f_n: star needs two edges");
    if (j < 3 || j > i) throw std::invalid_argument("build_f_n: need 3 <= j <= i");
    if (n < 1) throw std::invalid_argument("build_f_n: need n >= 1");
    const int dj = d.d[static_cast<std::size_t>(j - 1)];
    const int djm1 = d.d[static_cast<std::size_t>(j - 2)];
    if (djm1 <= dj) throw std::invalid_argument("build_f_n: requires d_{j-1} > d_j");

    DeterminerSpec at_j{star_edges, d, i, j};
    DeterminerSpec at_j1{star_edges, d, i, j + 1};
    auto dj_graph = right_determiner(at_j);
    auto dnext = right_determiner(at_j1);

    // widen the gap before the last vertex with a copy of dnext ending there
    OrderedGraph lead = [&] {
        const int nv = dj_graph.vertex_count();
        const int extra = dnext.vertex_count() - 1; // its last vertex lands on y
        std::vector<Edge> edges;
        for (const auto& [u, v] : dj_graph.edges())
            edges.emplace_back(u == nv ? nv + extra : u, v == nv ? nv + extra : v);
        for (const auto& [u, v] : dnext.edges()) {
            auto remap = [&](Vertex q) {
                return q == dnext.vertex_count() ? nv + extra : nv - 1 + q;
            };
            Vertex uu = remap(u), vv = remap(v);
            edges.emplace_back(std::min(uu, vv), std::max(uu, vv));
        }
        return OrderedGraph(nv + extra, std::move(edges));
    }();

    auto gamma_block = add_long_edge(union_intervally(right_star(dj - 1), dnext));

    FnBuild out;
    Assembly asm_;
    asm_.append(lead);
    out.gammas.push_back(asm_.graph.vertex_count()); // gamma_1 = junction
    for (int k = 0; k < n; ++k) {
        asm_.append(gamma_block);
        out.gammas.push_back(asm_.graph.vertex_count());
    }
    DeterminerSpec tail1{star_edges, d, j - 1, 0};
    DeterminerSpec tail2{star_edges, d, j - 2, 0};
    asm_.append(left_determiner(tail1));

    auto graph = asm_.graph;
    for (int k = 0; k < djm1 - dj; ++k) {
        out.u_set.push_back(graph.vertex_count() + 1);
        graph = union_intervally(graph, single_vertex());
    }
    auto dtail2 = left_determiner(tail2);
    for (int k = 0; k < star_edges - 1; ++k) {
        out.w_set.push_back(graph.vertex_count() + 1);
        graph = union_intervally(graph, dtail2);
    }
    std::vector<Edge> edges = graph.edges();
    for (int t = 0; t < n; ++t) {
        for (Vertex u : out.u_set) edges.emplace_back(out.gammas[static_cast<std::size_t>(t)], u);
        for (Vertex w : out.w_set) edges.emplace_back(out.gammas[static_cast<std::size_t>(t)], w);
    }
    out.graph = OrderedGraph(graph.vertex_count(), std::move(edges));
    return out;
}

// ---- family enumeration ----

namespace {

struct PlacementBudget {
    std::uint64_t left;
    bool exhausted = false;
    bool take() {
        if (left == 0) {
            exhausted = true;
            return false;
        }
        --left;
        return true;
    }
};

// all interleavings of `block` into `base`, allowing identification of block
// vertices with base vertices; the block's first vertex must land strictly
// right of base position `min_pos_excl`. Reports the new graph and the new
// positions of (base tracked positions..., block vertices...).
void place_block(const OrderedGraph& base, const std::vector<Vertex>& tracked,
                 const OrderedGraph& block, Vertex min_pos_excl, PlacementBudget& budget,
                 const std::function<void(const OrderedGraph&, const std::vector<Vertex>&,
                                          const std::vector<Vertex>&)>& yield) {
    const int nb = base.vertex_count();
    const int nk = block.vertex_count();
    // sequence entries: (base vertex, block vertex); 0 = absent
    std::vector<std::pair<Vertex, Vertex>> seq;
    std::function<void(Vertex, Vertex)> rec = [&](Vertex bi, Vertex ki) {
        if (budget.exhausted) return;
        if (bi > nb && ki > nk) {
            if (!budget.take()) return;
            // realize the merged graph
            std::vector<Vertex> base_pos(static_cast<std::size_t>(nb) + 1, 0);
            std::vector<Vertex> block_pos(static_cast<std::size_t>(nk) + 1, 0);
            for (std::size_t p = 0; p < seq.size(); ++p) {
                if (seq[p].first) base_pos[static_cast<std::size_t>(seq[p].first)] = static_cast<Vertex>(p) + 1;
                if (seq[p].second) block_pos[static_cast<std::size_t>(seq[p].second)] = static_cast<Vertex>(p) + 1;
            }
            std::set<Edge> edges;
            for (const auto& [u, v] : base.edges())
                edges.insert({base_pos[static_cast<std::size_t>(u)], base_pos[static_cast<std::size_t>(v)]});
            for (const auto& [u, v] : block.edges())
                edges.insert({block_pos[static_cast<std::size_t>(u)], block_pos[static_cast<std::size_t>(v)]});
            std::vector<Vertex> new_tracked;
            for (Vertex t : tracked) new_tracked.push_back(base_pos[static_cast<std::size_t>(t)]);
            std::vector<Vertex> block_map(block_pos.begin() + 1, block_pos.end());
            yield(OrderedGraph(static_cast<int>(seq.size()), {edges.begin(), edges.end()}),
                  new_tracked, block_map);
            return;
        }
        // base vertex alone
        if (bi <= nb) {
            seq.emplace_back(bi, 0);
            rec(bi + 1, ki);
            seq.pop_back();
        }
        const bool block_allowed = ki <= nk && (ki > 1 || bi > min_pos_excl);
        // block vertex alone
        if (block_allowed) {
            seq.emplace_back(0, ki);
            rec(bi, ki + 1);
            seq.pop_back();
        }
        // identified
        if (bi <= nb && block_allowed && bi > min_pos_excl) {
            seq.emplace_back(bi, ki);
            rec(bi + 1, ki + 1);
            seq.pop_back();
        }
    };
    rec(1, 1);
}

void dedupe(std::vector<OrderedGraph>& graphs) {
    std::sort(graphs.begin(), graphs.end());
    graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
}

} // namespace

FamilyResult family_fst(const std::vector<std::vector<std::vector<OrderedGraph>>>& grid,
                        std::uint64_t placement_budget) {
    const int s = static_cast<int>(grid.size());
    if (s == 0) throw std::invalid_argument("family_fst: empty grid");
    const int t = static_cast<int>(grid[0].size());
    for (const auto& row : grid)
        if (static_cast<int>(row.size()) != t || t == 0)
            throw std::invalid_argument("family_fst: grid must be rectangular and nonempty");

    FamilyResult out;
    PlacementBudget budget{placement_budget};

    // state: current union + tracked rightmost position of each placed cell
    struct State {
        OrderedGraph graph{0, {}};
        std::vector<Vertex> cell_last; // rightmost position per placed cell (row-major)
    };
    std::vector<State> states{State{}};
    for (int row = 0; row < s; ++row)
        for (int col = 0; col < t; ++col) {
            std::vector<State> next;
            for (const auto& st : states)
                for (const auto& choice : grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) {
                    Vertex cut = 0;
                    const int cell = row * t + col;
                    if (col > 0)
                        cut = std::max(cut, st.cell_last[static_cast<std::size_t>(cell - 1)]);
                    if (row > 0)
                        cut = std::max(cut, st.cell_last[static_cast<std::size_t>(cell - t)]);
                    if (st.graph.vertex_count() == 0) {
                        State ns;
                        ns.graph = choice;
                        ns.cell_last = {static_cast<Vertex>(choice.vertex_count())};
                        next.push_back(std::move(ns));
                        continue;
                    }
                    place_block(st.graph, st.cell_last, choice, cut, budget,
                                [&](const OrderedGraph& g, const std::vector<Vertex>& tracked,
                                    const std::vector<Vertex>& block_map) {
                                    State ns;
                                    ns.graph = g;
                                    ns.cell_last = tracked;
                                    ns.cell_last.push_back(block_map.back());
                                    next.push_back(std::move(ns));
                                });
                }
            states = std::move(next);
        }
    for (auto& st : states) out.members.push_back(std::move(st.graph));
    dedupe(out.members);
    out.complete = !budget.exhausted;
    return out;
}

FamilyResult family_fj(int star_edges, const DefiningSequence& d, int level, int max_vertices,
                       std::uint64_t placement_budget) {
    if (level < 1 || level > static_cast<int>(d.d.size()))
        throw std::invalid_argument("family_fj: level out of range");
    if (star_edges < 1) throw std::invalid_argument("family_fj: star needs an edge");
    FamilyResult out;
    if (level == 1) {
        auto star = right_star(star_edges + d.d[0] - 1);
        if (star.vertex_count() <= max_vertices) out.members.push_back(star);
        return out;
    }
    auto below = family_fj(star_edges, d, level - 1, max_vertices, placement_budget);
    out.complete = below.complete;
    PlacementBudget budget{placement_budget};
    const int dj = d.d[static_cast<std::size_t>(level - 1)];

    struct State {
        OrderedGraph graph{0, {}};
        std::vector<Vertex> anchors;
    };
    std::vector<State> states{State{}};
    for (int tblk = 0; tblk < star_edges; ++tblk) {
        std::vector<State> next;
        for (const auto& st : states)
            for (const auto& choice : below.members) {
                if (st.graph.vertex_count() == 0) {
                    State ns;
                    ns.graph = choice;
                    ns.anchors = {1};
                    next.push_back(std::move(ns));
                    continue;
                }
                if (st.graph.vertex_count() + 1 > max_vertices + dj) continue; // cheap cut
                place_block(st.graph, st.anchors, choice, st.anchors.back(), budget,
                            [&](const OrderedGraph& g, const std::vector<Vertex>& tracked,
                                const std::vector<Vertex>& block_map) {
                                State ns;
                                ns.graph = g;
                                ns.anchors = tracked;
                                ns.anchors.push_back(block_map.front());
                                next.push_back(std::move(ns));
                            });
            }
        states = std::move(next);
    }
    for (const auto& st : states) {
        const int extra = dj; // the new leftmost vertex plus dj-1 plain leaves
        if (st.graph.vertex_count() + extra > max_vertices) continue;
        std::vector<Edge> edges;
        for (int k = 2; k <= dj; ++k) edges.emplace_back(1, k);
        for (const auto& [u, v] : st.graph.edges()) edges.emplace_back(u + dj, v + dj);
        for (Vertex anc : st.anchors) edges.emplace_back(1, anc + dj);
        out.members.emplace_back(st.graph.vertex_count() + dj, std::move(edges));
    }
    dedupe(out.members);
    if (budget.exhausted) out.complete = false;
    // every member must force an anchored blue copy; check the small ones here
    auto target = caterpillar_prefix(d, level);
    for (const auto& member : out.members) {
        if (member.edge_count() > 16) continue;
        if (arrows_with_blue_anchor(member, right_star(star_edges), target, 1).verdict !=
            ArrowVerdict::Arrows)
            throw std::logic_error("family member misses its anchored blue copy");
    }
    return out;
}

// ---- the level coloring ----

namespace {

// anchor sets via the neighborhood recursion: a vertex is a level-j anchor iff
// among its right neighbors the s-th largest level-(j-1) anchor still has
// d_j - 1 neighbors below it
std::vector<std::vector<bool>> anchor_levels(const OrderedGraph& f, int s,
                                             const DefiningSequence& d, int upto) {
    std::vector<std::vector<bool>> levels;
    std::vector<bool> current(static_cast<std::size_t>(f.vertex_count()) + 1, true); // level 0
    levels.push_back(current);
    for (int j = 1; j <= upto; ++j) {
        std::vector<bool> next(static_cast<std::size_t>(f.vertex_count()) + 1, false);
        const int dj = d.d[static_cast<std::size_t>(j - 1)];
        for (Vertex v = 1; v <= f.vertex_count(); ++v) {
            const auto& nbrs = f.neighbors_right(v);
            int found = 0;
            int pos_of_sth = -1;
            for (int p = static_cast<int>(nbrs.size()) - 1; p >= 0; --p) {
                if (levels.back()[static_cast<std::size_t>(nbrs[static_cast<std::size_t>(p)])]) {
                    ++found;
                    if (found == s) {
                        pos_of_sth = p;
                        break;
                    }
                }
            }
            next[static_cast<std::size_t>(v)] = found >= s && pos_of_sth >= dj - 1;
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

// materialize a member copy anchored at v, as an embedding plus the member graph
void collect_member_vertices(const OrderedGraph& f, int s, const DefiningSequence& d,
                             const std::vector<std::vector<bool>>& levels, Vertex v, int j,
                             std::set<Vertex>& vertices, std::set<Edge>& edges) {
    vertices.insert(v);
    if (j == 0) return;
    const int dj = d.d[static_cast<std::size_t>(j - 1)];
    const auto& nbrs = f.neighbors_right(v);
    std::vector<Vertex> anchors;
    int pos_of_sth = -1;
    for (int p = static_cast<int>(nbrs.size()) - 1; p >= 0 && static_cast<int>(anchors.size()) < s; --p) {
        if (levels[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(nbrs[static_cast<std::size_t>(p)])]) {
            anchors.push_back(nbrs[static_cast<std::size_t>(p)]);
            pos_of_sth = p;
        }
    }
    std::reverse(anchors.begin(), anchors.end());
    // d_j - 1 further neighbors below the lowest anchor
    for (int t = 0; t < dj - 1; ++t) {
        Vertex z = nbrs[static_cast<std::size_t>(pos_of_sth - 1 - t)];
        vertices.insert(z);
        edges.insert({v, z});
    }
    for (Vertex anc : anchors) {
        edges.insert({v, anc});
        collect_member_vertices(f, s, d, levels, anc, j - 1, vertices, edges);
    }
}

} // namespace

std::vector<bool> family_anchor_set(const OrderedGraph& f, int star_edges,
                                    const DefiningSequence& d, int level) {
    if (level < 0 || level > static_cast<int>(d.d.size()))
        throw std::invalid_argument("family_anchor_set: level out of range");
    return anchor_levels(f, star_edges, d, level).back();
}

HColoring canonical_h_coloring(const OrderedGraph& f, int star_edges, const DefiningSequence& d) {
    const int i = static_cast<int>(d.d.size());
    const int s = star_edges;
    if (i < 1) throw std::invalid_argument("canonical_h_coloring: empty sequence");
    if (s < 1) throw std::invalid_argument("canonical_h_coloring: star needs an edge");
    if (i > 2 && !std::is_sorted(d.d.begin(), d.d.end()))
        throw std::invalid_argument(
            "canonical_h_coloring: needs at most two levels or a nondecreasing sequence");

    HColoring out;
    auto levels = anchor_levels(f, s, d, i);

    // hypothesis: no top-level member embeds in f
    for (Vertex v = 1; v <= f.vertex_count(); ++v) {
        if (!levels[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]) continue;
        std::set<Vertex> vertices;
        std::set<Edge> edges;
        collect_member_vertices(f, s, d, levels, v, i, vertices, edges);
        std::vector<Vertex> vlist(vertices.begin(), vertices.end());
        std::vector<int> pos(static_cast<std::size_t>(f.vertex_count()) + 1, 0);
        for (std::size_t p = 0; p < vlist.size(); ++p) pos[static_cast<std::size_t>(vlist[p])] = static_cast<int>(p) + 1;
        std::vector<Edge> relabeled;
        for (const auto& [x, y] : edges)
            relabeled.emplace_back(pos[static_cast<std::size_t>(x)], pos[static_cast<std::size_t>(y)]);
        out.violating_member = OrderedGraph(static_cast<int>(vlist.size()), std::move(relabeled));
        out.violating_embedding = Embedding{vlist};
        return out;
    }

    std::vector<Color> colors(f.edges().size(), Color::Blue);
    auto nbrs_between = [&](Vertex u, Vertex v) {
        int count = 0;
        for (Vertex z : f.neighbors_right(u))
            if (z > u && z < v) ++count;
        return count;
    };

    if (i <= 2) {
        // three steps: long edges into level-1 anchors go red, then top up so
        // every vertex has exactly min(s-1, right-degree) red right edges
        std::vector<int> red_at(static_cast<std::size_t>(f.vertex_count()) + 1, 0);
        if (i == 2) {
            const int d2 = d.d[1];
            for (std::size_t e = 0; e < f.edges().size(); ++e) {
                const auto& [u, v] = f.edges()[e];
                if (levels[1][static_cast<std::size_t>(v)] && nbrs_between(u, v) >= d2 - 1) {
                    colors[e] = Color::Red;
                    ++red_at[static_cast<std::size_t>(u)];
                }
            }
        }
        for (Vertex u = 1; u <= f.vertex_count(); ++u) {
            const int target = std::min(s - 1, f.right_degree(u));
            if (red_at[static_cast<std::size_t>(u)] > target)
                throw std::logic_error("level coloring exceeded its red quota");
            // extend with the longest still-blue right edges
            const auto& nr = f.neighbors_right(u);
            for (int p = static_cast<int>(nr.size()) - 1;
                 p >= 0 && red_at[static_cast<std::size_t>(u)] < target; --p) {
                auto idx = static_cast<std::size_t>(f.edge_index(u, nr[static_cast<std::size_t>(p)]));
                if (colors[idx] == Color::Red) continue;
                colors[idx] = Color::Red;
                ++red_at[static_cast<std::size_t>(u)];
            }
        }
    } else {
        std::vector<int> height(static_cast<std::size_t>(f.vertex_count()) + 1, 0);
        for (Vertex v = 1; v <= f.vertex_count(); ++v)
            for (int j = i; j >= 1; --j)
                if (levels[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)]) {
                    height[static_cast<std::size_t>(v)] = j;
                    break;
                }
        for (std::size_t e = 0; e < f.edges().size(); ++e) {
            const auto& [u, v] = f.edges()[e];
            const int hu = height[static_cast<std::size_t>(u)];
            if (hu > height[static_cast<std::size_t>(v)]) continue;
            if (nbrs_between(u, v) >= d.d[static_cast<std::size_t>(hu)] - 1) colors[e] = Color::Red;
        }
    }

    EdgeColoring col(f, std::move(colors));
    if (has_monochromatic_copy(col, right_star(s), Color::Red) ||
        has_monochromatic_copy(col, build_caterpillar(d), Color::Blue))
        throw std::logic_error("level coloring failed verification");
    out.ok = true;
    out.coloring = std::move(col);
    return out;
}

} // namespace oramsey
