#include "bgat/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace bgat {

namespace {

std::vector<std::pair<int, int>> prufer_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    if (n <= 1) return edges;
    if (n == 2) return {{0, 1}};
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (auto& s : seq) s = pick(rng);
    std::vector<int> degree(n, 1);
    for (int s : seq) degree[s]++;
    std::set<int> leaves;
    for (int i = 0; i < n; ++i)
        if (degree[i] == 1) leaves.insert(i);
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, s});
        if (--degree[s] == 1) leaves.insert(s);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.push_back({a, b});
    return edges;
}

bool walks_in_branch_decreasing(const BrauerGraph& g, const OrientedSplit& o, EdgeId skip) {
    // tree branch: unique walks from v_s; check every BFS step
    std::deque<VertexId> queue{o.v_s};
    std::set<VertexId> seen{o.v_s};
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (EdgeId e : o.branch_s.edges) {
            if (e == skip) continue;
            auto [a, b] = edge_endpoints(g, e);
            VertexId y;
            if (a == x)
                y = b;
            else if (b == x)
                y = a;
            else
                continue;
            if (seen.count(y)) continue;
            seen.insert(y);
            if (graded_degree(g, x) < graded_degree(g, y)) return false;
            queue.push_back(y);
        }
    }
    return true;
}

bool word_contains(const std::vector<Letter>& w, const std::vector<Letter>& pat) {
    if (pat.empty() || pat.size() > w.size()) return false;
    for (size_t k = 0; k + pat.size() <= w.size(); ++k) {
        bool hit = true;
        for (size_t t = 0; t < pat.size() && hit; ++t) hit = (w[k + t] == pat[t]);
        if (hit) return true;
    }
    return false;
}

std::vector<Letter> path_letters(const PathWord& p) {
    std::vector<Letter> out;
    for (const auto& id : p) out.push_back({id, false});
    return out;
}

bool word_contains_path_or_inverse(const std::vector<Letter>& w, const PathWord& p) {
    auto direct = path_letters(p);
    return word_contains(w, direct) || word_contains(w, inverse_word(direct));
}

int overlap_shape(const StringAlgebra& alg, const std::vector<Letter>& x, const std::vector<Letter>& y) {
    int nx = static_cast<int>(x.size());
    int ny = static_cast<int>(y.size());
    if (nx < 2 || ny < 2) return 0;
    EdgeId src0 = alg.source(x[0]);
    int maxl = std::min(nx, ny) - 1;
    for (int l = 1; l <= maxl; ++l) {
        bool shared = true;
        for (int t = 0; t < l && shared; ++t) shared = (x[t] == y[t]) && !x[t].inverse;
        if (!shared) break;
        if (alg.target(x[l - 1]) != src0) continue;
        if (!(x[l] == y[l]) || !x[l].inverse) continue;
        bool revisit = false;
        for (int t = l + 1; t < nx && !revisit; ++t) revisit = (alg.source(x[t]) == src0);
        for (int t = l + 1; t < ny && !revisit; ++t) revisit = (alg.source(y[t]) == src0);
        if (!revisit) return l;
    }
    return 0;
}

} // namespace

RandomGraphSpec::Family family_from_name(const std::string& name) {
    if (name == "brauer_tree") return RandomGraphSpec::Family::BrauerTree;
    if (name == "two_double_tree") return RandomGraphSpec::Family::TwoDoubleTree;
    if (name == "unique_cycle") return RandomGraphSpec::Family::UniqueCycle;
    if (name == "any") return RandomGraphSpec::Family::Any;
    throw Error("UnknownFamily", "no graph family '" + name + "'");
}

std::string family_name(RandomGraphSpec::Family f) {
    switch (f) {
        case RandomGraphSpec::Family::BrauerTree: return "brauer_tree";
        case RandomGraphSpec::Family::TwoDoubleTree: return "two_double_tree";
        case RandomGraphSpec::Family::UniqueCycle: return "unique_cycle";
        case RandomGraphSpec::Family::Any: return "any";
    }
    return "?";
}

BrauerGraph random_graph(const RandomGraphSpec& spec, std::mt19937_64& rng) {
    using Family = RandomGraphSpec::Family;
    int tree_budget = spec.max_edges - (spec.family == Family::UniqueCycle ? 1 : 0);
    tree_budget = std::max(1, tree_budget);
    std::uniform_int_distribution<int> pick_edges(1, tree_budget);
    int tree_edges = pick_edges(rng);
    if (spec.family == Family::BrauerTree && spec.max_multiplicity < 2)
        tree_edges = std::max(2, tree_edges); // avoid the degenerate single edge
    int n = tree_edges + 1;

    auto tree = prufer_tree(n, rng);
    std::vector<std::pair<int, int>> edge_list = tree;
    std::uniform_int_distribution<int> pick_vertex(0, n - 1);
    if (spec.family == Family::UniqueCycle) {
        int u = pick_vertex(rng), v = pick_vertex(rng);
        while (v == u) v = pick_vertex(rng);
        edge_list.push_back({u, v});
    } else if (spec.family == Family::Any) {
        std::uniform_int_distribution<int> extra_dist(0, 2);
        int extra = extra_dist(rng);
        for (int t = 0; t < extra && static_cast<int>(edge_list.size()) < spec.max_edges; ++t)
            edge_list.push_back({pick_vertex(rng), pick_vertex(rng)}); // u == v gives a loop
    }

    BrauerGraph g;
    std::map<int, std::vector<HalfEdgeId>> at;
    for (int k = 0; k < static_cast<int>(edge_list.size()); ++k) {
        EdgeId id = k + 1;
        HalfEdgeId h1 = 10 * id, h2 = 10 * id + 1;
        g.edges[id] = {h1, h2};
        at[edge_list[k].first].push_back(h1);
        at[edge_list[k].second].push_back(h2);
    }
    for (int i = 0; i < n; ++i) {
        VertexData data;
        data.order = at[i];
        std::shuffle(data.order.begin(), data.order.end(), rng);
        g.vertices["v" + std::to_string(i)] = std::move(data);
    }

    std::uniform_int_distribution<int> pick_mult(1, std::max(1, spec.max_multiplicity));
    switch (spec.family) {
        case Family::BrauerTree: {
            int v0 = pick_vertex(rng);
            int m0 = pick_mult(rng);
            if (static_cast<int>(g.edges.size()) == 1 && m0 == 1) m0 = 2;
            g.vertices["v" + std::to_string(v0)].multiplicity = m0;
            g.exceptional = "v" + std::to_string(v0);
            break;
        }
        case Family::TwoDoubleTree: {
            int a = pick_vertex(rng), b = pick_vertex(rng);
            while (b == a) b = pick_vertex(rng);
            g.vertices["v" + std::to_string(a)].multiplicity = 2;
            g.vertices["v" + std::to_string(b)].multiplicity = 2;
            break;
        }
        case Family::UniqueCycle:
            break; // multiplicity 1 everywhere
        case Family::Any: {
            std::uniform_int_distribution<int> coin(0, 9);
            for (auto& [v, data] : g.vertices)
                if (coin(rng) >= 7 && spec.max_multiplicity >= 2) {
                    std::uniform_int_distribution<int> pm(2, spec.max_multiplicity);
                    data.multiplicity = pm(rng);
                }
            if (g.edges.size() == 1) {
                auto [a, b] = edge_endpoints(g, g.edges.begin()->first);
                if (a != b && g.vertices.at(a).multiplicity == 1 && g.vertices.at(b).multiplicity == 1)
                    g.vertices.begin()->second.multiplicity = 2;
            }
            // keep 'exceptional' unset; multiple heavy vertices are fine here
            break;
        }
    }
    auto rep = validate(g);
    if (!rep.ok) throw Error("InvalidGraph", "generator produced " + rep.error + ": " + rep.detail);
    return g;
}

StringAlgebra string_algebra_of(const BrauerGraph& g, IdealVariant variant) {
    auto q = build_quiver(g);
    auto rels = relations(g, q);
    auto ideal = ideal_variant(g, q, rels, variant);
    return StringAlgebra(q, ideal);
}

int default_band_max_len(const BrauerGraph& g) {
    auto q = build_quiver(g);
    int maxgrd = 1;
    for (const auto& [v, data] : g.vertices) maxgrd = std::max(maxgrd, graded_degree(g, v));
    return 4 * static_cast<int>(q.arrows.size()) * maxgrd;
}

int suggest_census_len(const BrauerGraph& g, const StringAlgebra& alg, int cap, int margin,
                       long node_budget) {
    (void)g;
    for (int len = 8; len < cap; len += 4) {
        auto bands = alg.enumerate_bands(len, node_budget);
        if (!bands.empty()) {
            int shortest = len;
            for (const auto& b : bands)
                shortest = std::min(shortest, static_cast<int>(b.letters.size()));
            return std::min(cap, shortest + margin);
        }
    }
    return cap;
}

OracleVerdict band_census_check(const BrauerGraph& g, int max_len, long node_budget) {
    OracleVerdict v;
    v.check = "census";
    v.max_len = max_len;
    auto rep = classify_grA(g);
    auto alg = string_algebra_of(g);
    long c1 = static_cast<long>(alg.enumerate_bands(max_len, node_budget).size());
    switch (rep.verdict.kind) {
        case ReprKind::Finite:
        case ReprKind::Domestic: {
            // stabilization probe at twice the length for the finite verdicts
            long c2 = static_cast<long>(alg.enumerate_bands(2 * max_len, node_budget).size());
            long n = rep.verdict.kind == ReprKind::Finite ? 0 : rep.verdict.n;
            v.predicted = std::to_string(n);
            v.observed = std::to_string(c1) + "," + std::to_string(c2);
            v.agree = (c1 == n && c2 == n);
            v.notes = "band classes at max_len and 2*max_len";
            break;
        }
        case ReprKind::NotPolynomialGrowth: {
            v.predicted = ">=3-or-growing";
            if (c1 >= 3) {
                v.observed = std::to_string(c1);
                v.agree = true;
                v.notes = "band classes at max_len";
            } else {
                long c2 = static_cast<long>(alg.enumerate_bands(2 * max_len, node_budget).size());
                v.observed = std::to_string(c1) + "," + std::to_string(c2);
                v.agree = (c2 > c1);
                v.notes = "band classes at max_len and 2*max_len";
            }
            break;
        }
    }
    return v;
}

OracleVerdict r_string_count_check(const BrauerGraph& g, EdgeId i, int max_len, long node_budget) {
    auto split = split_at_edge(g, i);
    if (!split.oriented)
        throw Error("StarConditionFails", "edge " + std::to_string(i) + " is not unbalanced");
    auto star = star_condition(g, i);
    if (!star.holds)
        throw Error("StarConditionFails", "clause " + std::to_string(star.failed_clause) + ": " + star.witness);

    auto q = build_quiver(g);
    auto ideal = ideal_variant(g, q, relations(g, q), IdealVariant::I2);
    const PathWord& r = ideal.P.at(i);
    int n_i = split.oriented->n_i;
    int len = max_len > 0 ? max_len : static_cast<int>(r.size()) + 2 * n_i + 2;

    StringAlgebra alg(q, ideal);
    long observed = alg.strings_containing(r, len, node_budget);
    long predicted = static_cast<long>(n_i + 1) * (n_i + 1);

    OracleVerdict v;
    v.check = "rcount";
    v.max_len = len;
    v.predicted = std::to_string(predicted);
    v.observed = std::to_string(observed);
    v.agree = (observed == predicted);
    v.notes = "strings containing r_" + std::to_string(i) + ", n_i = " + std::to_string(n_i);
    return v;
}

OracleVerdict band_preservation_check(const BrauerGraph& g, int max_len, long node_budget) {
    for (const auto& split : unbalanced_edges(g)) {
        auto star = star_condition(g, split.edge);
        if (!star.holds)
            throw Error("StarConditionFails", "edge " + std::to_string(split.edge) + " clause " +
                                                  std::to_string(star.failed_clause));
    }
    int len = max_len > 0 ? max_len : std::min(default_band_max_len(g), 32);
    auto a1 = string_algebra_of(g, IdealVariant::I1);
    auto a2 = string_algebra_of(g, IdealVariant::I2);
    auto b1 = a1.enumerate_bands(len, node_budget);
    auto b2 = a2.enumerate_bands(len, node_budget);

    OracleVerdict v;
    v.check = "preserve";
    v.max_len = len;
    v.predicted = "equal band sets";
    v.observed = std::to_string(b1.size()) + " vs " + std::to_string(b2.size());
    v.agree = (b1 == b2);
    if (!v.agree) {
        for (const auto& b : b2)
            if (!b1.count(b)) {
                v.notes = "only in I2: " + word_to_string(b.letters);
                break;
            }
        for (const auto& b : b1)
            if (!b2.count(b)) {
                v.notes = "only in I1: " + word_to_string(b.letters);
                break;
            }
    }
    return v;
}

std::optional<WitnessResult> infinite_band_witness(const BrauerGraph& g, int max_len, long node_budget) {
    auto rep = classify_grA(g);
    if (rep.verdict.kind != ReprKind::NotPolynomialGrowth)
        throw Error("PreconditionFailed", "classify_grA is " + repr_to_string(rep.verdict) +
                                              ", witness search requires NotPolynomialGrowth");
    auto alg = string_algebra_of(g);
    auto band_set = alg.enumerate_bands(max_len, node_budget);
    std::vector<std::vector<Letter>> bands;
    for (const auto& b : band_set) bands.push_back(b.letters);

    long work = 0;
    const long work_cap = 5'000'000;

    auto family_ok = [](const BandFamilyResult& fam) {
        return std::all_of(fam.members.begin(), fam.members.end(),
                           [](const BandFamilyMember& m) { return m.band; });
    };

    // strict pass: literal overlap shape, scanned over rotations and
    // simultaneous inversion
    for (size_t ix = 0; ix < bands.size(); ++ix) {
        for (size_t iy = 0; iy < bands.size(); ++iy) {
            if (ix == iy) continue;
            for (bool flip : {false, true}) {
                auto x = flip ? inverse_word(bands[ix]) : bands[ix];
                auto y = flip ? inverse_word(bands[iy]) : bands[iy];
                for (size_t r1 = 0; r1 < x.size(); ++r1) {
                    if (x[r1].inverse) continue;
                    for (size_t r2 = 0; r2 < y.size(); ++r2) {
                        if (!(y[r2] == x[r1])) continue;
                        if (++work > work_cap) return std::nullopt;
                        auto b1 = rotate_word(x, static_cast<int>(r1));
                        auto b2 = rotate_word(y, static_cast<int>(r2));
                        if (overlap_shape(alg, b1, b2) == 0) continue;
                        auto fam = alg.band_power_family(b1, b2, 3);
                        if (family_ok(fam)) return WitnessResult{b1, b2, true, std::move(fam)};
                    }
                }
            }
        }
    }

    // relaxed pass: any rotation alignment whose concatenation is a band
    for (size_t ix = 0; ix < bands.size(); ++ix) {
        for (size_t iy = 0; iy < bands.size(); ++iy) {
            if (ix == iy) continue;
            const auto& x = bands[ix];
            const auto& y = bands[iy];
            for (size_t r1 = 0; r1 < x.size(); ++r1) {
                for (size_t r2 = 0; r2 < y.size(); ++r2) {
                    if (alg.source(x[r1]) != alg.source(y[r2])) continue;
                    if (++work > work_cap) return std::nullopt;
                    auto b1 = rotate_word(x, static_cast<int>(r1));
                    auto b2 = rotate_word(y, static_cast<int>(r2));
                    std::vector<Letter> cat = b1;
                    cat.insert(cat.end(), b2.begin(), b2.end());
                    if (!alg.is_band(cat)) continue;
                    auto fam = alg.band_power_family(b1, b2, 3);
                    if (family_ok(fam)) return WitnessResult{b1, b2, false, std::move(fam)};
                }
            }
        }
    }
    return std::nullopt;
}

// ---------- the random-graph property suite ----------

namespace {

struct SuiteContext {
    SuiteReport& report;
    const BrauerGraph& g;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        report.checks++;
        if (!ok && report.failures.size() < 5) report.failures.push_back({name, detail, g});
    }
};

bool pair_condition(const BrauerGraph& g, const OrientedSplit& oi, EdgeId j, const OrientedSplit& oj) {
    if (!oi.branch_s.edges.count(j)) return false;
    return walk_distance(g, oj.v_s, oi.v_s) + 1 == walk_distance(g, oj.v_l, oi.v_s);
}

void graph_checks(SuiteContext& ctx) {
    const BrauerGraph& g = ctx.g;
    long val_sum = 0;
    for (const auto& [v, data] : g.vertices) val_sum += static_cast<long>(data.order.size());
    ctx.check("handshake", val_sum == 2 * static_cast<long>(g.edges.size()));

    for (const auto& split : unbalanced_edges(g)) {
        if (split.same_component) continue;
        size_t total = split.oriented->branch_s.edges.size() + split.oriented->branch_l.edges.size() + 1;
        ctx.check("branch-partition", total == g.edges.size(),
                  "edge " + std::to_string(split.edge));
    }
}

void tree_checks(SuiteContext& ctx) {
    const BrauerGraph& g = ctx.g;
    auto ti = tree_invariants(g);
    auto splits = unbalanced_edges(g);
    std::map<EdgeId, const OrientedSplit*> by_edge;
    for (const auto& s : splits) by_edge[s.edge] = &*s.oriented;

    for (const auto& [i, oi] : by_edge)
        for (const auto& [j, oj] : by_edge) {
            if (i == j) continue;
            ctx.check("pair-symmetry",
                      pair_condition(g, *oi, j, *oj) == pair_condition(g, *oj, i, *oi),
                      "edges " + std::to_string(i) + "," + std::to_string(j));
        }

    ctx.check("kappa1-implies-kappa0", ti.kappa1 == 0 || ti.kappa0 != 0,
              "kappa1=" + std::to_string(ti.kappa1) + " kappa0=" + std::to_string(ti.kappa0));

    if (ti.kappa1 >= 2) {
        std::map<EdgeId, int> uses;
        for (const auto& [a, b] : ti.pairs) {
            uses[a]++;
            uses[b]++;
        }
        bool some_double = false;
        for (const auto& [e, n] : uses) some_double = some_double || n >= 2;
        ctx.check("double-pair-shares-an-edge", some_double);
    }

    bool all_branch_walks = true;
    for (const auto& s : splits)
        all_branch_walks = all_branch_walks && walks_in_branch_decreasing(g, *s.oriented, s.edge);
    ctx.check("kappa1-walk-remark", (ti.kappa1 == 0) == all_branch_walks,
              "kappa1=" + std::to_string(ti.kappa1));

    // classification independent of which vertex is designated exceptional
    bool all_one = true;
    for (const auto& [v, data] : g.vertices) all_one = all_one && data.multiplicity == 1;
    if (all_one) {
        auto base = classify_grA(g).verdict;
        bool same = true;
        for (const auto& [v, data] : g.vertices) {
            BrauerGraph h = g;
            h.exceptional = v;
            same = same && classify_grA(h).verdict == base;
        }
        ctx.check("exceptional-independence", same);
    }
}

void two_double_checks(SuiteContext& ctx) {
    const BrauerGraph& g = ctx.g;
    std::vector<VertexId> w;
    for (const auto& [v, data] : g.vertices)
        if (data.multiplicity == 2) w.push_back(v);
    if (w.size() != 2) return;

    bool cond_walks = graded_degree(g, w[0]) == graded_degree(g, w[1]) &&
                    all_walks_decreasing_from(g, w[0]) && all_walks_decreasing_from(g, w[1]);
    bool cond_branch = true, cond_star = true;
    for (const auto& s : unbalanced_edges(g)) {
        cond_branch = cond_branch && s.oriented->branch_l.vertices.count(w[0]) &&
                      s.oriented->branch_l.vertices.count(w[1]);
        cond_star = cond_star && star_condition(g, s.edge).holds;
    }
    ctx.check("two-m2-walks-vs-branch", cond_walks == cond_branch);
    ctx.check("two-m2-walks-vs-star", cond_walks == cond_star);
    auto verdict = classify_grA(g).verdict;
    ctx.check("two-m2-verdict", (verdict == ReprType{ReprKind::Domestic, 1}) == cond_walks,
              repr_to_string(verdict));
}

void unique_cycle_checks(SuiteContext& ctx) {
    const BrauerGraph& g = ctx.g;
    auto ca = cycle_analysis(g);
    if (ca.kind != CycleAnalysis::Kind::UniqueCycle) return;
    auto splits = unbalanced_edges(g);

    int unbalanced_on_cycle = 0;
    for (const auto& s : splits)
        if (ca.cycle_edges.count(s.edge)) unbalanced_on_cycle++;
    ctx.check("cycle-unbalanced-never-one", unbalanced_on_cycle != 1,
              "unbalanced cycle edges = " + std::to_string(unbalanced_on_cycle));

    bool cond_walks = true;
    int grd0 = -1;
    for (const auto& v : ca.cycle_vertices) {
        int d = graded_degree(g, v);
        if (grd0 == -1) grd0 = d;
        cond_walks = cond_walks && d == grd0;
    }
    if (cond_walks)
        for (const auto& v : ca.cycle_vertices) cond_walks = cond_walks && all_walks_decreasing_from(g, v);

    bool cond_branch = unbalanced_on_cycle == 0;
    for (const auto& s : splits) {
        if (ca.cycle_edges.count(s.edge)) continue;
        for (EdgeId e : ca.cycle_edges)
            cond_branch = cond_branch && s.oriented->branch_l.edges.count(e);
    }
    bool cond_star = true;
    for (const auto& s : splits) cond_star = cond_star && star_condition(g, s.edge).holds;

    ctx.check("cycle-walks-vs-branch", cond_walks == cond_branch);
    ctx.check("cycle-walks-vs-star", cond_walks == cond_star);
    auto verdict = classify_grA(g).verdict;
    ReprType expect{ReprKind::Domestic, ca.odd ? 1 : 2};
    ctx.check("cycle-verdict", (verdict == expect) == cond_walks, repr_to_string(verdict));
}

void presentation_checks(SuiteContext& ctx) {
    const BrauerGraph& g = ctx.g;
    auto q = build_quiver(g);
    auto rels = relations(g, q);
    auto ideal2 = ideal_variant(g, q, rels, IdealVariant::I2);

    std::map<EdgeId, int> indeg, outdeg;
    for (const auto& a : q.arrows) {
        outdeg[a.source]++;
        indeg[a.target]++;
    }
    bool biserial = true;
    for (EdgeId e : q.vertices) biserial = biserial && indeg[e] <= 2 && outdeg[e] <= 2;
    ctx.check("special-biserial-bound", biserial);

    std::set<EdgeId> unb;
    for (const auto& s : unbalanced_edges(g)) unb.insert(s.edge);
    ctx.check("W-is-unbalanced-set", ideal2.W == unb);

    for (const auto& t1 : rels.type1) {
        auto [a, b] = edge_endpoints(g, t1.edge);
        std::multiset<int> lens{static_cast<int>(t1.p.size()), static_cast<int>(t1.q.size())};
        std::multiset<int> grds{graded_degree(g, a), graded_degree(g, b)};
        ctx.check("type1-lengths-are-grds", lens == grds, "edge " + std::to_string(t1.edge));
        const Arrow& first_p = q.arrow(t1.p.front());
        const Arrow& last_p = q.arrow(t1.p.back());
        ctx.check("type1-based-at-edge", first_p.source == t1.edge && last_p.target == t1.edge);
    }
}

void string_checks(SuiteContext& ctx) {
    const BrauerGraph& g = ctx.g;
    if (g.edges.size() > 6) return; // keep the word enumeration desk-scale

    auto q = build_quiver(g);
    auto rels = relations(g, q);
    auto ideal1 = ideal_variant(g, q, rels, IdealVariant::I1);
    auto ideal2 = ideal_variant(g, q, rels, IdealVariant::I2);
    StringAlgebra a1(q, ideal1), a2(q, ideal2);

    const int len = 8;
    auto s1 = a1.enumerate_strings(len, 400'000);
    auto s2 = a2.enumerate_strings(len, 400'000);
    bool subset = std::includes(s2.begin(), s2.end(), s1.begin(), s1.end());
    ctx.check("string-monotonicity", subset);

    bool extra_has_r = true;
    for (const auto& sw : s2) {
        if (s1.count(sw) || sw.letters.empty()) continue;
        bool has = false;
        for (const auto& [e, r] : ideal2.P) has = has || word_contains_path_or_inverse(sw.letters, r);
        extra_has_r = extra_has_r && has;
    }
    ctx.check("new-strings-contain-r", extra_has_r);

    auto bands2 = a2.enumerate_bands(10, 400'000);
    for (const auto& [e, r] : ideal2.P) {
        if (!star_condition(g, e).holds) continue;
        bool clean = true;
        for (const auto& b : bands2) clean = clean && !word_contains_path_or_inverse(b.letters, r);
        ctx.check("star-keeps-r-out-of-bands", clean, "edge " + std::to_string(e));
    }

    // simple strings: exactly two per ordered pair of distinct edges of a tree
    if (cycle_analysis(g).kind == CycleAnalysis::Kind::Tree) {
        auto all = a2.enumerate_strings(static_cast<int>(g.edges.size()) + 1, 400'000);
        auto simple = [&](const std::vector<Letter>& wletters) {
            std::set<EdgeId> seen;
            for (const auto& l : wletters)
                if (!seen.insert(a2.source(l)).second) return false;
            return !seen.count(a2.target(wletters.back()));
        };
        std::map<std::pair<EdgeId, EdgeId>, int> counts;
        for (const auto& sw : all) {
            if (sw.letters.empty()) continue;
            if (!simple(sw.letters)) continue;
            EdgeId s = a2.source(sw.letters.front());
            EdgeId t = a2.target(sw.letters.back());
            counts[{s, t}]++;
            counts[{t, s}]++; // the inverse word
        }
        bool two_each = true;
        for (EdgeId a : q.vertices)
            for (EdgeId b : q.vertices)
                if (a != b) two_each = two_each && counts[{a, b}] == 2;
        ctx.check("simple-strings-two-per-walk", two_each);
    }
}

} // namespace

SuiteReport consistency_suite(const RandomGraphSpec& spec, int trials) {
    SuiteReport report;
    report.trials = trials;
    std::mt19937_64 rng(spec.seed);
    for (int t = 0; t < trials; ++t) {
        BrauerGraph g = random_graph(spec, rng);
        SuiteContext ctx{report, g};
        try {
            ctx.check("validate", validate(g).ok);
            graph_checks(ctx);
            ctx.check("degeneration-order", consistency_A_vs_grA(g));
            presentation_checks(ctx);
            auto ca = cycle_analysis(g);
            int heavy = 0;
            for (const auto& [v, data] : g.vertices)
                if (data.multiplicity > 1) heavy++;
            if (ca.kind == CycleAnalysis::Kind::Tree && heavy <= 1) tree_checks(ctx);
            if (spec.family == RandomGraphSpec::Family::TwoDoubleTree &&
                ca.kind == CycleAnalysis::Kind::Tree)
                two_double_checks(ctx);
            if (spec.family == RandomGraphSpec::Family::UniqueCycle) unique_cycle_checks(ctx);
            string_checks(ctx);
        } catch (const Error& e) {
            ctx.check("no-exception", false, e.what());
        }
        if (report.failures.size() >= 5) break;
    }
    return report;
}

} // namespace bgat
