#include "bgat/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace bgat {

namespace {

struct HalfInfo {
    VertexId vertex;
    EdgeId edge;
};

// half-edge -> (vertex, edge); assumes the graph validated.
std::map<HalfEdgeId, HalfInfo> half_index(const BrauerGraph& g) {
    std::map<HalfEdgeId, HalfInfo> idx;
    for (const auto& [v, data] : g.vertices)
        for (HalfEdgeId h : data.order) idx[h].vertex = v;
    for (const auto& [e, ends] : g.edges) {
        idx[ends.first].edge = e;
        idx[ends.second].edge = e;
    }
    return idx;
}

const VertexData& vertex_data(const BrauerGraph& g, const VertexId& v) {
    auto it = g.vertices.find(v);
    if (it == g.vertices.end()) throw Error("UnknownVertex", "no vertex '" + v + "'");
    return it->second;
}

const std::pair<HalfEdgeId, HalfEdgeId>& edge_data(const BrauerGraph& g, EdgeId i) {
    auto it = g.edges.find(i);
    if (it == g.edges.end()) throw Error("UnknownEdge", "no edge " + std::to_string(i));
    return it->second;
}

// Connected component of `start` in g minus the edge `skip` (or the whole
// graph when skip is nullopt).
BranchSide component_of(const BrauerGraph& g, const VertexId& start, std::optional<EdgeId> skip) {
    BranchSide side;
    std::deque<VertexId> queue{start};
    side.vertices.insert(start);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const auto& [e, ends] : g.edges) {
            if (skip && *skip == e) continue;
            auto [a, b] = edge_endpoints(g, e);
            VertexId other;
            if (a == v)
                other = b;
            else if (b == v)
                other = a;
            else
                continue;
            side.edges.insert(e);
            if (!side.vertices.count(other)) {
                side.vertices.insert(other);
                queue.push_back(other);
            }
        }
    }
    return side;
}

enum class Step { Extend, Prune, StopAll };

// Enumerate simple paths from the last vertex of `cur`; the visitor sees
// every extension and controls whether to extend further, skip the branch,
// or abort the whole search.
void walk_dfs(const BrauerGraph& g, const std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>>& adj,
              Walk& cur, std::set<VertexId>& seen, const std::function<Step(const Walk&)>& visit, bool& stop) {
    if (stop) return;
    const VertexId& v = cur.vertices.back();
    for (const auto& [e, w] : adj.at(v)) {
        if (seen.count(w)) continue;
        cur.edges.push_back(e);
        cur.vertices.push_back(w);
        seen.insert(w);
        Step s = visit(cur);
        if (s == Step::StopAll)
            stop = true;
        else if (s == Step::Extend)
            walk_dfs(g, adj, cur, seen, visit, stop);
        seen.erase(w);
        cur.vertices.pop_back();
        cur.edges.pop_back();
        if (stop) return;
    }
}

std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adjacency(const BrauerGraph& g) {
    std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adj;
    for (const auto& [v, data] : g.vertices) adj[v];
    for (const auto& [e, ends] : g.edges) {
        auto [a, b] = edge_endpoints(g, e);
        if (a == b) continue; // loops never extend a simple walk
        adj[a].emplace_back(e, b);
        adj[b].emplace_back(e, a);
    }
    return adj;
}

} // namespace

VertexId vertex_of_half(const BrauerGraph& g, HalfEdgeId h) {
    for (const auto& [v, data] : g.vertices)
        if (std::find(data.order.begin(), data.order.end(), h) != data.order.end()) return v;
    throw Error("DanglingHalfEdge", "half-edge " + std::to_string(h) + " not attached to a vertex");
}

std::pair<VertexId, VertexId> edge_endpoints(const BrauerGraph& g, EdgeId i) {
    const auto& ends = edge_data(g, i);
    return {vertex_of_half(g, ends.first), vertex_of_half(g, ends.second)};
}

ValidationReport validate(const BrauerGraph& g) {
    auto fail = [](std::string code, std::string detail) {
        return ValidationReport{false, std::move(code), std::move(detail)};
    };

    if (g.edges.empty()) return fail("Empty", "graph has no edges");

    // half-edge bijection: each id at exactly one vertex and in exactly one edge
    std::map<HalfEdgeId, int> at_vertex_count, in_edge_count;
    for (const auto& [v, data] : g.vertices) {
        std::set<HalfEdgeId> local;
        for (HalfEdgeId h : data.order) {
            if (!local.insert(h).second)
                return fail("DanglingHalfEdge",
                            "half-edge " + std::to_string(h) + " listed twice at vertex " + v);
            at_vertex_count[h]++;
        }
        if (data.multiplicity < 1)
            return fail("DuplicateId", "vertex " + v + " has non-positive multiplicity");
    }
    for (const auto& [e, ends] : g.edges) {
        if (ends.first == ends.second)
            return fail("DanglingHalfEdge",
                        "edge " + std::to_string(e) + " pairs half-edge " +
                            std::to_string(ends.first) + " with itself");
        in_edge_count[ends.first]++;
        in_edge_count[ends.second]++;
    }
    for (const auto& [h, n] : at_vertex_count) {
        if (n > 1)
            return fail("DanglingHalfEdge", "half-edge " + std::to_string(h) + " listed at two vertices");
        if (!in_edge_count.count(h))
            return fail("DanglingHalfEdge", "half-edge " + std::to_string(h) + " belongs to no edge");
    }
    for (const auto& [h, n] : in_edge_count) {
        if (n > 1)
            return fail("DanglingHalfEdge", "half-edge " + std::to_string(h) + " belongs to two edges");
        if (!at_vertex_count.count(h))
            return fail("DanglingHalfEdge", "half-edge " + std::to_string(h) + " attached to no vertex");
    }

    // connectivity over vertices
    auto side = component_of(g, g.vertices.begin()->first, std::nullopt);
    for (const auto& [v, data] : g.vertices)
        if (!side.vertices.count(v)) return fail("Disconnected", "vertex " + v + " unreachable");

    // degenerate single edge with both endpoints truncated
    for (const auto& [e, ends] : g.edges) {
        auto [a, b] = edge_endpoints(g, e);
        if (a == b) continue;
        const auto& da = g.vertices.at(a);
        const auto& db = g.vertices.at(b);
        if (da.multiplicity * static_cast<int>(da.order.size()) == 1 &&
            db.multiplicity * static_cast<int>(db.order.size()) == 1)
            return fail("DegenerateBothTruncated", "edge " + std::to_string(e));
    }

    if (g.exceptional) {
        if (!g.vertices.count(*g.exceptional))
            return fail("ExceptionalMismatch", "exceptional vertex " + *g.exceptional + " does not exist");
        for (const auto& [v, data] : g.vertices)
            if (data.multiplicity > 1 && v != *g.exceptional)
                return fail("ExceptionalMismatch",
                            "vertex " + v + " has multiplicity > 1 but is not the exceptional vertex");
    }
    return {};
}

int valency(const BrauerGraph& g, const VertexId& v) {
    return static_cast<int>(vertex_data(g, v).order.size());
}

int graded_degree(const BrauerGraph& g, const VertexId& v) {
    const auto& data = vertex_data(g, v);
    int mv = data.multiplicity * static_cast<int>(data.order.size());
    if (mv > 1) return mv;
    if (data.order.empty()) throw Error("InvalidGraph", "vertex " + v + " has no incident edges");
    auto idx = half_index(g);
    EdgeId e = idx.at(data.order.front()).edge;
    auto [a, b] = edge_endpoints(g, e);
    const VertexId& other = (a == v) ? b : a;
    const auto& od = g.vertices.at(other);
    int mo = od.multiplicity * static_cast<int>(od.order.size());
    if (mo == 1)
        throw Error("DegenerateBothTruncated",
                    "both endpoints of edge " + std::to_string(e) + " are truncated");
    return mo;
}

BranchSplit split_at_edge(const BrauerGraph& g, EdgeId i) {
    edge_data(g, i); // UnknownEdge check
    auto [u, v] = edge_endpoints(g, i);
    BranchSplit split;
    split.edge = i;
    split.side_u = component_of(g, u, i);
    split.side_v = component_of(g, v, i);
    split.same_component = split.side_u.vertices.count(v) > 0;
    int gu = graded_degree(g, u);
    int gv = graded_degree(g, v);
    if (gu != gv) {
        OrientedSplit o;
        if (gu < gv) {
            o.v_s = u;
            o.v_l = v;
            o.branch_s = split.side_u;
            o.branch_l = split.side_v;
        } else {
            o.v_s = v;
            o.v_l = u;
            o.branch_s = split.side_v;
            o.branch_l = split.side_u;
        }
        o.n_i = static_cast<int>(o.branch_s.edges.size());
        split.oriented = std::move(o);
    }
    return split;
}

std::vector<BranchSplit> unbalanced_edges(const BrauerGraph& g) {
    std::vector<BranchSplit> out;
    for (const auto& [e, ends] : g.edges) {
        auto split = split_at_edge(g, e);
        if (split.oriented) out.push_back(std::move(split));
    }
    return out;
}

Walk unique_walk(const BrauerGraph& g, const VertexId& u, const VertexId& v) {
    vertex_data(g, u);
    vertex_data(g, v);
    if (u == v) return Walk{{u}, {}};
    auto adj = adjacency(g);
    std::vector<Walk> found;
    Walk cur{{u}, {}};
    std::set<VertexId> seen{u};
    bool stop = false;
    walk_dfs(g, adj, cur, seen,
             [&](const Walk& w) {
                 if (w.vertices.back() != v) return Step::Extend;
                 found.push_back(w);
                 // a walk never extends past its endpoint; a second hit settles it
                 return found.size() >= 2 ? Step::StopAll : Step::Prune;
             },
             stop);
    if (found.empty()) throw Error("Disconnected", "no walk from " + u + " to " + v);
    if (found.size() >= 2) throw Error("NotATree", "multiple walks from " + u + " to " + v);
    return found.front();
}

bool is_degree_decreasing(const BrauerGraph& g, const Walk& w) {
    for (size_t k = 0; k + 1 < w.vertices.size(); ++k)
        if (graded_degree(g, w.vertices[k]) < graded_degree(g, w.vertices[k + 1])) return false;
    return true;
}

StarCheck star_condition(const BrauerGraph& g, EdgeId i) {
    auto split = split_at_edge(g, i);
    if (!split.oriented) throw Error("NotUnbalanced", "edge " + std::to_string(i) + " is balanced");
    const auto& o = *split.oriented;

    if (split.same_component)
        return {false, 1, "G_{i,S} = G_{i,L}: edge " + std::to_string(i) + " lies on a cycle"};

    // branch_s must be a tree with multiplicity 1 everywhere
    if (o.branch_s.edges.size() + 1 != o.branch_s.vertices.size())
        return {false, 2, "branch of " + o.v_s + " contains a cycle"};
    for (const auto& v : o.branch_s.vertices)
        if (g.vertices.at(v).multiplicity > 1)
            return {false, 2, "vertex " + v + " has multiplicity " +
                                  std::to_string(g.vertices.at(v).multiplicity)};

    // every walk from v_s inside the branch must be degree decreasing; the
    // branch is a tree, so parent/child checks along a BFS cover all walks
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
    std::deque<VertexId> queue{o.v_s};
    std::set<VertexId> seen{o.v_s};
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (const auto& [e, ends] : g.edges) {
            if (e == i || !o.branch_s.edges.count(e)) continue;
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
            parent[y] = {x, e};
            if (graded_degree(g, x) < graded_degree(g, y)) {
                // reconstruct the offending walk v_s .. x, y
                std::vector<VertexId> vs{y, x};
                std::vector<EdgeId> es{e};
                VertexId cur = x;
                while (cur != o.v_s) {
                    auto [p, pe] = parent.at(cur);
                    vs.push_back(p);
                    es.push_back(pe);
                    cur = p;
                }
                std::reverse(vs.begin(), vs.end());
                std::reverse(es.begin(), es.end());
                return {false, 3, "walk " + walk_to_string(Walk{vs, es}) + " is not degree decreasing"};
            }
            queue.push_back(y);
        }
    }
    return {};
}

TreeInvariants tree_invariants(const BrauerGraph& g) {
    auto ca = cycle_analysis(g);
    if (ca.kind != CycleAnalysis::Kind::Tree)
        throw Error("NotBrauerTree", "graph is not a tree");
    std::vector<VertexId> heavy;
    for (const auto& [v, data] : g.vertices)
        if (data.multiplicity > 1) heavy.push_back(v);
    if (heavy.size() > 1)
        throw Error("NotBrauerTree", "more than one vertex of multiplicity > 1");

    TreeInvariants ti;
    if (!heavy.empty())
        ti.v0 = heavy.front();
    else if (g.exceptional)
        ti.v0 = *g.exceptional;
    else
        ti.v0 = g.vertices.begin()->first;
    ti.m0 = g.vertices.at(ti.v0).multiplicity;

    auto splits = unbalanced_edges(g);
    std::map<EdgeId, const OrientedSplit*> by_edge;
    for (const auto& s : splits) {
        ti.unbalanced_edges.push_back({s.edge, s.oriented->v_s, s.oriented->v_l, s.oriented->n_i});
        by_edge[s.edge] = &*s.oriented;
        if (s.oriented->branch_s.vertices.count(ti.v0)) ti.kappa0++;
    }

    // (i, j) is a pair iff j lies in branch_s(i) and the L-end of j is the
    // endpoint farther from v_s(i)
    for (const auto& [i, oi] : by_edge) {
        for (const auto& [j, oj] : by_edge) {
            if (i >= j) continue;
            auto is_pair = [&](const OrientedSplit* a, EdgeId be, const OrientedSplit* b) {
                if (!a->branch_s.edges.count(be)) return false;
                return walk_distance(g, b->v_s, a->v_s) + 1 == walk_distance(g, b->v_l, a->v_s);
            };
            if (is_pair(oi, j, oj)) ti.pairs.insert({i, j});
        }
    }
    ti.kappa1 = static_cast<int>(ti.pairs.size());
    return ti;
}

CycleAnalysis cycle_analysis(const BrauerGraph& g) {
    CycleAnalysis ca;
    ca.rank = static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) + 1;
    if (ca.rank <= 0) {
        ca.kind = CycleAnalysis::Kind::Tree;
        return ca;
    }
    if (ca.rank >= 2) {
        ca.kind = CycleAnalysis::Kind::MultiCycle;
        return ca;
    }
    ca.kind = CycleAnalysis::Kind::UniqueCycle;

    // strip degree<=1 vertices until only the cycle remains (loops keep their
    // vertex at degree 2, so a bare loop survives as a length-1 cycle)
    std::map<VertexId, int> deg;
    std::set<EdgeId> alive;
    for (const auto& [e, ends] : g.edges) alive.insert(e);
    for (const auto& [v, data] : g.vertices) deg[v] = 0;
    for (const auto& [e, ends] : g.edges) {
        auto [a, b] = edge_endpoints(g, e);
        deg[a]++;
        deg[b]++;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [v, data] : g.vertices) {
            if (deg[v] != 1) continue;
            for (EdgeId e : std::vector<EdgeId>(alive.begin(), alive.end())) {
                auto [a, b] = edge_endpoints(g, e);
                if (a != v && b != v) continue;
                alive.erase(e);
                deg[a]--;
                deg[b]--;
                changed = true;
            }
        }
    }
    ca.cycle_edges = alive;
    for (EdgeId e : alive) {
        auto [a, b] = edge_endpoints(g, e);
        ca.cycle_vertices.insert(a);
        ca.cycle_vertices.insert(b);
    }
    ca.length = static_cast<int>(alive.size());
    ca.odd = ca.length % 2 == 1;
    return ca;
}

int walk_distance(const BrauerGraph& g, const VertexId& u, const VertexId& v) {
    return unique_walk(g, u, v).length();
}

bool all_walks_decreasing_from(const BrauerGraph& g, const VertexId& v, Walk* failing) {
    auto adj = adjacency(g);
    bool ok = true;
    Walk cur{{v}, {}};
    std::set<VertexId> seen{v};
    bool stop = false;
    walk_dfs(g, adj, cur, seen,
             [&](const Walk& w) {
                 size_t n = w.vertices.size();
                 if (graded_degree(g, w.vertices[n - 2]) < graded_degree(g, w.vertices[n - 1])) {
                     ok = false;
                     if (failing) *failing = w;
                     return Step::StopAll;
                 }
                 return Step::Extend;
             },
             stop);
    return ok;
}

std::string walk_to_string(const Walk& w) {
    std::ostringstream os;
    for (size_t k = 0; k < w.vertices.size(); ++k) {
        os << w.vertices[k];
        if (k < w.edges.size()) os << " -" << w.edges[k] << "- ";
    }
    return os.str();
}

} // namespace bgat
