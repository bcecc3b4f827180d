#include "bgat/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace bgat {

namespace {

std::map<HalfEdgeId, EdgeId> half_to_edge(const BrauerGraph& g) {
    std::map<HalfEdgeId, EdgeId> m;
    for (const auto& [e, ends] : g.edges) {
        m[ends.first] = e;
        m[ends.second] = e;
    }
    return m;
}

bool truncated(const BrauerGraph& g, const VertexId& v) {
    const auto& d = g.vertices.at(v);
    return d.multiplicity * static_cast<int>(d.order.size()) == 1;
}

PathWord repeat(const PathWord& p, int times) {
    PathWord out;
    out.reserve(p.size() * times);
    for (int k = 0; k < times; ++k) out.insert(out.end(), p.begin(), p.end());
    return out;
}

bool path_less(const PathWord& a, const PathWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

} // namespace

const Arrow& Quiver::arrow(const ArrowId& id) const {
    for (const auto& a : arrows)
        if (a.id == id) return a;
    throw Error("UnknownArrow", "no arrow '" + id + "'");
}

bool Quiver::has_arrow(const ArrowId& id) const {
    for (const auto& a : arrows)
        if (a.id == id) return true;
    return false;
}

Quiver build_quiver(const BrauerGraph& g) {
    Quiver q;
    for (const auto& [e, ends] : g.edges) q.vertices.push_back(e);
    auto h2e = half_to_edge(g);
    for (const auto& [v, data] : g.vertices) {
        int val = static_cast<int>(data.order.size());
        if (data.multiplicity * val < 2) continue; // truncated
        for (int k = 0; k < val; ++k) {
            Arrow a;
            a.id = "a" + v + "_" + std::to_string(k);
            a.source = h2e.at(data.order[k]);
            a.target = h2e.at(data.order[(k + 1) % val]);
            a.at_vertex = v;
            a.position = k;
            q.arrows.push_back(a);
        }
    }
    return q;
}

PathWord special_cycle(const BrauerGraph& g, const Quiver& q, const VertexId& v, const ArrowId& start) {
    const Arrow& a0 = q.arrow(start);
    if (a0.at_vertex != v)
        throw Error("NotSpecialCycleArrow", "arrow " + start + " is not tagged at vertex " + v);
    int val = valency(g, v);
    // arrows at v indexed by position
    std::vector<const Arrow*> ring(val, nullptr);
    for (const auto& a : q.arrows)
        if (a.at_vertex == v) ring[a.position] = &a;
    PathWord cycle;
    for (int k = 0; k < val; ++k) cycle.push_back(ring[(a0.position + k) % val]->id);
    return cycle;
}

Relations relations(const BrauerGraph& g, const Quiver& q) {
    Relations rels;
    auto h2e = half_to_edge(g);

    // arrow generated at a given half-edge occurrence
    std::map<HalfEdgeId, const Arrow*> arrow_at_half;
    for (const auto& [v, data] : g.vertices) {
        if (truncated(g, v)) continue;
        for (const auto& a : q.arrows)
            if (a.at_vertex == v) arrow_at_half[data.order[a.position]] = &a;
    }

    // type 1: both endpoints non-truncated; the two cycle powers based at the edge
    for (const auto& [e, ends] : g.edges) {
        VertexId v1 = vertex_of_half(g, ends.first);
        VertexId v2 = vertex_of_half(g, ends.second);
        if (truncated(g, v1) || truncated(g, v2)) continue;
        PathWord p = repeat(special_cycle(g, q, v1, arrow_at_half.at(ends.first)->id),
                            g.vertices.at(v1).multiplicity);
        PathWord qq = repeat(special_cycle(g, q, v2, arrow_at_half.at(ends.second)->id),
                             g.vertices.at(v2).multiplicity);
        rels.type1.push_back({e, std::move(p), std::move(qq)});
    }

    // type 2: a C_v(a)^m(v) for every arrow a
    for (const auto& a : q.arrows) {
        PathWord w = repeat(special_cycle(g, q, a.at_vertex, a.id), g.vertices.at(a.at_vertex).multiplicity);
        w.push_back(a.id);
        rels.type2.push_back(std::move(w));
    }

    // type 3: composable pairs that are not consecutive in any special cycle
    // (read cyclically, so the wrap pair of every cycle is excluded; the
    // valency-one quiver loop excludes its own square that way)
    std::set<std::pair<ArrowId, ArrowId>> cyclic_pairs; // (first applied, second applied)
    for (const auto& [v, data] : g.vertices) {
        if (truncated(g, v)) continue;
        int val = static_cast<int>(data.order.size());
        std::vector<const Arrow*> ring(val, nullptr);
        for (const auto& a : q.arrows)
            if (a.at_vertex == v) ring[a.position] = &a;
        for (int k = 0; k < val; ++k)
            cyclic_pairs.insert({ring[k]->id, ring[(k + 1) % val]->id});
    }
    for (const auto& a : q.arrows)
        for (const auto& b : q.arrows)
            if (a.target == b.source && !cyclic_pairs.count({a.id, b.id}))
                rels.type3.push_back({a.id, b.id});

    std::sort(rels.type3.begin(), rels.type3.end());
    return rels;
}

IdealData ideal_variant(const BrauerGraph& g, const Quiver& q, const Relations& rels, IdealVariant variant) {
    (void)g;
    (void)q;
    IdealData ideal;
    ideal.variant = variant;

    std::vector<PathWord> monomials = rels.type2;
    monomials.insert(monomials.end(), rels.type3.begin(), rels.type3.end());

    for (const auto& t1 : rels.type1) {
        const PathWord& shorter = path_less(t1.p, t1.q) ? t1.p : t1.q;
        const PathWord& longer = path_less(t1.p, t1.q) ? t1.q : t1.p;
        bool unbalanced = t1.p.size() != t1.q.size();
        if (unbalanced) {
            ideal.W.insert(t1.edge);
            ideal.P[t1.edge] = longer;
        }
        switch (variant) {
            case IdealVariant::I:
                ideal.binomials.push_back({t1.edge, shorter, longer});
                break;
            case IdealVariant::Igr:
                if (unbalanced)
                    monomials.push_back(shorter);
                else
                    ideal.binomials.push_back({t1.edge, shorter, longer});
                break;
            case IdealVariant::I1:
                monomials.push_back(t1.p);
                monomials.push_back(t1.q);
                break;
            case IdealVariant::I2:
                if (unbalanced) {
                    monomials.push_back(shorter);
                } else {
                    monomials.push_back(t1.p);
                    monomials.push_back(t1.q);
                }
                break;
        }
    }

    std::sort(monomials.begin(), monomials.end(), path_less);
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    ideal.monomials = std::move(monomials);
    std::sort(ideal.binomials.begin(), ideal.binomials.end(),
              [](const Binomial& a, const Binomial& b) { return a.edge < b.edge; });
    return ideal;
}

bool iso_A_grA(const BrauerGraph& g) {
    int grd = -1;
    for (const auto& [v, data] : g.vertices) {
        int d = graded_degree(g, v);
        if (grd == -1) grd = d;
        if (d != grd) return false;
    }
    return true;
}

std::string variant_name(IdealVariant v) {
    switch (v) {
        case IdealVariant::I: return "I";
        case IdealVariant::Igr: return "Igr";
        case IdealVariant::I1: return "I1";
        case IdealVariant::I2: return "I2";
    }
    return "?";
}

IdealVariant variant_from_name(const std::string& name) {
    if (name == "I") return IdealVariant::I;
    if (name == "Igr") return IdealVariant::Igr;
    if (name == "I1") return IdealVariant::I1;
    if (name == "I2") return IdealVariant::I2;
    throw Error("UnknownVariant", "no ideal variant '" + name + "'");
}

std::string path_to_string(const PathWord& p) {
    std::ostringstream os;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (it != p.rbegin()) os << " ";
        os << *it;
    }
    return os.str();
}

} // namespace bgat
