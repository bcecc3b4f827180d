#include "bgat/classify.hpp"

#include <algorithm>

namespace bgat {

namespace {

void require_valid(const BrauerGraph& g) {
    auto report = validate(g);
    if (!report.ok) throw Error("InvalidGraph", report.error + ": " + report.detail);
}

std::vector<VertexId> heavy_vertices(const BrauerGraph& g) {
    std::vector<VertexId> out;
    for (const auto& [v, data] : g.vertices)
        if (data.multiplicity > 1) out.push_back(v);
    return out;
}

bool exactly_two_doubles(const BrauerGraph& g) {
    int doubles = 0, others = 0;
    for (const auto& [v, data] : g.vertices) {
        if (data.multiplicity == 2)
            doubles++;
        else if (data.multiplicity > 1)
            others++;
    }
    return doubles == 2 && others == 0;
}

int rank_of(const ReprType& r) {
    switch (r.kind) {
        case ReprKind::Finite: return 0;
        case ReprKind::Domestic: return 1;
        case ReprKind::NotPolynomialGrowth: return 2;
    }
    return 2;
}

void put(ClassificationReport& rep, const std::string& key, const std::string& value) {
    rep.witnesses.emplace_back(key, value);
}

} // namespace

std::string repr_to_string(const ReprType& r) {
    switch (r.kind) {
        case ReprKind::Finite: return "Finite";
        case ReprKind::Domestic: return "Domestic(" + std::to_string(r.n) + ")";
        case ReprKind::NotPolynomialGrowth: return "NotPolynomialGrowth";
    }
    return "?";
}

ClassificationReport classify_A(const BrauerGraph& g) {
    require_valid(g);
    ClassificationReport rep;
    rep.algebra = "A";
    auto ca = cycle_analysis(g);
    bool all_one = heavy_vertices(g).empty();

    if (ca.kind == CycleAnalysis::Kind::Tree) {
        if (heavy_vertices(g).size() <= 1) {
            rep.verdict = {ReprKind::Finite, 0};
            rep.case_tag = "A/brauer-tree";
            return rep;
        }
        if (exactly_two_doubles(g)) {
            rep.verdict = {ReprKind::Domestic, 1};
            rep.case_tag = "A/two-m2-tree";
            return rep;
        }
        rep.verdict = {ReprKind::NotPolynomialGrowth, 0};
        rep.case_tag = "A/tree-other-multiplicity";
        return rep;
    }
    if (ca.kind == CycleAnalysis::Kind::UniqueCycle && all_one) {
        rep.verdict = {ReprKind::Domestic, ca.odd ? 1 : 2};
        rep.case_tag = ca.odd ? "A/unique-cycle-odd" : "A/unique-cycle-even";
        put(rep, "cycle_length", std::to_string(ca.length));
        return rep;
    }
    rep.verdict = {ReprKind::NotPolynomialGrowth, 0};
    rep.case_tag = "A/other";
    return rep;
}

ClassificationReport classify_grA(const BrauerGraph& g) {
    require_valid(g);
    ClassificationReport rep;
    rep.algebra = "grA";
    auto ca = cycle_analysis(g);
    auto heavy = heavy_vertices(g);

    if (ca.kind == CycleAnalysis::Kind::Tree) {
        if (heavy.size() <= 1) {
            auto ti = tree_invariants(g);
            int s = ti.kappa0 * (ti.m0 - 1) + ti.kappa1;
            put(rep, "kappa0", std::to_string(ti.kappa0));
            put(rep, "kappa1", std::to_string(ti.kappa1));
            put(rep, "m0", std::to_string(ti.m0));
            put(rep, "s", std::to_string(s));
            if (s == 0) {
                rep.verdict = {ReprKind::Finite, 0};
                rep.case_tag = "grA/tree-s0";
            } else if (s == 1) {
                rep.verdict = {ReprKind::Domestic, 1};
                rep.case_tag = "grA/tree-s1";
            } else {
                rep.verdict = {ReprKind::NotPolynomialGrowth, 0};
                rep.case_tag = "grA/tree-s2+";
            }
            return rep;
        }
        if (exactly_two_doubles(g)) {
            std::vector<VertexId> w;
            for (const auto& [v, data] : g.vertices)
                if (data.multiplicity == 2) w.push_back(v);
            put(rep, "w0", w[0]);
            put(rep, "w1", w[1]);
            int g0 = graded_degree(g, w[0]);
            int g1 = graded_degree(g, w[1]);
            if (g0 != g1) {
                rep.verdict = {ReprKind::NotPolynomialGrowth, 0};
                rep.case_tag = "grA/two-m2-grd-differ";
                put(rep, "grd_w0", std::to_string(g0));
                put(rep, "grd_w1", std::to_string(g1));
                return rep;
            }
            Walk failing;
            if (!all_walks_decreasing_from(g, w[0], &failing) ||
                !all_walks_decreasing_from(g, w[1], &failing)) {
                rep.verdict = {ReprKind::NotPolynomialGrowth, 0};
                rep.case_tag = "grA/two-m2-walk-increases";
                put(rep, "failing_walk", walk_to_string(failing));
                return rep;
            }
            rep.verdict = {ReprKind::Domestic, 1};
            rep.case_tag = "grA/two-m2-tree";
            return rep;
        }
        rep.verdict = {ReprKind::NotPolynomialGrowth, 0};
        rep.case_tag = "grA/tree-other-multiplicity";
        return rep;
    }

    if (ca.kind == CycleAnalysis::Kind::UniqueCycle && heavy.empty()) {
        put(rep, "cycle_length", std::to_string(ca.length));
        int grd0 = -1;
        for (const auto& v : ca.cycle_vertices) {
            int d = graded_degree(g, v);
            if (grd0 == -1) grd0 = d;
            if (d != grd0) {
                rep.verdict = {ReprKind::NotPolynomialGrowth, 0};
                rep.case_tag = "grA/cycle-grd-differ";
                put(rep, "vertex", v);
                return rep;
            }
        }
        for (const auto& v : ca.cycle_vertices) {
            Walk failing;
            if (!all_walks_decreasing_from(g, v, &failing)) {
                rep.verdict = {ReprKind::NotPolynomialGrowth, 0};
                rep.case_tag = "grA/cycle-walk-increases";
                put(rep, "failing_walk", walk_to_string(failing));
                return rep;
            }
        }
        rep.verdict = {ReprKind::Domestic, ca.odd ? 1 : 2};
        rep.case_tag = ca.odd ? "grA/unique-cycle-odd" : "grA/unique-cycle-even";
        return rep;
    }

    rep.verdict = {ReprKind::NotPolynomialGrowth, 0};
    rep.case_tag = (ca.kind == CycleAnalysis::Kind::MultiCycle) ? "grA/multi-cycle"
                                                                : "grA/cycle-with-multiplicity";
    return rep;
}

bool consistency_A_vs_grA(const BrauerGraph& g) {
    return rank_of(classify_A(g).verdict) <= rank_of(classify_grA(g).verdict);
}

} // namespace bgat
