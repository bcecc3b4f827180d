#include "doctest.h"

#include <algorithm>

#include "bgat/oracle.hpp"
#include "fixtures.hpp"

using namespace bgat;

namespace {

bool has_arrow(const Quiver& q, const ArrowId& id, EdgeId src, EdgeId tgt) {
    for (const auto& a : q.arrows)
        if (a.id == id) return a.source == src && a.target == tgt;
    return false;
}

bool has_monomial(const IdealData& ideal, const PathWord& p) {
    return std::find(ideal.monomials.begin(), ideal.monomials.end(), p) != ideal.monomials.end();
}

} // namespace

TEST_CASE("build_quiver: g_t2 matches the worked example") {
    auto g = fixtures::g_t2();
    auto q = build_quiver(g);
    CHECK(q.vertices == std::vector<EdgeId>{1, 2, 3, 4});
    CHECK(q.arrows.size() == 6);
    CHECK(has_arrow(q, "av0_0", 1, 1)); // loop from the exceptional vertex
    CHECK(has_arrow(q, "ac_0", 1, 2));
    CHECK(has_arrow(q, "ac_1", 2, 3));
    CHECK(has_arrow(q, "ac_2", 3, 1));
    CHECK(has_arrow(q, "au_0", 3, 4));
    CHECK(has_arrow(q, "au_1", 4, 3));
}

TEST_CASE("build_quiver: g_star3 is a loop plus a 4-cycle") {
    auto q = build_quiver(fixtures::g_star3());
    CHECK(q.arrows.size() == 5);
    CHECK(has_arrow(q, "av0_0", 1, 1));
    CHECK(has_arrow(q, "ac_0", 1, 2));
    CHECK(has_arrow(q, "ac_1", 2, 3));
    CHECK(has_arrow(q, "ac_2", 3, 4));
    CHECK(has_arrow(q, "ac_3", 4, 1));
}

TEST_CASE("build_quiver: truncated vertices contribute no arrows") {
    // single pendant edge with one multiplicity-2 endpoint: just the loop
    BrauerGraph g;
    g.vertices["u"] = {2, {10}};
    g.vertices["leaf"] = {1, {11}};
    g.edges[1] = {10, 11};
    g.exceptional = "u";
    auto q = build_quiver(g);
    CHECK(q.vertices == std::vector<EdgeId>{1});
    REQUIRE(q.arrows.size() == 1);
    CHECK(q.arrows[0].source == 1);
    CHECK(q.arrows[0].target == 1);
}

TEST_CASE("special_cycle: starting-arrow rotations") {
    auto g = fixtures::g_t2();
    auto q = build_quiver(g);
    CHECK(special_cycle(g, q, "c", "ac_2") == PathWord{"ac_2", "ac_0", "ac_1"});
    CHECK(path_to_string(special_cycle(g, q, "c", "ac_2")) == "ac_1 ac_0 ac_2");
    CHECK(special_cycle(g, q, "u", "au_0") == PathWord{"au_0", "au_1"});
    CHECK(special_cycle(g, q, "v0", "av0_0") == PathWord{"av0_0"});
    CHECK_THROWS_WITH_AS(special_cycle(g, q, "u", "ac_0"), doctest::Contains("NotSpecialCycleArrow"),
                         Error);
}

TEST_CASE("relations: g_t2 type-1 pairs") {
    auto g = fixtures::g_t2();
    auto q = build_quiver(g);
    auto rels = relations(g, q);
    REQUIRE(rels.type1.size() == 2); // edges 2 and 4 have a truncated endpoint

    const auto& t1 = rels.type1[0];
    CHECK(t1.edge == 1);
    // m(v0) = 2 squares the loop; the other side is the 3-cycle at c
    std::set<PathWord> sides1{t1.p, t1.q};
    CHECK(sides1 == std::set<PathWord>{{"av0_0", "av0_0"}, {"ac_0", "ac_1", "ac_2"}});

    const auto& t3 = rels.type1[1];
    CHECK(t3.edge == 3);
    std::set<PathWord> sides3{t3.p, t3.q};
    CHECK(sides3 == std::set<PathWord>{{"ac_2", "ac_0", "ac_1"}, {"au_0", "au_1"}});
}

TEST_CASE("relations: type-2 per arrow, type-3 off-cycle compositions") {
    auto g = fixtures::g_t2();
    auto q = build_quiver(g);
    auto rels = relations(g, q);
    CHECK(rels.type2.size() == 6);
    // a C_v(a)^m for the loop: length m*val + 1 = 3
    CHECK(std::find(rels.type2.begin(), rels.type2.end(),
                    PathWord{"av0_0", "av0_0", "av0_0"}) != rels.type2.end());

    std::set<PathWord> t3(rels.type3.begin(), rels.type3.end());
    CHECK(t3 == std::set<PathWord>{{"ac_1", "au_0"},    // gamma_0 beta_1
                                   {"au_1", "ac_2"},    // beta_2 gamma_1
                                   {"av0_0", "ac_0"},   // beta_0 alpha_0
                                   {"ac_2", "av0_0"}}); // alpha_0 beta_2
}

TEST_CASE("ideal_variant: g_t2 across all four variants") {
    auto g = fixtures::g_t2();
    auto q = build_quiver(g);
    auto rels = relations(g, q);

    auto i2 = ideal_variant(g, q, rels, IdealVariant::I2);
    CHECK(i2.binomials.empty());
    CHECK(i2.W == std::set<EdgeId>{1, 3});
    CHECK(i2.P.at(1) == PathWord{"ac_0", "ac_1", "ac_2"});  // beta_2 beta_1 beta_0
    CHECK(i2.P.at(3) == PathWord{"ac_2", "ac_0", "ac_1"});  // beta_1 beta_0 beta_2
    CHECK(has_monomial(i2, {"av0_0", "av0_0"}));            // alpha_0^2
    CHECK(has_monomial(i2, {"au_0", "au_1"}));              // gamma_1 gamma_0
    CHECK_FALSE(has_monomial(i2, i2.P.at(1)));
    CHECK_FALSE(has_monomial(i2, i2.P.at(3)));

    auto i1 = ideal_variant(g, q, rels, IdealVariant::I1);
    CHECK(i1.binomials.empty());
    CHECK(has_monomial(i1, i2.P.at(1)));
    CHECK(has_monomial(i1, i2.P.at(3)));
    // I2's monomials are exactly I1's minus the two longer paths
    CHECK(i1.monomials.size() == i2.monomials.size() + 2);

    auto i = ideal_variant(g, q, rels, IdealVariant::I);
    CHECK(i.binomials.size() == 2);
    CHECK(i.binomials[0].edge == 1);
    CHECK(i.binomials[0].p.size() < i.binomials[0].q.size());

    auto igr = ideal_variant(g, q, rels, IdealVariant::Igr);
    CHECK(igr.binomials.empty()); // both type-1 edges unbalanced here
    CHECK(has_monomial(igr, {"av0_0", "av0_0"}));
    CHECK_FALSE(has_monomial(igr, i2.P.at(1)));
}

TEST_CASE("ideal_variant: balanced graph keeps binomials in Igr") {
    auto g = fixtures::g_square();
    auto q = build_quiver(g);
    auto rels = relations(g, q);
    auto igr = ideal_variant(g, q, rels, IdealVariant::Igr);
    CHECK(igr.W.empty());
    CHECK(igr.binomials.size() == rels.type1.size());
    CHECK(igr.binomials.size() == 4);
}

TEST_CASE("iso_A_grA") {
    CHECK_FALSE(iso_A_grA(fixtures::g_t2()));
    CHECK(iso_A_grA(fixtures::g_square()));
    CHECK(iso_A_grA(fixtures::g_star_balanced()));
    BrauerGraph g; // one edge, both endpoints multiplicity 2: grd 2 everywhere
    g.vertices["u"] = {2, {10}};
    g.vertices["v"] = {2, {11}};
    g.edges[1] = {10, 11};
    CHECK(iso_A_grA(g));
}

TEST_CASE("property: quiver bounds, special cycles and type-1 lengths on random graphs") {
    RandomGraphSpec spec;
    spec.family = RandomGraphSpec::Family::Any;
    spec.max_edges = 8;
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        auto g = random_graph(spec, rng);
        auto q = build_quiver(g);

        std::map<EdgeId, int> indeg, outdeg;
        for (const auto& a : q.arrows) {
            outdeg[a.source]++;
            indeg[a.target]++;
        }
        for (EdgeId e : q.vertices) {
            CHECK(indeg[e] <= 2);
            CHECK(outdeg[e] <= 2);
        }

        // arrows at a vertex close up into a cycle of length val(v)
        for (const auto& [v, data] : g.vertices) {
            if (data.multiplicity * static_cast<int>(data.order.size()) < 2) continue;
            ArrowId start;
            for (const auto& a : q.arrows)
                if (a.at_vertex == v && a.position == 0) start = a.id;
            auto cycle = special_cycle(g, q, v, start);
            CHECK(static_cast<int>(cycle.size()) == valency(g, v));
            CHECK(q.arrow(cycle.front()).source == q.arrow(cycle.back()).target);
        }

        auto rels = relations(g, q);
        for (const auto& t1 : rels.type1) {
            auto [a, b] = edge_endpoints(g, t1.edge);
            std::multiset<int> lens{static_cast<int>(t1.p.size()), static_cast<int>(t1.q.size())};
            std::multiset<int> grds{graded_degree(g, a), graded_degree(g, b)};
            CHECK(lens == grds);
            CHECK(q.arrow(t1.p.front()).source == t1.edge);
            CHECK(q.arrow(t1.p.back()).target == t1.edge);
            CHECK(q.arrow(t1.q.front()).source == t1.edge);
            CHECK(q.arrow(t1.q.back()).target == t1.edge);
        }

        auto ideal = ideal_variant(g, q, rels, IdealVariant::I2);
        std::set<EdgeId> unb;
        for (const auto& s : unbalanced_edges(g)) unb.insert(s.edge);
        CHECK(ideal.W == unb);
        for (const auto& [e, r] : ideal.P) {
            CHECK(r.size() == std::max(graded_degree(g, edge_endpoints(g, e).first),
                                       graded_degree(g, edge_endpoints(g, e).second)));
        }
    }
}

TEST_CASE("r_i is a nonzero path of I2 and a forbidden path of I1") {
    for (const auto& g : {fixtures::g_t2(), fixtures::g_t7(), fixtures::g_c4(), fixtures::g_hh()}) {
        auto q = build_quiver(g);
        auto rels = relations(g, q);
        auto i1 = ideal_variant(g, q, rels, IdealVariant::I1);
        auto i2 = ideal_variant(g, q, rels, IdealVariant::I2);
        StringAlgebra a1(q, i1), a2(q, i2);
        for (const auto& [e, r] : i2.P) {
            std::vector<Letter> w;
            for (const auto& id : r) w.push_back(fixtures::L(id));
            CHECK(a2.is_string(w));
            CHECK_FALSE(a1.is_string(w));
        }
    }
}
