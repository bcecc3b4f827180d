#pragma once

// Corpus graphs and presentations used across the test suites. Edge ids and
// cyclic orders reproduce the worked examples; arrow names below refer to the
// generated `a<vertex>_<position>` ids.

#include "bgat/io.hpp"

namespace fixtures {

using namespace bgat;

// Brauer tree, m(v0)=2: v0 -1- c(-2- x, -3- u), u -4- leaf.
// grd: v0=2, c=3, x=3, u=2, leaf=2. kappa0=1, kappa1=0, gr(A) 1-domestic.
// Arrows: av0_0:1->1, ac_0:1->2, ac_1:2->3, ac_2:3->1, au_0:3->4, au_1:4->3.
inline BrauerGraph g_t2() {
    BrauerGraph g;
    g.vertices["v0"] = {2, {10}};
    g.vertices["c"] = {1, {11, 20, 30}};
    g.vertices["x"] = {1, {21}};
    g.vertices["u"] = {1, {31, 40}};
    g.vertices["leaf"] = {1, {41}};
    g.edges[1] = {10, 11};
    g.edges[2] = {20, 21};
    g.edges[3] = {30, 31};
    g.edges[4] = {40, 41};
    g.exceptional = "v0";
    return g;
}

// Brauer star, m(v0)=3: v0 -1- c, c -2,3,4- leaves. s = 2, not of polynomial growth.
inline BrauerGraph g_star3() {
    BrauerGraph g;
    g.vertices["v0"] = {3, {10}};
    g.vertices["c"] = {1, {11, 20, 30, 40}};
    g.vertices["l2"] = {1, {21}};
    g.vertices["l3"] = {1, {31}};
    g.vertices["l4"] = {1, {41}};
    g.edges[1] = {10, 11};
    g.edges[2] = {20, 21};
    g.edges[3] = {30, 31};
    g.edges[4] = {40, 41};
    g.exceptional = "v0";
    return g;
}

// 7-edge Brauer tree with m(v0)=2 and two unbalanced edges toward v0.
// r: edges (1,2,3); s: edges (1,5,6,7); u: edges (3,4); v0 on edge 4.
// Arrows: ar_0:1->2, ar_1:2->3, ar_2:3->1, as_0:1->5, as_1:5->6, as_2:6->7,
// as_3:7->1, au_0:3->4, au_1:4->3, av0_0:4->4.
inline BrauerGraph g_t7() {
    BrauerGraph g;
    g.vertices["r"] = {1, {10, 20, 30}};
    g.vertices["s"] = {1, {11, 50, 60, 70}};
    g.vertices["u"] = {1, {31, 40}};
    g.vertices["v0"] = {2, {41}};
    g.vertices["p"] = {1, {21}};
    g.vertices["w"] = {1, {51}};
    g.vertices["t"] = {1, {61}};
    g.vertices["q"] = {1, {71}};
    g.edges[1] = {10, 11};
    g.edges[2] = {20, 21};
    g.edges[3] = {30, 31};
    g.edges[4] = {40, 41};
    g.edges[5] = {50, 51};
    g.edges[6] = {60, 61};
    g.edges[7] = {70, 71};
    g.exceptional = "v0";
    return g;
}

// Triangle (edges 2,3,4) with one pendant edge 1, multiplicity one everywhere.
// A is 1-domestic (odd cycle); gr(A) is not of polynomial growth.
// Arrows: ay_0:1->2, ay_1:2->4, ay_2:4->1, ax_0:2->3, ax_1:3->2,
// aw_0:4->3, aw_1:3->4.
inline BrauerGraph g_c4() {
    BrauerGraph g;
    g.vertices["y"] = {1, {10, 21, 40}};
    g.vertices["x"] = {1, {20, 30}};
    g.vertices["w"] = {1, {41, 31}};
    g.vertices["z"] = {1, {11}};
    g.edges[1] = {10, 11};
    g.edges[2] = {20, 21};
    g.edges[3] = {30, 31};
    g.edges[4] = {40, 41};
    return g;
}

// Two valency-3 hubs joined through a valency-2 middle vertex, m = 1:
// h1 -1- mid -2- h2, pendants 3,4 at h1 and 5,6 at h2. kappa1 = 1.
inline BrauerGraph g_hh() {
    BrauerGraph g;
    g.vertices["h1"] = {1, {10, 30, 40}};
    g.vertices["mid"] = {1, {11, 20}};
    g.vertices["h2"] = {1, {21, 50, 60}};
    g.vertices["a"] = {1, {31}};
    g.vertices["b"] = {1, {41}};
    g.vertices["c"] = {1, {51}};
    g.vertices["d"] = {1, {61}};
    g.edges[1] = {10, 11};
    g.edges[2] = {20, 21};
    g.edges[3] = {30, 31};
    g.edges[4] = {40, 41};
    g.edges[5] = {50, 51};
    g.edges[6] = {60, 61};
    return g;
}

// Tree with exactly two multiplicity-2 vertices w0, w1, both of graded
// degree 4; the unbalanced edge 2 satisfies the star-condition.
// w0(m2) -1- w1(m2) beside it; w0 -2- a -3- t, w1 -4- b.
inline BrauerGraph g_two_m2() {
    BrauerGraph g;
    g.vertices["w0"] = {2, {10, 20}};
    g.vertices["w1"] = {2, {11, 40}};
    g.vertices["a"] = {1, {21, 30}};
    g.vertices["t"] = {1, {31}};
    g.vertices["b"] = {1, {41}};
    g.edges[1] = {10, 11};
    g.edges[2] = {20, 21};
    g.edges[3] = {30, 31};
    g.edges[4] = {40, 41};
    return g;
}

// Plain square cycle, m = 1: everything balanced, gr(A) = A, 2-domestic.
inline BrauerGraph g_square() {
    BrauerGraph g;
    g.vertices["a"] = {1, {10, 41}};
    g.vertices["b"] = {1, {11, 20}};
    g.vertices["c"] = {1, {21, 30}};
    g.vertices["d"] = {1, {31, 40}};
    g.edges[1] = {10, 11};
    g.edges[2] = {20, 21};
    g.edges[3] = {30, 31};
    g.edges[4] = {40, 41};
    return g;
}

// Balanced Brauer star: center with three leaves, m = 1. Finite type, no bands.
inline BrauerGraph g_star_balanced() {
    BrauerGraph g;
    g.vertices["c"] = {1, {10, 20, 30}};
    g.vertices["l1"] = {1, {11}};
    g.vertices["l2"] = {1, {21}};
    g.vertices["l3"] = {1, {31}};
    g.edges[1] = {10, 11};
    g.edges[2] = {20, 21};
    g.edges[3] = {30, 31};
    return g;
}

// Kronecker algebra: two arrows 1 -> 2, no relations.
inline Presentation kronecker() {
    Presentation p;
    p.vertices = {1, 2};
    p.arrows = {{"alpha", 1, 2, "", 0}, {"beta", 1, 2, "", 0}};
    return p;
}

// String algebra of the two-loop local algebra: both squares and both mixed
// products forbidden.
inline Presentation twoloop() {
    Presentation p;
    p.vertices = {1};
    p.arrows = {{"alpha", 1, 1, "", 0}, {"beta", 1, 1, "", 0}};
    p.forbidden = {{"alpha", "alpha"}, {"alpha", "beta"}, {"beta", "alpha"}, {"beta", "beta"}};
    return p;
}

inline Letter L(const ArrowId& a) { return {a, false}; }
inline Letter Li(const ArrowId& a) { return {a, true}; }

inline std::string corpus_path(const std::string& name) {
    return std::string(BGAT_SOURCE_DIR) + "/corpus/" + name;
}

} // namespace fixtures
