#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bgat/errors.hpp"

namespace bgat {

using VertexId = std::string;
using EdgeId = int;
using HalfEdgeId = int;

struct VertexData {
    int multiplicity = 1;
    std::vector<HalfEdgeId> order; // cyclic order of incident half-edges
};

// Ribbon graph: every vertex carries a multiplicity and a cyclic order of its
// half-edges; every edge pairs two half-edges. A loop lists both of its
// half-edges at the same vertex and counts twice toward the valency.
struct BrauerGraph {
    std::map<VertexId, VertexData> vertices;
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges;
    std::optional<VertexId> exceptional;
};

struct ValidationReport {
    bool ok = true;
    std::string error;  // DuplicateId | DanglingHalfEdge | Disconnected |
                        // DegenerateBothTruncated | ExceptionalMismatch | Empty
    std::string detail; // offending id / explanation
};

// Alternating vertex/edge sequence with pairwise distinct vertices.
// length() is the number of edges. A single-vertex walk has length 0.
struct Walk {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    int length() const { return static_cast<int>(edges.size()); }
};

struct BranchSide {
    std::set<VertexId> vertices;
    std::set<EdgeId> edges;
};

struct OrientedSplit {
    VertexId v_s, v_l; // endpoints, grd(v_s) < grd(v_l)
    BranchSide branch_s, branch_l;
    int n_i = 0; // number of edges in branch_s
};

struct BranchSplit {
    EdgeId edge = 0;
    BranchSide side_u, side_v; // sides of the two half-edges, in listed order
    bool same_component = false;
    std::optional<OrientedSplit> oriented; // present iff the edge is unbalanced
};

struct StarCheck {
    bool holds = true;
    int failed_clause = 0; // 1, 2 or 3 when holds == false
    std::string witness;
};

struct TreeInvariants {
    struct UnbalancedEdge {
        EdgeId edge = 0;
        VertexId v_s, v_l;
        int n_i = 0;
    };
    std::vector<UnbalancedEdge> unbalanced_edges; // sorted by edge id
    std::set<std::pair<EdgeId, EdgeId>> pairs;    // unordered pairs, stored (min,max)
    int kappa0 = 0;
    int kappa1 = 0;
    int m0 = 1;
    VertexId v0; // exceptional vertex used
};

struct CycleAnalysis {
    enum class Kind { Tree, UniqueCycle, MultiCycle };
    Kind kind = Kind::Tree;
    int rank = 0;   // |E| - |V| + 1
    int length = 0; // cycle length when kind == UniqueCycle (loop = 1, double edge = 2)
    bool odd = false;
    std::set<VertexId> cycle_vertices;
    std::set<EdgeId> cycle_edges;
};

ValidationReport validate(const BrauerGraph& g);

// Valency of a vertex; a loop counts twice.
int valency(const BrauerGraph& g, const VertexId& v);

// m(v)*val(v) when that product exceeds 1, otherwise the unique neighbour's
// product. Throws DegenerateBothTruncated when both are 1.
int graded_degree(const BrauerGraph& g, const VertexId& v);

BranchSplit split_at_edge(const BrauerGraph& g, EdgeId i);

// One oriented split per edge whose endpoint graded degrees differ.
std::vector<BranchSplit> unbalanced_edges(const BrauerGraph& g);

// The unique walk from u to v. Throws NotATree when a second walk exists.
Walk unique_walk(const BrauerGraph& g, const VertexId& u, const VertexId& v);

bool is_degree_decreasing(const BrauerGraph& g, const Walk& w);

// Checks the three branch-side clauses at an unbalanced edge and reports the
// first failing one with a witness. Throws NotUnbalanced otherwise.
StarCheck star_condition(const BrauerGraph& g, EdgeId i);

// kappa0, kappa1, m0 and the unbalanced-pair set of a Brauer tree.
// Throws NotBrauerTree unless g is a tree with at most one vertex of
// multiplicity > 1.
TreeInvariants tree_invariants(const BrauerGraph& g);

CycleAnalysis cycle_analysis(const BrauerGraph& g);

// --- shared lookups used by the presentation/classify layers ---

VertexId vertex_of_half(const BrauerGraph& g, HalfEdgeId h);

// Endpoints in the order the edge lists its half-edges (equal for a loop).
std::pair<VertexId, VertexId> edge_endpoints(const BrauerGraph& g, EdgeId i);

// Number of edges on the unique walk between two vertices of a tree.
int walk_distance(const BrauerGraph& g, const VertexId& u, const VertexId& v);

// True iff every walk starting at v is degree decreasing; on failure an
// offending walk is written to *failing when non-null.
bool all_walks_decreasing_from(const BrauerGraph& g, const VertexId& v, Walk* failing = nullptr);

std::string walk_to_string(const Walk& w);

} // namespace bgat
