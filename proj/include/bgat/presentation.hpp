#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bgat/graph.hpp"

namespace bgat {

using ArrowId = std::string;

struct Arrow {
    ArrowId id;
    EdgeId source = 0;
    EdgeId target = 0;
    VertexId at_vertex; // graph vertex whose cyclic order produced the arrow
    int position = 0;   // index in that cyclic order
};

// Quiver of the Brauer graph algebra: one vertex per graph edge, one arrow
// per half-edge occurrence at every non-truncated graph vertex.
struct Quiver {
    std::vector<EdgeId> vertices; // sorted
    std::vector<Arrow> arrows;    // sorted by (at_vertex, position)

    const Arrow& arrow(const ArrowId& id) const;
    bool has_arrow(const ArrowId& id) const;
};

// Path stored in traversal order: front() is the first arrow applied (the
// rightmost letter in the usual right-to-left notation).
using PathWord = std::vector<ArrowId>;

struct Type1Relation {
    EdgeId edge = 0;
    PathWord p, q; // cycle powers based at `edge`, one per non-truncated endpoint
};

struct Relations {
    std::vector<Type1Relation> type1;
    std::vector<PathWord> type2; // a C_v(a)^m(v) for every arrow a
    std::vector<PathWord> type3; // composable length-2 paths off every special cycle
};

enum class IdealVariant { I, Igr, I1, I2 };

struct Binomial {
    EdgeId edge = 0;
    PathWord p, q; // p is the shorter path (ties broken lexicographically)
};

struct IdealData {
    IdealVariant variant = IdealVariant::I;
    std::vector<Binomial> binomials;  // empty for I1 / I2
    std::vector<PathWord> monomials;  // deduplicated, sorted by (length, lex)
    std::set<EdgeId> W;               // unbalanced edges carrying a type-1 relation
    std::map<EdgeId, PathWord> P;     // edge -> r_i, the strictly longer cycle power
};

Quiver build_quiver(const BrauerGraph& g);

// Full directed cycle at v beginning with `start`; length val(v).
// Throws NotSpecialCycleArrow unless start is tagged at v.
PathWord special_cycle(const BrauerGraph& g, const Quiver& q, const VertexId& v, const ArrowId& start);

Relations relations(const BrauerGraph& g, const Quiver& q);

IdealData ideal_variant(const BrauerGraph& g, const Quiver& q, const Relations& rels, IdealVariant variant);

// True iff all vertices share one graded degree (equivalently W is empty).
bool iso_A_grA(const BrauerGraph& g);

std::string variant_name(IdealVariant v);
IdealVariant variant_from_name(const std::string& name);

// Right-to-left rendering, last arrow of the path printed first.
std::string path_to_string(const PathWord& p);

} // namespace bgat
