#pragma once

#include <string>
#include <vector>

#include "bgat/graph.hpp"

namespace bgat {

enum class ReprKind { Finite, Domestic, NotPolynomialGrowth };

struct ReprType {
    ReprKind kind = ReprKind::Finite;
    int n = 0; // 1 or 2 when kind == Domestic

    friend bool operator==(const ReprType& a, const ReprType& b) {
        return a.kind == b.kind && (a.kind != ReprKind::Domestic || a.n == b.n);
    }
    friend bool operator!=(const ReprType& a, const ReprType& b) { return !(a == b); }
};

std::string repr_to_string(const ReprType& r); // "Finite", "Domestic(1)", "NotPolynomialGrowth"

struct ClassificationReport {
    std::string algebra; // "A" or "grA"
    ReprType verdict;
    std::string case_tag; // which clause fired
    std::vector<std::pair<std::string, std::string>> witnesses;
};

// Representation type of the Brauer graph algebra A itself.
ClassificationReport classify_A(const BrauerGraph& g);

// Representation type of gr(A), decided from the graph alone.
ClassificationReport classify_grA(const BrauerGraph& g);

// True iff the two verdicts respect the degeneration order
// (A never sits strictly above gr(A)).
bool consistency_A_vs_grA(const BrauerGraph& g);

} // namespace bgat
