#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bgat/classify.hpp"
#include "bgat/strings.hpp"

namespace bgat {

struct OracleVerdict {
    std::string check;
    std::string predicted;
    std::string observed;
    int max_len = 0;
    bool agree = false;
    std::string notes;
};

struct RandomGraphSpec {
    int max_edges = 8;
    int max_multiplicity = 3;
    enum class Family { BrauerTree, TwoDoubleTree, UniqueCycle, Any };
    Family family = Family::BrauerTree;
    std::uint64_t seed = 1;
};

RandomGraphSpec::Family family_from_name(const std::string& name);
std::string family_name(RandomGraphSpec::Family f);

// Always returns a graph passing validate().
BrauerGraph random_graph(const RandomGraphSpec& spec, std::mt19937_64& rng);

// The I2 word engine of a graph.
StringAlgebra string_algebra_of(const BrauerGraph& g, IdealVariant variant = IdealVariant::I2);

// Default enumeration length: 4 x (number of arrows) x (max graded degree).
int default_band_max_len(const BrauerGraph& g);

// Probe length for the census law: grow until the first band appears (or the
// cap is reached), then add the margin. Heuristic, see notes in the report.
int suggest_census_len(const BrauerGraph& g, const StringAlgebra& alg, int cap = 40, int margin = 12,
                       long node_budget = StringAlgebra::kDefaultBudget);

// Band census at max_len and 2*max_len against the classifier's prediction.
OracleVerdict band_census_check(const BrauerGraph& g, int max_len,
                                long node_budget = StringAlgebra::kDefaultBudget);

// Strings containing r_i against (n_i+1)^2; requires the star-condition at i
// (throws StarConditionFails otherwise). max_len <= 0 picks the bound len(r_i) + 2 n_i + 2.
OracleVerdict r_string_count_check(const BrauerGraph& g, EdgeId i, int max_len = 0,
                                   long node_budget = StringAlgebra::kDefaultBudget);

// Band sets of I1 and I2 must coincide when the star-condition holds at every
// unbalanced edge (throws StarConditionFails otherwise).
OracleVerdict band_preservation_check(const BrauerGraph& g, int max_len = 0,
                                      long node_budget = StringAlgebra::kDefaultBudget);

struct WitnessResult {
    std::vector<Letter> b1, b2;
    bool strict_shape = false;
    BandFamilyResult family;
};

// Searches the band census for a pair supporting the b2^k b1 family.
// Precondition: classify_grA(g) is NotPolynomialGrowth.
std::optional<WitnessResult> infinite_band_witness(const BrauerGraph& g, int max_len,
                                                   long node_budget = StringAlgebra::kDefaultBudget);

struct SuiteFailure {
    std::string check;
    std::string detail;
    BrauerGraph graph;
};

struct SuiteReport {
    int trials = 0;
    long checks = 0;
    std::vector<SuiteFailure> failures; // capped at a handful
    bool ok() const { return failures.empty(); }
};

// Random-graph property suite across the graph/presentation/strings/classify
// invariants applicable to the chosen family.
SuiteReport consistency_suite(const RandomGraphSpec& spec, int trials);

} // namespace bgat
