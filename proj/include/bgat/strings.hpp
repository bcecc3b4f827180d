#pragma once

#include <set>
#include <string>
#include <vector>

#include "bgat/presentation.hpp"

namespace bgat {

// One step of a string: an arrow or its formal inverse.
struct Letter {
    ArrowId arrow;
    bool inverse = false;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.arrow == b.arrow && a.inverse == b.inverse;
    }
    friend bool operator<(const Letter& a, const Letter& b) {
        if (a.arrow != b.arrow) return a.arrow < b.arrow;
        return a.inverse < b.inverse; // direct before inverse
    }
};

// Letters in traversal order: front() is applied first (rightmost in the
// paper's right-to-left notation). An empty word is the trivial string at
// `base`; for non-empty words `base` is the source vertex.
struct StringWord {
    std::vector<Letter> letters;
    EdgeId base = 0;
    bool canonical = false;

    friend bool operator==(const StringWord& a, const StringWord& b) {
        return a.letters == b.letters && a.base == b.base;
    }
    friend bool operator<(const StringWord& a, const StringWord& b) {
        if (a.letters != b.letters) return a.letters < b.letters;
        return a.base < b.base;
    }
};

struct BandWord {
    std::vector<Letter> letters;
    bool canonical = false;

    friend bool operator==(const BandWord& a, const BandWord& b) { return a.letters == b.letters; }
    friend bool operator<(const BandWord& a, const BandWord& b) { return a.letters < b.letters; }
};

struct BandFamilyMember {
    int k = 0;
    std::vector<Letter> word; // b2^k b1
    bool band = false;
};

struct BandFamilyResult {
    bool strict_shape = false; // literal overlap hypothesis matched
    int overlap_len = 0;       // length of the shared directed prefix when strict
    std::vector<BandFamilyMember> members;
};

std::vector<Letter> inverse_word(std::vector<Letter> w);
std::vector<Letter> rotate_word(const std::vector<Letter>& w, int start);
std::string word_to_string(const std::vector<Letter>& w);
std::string word_to_string(const StringWord& w);

// Word engine over a monomial string-algebra presentation. Immutable; all
// queries are const and deterministic.
class StringAlgebra {
public:
    static constexpr long kDefaultBudget = 10'000'000;

    // From a Brauer-graph ideal; only the monomial variants are admissible.
    StringAlgebra(const Quiver& q, const IdealData& ideal);
    // Standalone presentation (quiver vertices, arrows, forbidden paths).
    StringAlgebra(const std::vector<EdgeId>& vertices, const std::vector<Arrow>& arrows,
                  const std::vector<PathWord>& forbidden);

    const std::vector<EdgeId>& vertices() const { return vertex_ids_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<PathWord>& forbidden_paths() const { return forbidden_; }
    int max_forbidden_length() const { return maxforb_; }

    EdgeId source(const Letter& l) const;
    EdgeId target(const Letter& l) const;

    bool is_string(const std::vector<Letter>& w) const;
    bool is_string(const StringWord& w) const;
    bool is_band(const std::vector<Letter>& w) const;

    StringWord canonical_string(const StringWord& w) const;
    BandWord canonical_band(const std::vector<Letter>& w) const; // throws NotABand

    // All ~-classes of strings of length <= max_len, trivial strings included.
    std::set<StringWord> enumerate_strings(int max_len, long node_budget = kDefaultBudget) const;
    // All ~_A-classes of bands of length <= max_len.
    std::set<BandWord> enumerate_bands(int max_len, long node_budget = kDefaultBudget) const;
    // Number of ~-classes of strings of length <= max_len containing the
    // path `sub` or its inverse as a consecutive subword.
    long strings_containing(const PathWord& sub, int max_len, long node_budget = kDefaultBudget) const;

    // Builds b2^k b1 for k = 1..k_max and verifies each with is_band.
    // Throws ShapeMismatch when the pair has no usable overlap.
    BandFamilyResult band_power_family(const std::vector<Letter>& b1, const std::vector<Letter>& b2,
                                       int k_max) const;

private:
    struct Matcher {
        std::vector<std::vector<int>> next; // state x symbol
        std::vector<char> bad;
        void build(const std::vector<std::vector<int>>& patterns, int n_symbols);
        int step(int state, int symbol) const { return next[state][symbol]; }
    };

    struct ScanState {
        int dir = -1; // 0 direct run, 1 inverse run
        int state = 0;
    };

    void init(const std::vector<EdgeId>& vertices, const std::vector<Arrow>& arrows,
              const std::vector<PathWord>& forbidden);

    int arrow_index(const ArrowId& id) const;
    int vertex_index(EdgeId v) const;
    std::vector<int> encode(const std::vector<Letter>& w) const;
    std::vector<Letter> decode(const std::vector<int>& w) const;

    int lsrc(int code) const { return (code & 1) ? atgt_[code >> 1] : asrc_[code >> 1]; }
    int ltgt(int code) const { return (code & 1) ? asrc_[code >> 1] : atgt_[code >> 1]; }
    static int linv(int code) { return code ^ 1; }

    bool step_scan(ScanState& st, int prev, int code) const; // prev = -1 at word start
    bool scan_codes(const std::vector<int>& w) const;
    bool is_band_codes(const std::vector<int>& w) const;
    static bool primitive(const std::vector<int>& w);
    static std::vector<int> least_rotation(const std::vector<int>& w);
    std::vector<int> inverse_codes(std::vector<int> w) const;
    std::vector<int> canonical_codes(const std::vector<int>& w) const;      // min(w, w^-1)
    std::vector<int> canonical_band_codes(const std::vector<int>& w) const; // min over rotations of both
    int match_shape(const std::vector<int>& x, const std::vector<int>& y) const;

    std::vector<ArrowId> arrow_ids_; // sorted; index = code >> 1
    std::vector<Arrow> arrows_;      // parallel to arrow_ids_
    std::vector<int> asrc_, atgt_;   // per arrow index, internal vertex index
    std::vector<EdgeId> vertex_ids_; // sorted
    std::vector<std::vector<int>> out_; // per internal vertex: letter codes starting there
    std::vector<PathWord> forbidden_;
    Matcher fwd_, rev_;
    int maxforb_ = 0;
};

} // namespace bgat
