#include "bgat/strings.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace bgat {

// ---------- free helpers ----------

std::vector<Letter> inverse_word(std::vector<Letter> w) {
    std::reverse(w.begin(), w.end());
    for (auto& l : w) l.inverse = !l.inverse;
    return w;
}

std::vector<Letter> rotate_word(const std::vector<Letter>& w, int start) {
    std::vector<Letter> out;
    int n = static_cast<int>(w.size());
    out.reserve(n);
    for (int k = 0; k < n; ++k) out.push_back(w[(start + k) % n]);
    return out;
}

std::string word_to_string(const std::vector<Letter>& w) {
    std::ostringstream os;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it != w.rbegin()) os << " ";
        os << it->arrow;
        if (it->inverse) os << "^-1";
    }
    return os.str();
}

std::string word_to_string(const StringWord& w) {
    if (w.letters.empty()) return "1_" + std::to_string(w.base);
    return word_to_string(w.letters);
}

// ---------- Aho-Corasick over arrow indices ----------

void StringAlgebra::Matcher::build(const std::vector<std::vector<int>>& patterns, int n_symbols) {
    // trie
    std::vector<std::vector<int>> go(1, std::vector<int>(n_symbols, -1));
    bad.assign(1, 0);
    for (const auto& p : patterns) {
        if (p.empty()) continue;
        int s = 0;
        for (int c : p) {
            if (go[s][c] == -1) {
                go[s][c] = static_cast<int>(go.size());
                go.emplace_back(n_symbols, -1);
                bad.push_back(0);
            }
            s = go[s][c];
        }
        bad[s] = 1;
    }
    // breadth-first failure links, collapsed into a full transition table
    std::vector<int> fail(go.size(), 0);
    std::deque<int> queue;
    for (int c = 0; c < n_symbols; ++c) {
        if (go[0][c] == -1) {
            go[0][c] = 0;
        } else {
            fail[go[0][c]] = 0;
            queue.push_back(go[0][c]);
        }
    }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        bad[s] = bad[s] || bad[fail[s]];
        for (int c = 0; c < n_symbols; ++c) {
            int t = go[s][c];
            if (t == -1) {
                go[s][c] = go[fail[s]][c];
            } else {
                fail[t] = go[fail[s]][c];
                queue.push_back(t);
            }
        }
    }
    next = std::move(go);
}

// ---------- construction ----------

StringAlgebra::StringAlgebra(const Quiver& q, const IdealData& ideal) {
    if (!ideal.binomials.empty() || (ideal.variant != IdealVariant::I1 && ideal.variant != IdealVariant::I2))
        throw Error("NotMonomial", "string combinatorics requires a monomial ideal variant (I1 or I2)");
    init(q.vertices, q.arrows, ideal.monomials);
}

StringAlgebra::StringAlgebra(const std::vector<EdgeId>& vertices, const std::vector<Arrow>& arrows,
                             const std::vector<PathWord>& forbidden) {
    init(vertices, arrows, forbidden);
}

void StringAlgebra::init(const std::vector<EdgeId>& vertices, const std::vector<Arrow>& arrows,
                         const std::vector<PathWord>& forbidden) {
    vertex_ids_ = vertices;
    std::sort(vertex_ids_.begin(), vertex_ids_.end());
    vertex_ids_.erase(std::unique(vertex_ids_.begin(), vertex_ids_.end()), vertex_ids_.end());

    arrows_ = arrows;
    std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    for (size_t i = 1; i < arrows_.size(); ++i)
        if (arrows_[i].id == arrows_[i - 1].id)
            throw Error("DuplicateId", "arrow '" + arrows_[i].id + "' defined twice");
    arrow_ids_.clear();
    for (const auto& a : arrows_) arrow_ids_.push_back(a.id);

    asrc_.clear();
    atgt_.clear();
    for (const auto& a : arrows_) {
        asrc_.push_back(vertex_index(a.source));
        atgt_.push_back(vertex_index(a.target));
    }

    out_.assign(vertex_ids_.size(), {});
    for (int idx = 0; idx < static_cast<int>(arrows_.size()); ++idx) {
        out_[asrc_[idx]].push_back(2 * idx);     // direct letter
        out_[atgt_[idx]].push_back(2 * idx + 1); // inverse letter
    }
    for (auto& lst : out_) std::sort(lst.begin(), lst.end());

    forbidden_ = forbidden;
    std::vector<std::vector<int>> pats, rpats;
    for (const auto& p : forbidden_) {
        std::vector<int> enc;
        for (const auto& id : p) enc.push_back(arrow_index(id));
        maxforb_ = std::max(maxforb_, static_cast<int>(enc.size()));
        pats.push_back(enc);
        std::reverse(enc.begin(), enc.end());
        rpats.push_back(enc);
    }
    fwd_.build(pats, static_cast<int>(arrows_.size()));
    rev_.build(rpats, static_cast<int>(arrows_.size()));
}

int StringAlgebra::arrow_index(const ArrowId& id) const {
    auto it = std::lower_bound(arrow_ids_.begin(), arrow_ids_.end(), id);
    if (it == arrow_ids_.end() || *it != id) throw Error("UnknownArrow", "no arrow '" + id + "'");
    return static_cast<int>(it - arrow_ids_.begin());
}

int StringAlgebra::vertex_index(EdgeId v) const {
    auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), v);
    if (it == vertex_ids_.end() || *it != v)
        throw Error("UnknownVertex", "no quiver vertex " + std::to_string(v));
    return static_cast<int>(it - vertex_ids_.begin());
}

std::vector<int> StringAlgebra::encode(const std::vector<Letter>& w) const {
    std::vector<int> out;
    out.reserve(w.size());
    for (const auto& l : w) out.push_back(2 * arrow_index(l.arrow) + (l.inverse ? 1 : 0));
    return out;
}

std::vector<Letter> StringAlgebra::decode(const std::vector<int>& w) const {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (int c : w) out.push_back({arrow_ids_[c >> 1], (c & 1) != 0});
    return out;
}

EdgeId StringAlgebra::source(const Letter& l) const {
    int idx = arrow_index(l.arrow);
    return l.inverse ? arrows_[idx].target : arrows_[idx].source;
}

EdgeId StringAlgebra::target(const Letter& l) const {
    int idx = arrow_index(l.arrow);
    return l.inverse ? arrows_[idx].source : arrows_[idx].target;
}

// ---------- string and band checks ----------

bool StringAlgebra::step_scan(ScanState& st, int prev, int code) const {
    if (prev >= 0) {
        if (ltgt(prev) != lsrc(code)) return false; // not composable
        if (code == linv(prev)) return false;       // not reduced
    }
    int d = code & 1;
    if (d != st.dir) {
        st.dir = d;
        st.state = 0;
    }
    const Matcher& m = (d == 0) ? fwd_ : rev_;
    st.state = m.step(st.state, code >> 1);
    return !m.bad[st.state];
}

bool StringAlgebra::scan_codes(const std::vector<int>& w) const {
    ScanState st;
    int prev = -1;
    for (int c : w) {
        if (!step_scan(st, prev, c)) return false;
        prev = c;
    }
    return true;
}

bool StringAlgebra::is_string(const std::vector<Letter>& w) const { return scan_codes(encode(w)); }

bool StringAlgebra::is_string(const StringWord& w) const {
    if (w.letters.empty()) {
        vertex_index(w.base); // must exist
        return true;
    }
    return is_string(w.letters);
}

bool StringAlgebra::primitive(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool rep = true;
        for (int i = d; i < n && rep; ++i) rep = (w[i] == w[i - d]);
        if (rep) return false;
    }
    return true;
}

bool StringAlgebra::is_band_codes(const std::vector<int>& w) const {
    int n = static_cast<int>(w.size());
    if (n == 0) return false;
    if (lsrc(w.front()) != ltgt(w.back())) return false;
    bool has_direct = false, has_inverse = false;
    for (int c : w) ((c & 1) ? has_inverse : has_direct) = true;
    if (!has_direct || !has_inverse) return false;
    if (!scan_codes(w)) return false;
    if (!primitive(w)) return false;
    // power check: every window of forbidden length across any power is
    // already inspected in w^m for this m
    int m = (maxforb_ + n + n - 1) / n + 1;
    std::vector<int> rep;
    rep.reserve(static_cast<size_t>(n) * m);
    for (int k = 0; k < m; ++k) rep.insert(rep.end(), w.begin(), w.end());
    return scan_codes(rep);
}

bool StringAlgebra::is_band(const std::vector<Letter>& w) const { return is_band_codes(encode(w)); }

// ---------- canonical forms ----------

std::vector<int> StringAlgebra::inverse_codes(std::vector<int> w) const {
    std::reverse(w.begin(), w.end());
    for (auto& c : w) c = linv(c);
    return w;
}

std::vector<int> StringAlgebra::canonical_codes(const std::vector<int>& w) const {
    auto iw = inverse_codes(w);
    return std::min(w, iw);
}

std::vector<int> StringAlgebra::least_rotation(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    if (n <= 1) return w;
    std::vector<int> s(w);
    s.insert(s.end(), w.begin(), w.end());
    std::vector<int> f(s.size(), -1);
    int k = 0;
    for (int j = 1; j < static_cast<int>(s.size()); ++j) {
        int sj = s[j];
        int i = f[j - k - 1];
        while (i != -1 && sj != s[k + i + 1]) {
            if (sj < s[k + i + 1]) k = j - i - 1;
            i = f[i];
        }
        if (sj != s[k + i + 1]) {
            if (sj < s[k]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    std::vector<int> out;
    out.reserve(n);
    for (int t = 0; t < n; ++t) out.push_back(w[(k + t) % n]);
    return out;
}

std::vector<int> StringAlgebra::canonical_band_codes(const std::vector<int>& w) const {
    return std::min(least_rotation(w), least_rotation(inverse_codes(w)));
}

StringWord StringAlgebra::canonical_string(const StringWord& w) const {
    if (w.letters.empty()) {
        StringWord out = w;
        out.canonical = true;
        return out;
    }
    auto codes = canonical_codes(encode(w.letters));
    StringWord out;
    out.letters = decode(codes);
    out.base = vertex_ids_[lsrc(codes.front())];
    out.canonical = true;
    return out;
}

BandWord StringAlgebra::canonical_band(const std::vector<Letter>& w) const {
    auto codes = encode(w);
    if (!is_band_codes(codes)) throw Error("NotABand", "word " + word_to_string(w) + " is not a band");
    BandWord out;
    out.letters = decode(canonical_band_codes(codes));
    out.canonical = true;
    return out;
}

// ---------- enumeration ----------

namespace {
struct Budget {
    long left;
    void spend() {
        if (--left < 0) throw Error("BudgetExceeded", "enumeration node budget exhausted");
    }
};
} // namespace

std::set<StringWord> StringAlgebra::enumerate_strings(int max_len, long node_budget) const {
    std::set<StringWord> result;
    for (EdgeId v : vertex_ids_) {
        StringWord triv;
        triv.base = v;
        triv.canonical = true;
        result.insert(std::move(triv));
    }
    if (max_len <= 0) return result;

    Budget budget{node_budget};
    std::set<std::vector<int>> classes;
    std::vector<int> word;

    std::function<void(ScanState)> dfs = [&](ScanState st) {
        budget.spend();
        classes.insert(canonical_codes(word));
        if (static_cast<int>(word.size()) >= max_len) return;
        int prev = word.back();
        for (int c : out_[ltgt(prev)]) {
            ScanState st2 = st;
            if (!step_scan(st2, prev, c)) continue;
            word.push_back(c);
            dfs(st2);
            word.pop_back();
        }
    };

    int n_letters = 2 * static_cast<int>(arrows_.size());
    for (int c = 0; c < n_letters; ++c) {
        ScanState st;
        if (!step_scan(st, -1, c)) continue;
        word.assign(1, c);
        dfs(st);
    }

    for (const auto& codes : classes) {
        StringWord sw;
        sw.letters = decode(codes);
        sw.base = vertex_ids_[lsrc(codes.front())];
        sw.canonical = true;
        result.insert(std::move(sw));
    }
    return result;
}

std::set<BandWord> StringAlgebra::enumerate_bands(int max_len, long node_budget) const {
    std::set<BandWord> result;
    if (max_len < 2) return result;

    Budget budget{node_budget};
    std::set<std::vector<int>> classes;
    std::vector<int> word;

    std::function<void(ScanState, bool, bool)> dfs = [&](ScanState st, bool has_dir, bool has_inv) {
        budget.spend();
        if (word.size() >= 2 && has_dir && has_inv && lsrc(word.front()) == ltgt(word.back()) &&
            is_band_codes(word))
            classes.insert(canonical_band_codes(word));
        if (static_cast<int>(word.size()) >= max_len) return;
        int prev = word.back();
        for (int c : out_[ltgt(prev)]) {
            ScanState st2 = st;
            if (!step_scan(st2, prev, c)) continue;
            word.push_back(c);
            dfs(st2, has_dir || !(c & 1), has_inv || (c & 1));
            word.pop_back();
        }
    };

    int n_letters = 2 * static_cast<int>(arrows_.size());
    for (int c = 0; c < n_letters; ++c) {
        ScanState st;
        if (!step_scan(st, -1, c)) continue;
        word.assign(1, c);
        dfs(st, !(c & 1), (c & 1) != 0);
    }

    for (const auto& codes : classes) {
        BandWord bw;
        bw.letters = decode(codes);
        bw.canonical = true;
        result.insert(std::move(bw));
    }
    return result;
}

long StringAlgebra::strings_containing(const PathWord& sub, int max_len, long node_budget) const {
    if (sub.empty()) throw Error("SubwordForbidden", "empty subword");
    std::vector<int> seed;
    for (const auto& id : sub) seed.push_back(2 * arrow_index(id));
    if (!scan_codes(seed))
        throw Error("SubwordForbidden", "subword " + path_to_string(sub) + " is not a string");
    if (static_cast<int>(seed.size()) > max_len) return 0;

    Budget budget{node_budget};
    std::set<std::vector<int>> classes;

    // every word containing the seed splits as left . seed . right; extend at
    // the end first, then at the start, validating with the full scanner
    std::vector<std::vector<int>> rights;
    std::vector<int> word = seed;
    std::function<void()> extend_end = [&]() {
        budget.spend();
        rights.push_back(word);
        if (static_cast<int>(word.size()) >= max_len) return;
        int prev = word.back();
        for (int c : out_[ltgt(prev)]) {
            word.push_back(c);
            if (scan_codes(word)) extend_end();
            word.pop_back();
        }
    };
    extend_end();

    for (const auto& r : rights) {
        std::vector<int> cur = r;
        std::function<void()> extend_start = [&]() {
            budget.spend();
            classes.insert(canonical_codes(cur));
            if (static_cast<int>(cur.size()) >= max_len) return;
            int first = cur.front();
            for (int idx = 0; idx < static_cast<int>(arrows_.size()); ++idx) {
                for (int c : {2 * idx, 2 * idx + 1}) {
                    if (ltgt(c) != lsrc(first)) continue;
                    cur.insert(cur.begin(), c);
                    if (scan_codes(cur)) extend_start();
                    cur.erase(cur.begin());
                }
            }
        };
        extend_start();
    }
    return static_cast<long>(classes.size());
}

// ---------- the b2^k b1 family ----------

int StringAlgebra::match_shape(const std::vector<int>& x, const std::vector<int>& y) const {
    int nx = static_cast<int>(x.size());
    int ny = static_cast<int>(y.size());
    int src0 = lsrc(x[0]);
    int maxl = std::min(nx, ny) - 1;
    for (int l = 1; l <= maxl; ++l) {
        bool shared_direct = true;
        for (int t = 0; t < l && shared_direct; ++t) shared_direct = (x[t] == y[t]) && !(x[t] & 1);
        if (!shared_direct) break; // longer prefixes cannot recover
        if (ltgt(x[l - 1]) != src0) continue;           // prefix must close at the source
        if (x[l] != y[l] || !(x[l] & 1)) continue;      // same inverse arrow next
        bool revisit = false;
        for (int t = l + 1; t < nx && !revisit; ++t) revisit = (lsrc(x[t]) == src0);
        for (int t = l + 1; t < ny && !revisit; ++t) revisit = (lsrc(y[t]) == src0);
        if (!revisit) return l;
    }
    return 0;
}

BandFamilyResult StringAlgebra::band_power_family(const std::vector<Letter>& b1,
                                                  const std::vector<Letter>& b2, int k_max) const {
    auto c1 = encode(b1);
    auto c2 = encode(b2);
    if (!is_band_codes(c1)) throw Error("NotABand", "b1 is not a band");
    if (!is_band_codes(c2)) throw Error("NotABand", "b2 is not a band");
    if (canonical_band_codes(c1) == canonical_band_codes(c2))
        throw Error("ShapeMismatch", "bands must be distinct");
    if (lsrc(c1.front()) != lsrc(c2.front()))
        throw Error("ShapeMismatch", "bands have different sources");

    BandFamilyResult result;
    int l = match_shape(c1, c2);
    if (l == 0) l = match_shape(inverse_codes(c1), inverse_codes(c2));
    if (l > 0) {
        result.strict_shape = true;
        result.overlap_len = l;
    } else {
        std::vector<int> cat = c1;
        cat.insert(cat.end(), c2.begin(), c2.end());
        if (!is_band_codes(cat))
            throw Error("ShapeMismatch", "no overlap of the required shape and b2*b1 is not a band");
    }

    for (int k = 1; k <= k_max; ++k) {
        std::vector<int> w = c1; // b1 applied first
        for (int t = 0; t < k; ++t) w.insert(w.end(), c2.begin(), c2.end());
        BandFamilyMember m;
        m.k = k;
        m.word = decode(w);
        m.band = is_band_codes(w);
        result.members.push_back(std::move(m));
    }
    return result;
}

} // namespace bgat
