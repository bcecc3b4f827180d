#include "bgat/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bgat {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t byte, const std::string& message) {
    size_t line = 1, col = 1;
    for (size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
    }
    throw Error("ParseError",
                "line " + std::to_string(line) + " column " + std::to_string(col) + ": " + message);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
}

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw Error("ParseError", std::string("missing key '") + key + "'");
    return *it;
}

} // namespace

BrauerGraph parse_graph(const std::string& text) {
    json j = parse_json(text);
    BrauerGraph g;
    for (const auto& jv : require(j, "vertices")) {
        VertexId id = require(jv, "id").get<std::string>();
        VertexData data;
        data.multiplicity = require(jv, "multiplicity").get<int>();
        for (const auto& h : require(jv, "order")) data.order.push_back(h.get<HalfEdgeId>());
        if (!g.vertices.emplace(id, std::move(data)).second)
            throw Error("DuplicateId", "vertex '" + id + "' defined twice");
    }
    for (const auto& je : require(j, "edges")) {
        EdgeId id = require(je, "id").get<EdgeId>();
        const auto& ends = require(je, "ends");
        if (!ends.is_array() || ends.size() != 2)
            throw Error("ParseError", "edge " + std::to_string(id) + ": 'ends' must list two half-edges");
        if (!g.edges.emplace(id, std::make_pair(ends[0].get<HalfEdgeId>(), ends[1].get<HalfEdgeId>())).second)
            throw Error("DuplicateId", "edge " + std::to_string(id) + " defined twice");
    }
    if (j.contains("exceptional")) g.exceptional = j["exceptional"].get<std::string>();
    return g;
}

std::string serialize_graph(const BrauerGraph& g) {
    json j;
    j["edges"] = json::array();
    for (const auto& [e, ends] : g.edges)
        j["edges"].push_back({{"ends", {ends.first, ends.second}}, {"id", e}});
    if (g.exceptional) j["exceptional"] = *g.exceptional;
    j["vertices"] = json::array();
    for (const auto& [v, data] : g.vertices)
        j["vertices"].push_back({{"id", v}, {"multiplicity", data.multiplicity}, {"order", data.order}});
    return j.dump(2) + "\n";
}

Presentation parse_presentation(const std::string& text) {
    json j = parse_json(text);
    Presentation p;
    for (const auto& jv : require(j, "vertices")) p.vertices.push_back(jv.get<EdgeId>());
    for (const auto& ja : require(j, "arrows")) {
        Arrow a;
        a.id = require(ja, "id").get<std::string>();
        a.source = require(ja, "source").get<EdgeId>();
        a.target = require(ja, "target").get<EdgeId>();
        p.arrows.push_back(std::move(a));
    }
    for (const auto& jp : require(j, "forbidden")) {
        PathWord path;
        for (const auto& id : jp) path.push_back(id.get<std::string>());
        p.forbidden.push_back(std::move(path));
    }
    return p;
}

std::string serialize_presentation(const Presentation& p) {
    json j;
    j["arrows"] = json::array();
    for (const auto& a : p.arrows)
        j["arrows"].push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
    j["forbidden"] = json::array();
    for (const auto& path : p.forbidden) j["forbidden"].push_back(path);
    j["vertices"] = p.vertices;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("FileError", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("FileError", "cannot write " + path);
    out << content;
}

std::string render_info(const BrauerGraph& g) {
    std::ostringstream os;
    os << "VERTICES " << g.vertices.size() << "\n";
    os << "EDGES " << g.edges.size() << "\n";
    for (const auto& [v, data] : g.vertices)
        os << "GRD " << v << " " << graded_degree(g, v) << " (m=" << data.multiplicity
           << " val=" << data.order.size() << ")\n";

    auto ca = cycle_analysis(g);
    switch (ca.kind) {
        case CycleAnalysis::Kind::Tree: os << "CYCLE Tree\n"; break;
        case CycleAnalysis::Kind::UniqueCycle: {
            os << "CYCLE UniqueCycle length=" << ca.length << " parity=" << (ca.odd ? "odd" : "even")
               << " edges=";
            bool first = true;
            for (EdgeId e : ca.cycle_edges) {
                if (!first) os << ",";
                os << e;
                first = false;
            }
            os << "\n";
            break;
        }
        case CycleAnalysis::Kind::MultiCycle: os << "CYCLE MultiCycle rank=" << ca.rank << "\n"; break;
    }

    for (const auto& s : unbalanced_edges(g)) {
        os << "UNBALANCED " << s.edge << " v_s=" << s.oriented->v_s << " v_l=" << s.oriented->v_l
           << " n_i=" << s.oriented->n_i << "\n";
        auto star = star_condition(g, s.edge);
        if (star.holds)
            os << "STAR " << s.edge << " holds\n";
        else
            os << "STAR " << s.edge << " fails clause=" << star.failed_clause << " witness=" << star.witness
               << "\n";
    }

    int heavy = 0;
    for (const auto& [v, data] : g.vertices)
        if (data.multiplicity > 1) heavy++;
    if (ca.kind == CycleAnalysis::Kind::Tree && heavy <= 1) {
        auto ti = tree_invariants(g);
        os << "EXCEPTIONAL " << ti.v0 << "\n";
        os << "KAPPA0 " << ti.kappa0 << "\n";
        os << "KAPPA1 " << ti.kappa1 << "\n";
        os << "M0 " << ti.m0 << "\n";
        for (const auto& [a, b] : ti.pairs) os << "PAIR " << a << " " << b << "\n";
    }
    return os.str();
}

std::string render_classification(const ClassificationReport& rep) {
    std::ostringstream os;
    os << "ALGEBRA " << rep.algebra << "\n";
    os << "CASE " << rep.case_tag << "\n";
    for (const auto& [k, v] : rep.witnesses) os << "WITNESS " << k << " " << v << "\n";
    os << "VERDICT " << repr_to_string(rep.verdict) << "\n";
    return os.str();
}

std::string render_quiver_text(const Quiver& q, const IdealData& ideal) {
    std::ostringstream os;
    os << "QUIVER vertices=" << q.vertices.size() << " arrows=" << q.arrows.size() << "\n";
    for (const auto& a : q.arrows) os << a.id << ": " << a.source << " -> " << a.target << "\n";
    os << "IDEAL " << variant_name(ideal.variant) << "\n";
    for (const auto& b : ideal.binomials)
        os << "BINOMIAL " << b.edge << ": " << path_to_string(b.p) << " = " << path_to_string(b.q) << "\n";
    for (const auto& m : ideal.monomials) os << "MONOMIAL " << path_to_string(m) << "\n";
    if (!ideal.W.empty()) {
        os << "W";
        for (EdgeId e : ideal.W) os << " " << e;
        os << "\n";
        for (const auto& [e, r] : ideal.P) os << "P " << e << ": " << path_to_string(r) << "\n";
    }
    return os.str();
}

std::string render_quiver_dot(const Quiver& q) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (EdgeId e : q.vertices) os << "  \"" << e << "\";\n";
    for (const auto& a : q.arrows)
        os << "  \"" << a.source << "\" -> \"" << a.target << "\" [label=\"" << a.id << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace bgat
