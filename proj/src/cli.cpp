#include "bgat/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bgat/io.hpp"
#include "bgat/oracle.hpp"

namespace bgat {

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

BrauerGraph load_valid_graph(const std::string& path) {
    auto g = parse_graph(read_file(path));
    auto rep = validate(g);
    if (!rep.ok) throw Error(rep.error, rep.detail);
    return g;
}

StringAlgebra load_algebra(const std::string& path, IdealVariant variant, int* auto_max_len) {
    if (has_suffix(path, ".sqp")) {
        auto p = parse_presentation(read_file(path));
        StringAlgebra alg(p.vertices, p.arrows, p.forbidden);
        if (auto_max_len && *auto_max_len <= 0)
            *auto_max_len = 4 * static_cast<int>(alg.arrows().size()) *
                            std::max(2, alg.max_forbidden_length());
        return alg;
    }
    auto g = load_valid_graph(path);
    if (auto_max_len && *auto_max_len <= 0) *auto_max_len = default_band_max_len(g);
    return string_algebra_of(g, variant);
}

int cmd_oracle(const std::string& path, const std::string& check, EdgeId edge, int max_len, int trials,
               const std::string& family, std::uint64_t seed, int max_edges, int max_mult,
               std::ostream& out) {
    auto print = [&](const OracleVerdict& v) {
        out << "CHECK " << v.check << " PREDICTED " << v.predicted << " OBSERVED " << v.observed
            << " MAXLEN " << v.max_len << " AGREE " << (v.agree ? "yes" : "no") << "\n";
        if (!v.notes.empty()) out << "NOTES " << v.notes << "\n";
        return v.agree ? 0 : 2;
    };

    if (check == "suite") {
        RandomGraphSpec spec;
        spec.family = family_from_name(family);
        spec.seed = seed;
        spec.max_edges = max_edges;
        spec.max_multiplicity = max_mult;
        auto report = consistency_suite(spec, trials);
        out << "SUITE family=" << family << " trials=" << report.trials << " checks=" << report.checks
            << " failures=" << report.failures.size() << "\n";
        for (const auto& f : report.failures) {
            out << "FAIL " << f.check << (f.detail.empty() ? "" : " " + f.detail) << "\n";
            out << serialize_graph(f.graph);
        }
        return report.ok() ? 0 : 2;
    }

    auto g = load_valid_graph(path);
    if (check == "census") {
        int len = max_len > 0 ? max_len : default_band_max_len(g);
        return print(band_census_check(g, len));
    }
    if (check == "rcount") return print(r_string_count_check(g, edge, max_len));
    if (check == "preserve") return print(band_preservation_check(g, max_len));
    if (check == "witness") {
        int len = max_len > 0 ? max_len : 16;
        auto w = infinite_band_witness(g, len);
        if (!w) {
            out << "WITNESS absent (search budget exhausted, not a refutation)\n";
            return 2;
        }
        out << "WITNESS found strict=" << (w->strict_shape ? "yes" : "no") << "\n";
        out << "B1 " << word_to_string(w->b1) << "\n";
        out << "B2 " << word_to_string(w->b2) << "\n";
        bool all = true;
        for (const auto& m : w->family.members) {
            out << "FAMILY k=" << m.k << " band=" << (m.band ? "yes" : "no") << " "
                << word_to_string(m.word) << "\n";
            all = all && m.band;
        }
        return all ? 0 : 2;
    }
    throw Error("UnknownCheck", "no oracle check '" + check + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Brauer graph algebras: presentations, string/band combinatorics, representation type"};
    app.require_subcommand(1);

    std::string path, algebra = "grA", ideal = "I2", format = "text", check = "census",
                family = "brauer_tree";
    int max_len = 0, trials = 200, max_edges = 8, max_mult = 3;
    EdgeId edge = 0;
    std::uint64_t seed = 1;

    auto* validate_cmd = app.add_subcommand("validate", "parse and validate a .bg graph file");
    validate_cmd->add_option("file", path)->required();

    auto* info_cmd = app.add_subcommand("info", "graded degrees, unbalanced edges, kappa invariants");
    info_cmd->add_option("file", path)->required();

    auto* classify_cmd = app.add_subcommand("classify", "representation type of A or gr(A)");
    classify_cmd->add_option("file", path)->required();
    classify_cmd->add_option("--algebra", algebra)->check(CLI::IsMember({"A", "grA"}));

    auto* quiver_cmd = app.add_subcommand("quiver", "quiver and ideal presentation");
    quiver_cmd->add_option("file", path)->required();
    quiver_cmd->add_option("--ideal", ideal)->check(CLI::IsMember({"I", "Igr", "I1", "I2"}));
    quiver_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));

    auto* strings_cmd = app.add_subcommand("strings", "enumerate string classes");
    strings_cmd->add_option("file", path)->required();
    strings_cmd->add_option("--max-len", max_len);
    strings_cmd->add_option("--ideal", ideal)->check(CLI::IsMember({"I1", "I2"}));

    auto* bands_cmd = app.add_subcommand("bands", "enumerate band classes");
    bands_cmd->add_option("file", path)->required();
    bands_cmd->add_option("--max-len", max_len);
    bands_cmd->add_option("--ideal", ideal)->check(CLI::IsMember({"I1", "I2"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force verification checks");
    oracle_cmd->add_option("file", path);
    oracle_cmd->add_option("--check", check)
        ->check(CLI::IsMember({"census", "rcount", "preserve", "witness", "suite"}));
    oracle_cmd->add_option("--edge", edge);
    oracle_cmd->add_option("--max-len", max_len);
    oracle_cmd->add_option("--trials", trials);
    oracle_cmd->add_option("--family", family)
        ->check(CLI::IsMember({"brauer_tree", "two_double_tree", "unique_cycle", "any"}));
    oracle_cmd->add_option("--seed", seed);
    oracle_cmd->add_option("--max-edges", max_edges);
    oracle_cmd->add_option("--max-mult", max_mult);

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "bgat");
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "ERROR Usage " << e.what() << "\n";
        return 1;
    }

    try {
        if (validate_cmd->parsed()) {
            auto g = parse_graph(read_file(path));
            auto rep = validate(g);
            if (!rep.ok) {
                out << "ERROR " << rep.error << " " << rep.detail << "\n";
                return 1;
            }
            out << "OK " << path << "\n";
            return 0;
        }
        if (info_cmd->parsed()) {
            out << render_info(load_valid_graph(path));
            return 0;
        }
        if (classify_cmd->parsed()) {
            auto g = load_valid_graph(path);
            out << render_classification(algebra == "A" ? classify_A(g) : classify_grA(g));
            return 0;
        }
        if (quiver_cmd->parsed()) {
            auto g = load_valid_graph(path);
            auto q = build_quiver(g);
            if (format == "dot") {
                out << render_quiver_dot(q);
            } else {
                auto data = ideal_variant(g, q, relations(g, q), variant_from_name(ideal));
                out << render_quiver_text(q, data);
            }
            return 0;
        }
        if (strings_cmd->parsed()) {
            int len = max_len > 0 ? max_len : 10;
            auto alg = load_algebra(path, variant_from_name(ideal), nullptr);
            auto set = alg.enumerate_strings(len);
            for (const auto& w : set) out << "STRING " << word_to_string(w) << "\n";
            out << "COUNT " << set.size() << " MAXLEN " << len << "\n";
            return 0;
        }
        if (bands_cmd->parsed()) {
            int len = max_len;
            auto alg = load_algebra(path, variant_from_name(ideal), &len);
            auto set = alg.enumerate_bands(len);
            for (const auto& w : set) out << "BAND " << word_to_string(w.letters) << "\n";
            out << "COUNT " << set.size() << " MAXLEN " << len << "\n";
            return 0;
        }
        if (oracle_cmd->parsed())
            return cmd_oracle(path, check, edge, max_len, trials, family, seed, max_edges, max_mult, out);
    } catch (const Error& e) {
        if (e.code() == "StarConditionFails") {
            out << "SKIP " << e.what() << "\n";
            return 0;
        }
        err << "ERROR " << e.what() << "\n";
        return 1;
    }
    err << "ERROR Usage no subcommand\n";
    return 1;
}

} // namespace bgat
