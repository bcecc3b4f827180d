#pragma once

#include <string>
#include <vector>

#include "bgat/classify.hpp"
#include "bgat/strings.hpp"

namespace bgat {

// Standalone monomial presentation (.sqp): quiver plus forbidden paths.
struct Presentation {
    std::vector<EdgeId> vertices;
    std::vector<Arrow> arrows;
    std::vector<PathWord> forbidden; // traversal order, first arrow first
};

// .bg graph files. Parsing throws ParseError (with line/column for syntax
// errors) or DuplicateId; serialization is canonical: sorted keys, two-space
// indent, byte-identical under parse -> serialize round trips.
BrauerGraph parse_graph(const std::string& text);
std::string serialize_graph(const BrauerGraph& g);

Presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const Presentation& p);

std::string read_file(const std::string& path);   // throws FileError
void write_file(const std::string& path, const std::string& content);

// Line-oriented reports.
std::string render_info(const BrauerGraph& g);
std::string render_classification(const ClassificationReport& rep);
std::string render_quiver_text(const Quiver& q, const IdealData& ideal);
std::string render_quiver_dot(const Quiver& q);

} // namespace bgat
