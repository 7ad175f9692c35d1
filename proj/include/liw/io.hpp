// Plain-text formats for semigroups and graphs, DOT export with a matching
// subset parser, and small file helpers.  All formats are UTF-8, token
// oriented, with '#' comments to end of line.
#ifndef LIW_IO_HPP
#define LIW_IO_HPP

#include <stdexcept>
#include <string>

#include "liw/graph.hpp"
#include "liw/semigroup.hpp"

namespace liw {

/// Parse failure at a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

/// Semigroup file:
///   semigroup <n>
///   names <n name tokens>
///   table <n*n indices, row major>
///   generators
///   <letter> -> <element name>   (one per assigned letter)
///   end
struct SemigroupFile {
    FiniteSemigroup s;
    GeneratorAssignment gen;
};
SemigroupFile parse_semigroup(const std::string& text);
std::string emit_semigroup(const FiniteSemigroup& s, const GeneratorAssignment& gen);

/// Graph file:
///   graph
///   left <left vertex names>
///   right <right vertex names>
///   lines
///   <left name> <right name>     (one line per line)
///   arrows
///   <left name> <letter> <right name>
///   roots <left name> <right name>   (optional section)
///   end
/// Vertices are numbered in declaration order, left side first.  Without a
/// roots section the returned roots are -1.
BliwGraph parse_graph(const std::string& text);
std::string emit_graph(const LiwGraph& g);
std::string emit_graph(const BliwGraph& g);

/// DOT export: lines as dashed undirected edges, arrows as directed labeled
/// edges, roots drawn with a double circle.  Vertex ids are l<i>/r<i> by
/// vertex index; display names go into labels.
std::string emit_dot(const LiwGraph& g);
std::string emit_dot(const BliwGraph& g);

/// Parses the DOT subset produced by emit_dot back into a graph (vertices
/// in declaration order, so parse_dot(emit_dot(g)) reproduces g exactly).
BliwGraph parse_dot(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace liw

#endif  // LIW_IO_HPP
