// The central combinatorial object: a finite oriented bipartite graph with
// two sorts of edges.  Vertices split into left and right; "lines" are
// unlabeled edges between a left and a right vertex; "arrows" lead from a
// left to a right vertex and carry a doubled-alphabet label.  A well-formed
// graph is connected, every vertex meets at least one arrow, and every arrow
// (a,x,b) is matched by lines (a,b1), (a1,b) with an arrow (a1,x',b1).
//
// Walks alternate the two vertex sorts freely: a line may be used from left
// to right (reading a sandwich letter drawn from the endpoint contents) or
// from right to left (reading nothing); arrows are used forwards only and
// read their label.
#ifndef LIW_GRAPH_HPP
#define LIW_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "liw/letters.hpp"

namespace liw {

using Vertex = int;

enum class Side { left, right };

struct Arrow {
    Vertex from;
    BarLetter label;
    Vertex to;
    auto operator<=>(const Arrow&) const = default;
};

using Line = std::pair<Vertex, Vertex>;  // (left, right)

struct LiwGraph {
    std::vector<Side> side;
    std::vector<std::string> name;  // display names; parallel to `side`
    std::vector<Line> lines;
    std::vector<Arrow> arrows;

    int size() const { return static_cast<int>(side.size()); }
    bool is_left(Vertex v) const { return side[v] == Side::left; }
    bool is_right(Vertex v) const { return side[v] == Side::right; }

    Vertex add_vertex(Side s, std::string display = "");
    void add_line(Vertex l, Vertex r);
    void add_arrow(Vertex l, BarLetter label, Vertex r);

    /// Sorts and deduplicates the edge vectors (idempotent).
    void normalize();

    bool has_line(Vertex l, Vertex r) const;
    bool has_arrow(Vertex l, const BarLetter& x, Vertex r) const;

    /// Opposite endpoints of the lines at v, ascending.
    std::vector<Vertex> lines_at(Vertex v) const;

    /// Vertices of each side, ascending.
    std::vector<Vertex> left_vertices() const;
    std::vector<Vertex> right_vertices() const;

    /// Vertex by display name and side; -1 if absent.
    Vertex by_name(Side s, const std::string& display) const;

    bool operator==(const LiwGraph&) const = default;
};

/// A graph with a distinguished left root and right root.
struct BliwGraph {
    LiwGraph g;
    Vertex left_root = -1;
    Vertex right_root = -1;

    bool operator==(const BliwGraph&) const = default;
};

/// Structural report; `ok` iff the graph is well formed (orientation,
/// nonempty contents, the matching condition for arrows, connectivity).
struct GraphReport {
    bool ok = true;
    std::vector<std::string> violations;
};

GraphReport validate_liw(const LiwGraph& g);

/// Also checks the roots: present, left root on the left, right root on the
/// right.
GraphReport validate_bliw(const BliwGraph& a);

/// The content of v: the labels of arrows incident to v, sorted, unique.
std::vector<BarLetter> content(const LiwGraph& g, Vertex v);

/// One step of a walk.
struct WalkStep {
    enum class Kind { arrow, line_lr, line_rl };
    Kind kind;
    Vertex from, to;
    BarLetter label;  // arrows only
};

/// A walk: `from`, then steps; may be trivial (no steps).
struct Walk {
    Vertex from = -1;
    std::vector<WalkStep> steps;

    Vertex to() const { return steps.empty() ? from : steps.back().to; }
};

/// Checks that each step uses an existing edge with the right orientation
/// and that consecutive steps chain.
GraphReport validate_walk(const LiwGraph& g, const Walk& p);

/// True iff u is one of the label words of walk p: arrows read their label,
/// right-to-left line steps read nothing, and each left-to-right line step
/// reads one sandwich letter (x^y) with x in the content of the start and y
/// in the content of the end.  The label set is never materialized.
bool word_labels_walk(const LiwGraph& g, const Walk& p, const Word& u);

/// Quotient by the equivalence generated by the given vertex pairs.  Classes
/// must not mix sides (std::invalid_argument).  Returns the quotient and the
/// vertex map; class vertices are numbered by least original member and
/// inherit its display name.
std::pair<LiwGraph, std::vector<Vertex>> quotient(
    const LiwGraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs);

}  // namespace liw

#endif  // LIW_GRAPH_HPP
