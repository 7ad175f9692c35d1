// Structural classes of a semigroup read off its canonical graphs, each
// paired with an independent multiplication-table test of the same class so
// the two views can be compared.
#ifndef LIW_CLASSIFIER_HPP
#define LIW_CLASSIFIER_HPP

#include <string>
#include <vector>

#include "liw/graph.hpp"
#include "liw/semantics.hpp"
#include "liw/words.hpp"

namespace liw {

/// Connected-component id per vertex when arrows are ignored.
std::vector<int> line_components(const LiwGraph& g);

/// Number of lines incident to v.
int line_degree(const LiwGraph& g, Vertex v);

/// Every left vertex is joined by a line to every right vertex.
bool lines_complete_bipartite(const LiwGraph& g);

/// Every line-connected component is complete bipartite.
bool components_complete_bipartite(const LiwGraph& g);

/// The graph stays connected when the arrows are removed.
bool lines_connected(const LiwGraph& g);

/// The automorphism group acts transitively on lines, on the vertices of
/// one side, or on equally-labeled arrows.
bool line_transitive(const LiwGraph& g);
bool vertex_transitive(const LiwGraph& g, Side side);
bool arrow_transitive(const LiwGraph& g);

/// Every automorphism orbit is full: each vertex of the opposite side has a
/// line into the orbit.
bool almost_vertex_transitive(const LiwGraph& g);

/// For every pair of line-connected vertices a, b on different sides some
/// automorphism takes a to a line-neighbour of b.
bool components_almost_vertex_transitive(const LiwGraph& g);

/// Every vertex sees exactly one arrow label.
bool contents_singleton(const LiwGraph& g);

/// The quotient collapsing each line-connected component to a point,
/// keeping one arc per (component, label, component).
struct ContractedGraph {
    std::vector<std::string> name;  // one per component, members joined by '+'
    std::vector<Arrow> arcs;        // endpoints are component ids
};
ContractedGraph contract_line_components(const LiwGraph& g);

/// Whether a lies in the subsemigroup generated by the idempotents, decided
/// by the roots of its representation being line-connected.
bool core_membership_via_graph(Context& ctx, Elem a);

/// One classified property: the same question answered on the graphs and on
/// the multiplication table.
struct ClassRow {
    std::string property;
    bool graph_side = false;
    bool table_side = false;
    bool agree() const { return graph_side == table_side; }
};

struct Classification {
    std::vector<ClassRow> rows;
    bool all_agree() const;
    const ClassRow* row(const std::string& property) const;  // nullptr if absent
};

/// Classifies the semigroup of ctx.  The overload taking a presentation
/// also decides straightness (every vertex content a singleton, matched
/// against the relations keeping first and last letters).
Classification classify(Context& ctx);
Classification classify(Context& ctx, const Presentation& pres);

/// Properties of the D-class of one idempotent: rectangular band, group,
/// left group, right group, completely simple, rectangular group.
struct DClassReport {
    Elem e = -1;
    std::vector<ClassRow> rows;
    bool all_agree() const;
    const ClassRow* row(const std::string& property) const;
};
DClassReport classify_dclass(Context& ctx, Elem e);

}  // namespace liw

#endif  // LIW_CLASSIFIER_HPP
