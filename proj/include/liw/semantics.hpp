// From a semigroup to graphs and back.  For an idempotent e, the canonical
// graph has a left vertex for each member of the L-class of e, a right
// vertex for each member of the R-class, lines joining mutually inverse
// pairs, and arrows describing how generators multiply across the two
// classes.  Rooting such a graph presents a single element; roots, walks and
// morphisms then mirror multiplication, Green's relations, the natural
// order, and inverses.
#ifndef LIW_SEMANTICS_HPP
#define LIW_SEMANTICS_HPP

#include <map>
#include <string>
#include <vector>

#include "liw/graph.hpp"
#include "liw/morphism.hpp"
#include "liw/reduction.hpp"
#include "liw/semigroup.hpp"

namespace liw {

/// A canonical graph together with the element carried by each vertex.
struct GammaGraph {
    Elem e = -1;             // base idempotent
    LiwGraph g;
    std::vector<Elem> elem;  // per vertex

    Vertex left_vertex(Elem a) const;   // -1 if absent
    Vertex right_vertex(Elem b) const;
};

/// The canonical birooted representation of an element s: the graph of the
/// least idempotent e of the R-class of s, rooted at (l_e, r_s).
struct BliwRep {
    Elem elem = -1;
    Elem e = -1;
    BliwGraph graph;
};

/// Builds the graph of e from first principles (no cache, no translation).
GammaGraph build_gamma_direct(const FiniteSemigroup& s, const GeneratorAssignment& gen,
                              const GreenSummary& gr, Elem e);

/// A semigroup with generator assignment plus caches: one direct graph per
/// D-class representative, translated to the other idempotents.
class Context {
public:
    Context(FiniteSemigroup s, GeneratorAssignment gen);

    const FiniteSemigroup& s() const { return s_; }
    const GeneratorAssignment& gen() const { return gen_; }
    const GreenSummary& green_summary() const { return green_; }

    /// The canonical graph of idempotent e (cached).
    const GammaGraph& gamma(Elem e);

    /// The canonical birooted representation of s (cached).
    const BliwRep& bliw(Elem a);

private:
    FiniteSemigroup s_;
    GeneratorAssignment gen_;
    GreenSummary green_;
    std::map<Elem, GammaGraph> gamma_cache_;
    std::map<Elem, BliwRep> bliw_cache_;
};

/// Green's relations decided on the graph side: left/right/two-sided
/// isomorphism and weak isomorphism/homomorphism of the representations.
bool r_via_graphs(Context& ctx, Elem a, Elem b);
bool l_via_graphs(Context& ctx, Elem a, Elem b);
bool h_via_graphs(Context& ctx, Elem a, Elem b);
bool d_via_graphs(Context& ctx, Elem a, Elem b);
bool j_via_graphs(Context& ctx, Elem a, Elem b);

/// Order relations on the graph side: t below s iff a morphism from the
/// representation of s onto that of t (preserving the roots the mode asks).
bool leq_via_graphs(Context& ctx, Elem t, Elem s);
bool leq_r_via_graphs(Context& ctx, Elem t, Elem s);
bool leq_l_via_graphs(Context& ctx, Elem t, Elem s);
bool leq_h_via_graphs(Context& ctx, Elem t, Elem s);
bool leq_j_via_graphs(Context& ctx, Elem t, Elem s);

/// Idempotent orders via graphs, same argument convention as the table
/// versions: e below f (both must be idempotent).
bool omega_r_via_graphs(Context& ctx, Elem e, Elem f);
bool omega_l_via_graphs(Context& ctx, Elem e, Elem f);
bool omega_via_graphs(Context& ctx, Elem e, Elem f);

/// s idempotent iff the roots of its representation are joined by a line.
bool idempotent_via_graph(Context& ctx, Elem s);

/// All inverses of s read off weak isomorphisms between representations.
std::vector<Elem> inverses_via_graph(Context& ctx, Elem s);

/// Unreduced joins: disjoint union plus one bridging line.  `wedge_raw`
/// bridges left root of the first to right root of the second; `dot_raw`
/// bridges left root of the second to right root of the first.  Roots of
/// the result: left root of the first, right root of the second.
BliwGraph wedge_raw(const BliwGraph& a1, const BliwGraph& a2);
BliwGraph dot_raw(const BliwGraph& a1, const BliwGraph& a2);

/// Reduced joins (the meet and product on the graph side).
ReductionResult wedge(const BliwGraph& a1, const BliwGraph& a2);
ReductionResult dot(const BliwGraph& a1, const BliwGraph& a2);

/// Exhaustive check of the universal properties of the joins against the
/// multiplication table: for all s, t the reduced dot maps canonically onto
/// the representation of st and is initial among morphisms to elements
/// below st; the reduced wedge is initial for the idempotents below the
/// sandwich of s and t; and absorption (st = t, st = s) is witnessed by
/// root-adjacent morphisms.
struct UniversalReport {
    bool ok = true;
    long checks = 0;
    std::vector<std::string> failures;
};
UniversalReport verify_universal_properties(Context& ctx);

}  // namespace liw

#endif  // LIW_SEMANTICS_HPP
