// Structure-preserving vertex maps between graphs.  A morphism preserves
// sides, lines and labeled arrows.  On reduced graphs a morphism is
// determined by the image of any single vertex, which makes the search
// effective: propagate images along canonical walks from an anchor, then
// verify every edge.
#ifndef LIW_MORPHISM_HPP
#define LIW_MORPHISM_HPP

#include <optional>
#include <vector>

#include "liw/graph.hpp"

namespace liw {

struct Morphism {
    std::vector<Vertex> map;  // indexed by source vertex

    Vertex operator()(Vertex v) const { return map[v]; }
    bool operator==(const Morphism&) const = default;
};

/// Checks sides, lines and arrows under the map.
bool is_morphism(const LiwGraph& g, const LiwGraph& h, const Morphism& m);

/// A morphism whose vertex map is bijective and which hits every line and
/// arrow of the target.
bool is_isomorphism(const LiwGraph& g, const LiwGraph& h, const Morphism& m);

/// Composition: first f, then g (f: a->b, g: b->c).
Morphism compose(const Morphism& f, const Morphism& g);

/// The unique right vertex reached from v reading u, in a reduced graph;
/// nullopt if u cannot be read to a right vertex.  For empty u: v itself
/// when v is a right vertex.  Throws std::invalid_argument on non-reduced
/// input.
std::optional<Vertex> trace_forward(const LiwGraph& g, Vertex v, const Word& u);

/// The unique left vertex from which u reads to v (dual of trace_forward).
std::optional<Vertex> trace_backward(const LiwGraph& g, Vertex v, const Word& u);

/// The unique candidate morphism g -> h sending anchor to image, if it
/// verifies.  Both graphs must be valid and reduced; anchor and image must
/// lie on the same side.
std::optional<Morphism> hom_from_anchor(const LiwGraph& g, const LiwGraph& h, Vertex anchor,
                                        Vertex image);

/// Which roots a morphism between birooted graphs must preserve.
enum class HomMode { full, left, right, weak };

/// A morphism a -> b preserving the roots demanded by the mode.  For weak
/// mode the left root of a is anchored at every left vertex of b in turn.
std::optional<Morphism> find_hom(const BliwGraph& a, const BliwGraph& b, HomMode mode);

/// Root-preserving morphism that is an isomorphism of the underlying graphs.
std::optional<Morphism> find_iso(const BliwGraph& a, const BliwGraph& b, HomMode mode);
bool is_isomorphic(const BliwGraph& a, const BliwGraph& b, HomMode mode);

/// Isomorphism of bare graphs (no roots).
std::optional<Morphism> find_graph_iso(const LiwGraph& g, const LiwGraph& h);

/// All automorphisms of a reduced graph.
std::vector<Morphism> automorphisms(const LiwGraph& g);

}  // namespace liw

#endif  // LIW_MORPHISM_HPP
