// Rewriting a graph to its reduced form.  A graph is deterministic when no
// right vertex sees two distinct line+arrow continuations with the same
// label, and injective when no left vertex is reached by two distinct
// arrow+line continuations with the same label.  Merging the offending
// vertex pairs (an elementary determination resp. injection) terminates in
// the reduced form, which is unique up to isomorphism regardless of the
// order in which violations are resolved.
#ifndef LIW_REDUCTION_HPP
#define LIW_REDUCTION_HPP

#include <functional>
#include <vector>

#include "liw/graph.hpp"

namespace liw {

bool is_deterministic(const LiwGraph& g);
bool is_injective(const LiwGraph& g);
bool is_reduced(const LiwGraph& g);

/// A violation of determinism (kind = determination) or injectivity
/// (kind = injection): two basic paths through `anchor` with label `label`
/// whose other endpoints differ; resolving it merges `left_pair` (two left
/// vertices) and `right_pair` (two right vertices; equal entries mean
/// nothing to merge on that side).
struct Violation {
    enum class Kind { determination, injection };
    Kind kind;
    Vertex anchor;
    BarLetter label;
    std::pair<Vertex, Vertex> left_pair;
    std::pair<Vertex, Vertex> right_pair;
};

/// All current violations, in a deterministic scan order.
std::vector<Violation> find_violations(const LiwGraph& g);

/// One elementary step: the quotient by the violation's two pairs.  Returns
/// the new graph and the vertex map.
std::pair<BliwGraph, std::vector<Vertex>> elementary_determination(const BliwGraph& a,
                                                                   const Violation& v);
std::pair<BliwGraph, std::vector<Vertex>> elementary_injection(const BliwGraph& a,
                                                               const Violation& v);

struct ReductionStep {
    Violation::Kind kind;
    std::pair<std::string, std::string> merged_left;   // display names
    std::pair<std::string, std::string> merged_right;
};

struct ReductionResult {
    BliwGraph graph;
    std::vector<Vertex> vertex_map;    // original vertex -> reduced vertex
    std::vector<ReductionStep> log;
};

/// Reduces a: resolves violations until none remain.  With the default
/// (null) picker, violations are taken from a FIFO worklist seeded with the
/// initial violations, rescanning only the neighborhood of each merge; the
/// run and its log are deterministic.  A picker selects among the currently
/// available violations (given the count, return an index) and forces a full
/// rescan per step; useful for exercising confluence.
ReductionResult reduce(const BliwGraph& a,
                       const std::function<size_t(size_t)>& picker = nullptr);

}  // namespace liw

#endif  // LIW_REDUCTION_HPP
