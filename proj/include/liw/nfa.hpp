// Automaton view of a graph: states are vertices, arrows consume their
// label, a line consumes one of its sandwich letters when used left to right
// and nothing when used right to left.  The word languages between vertex
// pairs are exactly the label sets of walks, so membership and inclusion are
// ordinary automaton problems.
#ifndef LIW_NFA_HPP
#define LIW_NFA_HPP

#include <tuple>
#include <vector>

#include "liw/graph.hpp"

namespace liw {

struct Nfa {
    int states = 0;
    std::vector<Letter> alphabet;                         // realized letters, sorted
    std::vector<std::tuple<int, Letter, int>> delta;      // consuming moves
    std::vector<std::pair<int, int>> epsilon;             // silent moves
    int start = -1;
    int accept = -1;
};

/// The automaton for the language between `from` and `to`.
Nfa to_nfa(const LiwGraph& g, Vertex from, Vertex to);

/// All w with u readable from `from` to w (silent-closure included).
std::vector<Vertex> reachable_after(const LiwGraph& g, Vertex from, const Word& u);

/// All w with u readable from w to `to`.
std::vector<Vertex> reachable_before(const LiwGraph& g, Vertex to, const Word& u);

/// u in the language between `from` and `to`?
bool member(const LiwGraph& g, Vertex from, Vertex to, const Word& u);

/// Language inclusion / equality between vertex pairs of two graphs.  The
/// sides of `from1`/`from2` and of `to1`/`to2` must agree
/// (std::invalid_argument otherwise).
bool language_included(const LiwGraph& g1, Vertex from1, Vertex to1,
                       const LiwGraph& g2, Vertex from2, Vertex to2);
bool language_equal(const LiwGraph& g1, Vertex from1, Vertex to1,
                    const LiwGraph& g2, Vertex from2, Vertex to2);

}  // namespace liw

#endif  // LIW_NFA_HPP
