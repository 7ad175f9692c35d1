// Shared hand-built graphs and small semigroups used across the test
// binaries.  The builders return fresh copies so tests may mutate freely.
#ifndef LIW_TESTS_TEST_FIXTURES_HPP
#define LIW_TESTS_TEST_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "liw/graph.hpp"
#include "liw/letters.hpp"
#include "liw/semigroup.hpp"

namespace liwtest {

inline liw::BarLetter bl(const std::string& base, bool primed = false) {
    return {base, primed};
}

/// 15-vertex birooted graph over {x, y} whose reduction folds the right half
/// of each lobe onto the left half: two x-lobes sharing the right vertex "a"
/// and two y-lobes hanging off it.  Left vertices a1,a3,a4,a6,b1,b3,b5,b7;
/// right vertices a,a2,a5,b2,b4,b6,b8; roots (a3, b2).
inline liw::BliwGraph folding_example() {
    using liw::Side;
    liw::LiwGraph g;
    liw::Vertex a1 = g.add_vertex(Side::left, "a1");
    liw::Vertex a3 = g.add_vertex(Side::left, "a3");
    liw::Vertex a4 = g.add_vertex(Side::left, "a4");
    liw::Vertex a6 = g.add_vertex(Side::left, "a6");
    liw::Vertex b1 = g.add_vertex(Side::left, "b1");
    liw::Vertex b3 = g.add_vertex(Side::left, "b3");
    liw::Vertex b5 = g.add_vertex(Side::left, "b5");
    liw::Vertex b7 = g.add_vertex(Side::left, "b7");
    liw::Vertex a = g.add_vertex(Side::right, "a");
    liw::Vertex a2 = g.add_vertex(Side::right, "a2");
    liw::Vertex a5 = g.add_vertex(Side::right, "a5");
    liw::Vertex b2 = g.add_vertex(Side::right, "b2");
    liw::Vertex b4 = g.add_vertex(Side::right, "b4");
    liw::Vertex b6 = g.add_vertex(Side::right, "b6");
    liw::Vertex b8 = g.add_vertex(Side::right, "b8");

    g.add_line(a3, a);
    g.add_line(a6, a);
    g.add_line(a1, a2);
    g.add_line(a4, a5);
    g.add_line(b1, b2);
    g.add_line(b1, a);
    g.add_line(b5, a);
    g.add_line(b5, b6);
    g.add_line(b3, b4);
    g.add_line(b7, b8);

    g.add_arrow(a1, bl("x"), a);
    g.add_arrow(a4, bl("x"), a);
    g.add_arrow(a3, bl("x", true), a2);
    g.add_arrow(a6, bl("x", true), a5);
    g.add_arrow(b1, bl("y"), b4);
    g.add_arrow(b5, bl("y"), b8);
    g.add_arrow(b3, bl("y", true), b2);
    g.add_arrow(b7, bl("y", true), b6);
    g.normalize();
    return {std::move(g), a3, b2};
}

/// The reduced form the folding example must reach: 8 vertices, 5 lines,
/// 4 arrows, roots (a3, b2).
inline liw::BliwGraph folding_example_reduced() {
    using liw::Side;
    liw::LiwGraph g;
    liw::Vertex a1 = g.add_vertex(Side::left, "a1");
    liw::Vertex a3 = g.add_vertex(Side::left, "a3");
    liw::Vertex b1 = g.add_vertex(Side::left, "b1");
    liw::Vertex b3 = g.add_vertex(Side::left, "b3");
    liw::Vertex a = g.add_vertex(Side::right, "a");
    liw::Vertex a2 = g.add_vertex(Side::right, "a2");
    liw::Vertex b2 = g.add_vertex(Side::right, "b2");
    liw::Vertex b4 = g.add_vertex(Side::right, "b4");

    g.add_line(a3, a);
    g.add_line(a1, a2);
    g.add_line(b1, b2);
    g.add_line(b1, a);
    g.add_line(b3, b4);

    g.add_arrow(a1, bl("x"), a);
    g.add_arrow(a3, bl("x", true), a2);
    g.add_arrow(b1, bl("y"), b4);
    g.add_arrow(b3, bl("y", true), b2);
    g.normalize();
    return {std::move(g), a3, b2};
}

/// Two reduced birooted graphs over {x, y} whose root-to-root languages are
/// equal although no morphism exists between them: the first reads both x
/// and y out of the same left vertex, the second splits those arrows over
/// two left vertices sharing their lined right vertex.
struct EqualLanguagePair {
    liw::BliwGraph g1, g2;
};

inline EqualLanguagePair equal_language_pair() {
    using liw::Side;
    EqualLanguagePair out;
    {
        liw::LiwGraph g;
        liw::Vertex av = g.add_vertex(Side::left, "a");
        liw::Vertex a1 = g.add_vertex(Side::left, "a1");
        liw::Vertex a2 = g.add_vertex(Side::left, "a2");
        liw::Vertex bv = g.add_vertex(Side::right, "b");
        liw::Vertex b1 = g.add_vertex(Side::right, "b1");
        liw::Vertex b2 = g.add_vertex(Side::right, "b2");
        g.add_line(a1, b1);
        g.add_line(a2, b2);
        g.add_line(av, bv);
        g.add_arrow(av, bl("y", true), b1);
        g.add_arrow(a1, bl("y"), bv);
        g.add_arrow(a2, bl("x", true), b1);
        g.add_arrow(a1, bl("x"), b2);
        g.normalize();
        out.g1 = {std::move(g), av, bv};
    }
    {
        liw::LiwGraph g;
        liw::Vertex av = g.add_vertex(Side::left, "a");
        liw::Vertex a0 = g.add_vertex(Side::left, "a0");
        liw::Vertex a1 = g.add_vertex(Side::left, "a1");
        liw::Vertex a2 = g.add_vertex(Side::left, "a2");
        liw::Vertex bv = g.add_vertex(Side::right, "b");
        liw::Vertex b1 = g.add_vertex(Side::right, "b1");
        liw::Vertex b2 = g.add_vertex(Side::right, "b2");
        g.add_line(a1, b1);
        g.add_line(a0, b1);
        g.add_line(a2, b2);
        g.add_line(av, bv);
        g.add_arrow(av, bl("y", true), b1);
        g.add_arrow(a1, bl("y"), bv);
        g.add_arrow(a2, bl("x", true), b1);
        g.add_arrow(a0, bl("x"), b2);
        g.normalize();
        out.g2 = {std::move(g), av, bv};
    }
    return out;
}

/// Left-zero semigroup on n elements: a * b = a.
inline liw::FiniteSemigroup left_zero(int n) {
    liw::FiniteSemigroup s;
    for (int i = 0; i < n; ++i) s.names.push_back("e" + std::to_string(i));
    s.table.assign(n, std::vector<liw::Elem>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.table[i][j] = i;
    return s;
}

/// Two-element monogenic semigroup {g, g*g} with g*g*g = g*g; g has no
/// inverse, so the semigroup is not regular.
inline liw::FiniteSemigroup non_regular_monogenic() {
    liw::FiniteSemigroup s;
    s.names = {"g", "gg"};
    s.table = {{1, 1}, {1, 1}};
    return s;
}

}  // namespace liwtest

#endif  // LIW_TESTS_TEST_FIXTURES_HPP
