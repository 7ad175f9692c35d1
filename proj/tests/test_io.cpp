#include <cstdio>
#include <string>

#include "doctest.h"
#include "liw/fixtures.hpp"
#include "liw/io.hpp"
#include "test_fixtures.hpp"

using namespace liw;

TEST_CASE("semigroup files round-trip") {
    const Fixture& f = fixture("s2");
    std::string text = emit_semigroup(f.s, f.gen);
    SemigroupFile back = parse_semigroup(text);
    CHECK(back.s.names == f.s.names);
    CHECK(back.s.table == f.s.table);
    CHECK(back.gen.images == f.gen.images);
}

TEST_CASE("semigroup parse errors carry positions") {
    auto expect_error = [](const std::string& text, int line, int col) {
        try {
            parse_semigroup(text);
            FAIL_CHECK("no error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.col() == col);
            CHECK(std::string(e.what()).rfind(std::to_string(line) + ":" +
                                              std::to_string(col) + ":",
                                              0) == 0);
        }
    };

    expect_error("", 1, 1);
    expect_error("semigroup 0\n", 1, 11);
    expect_error("semigroup 2\nnames a a\n", 2, 9);
    expect_error("semigroup 1\nnames e\ntable\n5\ngenerators\nend\n", 4, 1);
    expect_error(
        "semigroup 1\nnames e\ntable\n0\ngenerators\nx -> q\nend\n", 6, 6);
    expect_error("semigroup 1\nnames e\ntable\n0\ngenerators\nend\nextra\n", 7, 1);
}

TEST_CASE("graph files round-trip, with or without roots") {
    BliwGraph a = liwtest::folding_example();

    BliwGraph back = parse_graph(emit_graph(a));
    CHECK(back.g == a.g);
    CHECK(back.left_root == a.left_root);
    CHECK(back.right_root == a.right_root);

    BliwGraph bare = parse_graph(emit_graph(a.g));
    CHECK(bare.g == a.g);
    CHECK(bare.left_root == -1);
    CHECK(bare.right_root == -1);
}

TEST_CASE("graph files accept comments and report bad references") {
    BliwGraph g = parse_graph(
        "graph  # a tiny two-vertex example\n"
        "left l0\n"
        "right r0\n"
        "lines\nl0 r0  # the only line\n"
        "arrows\nl0 x r0\nl0 x' r0\n"
        "roots l0 r0\n"
        "end\n");
    CHECK(g.g.size() == 2);
    CHECK(g.g.lines.size() == 1);
    CHECK(g.g.arrows.size() == 2);
    CHECK(g.left_root == 0);
    CHECK(g.right_root == 1);

    CHECK_THROWS_AS(parse_graph("graph\nleft l0\nright r0\nlines\nl0 r9\narrows\nend\n"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_graph("graph\nleft l0\nright r0\nlines\narrows\nl0 (x^y) r0\nend\n"),
        ParseError);
    CHECK_THROWS_AS(parse_graph("graph\nleft l0 l0\nright r0\nlines\narrows\nend\n"),
                    ParseError);  // duplicate vertex name within a side

    // The same display name may appear once per side.
    BliwGraph shared =
        parse_graph("graph\nleft e\nright e\nlines\ne e\narrows\ne x e\ne x' e\nend\n");
    CHECK(shared.g.size() == 2);
}

TEST_CASE("dot export follows the drawing conventions and parses back") {
    BliwGraph red = liwtest::folding_example_reduced();
    std::string dot = emit_dot(red);

    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("style=dashed, dir=none") != std::string::npos);
    CHECK(dot.find("label=\"x'\"") != std::string::npos);
    // Exactly the two roots get a double circle.
    size_t count = 0;
    for (size_t p = dot.find("doublecircle"); p != std::string::npos;
         p = dot.find("doublecircle", p + 1))
        ++count;
    CHECK(count == 2);

    BliwGraph back = parse_dot(dot);
    CHECK(back.g == red.g);
    CHECK(back.left_root == red.left_root);
    CHECK(back.right_root == red.right_root);

    // Rootless export marks no double circles and yields unset roots.
    std::string bare = emit_dot(red.g);
    CHECK(bare.find("doublecircle") == std::string::npos);
    CHECK(parse_dot(bare).left_root == -1);

    CHECK_THROWS_AS(parse_dot("strict graph {}\n"), ParseError);
    CHECK_THROWS_AS(parse_dot("digraph g {\n  l0 [label=\"a\"];\n  r0 [label=\"b\"];\n"
                              "  l0 -> r0;\n}\n"),
                    ParseError);  // arrow without label
}

TEST_CASE("file helpers") {
    std::string path = "liw_io_scratch.txt";
    write_file(path, "graph\nleft a\nright b\nlines\na b\narrows\na t b\nend\n");
    std::string text = read_file(path);
    BliwGraph g = parse_graph(text);
    CHECK(g.g.size() == 2);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_file("definitely/not/a/file"), std::runtime_error);
}
