#include <random>

#include "doctest.h"
#include "liw/morphism.hpp"
#include "liw/reduction.hpp"
#include "test_fixtures.hpp"

using namespace liw;
using liwtest::bl;

TEST_CASE("the folding example is not reduced and says why") {
    BliwGraph a = liwtest::folding_example();
    CHECK_FALSE(is_reduced(a.g));
    std::vector<Violation> vs = find_violations(a.g);
    CHECK_FALSE(vs.empty());

    // Applying any single rule shrinks the graph and keeps it well-formed.
    for (const Violation& v : vs) {
        auto [smaller, map] =
            v.kind == Violation::Kind::determination
                ? elementary_determination(a, v)
                : elementary_injection(a, v);
        CHECK(smaller.g.size() < a.g.size());
        CHECK(validate_bliw(smaller).ok);
        CHECK(map.size() == static_cast<size_t>(a.g.size()));
    }
}

TEST_CASE("reducing the folding example yields the expected eight-vertex graph") {
    BliwGraph a = liwtest::folding_example();
    ReductionResult res = reduce(a);

    CHECK(res.graph.g.size() == 8);
    CHECK(res.graph.g.lines.size() == 5);
    CHECK(res.graph.g.arrows.size() == 4);
    CHECK(validate_bliw(res.graph).ok);
    CHECK(is_reduced(res.graph.g));
    CHECK_FALSE(res.log.empty());

    // Roots follow the vertex map.
    CHECK(res.vertex_map[a.left_root] == res.graph.left_root);
    CHECK(res.vertex_map[a.right_root] == res.graph.right_root);

    // The outcome matches the hand-built reduced graph, roots included.
    BliwGraph expected = liwtest::folding_example_reduced();
    auto iso = find_iso(res.graph, expected, HomMode::full);
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism(res.graph.g, expected.g, *iso));

    // The doubled lobes really did fold together.
    Vertex a1 = 0;  // original indices: left vertices were added first
    Vertex a4 = 2, a6 = 3, a3 = 1;
    CHECK(res.vertex_map[a1] == res.vertex_map[a4]);
    CHECK(res.vertex_map[a3] == res.vertex_map[a6]);
    CHECK(res.vertex_map[a1] != res.vertex_map[a3]);
}

TEST_CASE("reduction is idempotent") {
    BliwGraph red = liwtest::folding_example_reduced();
    ReductionResult res = reduce(red);
    CHECK(res.log.empty());
    CHECK(res.graph.g == red.g);
    CHECK(res.graph.left_root == red.left_root);
    CHECK(res.graph.right_root == red.right_root);
}

TEST_CASE("every rule order reaches the same reduced form") {
    BliwGraph a = liwtest::folding_example();
    ReductionResult first = reduce(a);
    for (unsigned seed = 0; seed < 25; ++seed) {
        std::mt19937 rng(1000 + seed);
        auto picker = [&rng](size_t n) { return static_cast<size_t>(rng() % n); };
        ReductionResult res = reduce(a, picker);
        CHECK(res.graph.g.size() == first.graph.g.size());
        CHECK(res.graph.g.lines.size() == first.graph.g.lines.size());
        CHECK(res.graph.g.arrows.size() == first.graph.g.arrows.size());
        CHECK(find_iso(res.graph, first.graph, HomMode::full).has_value());
    }
}

TEST_CASE("a doubled inverse loop folds from either side") {
    // Two x'-arrows matched against a single x-arrow: the duplication shows
    // up both as a determination (seen from r0) and as an injection (seen
    // from l0), and one merge resolves both.
    LiwGraph g;
    Vertex l0 = g.add_vertex(Side::left, "l0");
    Vertex l1 = g.add_vertex(Side::left, "l1");
    Vertex l2 = g.add_vertex(Side::left, "l2");
    Vertex r0 = g.add_vertex(Side::right, "r0");
    Vertex r1 = g.add_vertex(Side::right, "r1");
    Vertex r2 = g.add_vertex(Side::right, "r2");
    g.add_line(l0, r1);
    g.add_line(l0, r2);
    g.add_line(l1, r0);
    g.add_line(l2, r0);
    g.add_arrow(l0, bl("x"), r0);
    g.add_arrow(l1, bl("x", true), r1);
    g.add_arrow(l2, bl("x", true), r2);
    g.normalize();
    REQUIRE(validate_liw(g).ok);

    CHECK_FALSE(is_deterministic(g));
    CHECK_FALSE(is_injective(g));
    CHECK_FALSE(is_reduced(g));
    CHECK(is_deterministic(liwtest::folding_example_reduced().g));
    CHECK(is_injective(liwtest::folding_example_reduced().g));

    BliwGraph b{g, l0, r0};
    ReductionResult res = reduce(b);
    CHECK(is_reduced(res.graph.g));
    CHECK(res.vertex_map[l1] == res.vertex_map[l2]);
    CHECK(res.vertex_map[r1] == res.vertex_map[r2]);
    CHECK(res.graph.g.size() == 4);
}
