#include <stdexcept>

#include "doctest.h"
#include "liw/morphism.hpp"
#include "liw/nfa.hpp"
#include "liw/reduction.hpp"
#include "test_fixtures.hpp"

using namespace liw;
using liwtest::bl;

namespace {

Morphism identity_on(const LiwGraph& g) {
    Morphism m;
    for (Vertex v = 0; v < g.size(); ++v) m.map.push_back(v);
    return m;
}

Vertex lv(const LiwGraph& g, const char* name) {
    Vertex v = g.by_name(Side::left, name);
    REQUIRE(v >= 0);
    return v;
}

Vertex rv(const LiwGraph& g, const char* name) {
    Vertex v = g.by_name(Side::right, name);
    REQUIRE(v >= 0);
    return v;
}

}  // namespace

TEST_CASE("morphism and isomorphism predicates") {
    BliwGraph red = liwtest::folding_example_reduced();
    Morphism id = identity_on(red.g);
    CHECK(is_morphism(red.g, red.g, id));
    CHECK(is_isomorphism(red.g, red.g, id));

    // Redirecting one vertex breaks an edge.
    Morphism broken = id;
    broken.map[lv(red.g, "a1")] = lv(red.g, "b1");
    CHECK_FALSE(is_morphism(red.g, red.g, broken));

    // A morphism into a larger graph is not an isomorphism.
    BliwGraph big = liwtest::folding_example();
    Morphism into;
    for (Vertex v = 0; v < red.g.size(); ++v)
        into.map.push_back(big.g.by_name(red.g.side[v], red.g.name[v]));
    CHECK(is_morphism(red.g, big.g, into));
    CHECK_FALSE(is_isomorphism(red.g, big.g, into));

    CHECK(compose(id, id) == id);
}

TEST_CASE("tracing words through a reduced graph") {
    LiwGraph g = liwtest::folding_example_reduced().g;

    CHECK(trace_forward(g, rv(g, "a"), parse_word("x'")) == rv(g, "a2"));
    CHECK(trace_forward(g, lv(g, "a1"), parse_word("x")) == rv(g, "a"));
    CHECK(trace_forward(g, rv(g, "a"), parse_word("y")) == rv(g, "b4"));
    CHECK(trace_forward(g, rv(g, "a"), Word{}) == rv(g, "a"));
    CHECK_FALSE(trace_forward(g, rv(g, "a"), parse_word("z")).has_value());

    CHECK(trace_backward(g, rv(g, "b2"), parse_word("y'")) == lv(g, "b3"));
    CHECK(trace_backward(g, lv(g, "a3"), Word{}) == lv(g, "a3"));
    CHECK_FALSE(trace_backward(g, rv(g, "b2"), parse_word("x")).has_value());

    LiwGraph unred = liwtest::folding_example().g;
    CHECK_THROWS_AS(trace_forward(unred, 0, Word{}), std::invalid_argument);
}

TEST_CASE("a reduced morphism is pinned down by one image") {
    BliwGraph red = liwtest::folding_example_reduced();
    const LiwGraph& g = red.g;

    auto m = hom_from_anchor(g, g, red.left_root, red.left_root);
    REQUIRE(m.has_value());
    CHECK(*m == identity_on(g));

    // Anchoring a3 (content x') at b3 (content y') can never verify.
    CHECK_FALSE(hom_from_anchor(g, g, red.left_root, lv(g, "b3")).has_value());

    CHECK_THROWS_AS(hom_from_anchor(g, g, red.left_root, red.right_root),
                    std::invalid_argument);
    CHECK_THROWS_AS(hom_from_anchor(liwtest::folding_example().g, g, 0, red.left_root),
                    std::invalid_argument);
}

TEST_CASE("root modes of morphism search") {
    BliwGraph red = liwtest::folding_example_reduced();
    BliwGraph other = red;
    other.right_root = rv(other.g, "a");

    CHECK(find_hom(red, other, HomMode::left).has_value());
    CHECK_FALSE(find_hom(red, other, HomMode::full).has_value());
    CHECK_FALSE(find_hom(red, other, HomMode::right).has_value());
    CHECK(find_iso(red, other, HomMode::weak).has_value());
    CHECK_FALSE(is_isomorphic(red, other, HomMode::full));
    CHECK(is_isomorphic(red, red, HomMode::full));

    // The bare graphs are the same, so an unrooted isomorphism exists.
    CHECK(find_graph_iso(red.g, other.g).has_value());
}

TEST_CASE("the reduced folding example is rigid") {
    LiwGraph g = liwtest::folding_example_reduced().g;
    std::vector<Morphism> auts = automorphisms(g);
    REQUIRE(auts.size() == 1);
    CHECK(auts[0] == identity_on(g));
}

TEST_CASE("equal languages do not force a morphism") {
    auto [g1, g2] = liwtest::equal_language_pair();
    REQUIRE(validate_bliw(g1).ok);
    REQUIRE(validate_bliw(g2).ok);
    REQUIRE(is_reduced(g1.g));
    REQUIRE(is_reduced(g2.g));

    CHECK(language_equal(g1.g, g1.left_root, g1.right_root, g2.g, g2.left_root,
                         g2.right_root));

    // One left vertex of g1 reads both x and y; no vertex of g2 does.
    CHECK_FALSE(find_hom(g1, g2, HomMode::full).has_value());
    CHECK_FALSE(find_hom(g1, g2, HomMode::weak).has_value());
    // The other direction does carry a morphism, so the failure is one-sided.
    CHECK(find_hom(g2, g1, HomMode::full).has_value());
}
