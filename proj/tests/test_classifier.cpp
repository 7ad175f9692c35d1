#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "liw/classifier.hpp"
#include "liw/fixtures.hpp"
#include "test_fixtures.hpp"

using namespace liw;

namespace {

Context ctx_of(const std::string& name) {
    const Fixture& f = fixture(name);
    return Context(f.s, f.gen);
}

Elem el(const Context& ctx, const std::string& name) {
    auto e = ctx.s().by_name(name);
    REQUIRE(e.has_value());
    return *e;
}

bool row_value(const Classification& c, const std::string& property) {
    const ClassRow* r = c.row(property);
    REQUIRE(r != nullptr);
    CHECK(r->agree());
    return r->graph_side;
}

bool drow_value(const DClassReport& c, const std::string& property) {
    const ClassRow* r = c.row(property);
    REQUIRE(r != nullptr);
    CHECK(r->agree());
    return r->graph_side;
}

}  // namespace

TEST_CASE("line-structure helpers on a hand-built graph") {
    LiwGraph g = liwtest::folding_example_reduced().g;
    auto lv = [&](const char* n) { return g.by_name(Side::left, n); };
    auto rv = [&](const char* n) { return g.by_name(Side::right, n); };

    std::vector<int> comp = line_components(g);
    CHECK(comp[lv("a3")] == comp[rv("a")]);
    CHECK(comp[lv("b1")] == comp[rv("a")]);
    CHECK(comp[lv("b1")] == comp[rv("b2")]);
    CHECK(comp[lv("a1")] == comp[rv("a2")]);
    CHECK(comp[lv("a1")] != comp[lv("a3")]);
    CHECK(comp[lv("b3")] != comp[lv("b1")]);
    CHECK(std::set<int>(comp.begin(), comp.end()).size() == 3);

    CHECK(line_degree(g, rv("a")) == 2);
    CHECK(line_degree(g, lv("a1")) == 1);
    CHECK_FALSE(lines_connected(g));
    CHECK_FALSE(lines_complete_bipartite(g));
    // {a1, a2} and {b3, b4} are single lines; the third component is not
    // complete bipartite (a1 is missing from it, a3-b2 is missing in it).
    CHECK_FALSE(components_complete_bipartite(g));
    // Rigid graph with more than one vertex per side.
    CHECK_FALSE(vertex_transitive(g, Side::left));
    CHECK_FALSE(vertex_transitive(g, Side::right));
    CHECK_FALSE(line_transitive(g));
    CHECK_FALSE(almost_vertex_transitive(g));
    CHECK(contents_singleton(g));
}

TEST_CASE("every classifier row agrees across the built-in fixtures") {
    for (const auto& f : builtin_fixtures()) {
        Context ctx(f.s, f.gen);
        Classification c = f.pres ? classify(ctx, *f.pres) : classify(ctx);
        CAPTURE(f.name);
        for (const ClassRow& r : c.rows) {
            CAPTURE(r.property);
            CHECK(r.agree());
        }
        CHECK(c.all_agree());
        bool has_straight_row = c.row("straight") != nullptr;
        CHECK(has_straight_row == f.pres.has_value());
    }
}

TEST_CASE("classifier verdicts match the known nature of each fixture") {
    Context s1 = ctx_of("s1");
    Classification cs1 = classify(s1, *fixture("s1").pres);
    CHECK_FALSE(row_value(cs1, "inverse"));
    CHECK_FALSE(row_value(cs1, "completely regular"));
    CHECK_FALSE(row_value(cs1, "completely simple"));
    CHECK(row_value(cs1, "idempotent generated"));
    CHECK_FALSE(row_value(cs1, "straight"));  // the zero vertex reads all letters

    Context s2 = ctx_of("s2");
    Classification cs2 = classify(s2, *fixture("s2").pres);
    CHECK(row_value(cs2, "completely simple"));
    CHECK(row_value(cs2, "completely regular"));
    CHECK(row_value(cs2, "straight"));
    CHECK(row_value(cs2, "idempotent generated"));
    CHECK_FALSE(row_value(cs2, "Clifford"));
    CHECK_FALSE(row_value(cs2, "inverse"));
    CHECK_FALSE(row_value(cs2, "left generalized inverse"));

    Context b2 = ctx_of("b2");
    Classification cb2 = classify(b2);
    CHECK(row_value(cb2, "inverse"));
    CHECK(row_value(cb2, "generalized inverse"));
    CHECK(row_value(cb2, "E-solid"));
    CHECK_FALSE(row_value(cb2, "normal band"));
    CHECK_FALSE(row_value(cb2, "Clifford"));
    CHECK_FALSE(row_value(cb2, "idempotent generated"));  // x is not a product of idempotents

    Context band = ctx_of("band22");
    Classification cband = classify(band);
    CHECK(row_value(cband, "normal band"));
    CHECK(row_value(cband, "generalized inverse"));
    CHECK(row_value(cband, "completely simple"));
    CHECK_FALSE(row_value(cband, "inverse"));
    CHECK_FALSE(row_value(cband, "left generalized inverse"));
    CHECK_FALSE(row_value(cband, "right generalized inverse"));

    Context chain = ctx_of("chain3");
    Classification cchain = classify(chain);
    CHECK(row_value(cchain, "inverse"));
    CHECK(row_value(cchain, "Clifford"));
    CHECK(row_value(cchain, "normal band"));
    CHECK(row_value(cchain, "strict regular"));
    CHECK_FALSE(row_value(cchain, "completely simple"));

    Context triv = ctx_of("trivial");
    Classification ctriv = classify(triv);
    for (const ClassRow& r : ctriv.rows) {
        CAPTURE(r.property);
        CHECK(r.graph_side);
        CHECK(r.table_side);
    }
}

TEST_CASE("class-of-one-idempotent reports") {
    for (const auto& f : builtin_fixtures()) {
        Context ctx(f.s, f.gen);
        for (Elem e : idempotents(ctx.s())) {
            DClassReport rep = classify_dclass(ctx, e);
            CAPTURE(f.name);
            CAPTURE(ctx.s().name(e));
            CHECK(rep.e == e);
            for (const ClassRow& r : rep.rows) {
                CAPTURE(r.property);
                CHECK(r.agree());
            }
        }
    }

    Context band = ctx_of("band22");
    DClassReport dband = classify_dclass(band, el(band, "x"));
    CHECK(drow_value(dband, "rectangular band"));
    CHECK(drow_value(dband, "completely simple"));
    CHECK(drow_value(dband, "rectangular group"));
    CHECK_FALSE(drow_value(dband, "group"));

    Context s2 = ctx_of("s2");
    DClassReport ds2 = classify_dclass(s2, el(s2, "z'z"));
    CHECK(drow_value(ds2, "completely simple"));
    CHECK_FALSE(drow_value(ds2, "group"));
    CHECK_FALSE(drow_value(ds2, "left group"));
    CHECK_FALSE(drow_value(ds2, "rectangular band"));
    CHECK_FALSE(drow_value(ds2, "rectangular group"));

    Context b2 = ctx_of("b2");
    DClassReport dzero = classify_dclass(b2, el(b2, "0"));
    CHECK(drow_value(dzero, "group"));
    CHECK(drow_value(dzero, "rectangular band"));
    DClassReport dxx = classify_dclass(b2, el(b2, "xx'"));
    CHECK_FALSE(drow_value(dxx, "completely simple"));
    CHECK_FALSE(drow_value(dxx, "group"));

    CHECK_THROWS_AS(classify_dclass(b2, el(b2, "x")), std::invalid_argument);
}

TEST_CASE("core membership read from root components") {
    for (const char* name : {"s1", "s2", "b2", "chain3"}) {
        Context ctx = ctx_of(name);
        std::vector<Elem> c = core(ctx.s());
        for (Elem a = 0; a < ctx.s().size(); ++a) {
            bool in_core = std::binary_search(c.begin(), c.end(), a);
            CAPTURE(name);
            CAPTURE(ctx.s().name(a));
            CHECK(core_membership_via_graph(ctx, a) == in_core);
        }
    }
    // Everything in s1 is a product of idempotents; in b2 only the
    // idempotents themselves are.
    CHECK(core(fixture("s1").s).size() == 17);
    Context b2 = ctx_of("b2");
    CHECK_FALSE(core_membership_via_graph(b2, el(b2, "x")));
    CHECK(core_membership_via_graph(b2, el(b2, "0")));
}

TEST_CASE("contracting line components keeps one arc per label pair") {
    Context b2 = ctx_of("b2");
    ContractedGraph cb = contract_line_components(b2.gamma(el(b2, "xx'")).g);
    CHECK(cb.name.size() == 2);
    REQUIRE(cb.arcs.size() == 2);
    CHECK(cb.arcs[0].from != cb.arcs[0].to);  // the two components exchange letters
    CHECK(cb.arcs[1].from != cb.arcs[1].to);

    Context s1 = ctx_of("s1");
    ContractedGraph c1 = contract_line_components(s1.gamma(el(s1, "x'x")).g);
    CHECK(c1.name.size() == 1);
    CHECK(c1.arcs.size() == 4);  // one loop per doubled letter
    for (const Arrow& a : c1.arcs) {
        CHECK(a.from == 0);
        CHECK(a.to == 0);
    }
}
