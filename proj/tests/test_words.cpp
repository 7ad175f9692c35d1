#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "liw/fixtures.hpp"
#include "liw/words.hpp"
#include "test_fixtures.hpp"

using namespace liw;
using liwtest::bl;

TEST_CASE("word parsing and printing round-trip") {
    Word w = parse_word("x' (y'^x') y'");
    REQUIRE(w.size() == 3);
    CHECK(w[0] == Letter::bar(bl("x", true)));
    CHECK(w[1] == Letter::wedge(bl("y", true), bl("x", true)));
    CHECK(w[2] == Letter::bar(bl("y", true)));
    CHECK(to_string(w) == "x'(y'^x')y'");
    CHECK(parse_word(to_string(w)) == w);

    CHECK(parse_word("").empty());
    CHECK(to_string(Word{}) == "1");
    CHECK(parse_word("q2q2'") == Word{Letter::bar(bl("q2")), Letter::bar(bl("q2", true))});

    CHECK_THROWS_AS(parse_word("(x^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x^y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("3x"), std::invalid_argument);
}

TEST_CASE("boundary letters see through sandwich letters") {
    Word w = parse_word("(y'^x')x");
    Boundary b = first_last(w);
    CHECK(b.first_hat == Letter::wedge(bl("y", true), bl("x", true)));
    CHECK(b.last_hat == Letter::bar(bl("x")));
    CHECK(b.first == bl("y", true));
    CHECK(b.last == bl("x"));

    Boundary b2 = first_last(parse_word("x(a^b)"));
    CHECK(b2.first == bl("x"));
    CHECK(b2.last == bl("b"));

    CHECK_THROWS_AS(first_last(Word{}), std::invalid_argument);
}

TEST_CASE("formal inverse: shape") {
    CHECK(formal_inverse(parse_word("x")) == parse_word("x'"));
    CHECK(formal_inverse(parse_word("x'")) == parse_word("x"));
    CHECK(formal_inverse(parse_word("xy")) == parse_word("y'(y^x)x'"));
    CHECK(formal_inverse(parse_word("(a^b)")) == parse_word("(b'^b)(a^a')"));
    CHECK(formal_inverse(Word{}).empty());
}

TEST_CASE("formal inverse: the value is always an inverse of the original value") {
    std::mt19937 rng(20240811);
    for (const Fixture& f : builtin_fixtures()) {
        CAPTURE(f.name);
        // The extended alphabet over the fixture's generators.
        std::vector<Letter> alphabet;
        for (const BarLetter& a : f.gen.bar_letters()) alphabet.push_back(Letter::bar(a));
        for (const BarLetter& a : f.gen.bar_letters())
            for (const BarLetter& b : f.gen.bar_letters())
                alphabet.push_back(Letter::wedge(a, b));
        std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
        std::uniform_int_distribution<int> len(1, 6);
        for (int trial = 0; trial < 60; ++trial) {
            Word u;
            int n = len(rng);
            for (int i = 0; i < n; ++i) u.push_back(alphabet[pick(rng)]);
            Elem a = evaluate(u, f.s, f.gen);
            Elem b = evaluate(formal_inverse(u), f.s, f.gen);
            std::vector<Elem> inv = inverses(f.s, a);
            CAPTURE(to_string(u));
            CHECK(std::count(inv.begin(), inv.end(), b) == 1);
        }
    }
}

TEST_CASE("evaluation in the 17-element fixture") {
    const Fixture& f = fixture("s1");
    auto val = [&](const char* text) { return evaluate(parse_word(text), f.s, f.gen); };
    CHECK(val("x'x") == *f.s.by_name("x'x"));
    CHECK(val("(y'^x')") == *f.s.by_name("(y'^x')"));
    CHECK(val("xx'y'y") == *f.s.by_name("xx'y'y"));
    CHECK(val("xx") == *f.s.by_name("0"));
    CHECK(val("x'(y'^x')") == val("x'"));
    CHECK(val("x'(y'^x')y'") == *f.s.by_name("x'y'"));
    CHECK_THROWS_AS(evaluate(Word{}, f.s, f.gen), std::invalid_argument);
    CHECK_THROWS_AS(val("w"), std::invalid_argument);  // unassigned letter
}

TEST_CASE("the bundled presentations hold in their fixtures") {
    const Fixture& s1 = fixture("s1");
    const Fixture& s2 = fixture("s2");
    CHECK(check_presentation(*s1.pres, s1.s, s1.gen));
    CHECK(check_presentation(*s2.pres, s2.s, s2.gen));

    // A perturbed relation is detected.
    Presentation broken = *s2.pres;
    broken.relations.push_back({parse_word("z"), parse_word("zz")});
    CHECK_FALSE(check_presentation(broken, s2.s, s2.gen));
}

TEST_CASE("straightness is a boundary condition on relations") {
    CHECK(is_x_straight(*fixture("s2").pres));
    CHECK_FALSE(is_x_straight(*fixture("s1").pres));
    Presentation p;
    p.relations.push_back({parse_word("x(y^x)x"), parse_word("xx")});
    CHECK(is_x_straight(p));
    p.relations.push_back({parse_word("xy"), parse_word("xx")});
    CHECK_FALSE(is_x_straight(p));
}

TEST_CASE("the single-generator word oracle") {
    auto same = [](const char* u, const char* v) {
        return s2_word_oracle(parse_word(u), parse_word(v));
    };
    CHECK(same("zzz", "z"));
    CHECK(same("z'z'", "z'"));
    CHECK_FALSE(same("zz", "z"));
    CHECK_FALSE(same("z'z", "z'"));
    CHECK_FALSE(same("z'z", "zz'"));
    // Sandwich letters flatten into their components.
    CHECK(same("(z^z')", "zz'"));
    CHECK(same("z(z'^z)z", "zz'zz"));
    CHECK_THROWS_AS(s2_word_oracle(parse_word("x"), parse_word("z")), std::invalid_argument);
}
