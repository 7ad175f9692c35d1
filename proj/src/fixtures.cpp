#include "liw/fixtures.hpp"

#include <array>
#include <stdexcept>

namespace liw {

namespace {

BarLetter L(const std::string& base, bool primed = false) { return {base, primed}; }

// Rees matrix construction over a trivial group with a zero: elements are
// the pairs (i, lam) for i in rows, lam in columns, listed row-major, plus a
// zero as the last element.  (i,lam)(j,mu) = (i,mu) when p[lam][j] = 1, else
// zero.
FiniteSemigroup rees_with_zero(int rows, int cols,
                               const std::vector<std::vector<int>>& p,
                               std::vector<std::string> names) {
    const int n = rows * cols + 1;
    const int zero = n - 1;
    FiniteSemigroup s;
    s.names = std::move(names);
    s.table.assign(n, std::vector<Elem>(n, zero));
    for (int i = 0; i < rows; ++i)
        for (int lam = 0; lam < cols; ++lam)
            for (int j = 0; j < rows; ++j)
                for (int mu = 0; mu < cols; ++mu)
                    if (p[lam][j])
                        s.table[i * cols + lam][j * cols + mu] = i * cols + mu;
    return s;
}

Fixture make_s1() {
    // 4x4 structure matrix; entry [lam][j] governs (.,lam)*(j,.).
    std::vector<std::vector<int>> p = {
        {1, 0, 0, 0},
        {1, 1, 1, 0},
        {0, 0, 1, 0},
        {0, 0, 1, 1},
    };
    std::vector<std::string> names = {
        "x'x", "x'",       "x'y'y",    "x'y'",     //
        "x",   "xx'",      "xx'y'y",   "xx'y'",    //
        "(y'^x')x", "(y'^x')", "y'y",  "y'",       //
        "y(y'^x')x", "y(y'^x')", "y",  "yy'",      //
        "0",
    };
    Fixture f;
    f.name = "s1";
    f.description = "17-element combinatorial semigroup with zero on {x, y}";
    f.s = rees_with_zero(4, 4, p, std::move(names));
    f.gen.images = {
        {L("x"), 4}, {L("x", true), 1}, {L("y"), 14}, {L("y", true), 11}};

    // Presentation: squares of generators vanish except the listed products;
    // x^2 acts as the zero.
    Presentation pres;
    pres.alphabet = {"x", "y"};
    auto bar = [](const BarLetter& l) { return Letter::bar(l); };
    const BarLetter x = L("x"), xp = L("x", true), y = L("y"), yp = L("y", true);
    const Word xx = {bar(x), bar(x)};
    const std::array<BarLetter, 4> barred = {x, xp, y, yp};

    pres.relations.push_back({{bar(xp)}, {bar(xp), bar(xp)}});
    pres.relations.push_back({{bar(yp)}, {bar(yp), bar(yp)}});
    pres.relations.push_back({{bar(xp)}, {bar(xp), Letter::wedge(yp, xp)}});
    pres.relations.push_back({{bar(yp)}, {Letter::wedge(yp, xp), bar(yp)}});

    std::vector<Letter> extended;
    for (const auto& a : barred) extended.push_back(bar(a));
    for (const auto& a : barred)
        for (const auto& b : barred) extended.push_back(Letter::wedge(a, b));
    for (const auto& z : extended) {
        pres.relations.push_back({xx, {bar(x), bar(x), z}});
        pres.relations.push_back({xx, {z, bar(x), bar(x)}});
    }
    // Two-letter products that fall to the zero: every pair except the seven
    // whose product survives.
    for (const auto& a : barred)
        for (const auto& b : barred) {
            bool survives = (a == xp && b == xp) || (a == yp && b == yp) ||
                            (a == xp && b == yp) || (b == a.partner());
            if (!survives) pres.relations.push_back({xx, {bar(a), bar(b)}});
        }
    f.pres = std::move(pres);
    return f;
}

Fixture make_s2() {
    // Normal forms u1 u2 u3 with u1, u3 in {empty, z'} and u2 in {z, zz};
    // the table is derived by resolving each concatenation of normal forms
    // with the word oracle.
    const Letter z = Letter::bar(L("z")), zp = Letter::bar(L("z", true));
    struct Nf {
        std::string name;
        Word w;
    };
    std::vector<Nf> nf = {
        {"z'zz", {zp, z, z}}, {"z'zzz'", {zp, z, z, zp}}, {"z'z", {zp, z}},
        {"z'", {zp}},         {"zz", {z, z}},             {"zzz'", {z, z, zp}},
        {"z", {z}},           {"zz'", {z, zp}},
    };
    const int n = static_cast<int>(nf.size());
    FiniteSemigroup s;
    for (const auto& e : nf) s.names.push_back(e.name);
    s.table.assign(n, std::vector<Elem>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Word prod = nf[i].w;
            prod.insert(prod.end(), nf[j].w.begin(), nf[j].w.end());
            for (int k = 0; k < n; ++k)
                if (s2_word_oracle(prod, nf[k].w)) {
                    if (s.table[i][j] != -1)
                        throw std::logic_error("s2: ambiguous normal form");
                    s.table[i][j] = k;
                }
            if (s.table[i][j] == -1) throw std::logic_error("s2: unresolved product");
        }

    Fixture f;
    f.name = "s2";
    f.description = "8-element completely simple semigroup on {z}";
    f.s = std::move(s);
    f.gen.images = {{L("z"), 6}, {L("z", true), 3}};

    Presentation pres;
    pres.alphabet = {"z"};
    pres.relations.push_back({{z}, {z, z, z}});
    pres.relations.push_back({{zp}, {zp, zp}});
    f.pres = std::move(pres);
    return f;
}

Fixture make_trivial() {
    Fixture f;
    f.name = "trivial";
    f.description = "one-element semigroup";
    f.s.names = {"e"};
    f.s.table = {{0}};
    f.gen.images = {{L("x"), 0}, {L("x", true), 0}};
    return f;
}

Fixture make_band22() {
    // (i,lam)(j,mu) = (i,mu); every element idempotent and self-inverse.
    Fixture f;
    f.name = "band22";
    f.description = "2x2 rectangular band";
    f.s.names = {"x", "xy", "yx", "y"};
    f.s.table.assign(4, std::vector<Elem>(4, 0));
    for (int i = 0; i < 2; ++i)
        for (int lam = 0; lam < 2; ++lam)
            for (int j = 0; j < 2; ++j)
                for (int mu = 0; mu < 2; ++mu)
                    f.s.table[2 * i + lam][2 * j + mu] = 2 * i + mu;
    f.gen.images = {
        {L("x"), 0}, {L("x", true), 0}, {L("y"), 3}, {L("y", true), 3}};
    return f;
}

Fixture make_b2() {
    // Matrix units: (i,j)(k,l) = (i,l) when j = k, else zero.
    Fixture f;
    f.name = "b2";
    f.description = "5-element Brandt semigroup";
    f.s.names = {"xx'", "x", "x'", "x'x", "0"};
    const int zero = 4;
    auto idx = [](int i, int j) { return 2 * i + j; };  // i,j in {0,1}
    f.s.table.assign(5, std::vector<Elem>(5, zero));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) f.s.table[idx(i, j)][idx(k, l)] = idx(i, l);
    f.gen.images = {{L("x"), idx(0, 1)}, {L("x", true), idx(1, 0)}};
    return f;
}

Fixture make_chain3() {
    Fixture f;
    f.name = "chain3";
    f.description = "3-element chain semilattice";
    f.s.names = {"a", "b", "c"};
    f.s.table.assign(3, std::vector<Elem>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) f.s.table[i][j] = std::min(i, j);
    f.gen.images = {{L("a"), 0}, {L("a", true), 0}, {L("b"), 1},
                    {L("b", true), 1}, {L("c"), 2}, {L("c", true), 2}};
    return f;
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> all = [] {
        std::vector<Fixture> v;
        v.push_back(make_s1());
        v.push_back(make_s2());
        v.push_back(make_trivial());
        v.push_back(make_band22());
        v.push_back(make_b2());
        v.push_back(make_chain3());
        return v;
    }();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const auto& f : builtin_fixtures())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace liw
