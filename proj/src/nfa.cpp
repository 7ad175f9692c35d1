#include "liw/nfa.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace liw {

namespace {

using Bits = std::vector<uint64_t>;

Bits make_bits(int n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, int i) { b[i / 64] |= uint64_t(1) << (i % 64); }
bool get_bit(const Bits& b, int i) { return (b[i / 64] >> (i % 64)) & 1; }
bool any_bit(const Bits& b) {
    for (uint64_t w : b)
        if (w) return true;
    return false;
}

// Compiled transition structure of a graph.
struct Compiled {
    int n;
    std::map<Letter, std::vector<std::pair<int, int>>> moves;  // consuming
    std::vector<std::pair<int, int>> eps;                      // right -> left

    explicit Compiled(const LiwGraph& g) : n(g.size()) {
        std::vector<std::vector<BarLetter>> cont(g.size());
        for (Vertex v = 0; v < g.size(); ++v) cont[v] = content(g, v);
        for (const auto& ar : g.arrows)
            moves[Letter::bar(ar.label)].emplace_back(ar.from, ar.to);
        for (const auto& [l, r] : g.lines) {
            eps.emplace_back(r, l);
            for (const auto& x : cont[l])
                for (const auto& y : cont[r])
                    moves[Letter::wedge(x, y)].emplace_back(l, r);
        }
    }

    Bits closure(Bits b) const {
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& [r, l] : eps)
                if (get_bit(b, r) && !get_bit(b, l)) {
                    set_bit(b, l);
                    grew = true;
                }
        }
        return b;
    }

    Bits closure_rev(Bits b) const {
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& [r, l] : eps)
                if (get_bit(b, l) && !get_bit(b, r)) {
                    set_bit(b, r);
                    grew = true;
                }
        }
        return b;
    }

    Bits step(const Bits& b, const Letter& z) const {
        Bits out = make_bits(n);
        auto it = moves.find(z);
        if (it != moves.end())
            for (const auto& [from, to] : it->second)
                if (get_bit(b, from)) set_bit(out, to);
        return out;
    }

    Bits step_rev(const Bits& b, const Letter& z) const {
        Bits out = make_bits(n);
        auto it = moves.find(z);
        if (it != moves.end())
            for (const auto& [from, to] : it->second)
                if (get_bit(b, to)) set_bit(out, from);
        return out;
    }
};

std::vector<Vertex> bits_to_vec(const Bits& b, int n) {
    std::vector<Vertex> out;
    for (int i = 0; i < n; ++i)
        if (get_bit(b, i)) out.push_back(i);
    return out;
}

void check_vertex(const LiwGraph& g, Vertex v, const char* who) {
    if (v < 0 || v >= g.size())
        throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

}  // namespace

Nfa to_nfa(const LiwGraph& g, Vertex from, Vertex to) {
    check_vertex(g, from, "to_nfa");
    check_vertex(g, to, "to_nfa");
    Compiled c(g);
    Nfa a;
    a.states = g.size();
    a.start = from;
    a.accept = to;
    a.epsilon = c.eps;
    for (const auto& [z, ms] : c.moves) {
        a.alphabet.push_back(z);
        for (const auto& [f, t] : ms) a.delta.emplace_back(f, z, t);
    }
    return a;
}

std::vector<Vertex> reachable_after(const LiwGraph& g, Vertex from, const Word& u) {
    check_vertex(g, from, "reachable_after");
    Compiled c(g);
    Bits b = make_bits(c.n);
    set_bit(b, from);
    b = c.closure(std::move(b));
    for (const Letter& z : u) {
        b = c.closure(c.step(b, z));
        if (!any_bit(b)) break;
    }
    return bits_to_vec(b, c.n);
}

std::vector<Vertex> reachable_before(const LiwGraph& g, Vertex to, const Word& u) {
    check_vertex(g, to, "reachable_before");
    Compiled c(g);
    Bits b = make_bits(c.n);
    set_bit(b, to);
    b = c.closure_rev(std::move(b));
    for (size_t i = u.size(); i-- > 0;) {
        b = c.closure_rev(c.step_rev(b, u[i]));
        if (!any_bit(b)) break;
    }
    return bits_to_vec(b, c.n);
}

bool member(const LiwGraph& g, Vertex from, Vertex to, const Word& u) {
    check_vertex(g, to, "member");
    auto reach = reachable_after(g, from, u);
    return std::find(reach.begin(), reach.end(), to) != reach.end();
}

bool language_included(const LiwGraph& g1, Vertex from1, Vertex to1,
                       const LiwGraph& g2, Vertex from2, Vertex to2) {
    check_vertex(g1, from1, "language_included");
    check_vertex(g1, to1, "language_included");
    check_vertex(g2, from2, "language_included");
    check_vertex(g2, to2, "language_included");
    if (g1.side[from1] != g2.side[from2] || g1.side[to1] != g2.side[to2])
        throw std::invalid_argument("language_included: endpoint sides do not match");

    Compiled c1(g1), c2(g2);
    Bits b1 = make_bits(c1.n), b2 = make_bits(c2.n);
    set_bit(b1, from1);
    set_bit(b2, from2);
    b1 = c1.closure(std::move(b1));
    b2 = c2.closure(std::move(b2));

    std::set<std::pair<Bits, Bits>> seen;
    std::vector<std::pair<Bits, Bits>> work{{b1, b2}};
    seen.insert(work.front());
    while (!work.empty()) {
        auto [s1, s2] = std::move(work.back());
        work.pop_back();
        if (get_bit(s1, to1) && !get_bit(s2, to2)) return false;
        // Only letters alive on the left side matter for inclusion.
        for (const auto& [z, ms] : c1.moves) {
            (void)ms;
            Bits n1 = c1.closure(c1.step(s1, z));
            if (!any_bit(n1)) continue;
            Bits n2 = c2.closure(c2.step(s2, z));
            auto pr = std::pair{std::move(n1), std::move(n2)};
            if (seen.insert(pr).second) work.push_back(std::move(pr));
        }
    }
    return true;
}

bool language_equal(const LiwGraph& g1, Vertex from1, Vertex to1,
                    const LiwGraph& g2, Vertex from2, Vertex to2) {
    return language_included(g1, from1, to1, g2, from2, to2) &&
           language_included(g2, from2, to2, g1, from1, to1);
}

}  // namespace liw
