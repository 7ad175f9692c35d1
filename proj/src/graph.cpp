#include "liw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace liw {

Vertex LiwGraph::add_vertex(Side s, std::string display) {
    side.push_back(s);
    name.push_back(std::move(display));
    return size() - 1;
}

void LiwGraph::add_line(Vertex l, Vertex r) { lines.emplace_back(l, r); }

void LiwGraph::add_arrow(Vertex l, BarLetter label, Vertex r) {
    arrows.push_back({l, std::move(label), r});
}

void LiwGraph::normalize() {
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    std::sort(arrows.begin(), arrows.end());
    arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
}

bool LiwGraph::has_line(Vertex l, Vertex r) const {
    return std::find(lines.begin(), lines.end(), Line{l, r}) != lines.end();
}

bool LiwGraph::has_arrow(Vertex l, const BarLetter& x, Vertex r) const {
    return std::find(arrows.begin(), arrows.end(), Arrow{l, x, r}) != arrows.end();
}

std::vector<Vertex> LiwGraph::lines_at(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& [l, r] : lines) {
        if (l == v) out.push_back(r);
        if (r == v) out.push_back(l);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vertex> LiwGraph::left_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v)
        if (is_left(v)) out.push_back(v);
    return out;
}

std::vector<Vertex> LiwGraph::right_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v)
        if (is_right(v)) out.push_back(v);
    return out;
}

Vertex LiwGraph::by_name(Side s, const std::string& display) const {
    for (Vertex v = 0; v < size(); ++v)
        if (side[v] == s && name[v] == display) return v;
    return -1;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GraphReport validate_liw(const LiwGraph& g) {
    GraphReport rep;
    auto bad = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const int n = g.size();
    if (n == 0) {
        bad("graph has no vertices");
        return rep;
    }
    auto vname = [&g](Vertex v) {
        std::string s = g.name[v].empty() ? "#" + std::to_string(v) : g.name[v];
        return (g.is_left(v) ? "l:" : "r:") + s;
    };
    auto in_range = [n](Vertex v) { return v >= 0 && v < n; };

    for (const auto& [l, r] : g.lines) {
        if (!in_range(l) || !in_range(r)) {
            bad("line endpoint out of range");
            return rep;
        }
        if (!g.is_left(l) || !g.is_right(r))
            bad("line (" + vname(l) + ", " + vname(r) + ") must join a left to a right vertex");
    }
    for (const auto& ar : g.arrows) {
        if (!in_range(ar.from) || !in_range(ar.to)) {
            bad("arrow endpoint out of range");
            return rep;
        }
        if (!g.is_left(ar.from) || !g.is_right(ar.to))
            bad("arrow (" + vname(ar.from) + ", " + to_string(ar.label) + ", " + vname(ar.to) +
                ") must lead from a left to a right vertex");
    }
    if (!rep.ok) return rep;

    for (Vertex v = 0; v < n; ++v)
        if (content(g, v).empty()) bad("vertex " + vname(v) + " has empty content");

    // Every arrow (a,x,b) needs lines (a,b1), (a1,b) and an arrow (a1,x',b1).
    for (const auto& ar : g.arrows) {
        bool matched = false;
        for (Vertex b1 : g.lines_at(ar.from)) {
            for (Vertex a1 : g.lines_at(ar.to)) {
                if (g.has_arrow(a1, ar.label.partner(), b1)) {
                    matched = true;
                    break;
                }
            }
            if (matched) break;
        }
        if (!matched)
            bad("arrow (" + vname(ar.from) + ", " + to_string(ar.label) + ", " + vname(ar.to) +
                ") has no matching partner arrow across lines");
    }

    UnionFind uf(n);
    for (const auto& [l, r] : g.lines) uf.unite(l, r);
    for (const auto& ar : g.arrows) uf.unite(ar.from, ar.to);
    for (Vertex v = 1; v < n; ++v)
        if (uf.find(v) != uf.find(0)) {
            bad("graph is not connected");
            break;
        }
    return rep;
}

GraphReport validate_bliw(const BliwGraph& a) {
    GraphReport rep = validate_liw(a.g);
    auto bad = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    if (a.left_root < 0 || a.left_root >= a.g.size() || !a.g.is_left(a.left_root))
        bad("left root missing or not a left vertex");
    if (a.right_root < 0 || a.right_root >= a.g.size() || !a.g.is_right(a.right_root))
        bad("right root missing or not a right vertex");
    return rep;
}

std::vector<BarLetter> content(const LiwGraph& g, Vertex v) {
    std::vector<BarLetter> out;
    for (const auto& ar : g.arrows)
        if (ar.from == v || ar.to == v) out.push_back(ar.label);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GraphReport validate_walk(const LiwGraph& g, const Walk& p) {
    GraphReport rep;
    auto bad = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    if (p.from < 0 || p.from >= g.size()) {
        bad("walk start out of range");
        return rep;
    }
    Vertex at = p.from;
    for (size_t i = 0; i < p.steps.size(); ++i) {
        const WalkStep& st = p.steps[i];
        auto where = [&i] { return " at step " + std::to_string(i); };
        if (st.from != at) bad("walk is not connected" + where());
        switch (st.kind) {
            case WalkStep::Kind::arrow:
                if (!g.has_arrow(st.from, st.label, st.to)) bad("no such arrow" + where());
                break;
            case WalkStep::Kind::line_lr:
                if (!g.has_line(st.from, st.to)) bad("no such line" + where());
                break;
            case WalkStep::Kind::line_rl:
                if (!g.has_line(st.to, st.from)) bad("no such line" + where());
                break;
        }
        at = st.to;
        if (!rep.ok) return rep;
    }
    return rep;
}

bool word_labels_walk(const LiwGraph& g, const Walk& p, const Word& u) {
    if (!validate_walk(g, p).ok) throw std::invalid_argument("word_labels_walk: invalid walk");
    size_t pos = 0;
    for (const WalkStep& st : p.steps) {
        switch (st.kind) {
            case WalkStep::Kind::line_rl:
                break;  // reads nothing
            case WalkStep::Kind::arrow: {
                if (pos >= u.size()) return false;
                const Letter& l = u[pos++];
                if (l.is_wedge() || l.a != st.label) return false;
                break;
            }
            case WalkStep::Kind::line_lr: {
                if (pos >= u.size()) return false;
                const Letter& l = u[pos++];
                if (!l.is_wedge()) return false;
                auto cf = content(g, st.from), ct = content(g, st.to);
                if (!std::binary_search(cf.begin(), cf.end(), l.a)) return false;
                if (!std::binary_search(ct.begin(), ct.end(), l.b)) return false;
                break;
            }
        }
    }
    return pos == u.size();
}

std::pair<LiwGraph, std::vector<Vertex>> quotient(
    const LiwGraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    const int n = g.size();
    UnionFind uf(n);
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("quotient: vertex out of range");
        if (g.side[a] != g.side[b])
            throw std::invalid_argument("quotient: class mixes left and right vertices");
        uf.unite(a, b);
    }
    // After generating the equivalence, classes still must not mix sides;
    // with side-homogeneous pairs this holds automatically.

    std::vector<Vertex> map(n, -1);
    LiwGraph q;
    for (Vertex v = 0; v < n; ++v) {
        int root = uf.find(v);
        // Number classes by least member.
        Vertex least = v;
        for (Vertex w = 0; w < v; ++w)
            if (uf.find(w) == root) {
                least = w;
                break;
            }
        if (least == v)
            map[v] = q.add_vertex(g.side[v], g.name[v]);
        else
            map[v] = map[least];
    }
    for (const auto& [l, r] : g.lines) q.add_line(map[l], map[r]);
    for (const auto& ar : g.arrows) q.add_arrow(map[ar.from], ar.label, map[ar.to]);
    q.normalize();
    return {std::move(q), std::move(map)};
}

}  // namespace liw
