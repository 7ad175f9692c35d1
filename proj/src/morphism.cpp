#include "liw/morphism.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "liw/nfa.hpp"
#include "liw/reduction.hpp"

namespace liw {

bool is_morphism(const LiwGraph& g, const LiwGraph& h, const Morphism& m) {
    if (static_cast<int>(m.map.size()) != g.size()) return false;
    for (Vertex v = 0; v < g.size(); ++v) {
        Vertex w = m.map[v];
        if (w < 0 || w >= h.size() || g.side[v] != h.side[w]) return false;
    }
    for (const auto& [l, r] : g.lines)
        if (!h.has_line(m.map[l], m.map[r])) return false;
    for (const auto& ar : g.arrows)
        if (!h.has_arrow(m.map[ar.from], ar.label, m.map[ar.to])) return false;
    return true;
}

bool is_isomorphism(const LiwGraph& g, const LiwGraph& h, const Morphism& m) {
    if (!is_morphism(g, h, m)) return false;
    if (g.size() != h.size()) return false;
    std::vector<bool> hit(h.size(), false);
    for (Vertex w : m.map) {
        if (hit[w]) return false;
        hit[w] = true;
    }
    // Injective vertex maps make the edge maps injective; equal counts then
    // give edge surjectivity.
    return g.lines.size() == h.lines.size() && g.arrows.size() == h.arrows.size();
}

Morphism compose(const Morphism& f, const Morphism& g) {
    Morphism out;
    out.map.reserve(f.map.size());
    for (Vertex v : f.map) out.map.push_back(g.map[v]);
    return out;
}

namespace {

// Tracing without re-validating reducedness (the public entry points check).
std::optional<Vertex> trace_dir(const LiwGraph& g, Vertex v, const Word& u, bool forward) {
    auto reach = forward ? reachable_after(g, v, u) : reachable_before(g, v, u);
    std::optional<Vertex> found;
    for (Vertex w : reach) {
        if (forward ? !g.is_right(w) : !g.is_left(w)) continue;
        if (found) throw std::logic_error("trace: end vertex not unique (graph not reduced?)");
        found = w;
    }
    return found;
}

void require_reduced(const LiwGraph& g, const char* who) {
    if (!is_reduced(g)) throw std::invalid_argument(std::string(who) + ": graph is not reduced");
}

BarLetter least(const std::vector<BarLetter>& v) { return v.front(); }

// Canonical walk words from the anchor to every vertex (forward) and from
// every vertex to the anchor (backward), found by breadth-first search.
// Line steps read the least sandwich letter available from the sorted
// contents.
struct WalkWords {
    std::vector<Word> to;    // anchor -> v, meaningful for right v
    std::vector<Word> from;  // v -> anchor, meaningful for left v
};

WalkWords canonical_words(const LiwGraph& g, Vertex anchor) {
    const int n = g.size();
    std::vector<std::vector<BarLetter>> cont(n);
    for (Vertex v = 0; v < n; ++v) cont[v] = content(g, v);

    WalkWords ww;
    ww.to.assign(n, {});
    ww.from.assign(n, {});

    std::vector<bool> seen(n, false);
    std::deque<Vertex> q{anchor};
    seen[anchor] = true;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        auto push = [&](Vertex w, Word word) {
            if (seen[w]) return;
            seen[w] = true;
            ww.to[w] = std::move(word);
            q.push_back(w);
        };
        if (g.is_left(v)) {
            for (const auto& ar : g.arrows)
                if (ar.from == v) {
                    Word w = ww.to[v];
                    w.push_back(Letter::bar(ar.label));
                    push(ar.to, std::move(w));
                }
            for (const auto& [l, r] : g.lines)
                if (l == v) {
                    Word w = ww.to[v];
                    w.push_back(Letter::wedge(least(cont[l]), least(cont[r])));
                    push(r, std::move(w));
                }
        } else {
            for (const auto& [l, r] : g.lines)
                if (r == v) push(l, ww.to[v]);  // read nothing
        }
    }

    std::fill(seen.begin(), seen.end(), false);
    q = {anchor};
    seen[anchor] = true;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        auto push = [&](Vertex w, Word word) {
            if (seen[w]) return;
            seen[w] = true;
            ww.from[w] = std::move(word);
            q.push_back(w);
        };
        if (g.is_right(v)) {
            for (const auto& ar : g.arrows)
                if (ar.to == v) {
                    Word w = {Letter::bar(ar.label)};
                    w.insert(w.end(), ww.from[v].begin(), ww.from[v].end());
                    push(ar.from, std::move(w));
                }
            for (const auto& [l, r] : g.lines)
                if (r == v) {
                    Word w = {Letter::wedge(least(cont[l]), least(cont[r]))};
                    w.insert(w.end(), ww.from[v].begin(), ww.from[v].end());
                    push(l, std::move(w));
                }
        } else {
            for (const auto& [l, r] : g.lines)
                if (l == v) push(r, ww.from[v]);
        }
    }
    return ww;
}

std::optional<Morphism> hom_from_anchor_unchecked(const LiwGraph& g, const LiwGraph& h,
                                                  Vertex anchor, Vertex image) {
    WalkWords ww = canonical_words(g, anchor);
    Morphism m;
    m.map.assign(g.size(), -1);
    for (Vertex v = 0; v < g.size(); ++v) {
        auto img = g.is_right(v) ? trace_dir(h, image, ww.to[v], true)
                                 : trace_dir(h, image, ww.from[v], false);
        if (!img) return std::nullopt;
        m.map[v] = *img;
    }
    if (!is_morphism(g, h, m)) return std::nullopt;
    return m;
}

}  // namespace

std::optional<Vertex> trace_forward(const LiwGraph& g, Vertex v, const Word& u) {
    require_reduced(g, "trace_forward");
    return trace_dir(g, v, u, true);
}

std::optional<Vertex> trace_backward(const LiwGraph& g, Vertex v, const Word& u) {
    require_reduced(g, "trace_backward");
    return trace_dir(g, v, u, false);
}

std::optional<Morphism> hom_from_anchor(const LiwGraph& g, const LiwGraph& h, Vertex anchor,
                                        Vertex image) {
    if (anchor < 0 || anchor >= g.size() || image < 0 || image >= h.size())
        throw std::invalid_argument("hom_from_anchor: vertex out of range");
    if (g.side[anchor] != h.side[image])
        throw std::invalid_argument("hom_from_anchor: anchor and image on different sides");
    require_reduced(g, "hom_from_anchor");
    require_reduced(h, "hom_from_anchor");
    return hom_from_anchor_unchecked(g, h, anchor, image);
}

std::optional<Morphism> find_hom(const BliwGraph& a, const BliwGraph& b, HomMode mode) {
    require_reduced(a.g, "find_hom");
    require_reduced(b.g, "find_hom");
    switch (mode) {
        case HomMode::full: {
            auto m = hom_from_anchor_unchecked(a.g, b.g, a.left_root, b.left_root);
            if (m && m->map[a.right_root] == b.right_root) return m;
            return std::nullopt;
        }
        case HomMode::left:
            return hom_from_anchor_unchecked(a.g, b.g, a.left_root, b.left_root);
        case HomMode::right:
            return hom_from_anchor_unchecked(a.g, b.g, a.right_root, b.right_root);
        case HomMode::weak:
            for (Vertex w : b.g.left_vertices())
                if (auto m = hom_from_anchor_unchecked(a.g, b.g, a.left_root, w)) return m;
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Morphism> find_iso(const BliwGraph& a, const BliwGraph& b, HomMode mode) {
    require_reduced(a.g, "find_iso");
    require_reduced(b.g, "find_iso");
    auto check = [&](std::optional<Morphism> m) -> std::optional<Morphism> {
        if (m && is_isomorphism(a.g, b.g, *m)) return m;
        return std::nullopt;
    };
    switch (mode) {
        case HomMode::full: {
            auto m = hom_from_anchor_unchecked(a.g, b.g, a.left_root, b.left_root);
            if (m && m->map[a.right_root] != b.right_root) return std::nullopt;
            return check(std::move(m));
        }
        case HomMode::left:
            return check(hom_from_anchor_unchecked(a.g, b.g, a.left_root, b.left_root));
        case HomMode::right:
            return check(hom_from_anchor_unchecked(a.g, b.g, a.right_root, b.right_root));
        case HomMode::weak:
            for (Vertex w : b.g.left_vertices())
                if (auto m = check(hom_from_anchor_unchecked(a.g, b.g, a.left_root, w))) return m;
            return std::nullopt;
    }
    return std::nullopt;
}

bool is_isomorphic(const BliwGraph& a, const BliwGraph& b, HomMode mode) {
    return find_iso(a, b, mode).has_value();
}

std::optional<Morphism> find_graph_iso(const LiwGraph& g, const LiwGraph& h) {
    require_reduced(g, "find_graph_iso");
    require_reduced(h, "find_graph_iso");
    if (g.size() == 0 || h.size() == 0) return std::nullopt;
    for (Vertex w = 0; w < h.size(); ++w) {
        if (h.side[w] != g.side[0]) continue;
        auto m = hom_from_anchor_unchecked(g, h, 0, w);
        if (m && is_isomorphism(g, h, *m)) return m;
    }
    return std::nullopt;
}

std::vector<Morphism> automorphisms(const LiwGraph& g) {
    require_reduced(g, "automorphisms");
    std::vector<Morphism> out;
    if (g.size() == 0) return out;
    for (Vertex w = 0; w < g.size(); ++w) {
        if (g.side[w] != g.side[0]) continue;
        auto m = hom_from_anchor_unchecked(g, g, 0, w);
        if (m && is_isomorphism(g, g, *m)) out.push_back(std::move(*m));
    }
    return out;
}

}  // namespace liw
