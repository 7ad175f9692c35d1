#include "liw/reduction.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace liw {

namespace {

// Distinct (left, right-end) continuations of basic paths through `anchor`
// with label x: for a right anchor, line (l, anchor) then arrow (l, x, b);
// for a left anchor, arrow (l, x, b) then line (anchor, b).
std::vector<std::pair<Vertex, Vertex>> continuations(const LiwGraph& g, Vertex anchor,
                                                     const BarLetter& x, bool right_anchor) {
    std::set<std::pair<Vertex, Vertex>> out;
    for (const auto& ar : g.arrows) {
        if (ar.label != x) continue;
        if (right_anchor) {
            if (g.has_line(ar.from, anchor)) out.insert({ar.from, ar.to});
        } else {
            if (g.has_line(anchor, ar.to)) out.insert({ar.from, ar.to});
        }
    }
    return {out.begin(), out.end()};
}

std::vector<BarLetter> labels_of(const LiwGraph& g) {
    std::vector<BarLetter> ls;
    for (const auto& ar : g.arrows) ls.push_back(ar.label);
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
}

std::optional<Violation> violation_at(const LiwGraph& g, Vertex anchor, const BarLetter& x,
                                      bool right_anchor) {
    auto conts = continuations(g, anchor, x, right_anchor);
    if (conts.size() < 2) return std::nullopt;
    Violation v;
    v.kind = right_anchor ? Violation::Kind::determination : Violation::Kind::injection;
    v.anchor = anchor;
    v.label = x;
    v.left_pair = {conts[0].first, conts[1].first};
    v.right_pair = {conts[0].second, conts[1].second};
    return v;
}

}  // namespace

bool is_deterministic(const LiwGraph& g) {
    for (Vertex r : g.right_vertices())
        for (const auto& x : labels_of(g))
            if (continuations(g, r, x, true).size() > 1) return false;
    return true;
}

bool is_injective(const LiwGraph& g) {
    for (Vertex l : g.left_vertices())
        for (const auto& x : labels_of(g))
            if (continuations(g, l, x, false).size() > 1) return false;
    return true;
}

bool is_reduced(const LiwGraph& g) { return is_deterministic(g) && is_injective(g); }

std::vector<Violation> find_violations(const LiwGraph& g) {
    std::vector<Violation> out;
    auto labels = labels_of(g);
    for (Vertex r : g.right_vertices())
        for (const auto& x : labels)
            if (auto v = violation_at(g, r, x, true)) out.push_back(*v);
    for (Vertex l : g.left_vertices())
        for (const auto& x : labels)
            if (auto v = violation_at(g, l, x, false)) out.push_back(*v);
    return out;
}

namespace {

std::pair<BliwGraph, std::vector<Vertex>> apply_violation(const BliwGraph& a,
                                                          const Violation& v) {
    auto [q, map] = quotient(a.g, {v.left_pair, v.right_pair});
    BliwGraph out{std::move(q), map[a.left_root], map[a.right_root]};
    return {std::move(out), std::move(map)};
}

}  // namespace

std::pair<BliwGraph, std::vector<Vertex>> elementary_determination(const BliwGraph& a,
                                                                   const Violation& v) {
    if (v.kind != Violation::Kind::determination)
        throw std::invalid_argument("elementary_determination: wrong violation kind");
    return apply_violation(a, v);
}

std::pair<BliwGraph, std::vector<Vertex>> elementary_injection(const BliwGraph& a,
                                                               const Violation& v) {
    if (v.kind != Violation::Kind::injection)
        throw std::invalid_argument("elementary_injection: wrong violation kind");
    return apply_violation(a, v);
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

// Worklist-based run: merges are tracked in a union-find over the original
// vertices; edges are read through the class map, and after each merge only
// the neighborhood of the merged classes is rescanned.
ReductionResult reduce_worklist(const BliwGraph& a) {
    const LiwGraph& g = a.g;
    const int n = g.size();
    UnionFind uf(n);
    auto labels = labels_of(g);

    // Class-level continuations through the class of `anchor`.
    auto class_conts = [&](Vertex anchor, const BarLetter& x, bool right_anchor) {
        std::set<std::pair<Vertex, Vertex>> out;
        int ac = uf.find(anchor);
        for (const auto& ar : g.arrows) {
            if (ar.label != x) continue;
            int from = uf.find(ar.from), to = uf.find(ar.to);
            for (const auto& [l, r] : g.lines) {
                if (right_anchor) {
                    if (uf.find(l) == from && uf.find(r) == ac) out.insert({from, to});
                } else {
                    if (uf.find(l) == ac && uf.find(r) == to) out.insert({from, to});
                }
            }
        }
        return std::vector<std::pair<Vertex, Vertex>>(out.begin(), out.end());
    };

    auto least_of_class = [&](Vertex v) {
        int c = uf.find(v);
        for (Vertex w = 0; w < n; ++w)
            if (uf.find(w) == c) return w;
        return v;
    };
    auto class_name = [&](Vertex v) {
        Vertex w = least_of_class(v);
        return g.name[w].empty() ? "#" + std::to_string(w) : g.name[w];
    };

    std::deque<std::pair<bool, Vertex>> work;  // (right_anchor?, vertex)
    for (Vertex r : g.right_vertices()) work.emplace_back(true, r);
    for (Vertex l : g.left_vertices()) work.emplace_back(false, l);

    std::vector<std::pair<Vertex, Vertex>> merged_pairs;
    std::vector<ReductionStep> log;

    auto enqueue_neighborhood = [&](std::initializer_list<Vertex> classes) {
        for (Vertex c : classes) {
            for (Vertex v = 0; v < n; ++v) {
                if (uf.find(v) != uf.find(c)) continue;
                work.emplace_back(g.is_right(v), v);
                for (const auto& [l, r] : g.lines) {
                    if (l == v) work.emplace_back(true, r);
                    if (r == v) work.emplace_back(false, l);
                }
                for (const auto& ar : g.arrows) {
                    if (ar.from == v) work.emplace_back(true, ar.to);
                    if (ar.to == v) work.emplace_back(false, ar.from);
                }
            }
        }
    };

    while (!work.empty()) {
        auto [right_anchor, anchor] = work.front();
        work.pop_front();
        for (const auto& x : labels) {
            auto conts = class_conts(anchor, x, right_anchor);
            if (conts.size() < 2) continue;
            auto [l1, b1] = conts[0];
            auto [l2, b2] = conts[1];
            if (g.side[l1] != g.side[l2] || g.side[b1] != g.side[b2])
                throw std::logic_error("reduce: merge would mix sides");
            ReductionStep step;
            step.kind = right_anchor ? Violation::Kind::determination : Violation::Kind::injection;
            step.merged_left = {class_name(l1), class_name(l2)};
            step.merged_right = {class_name(b1), class_name(b2)};
            log.push_back(std::move(step));
            merged_pairs.push_back({l1, l2});
            merged_pairs.push_back({b1, b2});
            uf.unite(l1, l2);
            uf.unite(b1, b2);
            enqueue_neighborhood({l1, b1});
            work.emplace_back(right_anchor, anchor);  // more pairs may remain
            break;
        }
    }

    auto [q, map] = quotient(g, merged_pairs);
    ReductionResult res;
    res.graph = {std::move(q), map[a.left_root], map[a.right_root]};
    res.vertex_map = std::move(map);
    res.log = std::move(log);

    if (!find_violations(res.graph.g).empty())
        throw std::logic_error("reduce: worklist missed a violation");
    return res;
}

// Full-rescan run driven by a picker; used to explore different resolution
// orders.
ReductionResult reduce_picked(const BliwGraph& a, const std::function<size_t(size_t)>& picker) {
    BliwGraph cur = a;
    std::vector<Vertex> total(a.g.size());
    std::iota(total.begin(), total.end(), 0);
    std::vector<ReductionStep> log;

    while (true) {
        auto vs = find_violations(cur.g);
        if (vs.empty()) break;
        size_t idx = picker(vs.size());
        if (idx >= vs.size()) throw std::invalid_argument("reduce: picker index out of range");
        const Violation& v = vs[idx];
        ReductionStep step;
        step.kind = v.kind;
        auto nm = [&cur](Vertex w) {
            return cur.g.name[w].empty() ? "#" + std::to_string(w) : cur.g.name[w];
        };
        step.merged_left = {nm(v.left_pair.first), nm(v.left_pair.second)};
        step.merged_right = {nm(v.right_pair.first), nm(v.right_pair.second)};
        log.push_back(std::move(step));

        auto [next, map] = apply_violation(cur, v);
        for (auto& t : total) t = map[t];
        cur = std::move(next);
    }
    return {std::move(cur), std::move(total), std::move(log)};
}

}  // namespace

ReductionResult reduce(const BliwGraph& a, const std::function<size_t(size_t)>& picker) {
    if (picker) return reduce_picked(a, picker);
    return reduce_worklist(a);
}

}  // namespace liw
