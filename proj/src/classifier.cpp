#include "liw/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "liw/morphism.hpp"

namespace liw {

namespace {

Vertex vertex_count(const LiwGraph& g) { return static_cast<Vertex>(g.side.size()); }

bool adjacent(const LiwGraph& g, Vertex u, Vertex w) {
    if (g.side[u] == g.side[w]) return false;
    return g.side[u] == Side::left ? g.has_line(u, w) : g.has_line(w, u);
}

}  // namespace

std::vector<int> line_components(const LiwGraph& g) {
    std::vector<int> comp(g.side.size(), -1);
    int c = 0;
    for (Vertex v = 0; v < vertex_count(g); ++v) {
        if (comp[v] != -1) continue;
        std::vector<Vertex> work{v};
        comp[v] = c;
        while (!work.empty()) {
            Vertex u = work.back();
            work.pop_back();
            for (Vertex w : g.lines_at(u))
                if (comp[w] == -1) {
                    comp[w] = c;
                    work.push_back(w);
                }
        }
        ++c;
    }
    return comp;
}

int line_degree(const LiwGraph& g, Vertex v) {
    return static_cast<int>(g.lines_at(v).size());
}

bool lines_complete_bipartite(const LiwGraph& g) {
    for (Vertex l : g.left_vertices())
        for (Vertex r : g.right_vertices())
            if (!g.has_line(l, r)) return false;
    return true;
}

bool components_complete_bipartite(const LiwGraph& g) {
    std::vector<int> comp = line_components(g);
    for (Vertex l : g.left_vertices())
        for (Vertex r : g.right_vertices())
            if (comp[l] == comp[r] && !g.has_line(l, r)) return false;
    return true;
}

bool lines_connected(const LiwGraph& g) {
    std::vector<int> comp = line_components(g);
    return comp.empty() || *std::max_element(comp.begin(), comp.end()) == 0;
}

bool line_transitive(const LiwGraph& g) {
    if (g.lines.empty()) return true;
    std::vector<Morphism> auts = automorphisms(g);
    const Line& base = g.lines.front();
    for (const Line& f : g.lines) {
        bool hit = false;
        for (const Morphism& m : auts)
            if (m(base.first) == f.first && m(base.second) == f.second) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool vertex_transitive(const LiwGraph& g, Side side) {
    std::vector<Vertex> vs = side == Side::left ? g.left_vertices() : g.right_vertices();
    if (vs.empty()) return true;
    std::vector<Morphism> auts = automorphisms(g);
    for (Vertex w : vs) {
        bool hit = false;
        for (const Morphism& m : auts)
            if (m(vs.front()) == w) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool arrow_transitive(const LiwGraph& g) {
    if (g.arrows.empty()) return true;
    std::vector<Morphism> auts = automorphisms(g);
    for (const Arrow& base : g.arrows) {
        for (const Arrow& f : g.arrows) {
            if (f.label != base.label) continue;
            bool hit = false;
            for (const Morphism& m : auts)
                if (m(base.from) == f.from && m(base.to) == f.to) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
    }
    return true;
}

bool almost_vertex_transitive(const LiwGraph& g) {
    std::vector<Morphism> auts = automorphisms(g);
    for (Vertex v = 0; v < vertex_count(g); ++v) {
        std::vector<Vertex> orbit;
        for (const Morphism& m : auts) orbit.push_back(m(v));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (Vertex w = 0; w < vertex_count(g); ++w) {
            if (g.side[w] == g.side[v]) continue;
            bool hit = false;
            for (Vertex u : orbit)
                if (adjacent(g, u, w)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
    }
    return true;
}

bool components_almost_vertex_transitive(const LiwGraph& g) {
    std::vector<int> comp = line_components(g);
    std::vector<Morphism> auts = automorphisms(g);
    for (Vertex v = 0; v < vertex_count(g); ++v) {
        for (Vertex w = 0; w < vertex_count(g); ++w) {
            if (g.side[w] == g.side[v] || comp[w] != comp[v]) continue;
            bool hit = false;
            for (const Morphism& m : auts)
                if (adjacent(g, m(v), w)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
    }
    return true;
}

bool contents_singleton(const LiwGraph& g) {
    for (Vertex v = 0; v < vertex_count(g); ++v)
        if (content(g, v).size() != 1) return false;
    return true;
}

ContractedGraph contract_line_components(const LiwGraph& g) {
    std::vector<int> comp = line_components(g);
    ContractedGraph out;
    int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    out.name.assign(nc, "");
    for (Vertex v = 0; v < vertex_count(g); ++v) {
        if (!out.name[comp[v]].empty()) out.name[comp[v]] += "+";
        out.name[comp[v]] += g.name[v];
    }
    for (const Arrow& a : g.arrows) out.arcs.push_back({comp[a.from], a.label, comp[a.to]});
    std::sort(out.arcs.begin(), out.arcs.end());
    out.arcs.erase(std::unique(out.arcs.begin(), out.arcs.end()), out.arcs.end());
    return out;
}

bool core_membership_via_graph(Context& ctx, Elem a) {
    const BliwGraph& g = ctx.bliw(a).graph;
    std::vector<int> comp = line_components(g.g);
    return comp[g.left_root] == comp[g.right_root];
}

bool Classification::all_agree() const {
    return std::all_of(rows.begin(), rows.end(), [](const ClassRow& r) { return r.agree(); });
}

const ClassRow* Classification::row(const std::string& property) const {
    for (const ClassRow& r : rows)
        if (r.property == property) return &r;
    return nullptr;
}

bool DClassReport::all_agree() const {
    return std::all_of(rows.begin(), rows.end(), [](const ClassRow& r) { return r.agree(); });
}

const ClassRow* DClassReport::row(const std::string& property) const {
    for (const ClassRow& r : rows)
        if (r.property == property) return &r;
    return nullptr;
}

namespace {

bool equal_partitions(const std::vector<int>& p, const std::vector<int>& q) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if ((p[i] == p[j]) != (q[i] == q[j])) return false;
    return true;
}

bool idempotents_closed(const FiniteSemigroup& s, const std::vector<Elem>& es) {
    for (Elem e : es)
        for (Elem f : es)
            if (!is_idempotent(s, s.mul(e, f))) return false;
    return true;
}

// E satisfies efg = egf.
bool table_left_normal_idempotents(const FiniteSemigroup& s, const std::vector<Elem>& es) {
    for (Elem e : es)
        for (Elem f : es)
            for (Elem g : es)
                if (s.mul(s.mul(e, f), g) != s.mul(s.mul(e, g), f)) return false;
    return true;
}

// E satisfies efg = feg.
bool table_right_normal_idempotents(const FiniteSemigroup& s, const std::vector<Elem>& es) {
    for (Elem e : es)
        for (Elem f : es)
            for (Elem g : es)
                if (s.mul(s.mul(e, f), g) != s.mul(s.mul(f, e), g)) return false;
    return true;
}

// E satisfies efgh = egfh (for a band this is equivalent to normality).
bool table_normal_idempotents(const FiniteSemigroup& s, const std::vector<Elem>& es) {
    for (Elem e : es)
        for (Elem f : es)
            for (Elem g : es)
                for (Elem h : es)
                    if (s.mul(s.mul(e, f), s.mul(g, h)) != s.mul(s.mul(e, g), s.mul(f, h)))
                        return false;
    return true;
}

bool table_commuting_idempotents(const FiniteSemigroup& s, const std::vector<Elem>& es) {
    for (Elem e : es)
        for (Elem f : es)
            if (s.mul(e, f) != s.mul(f, e)) return false;
    return true;
}

bool table_completely_regular(const FiniteSemigroup& s, const GreenSummary& gr) {
    for (Elem a = 0; a < s.size(); ++a)
        if (!gr.h_related(a, s.mul(a, a))) return false;
    return true;
}

bool table_e_solid(const FiniteSemigroup& s, const GreenSummary& gr, const std::vector<Elem>& es) {
    for (Elem f : es)
        for (Elem e : es) {
            if (!gr.l_related(f, e)) continue;
            for (Elem g : es) {
                if (!gr.r_related(e, g)) continue;
                Elem fg = s.mul(f, g);
                bool has = false;
                for (Elem h : es)
                    if (gr.h_related(h, fg)) {
                        has = true;
                        break;
                    }
                if (!has) return false;
            }
        }
    return true;
}

// Every local submonoid eSe has equal H and D relations.
bool table_strict_regular(const FiniteSemigroup& s, const std::vector<Elem>& es) {
    for (Elem e : es) {
        std::vector<Elem> members;
        for (Elem t = 0; t < s.size(); ++t)
            if (s.mul(e, t) == t && s.mul(t, e) == t) members.push_back(t);
        FiniteSemigroup sub = subsemigroup(s, members);
        GreenSummary gr = green(sub);
        if (!equal_partitions(gr.h_class, gr.d_class)) return false;
    }
    return true;
}

Classification classify_impl(Context& ctx, const Presentation* pres) {
    const FiniteSemigroup& s = ctx.s();
    const GreenSummary& gr = ctx.green_summary();
    std::vector<Elem> es = idempotents(s);

    auto all_gammas = [&](auto pred) {
        for (Elem e : es)
            if (!pred(ctx.gamma(e).g)) return false;
        return true;
    };
    auto all_degree_one = [&](const LiwGraph& g, std::vector<Vertex> vs) {
        for (Vertex v : vs)
            if (line_degree(g, v) != 1) return false;
        return true;
    };

    Classification out;
    auto add = [&](std::string property, bool graph_side, bool table_side) {
        out.rows.push_back({std::move(property), graph_side, table_side});
    };

    add("inverse",
        all_gammas([&](const LiwGraph& g) {
            return all_degree_one(g, g.left_vertices()) && all_degree_one(g, g.right_vertices());
        }),
        table_commuting_idempotents(s, es));
    add("left generalized inverse",
        all_gammas([&](const LiwGraph& g) { return all_degree_one(g, g.left_vertices()); }),
        idempotents_closed(s, es) && table_left_normal_idempotents(s, es));
    add("right generalized inverse",
        all_gammas([&](const LiwGraph& g) { return all_degree_one(g, g.right_vertices()); }),
        idempotents_closed(s, es) && table_right_normal_idempotents(s, es));
    add("generalized inverse", all_gammas(components_complete_bipartite),
        idempotents_closed(s, es) && table_normal_idempotents(s, es));

    bool all_idem = true;
    for (Elem a = 0; a < s.size(); ++a) all_idem = all_idem && is_idempotent(s, a);
    add("normal band", all_gammas(lines_complete_bipartite),
        all_idem && table_normal_idempotents(s, es));

    add("idempotent generated", all_gammas(lines_connected),
        static_cast<int>(core(s).size()) == s.size());
    add("Clifford", all_gammas(line_transitive), equal_partitions(gr.h_class, gr.d_class));
    add("left Clifford",
        all_gammas([&](const LiwGraph& g) { return vertex_transitive(g, Side::right); }),
        equal_partitions(gr.l_class, gr.d_class));
    add("right Clifford",
        all_gammas([&](const LiwGraph& g) { return vertex_transitive(g, Side::left); }),
        equal_partitions(gr.r_class, gr.d_class));
    add("strict regular", all_gammas(arrow_transitive), table_strict_regular(s, es));
    add("completely regular", all_gammas(almost_vertex_transitive),
        table_completely_regular(s, gr));
    add("E-solid", all_gammas(components_almost_vertex_transitive), table_e_solid(s, gr, es));

    bool gammas_isomorphic = true;
    for (std::size_t i = 1; i < es.size() && gammas_isomorphic; ++i)
        gammas_isomorphic =
            find_graph_iso(ctx.gamma(es.front()).g, ctx.gamma(es[i]).g).has_value();
    add("completely simple", gammas_isomorphic && all_gammas(almost_vertex_transitive),
        gr.n_d == 1 && table_completely_regular(s, gr));

    if (pres != nullptr)
        add("straight", all_gammas(contents_singleton), is_x_straight(*pres));
    return out;
}

}  // namespace

Classification classify(Context& ctx) { return classify_impl(ctx, nullptr); }

Classification classify(Context& ctx, const Presentation& pres) {
    return classify_impl(ctx, &pres);
}

DClassReport classify_dclass(Context& ctx, Elem e) {
    const FiniteSemigroup& s = ctx.s();
    const GreenSummary& gr = ctx.green_summary();
    if (!is_idempotent(s, e))
        throw std::invalid_argument("classify_dclass: " + s.name(e) + " is not idempotent");
    const LiwGraph& g = ctx.gamma(e).g;

    std::vector<Elem> d;
    for (Elem a = 0; a < s.size(); ++a)
        if (gr.d_related(a, e)) d.push_back(a);

    bool closed = true, single_l = true, single_r = true, all_idem = true, rect = true;
    for (Elem a : d) {
        if (!gr.l_related(a, e)) single_l = false;
        if (!gr.r_related(a, e)) single_r = false;
        if (!is_idempotent(s, a)) all_idem = false;
        for (Elem b : d) {
            if (!gr.d_related(s.mul(a, b), e)) closed = false;
            if (s.mul(s.mul(a, b), a) != a) rect = false;
        }
    }
    bool idem_products_idem = true;
    for (Elem a : d) {
        if (!is_idempotent(s, a)) continue;
        for (Elem b : d)
            if (is_idempotent(s, b) && !is_idempotent(s, s.mul(a, b)))
                idem_products_idem = false;
    }

    DClassReport out;
    out.e = e;
    auto add = [&](std::string property, bool graph_side, bool table_side) {
        out.rows.push_back({std::move(property), graph_side, table_side});
    };
    add("rectangular band", lines_complete_bipartite(g), all_idem && closed && rect);
    add("group", line_transitive(g), single_l && single_r);
    add("left group", vertex_transitive(g, Side::right), single_l);
    add("right group", vertex_transitive(g, Side::left), single_r);
    add("completely simple", almost_vertex_transitive(g), closed);
    add("rectangular group", almost_vertex_transitive(g) && components_complete_bipartite(g),
        closed && idem_products_idem);
    return out;
}

}  // namespace liw
