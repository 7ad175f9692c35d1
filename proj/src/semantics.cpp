#include "liw/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace liw {

namespace {

Vertex find_elem(const GammaGraph& gg, Side side, Elem a) {
    for (Vertex v = 0; v < static_cast<Vertex>(gg.elem.size()); ++v)
        if (gg.g.side[v] == side && gg.elem[v] == a) return v;
    return -1;
}

}  // namespace

Vertex GammaGraph::left_vertex(Elem a) const { return find_elem(*this, Side::left, a); }
Vertex GammaGraph::right_vertex(Elem b) const { return find_elem(*this, Side::right, b); }

GammaGraph build_gamma_direct(const FiniteSemigroup& s, const GeneratorAssignment& gen,
                              const GreenSummary& gr, Elem e) {
    if (e < 0 || e >= s.size()) throw std::invalid_argument("gamma: element out of range");
    if (!is_idempotent(s, e))
        throw std::invalid_argument("gamma: " + s.name(e) + " is not idempotent");

    GammaGraph out;
    out.e = e;
    std::vector<Elem> lefts, rights;
    for (Elem a = 0; a < s.size(); ++a) {
        if (gr.l_related(a, e)) lefts.push_back(a);
        if (gr.r_related(a, e)) rights.push_back(a);
    }
    std::vector<Vertex> left_of(s.size(), -1), right_of(s.size(), -1);
    for (Elem a : lefts) {
        left_of[a] = out.g.add_vertex(Side::left, s.name(a));
        out.elem.push_back(a);
    }
    for (Elem b : rights) {
        right_of[b] = out.g.add_vertex(Side::right, s.name(b));
        out.elem.push_back(b);
    }

    for (Elem a : lefts)
        for (Elem b : inverses(s, a))
            if (right_of[b] != -1) out.g.add_line(left_of[a], right_of[b]);

    for (Elem a : lefts) {
        for (const BarLetter& bl : gen.bar_letters()) {
            Letter x = Letter::bar(bl);
            Elem w = sandwich_ext(s, gen.image(bl), gen.image(bl.partner()));
            if (s.mul(w, a) != a) continue;
            Elem matched = -1;
            for (Elem b : inverses(s, a)) {
                if (right_of[b] == -1 || s.mul(b, w) != b) continue;
                if (matched != -1)
                    throw std::logic_error("gamma: two matched inverses of " + s.name(a) +
                                           " for letter " + to_string(x));
                matched = b;
            }
            if (matched == -1)
                throw std::logic_error("gamma: no matched inverse of " + s.name(a) +
                                       " for letter " + to_string(x));
            Elem target = s.mul(matched, gen.image(bl));
            if (right_of[target] == -1)
                throw std::logic_error("gamma: arrow target " + s.name(target) +
                                       " escapes the right class of " + s.name(e));
            out.g.add_arrow(left_of[a], bl, right_of[target]);
        }
    }
    out.g.normalize();
    return out;
}

namespace {

/// Carries the graph of rep over to the (D-related) idempotent e by the
/// two-sided translation along a mediating element and its matched inverse.
GammaGraph translate_gamma(const FiniteSemigroup& s, const GreenSummary& gr,
                           const GammaGraph& rep, Elem e) {
    Elem a = -1;
    for (Elem c = 0; c < s.size(); ++c)
        if (gr.r_related(c, rep.e) && gr.l_related(c, e)) {
            a = c;
            break;
        }
    if (a == -1) throw std::logic_error("gamma translation: classes do not meet");
    Elem ainv = -1;
    for (Elem c : inverses(s, a))
        if (s.mul(a, c) == rep.e && s.mul(c, a) == e) {
            ainv = c;
            break;
        }
    if (ainv == -1) throw std::logic_error("gamma translation: no matched inverse");

    std::vector<Elem> new_elem(rep.elem.size());
    for (Vertex v = 0; v < static_cast<Vertex>(rep.elem.size()); ++v)
        new_elem[v] = rep.g.side[v] == Side::left ? s.mul(rep.elem[v], a)
                                                  : s.mul(ainv, rep.elem[v]);

    // Rebuild in the canonical order: left vertices ascending, then right.
    std::vector<Vertex> order;
    for (Vertex v = 0; v < static_cast<Vertex>(new_elem.size()); ++v) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](Vertex u, Vertex v) {
        bool lu = rep.g.side[u] == Side::left, lv = rep.g.side[v] == Side::left;
        if (lu != lv) return lu;
        return new_elem[u] < new_elem[v];
    });
    GammaGraph out;
    out.e = e;
    std::vector<Vertex> to_new(new_elem.size());
    for (Vertex nv = 0; nv < static_cast<Vertex>(order.size()); ++nv) {
        Vertex old = order[nv];
        to_new[old] = out.g.add_vertex(rep.g.side[old], s.name(new_elem[old]));
        out.elem.push_back(new_elem[old]);
    }
    for (const Line& ln : rep.g.lines) out.g.add_line(to_new[ln.first], to_new[ln.second]);
    for (const Arrow& ar : rep.g.arrows) out.g.add_arrow(to_new[ar.from], ar.label, to_new[ar.to]);
    out.g.normalize();
    return out;
}

}  // namespace

Context::Context(FiniteSemigroup s, GeneratorAssignment gen)
    : s_(std::move(s)), gen_(std::move(gen)) {
    SemigroupReport rep = validate(s_);
    if (!rep.ok)
        throw std::invalid_argument("context: invalid semigroup: " + rep.violations.front());
    SemigroupReport arep = validate_assignment(s_, gen_);
    if (!arep.ok)
        throw std::invalid_argument("context: invalid assignment: " + arep.violations.front());
    green_ = green(s_);
}

const GammaGraph& Context::gamma(Elem e) {
    auto it = gamma_cache_.find(e);
    if (it != gamma_cache_.end()) return it->second;
    if (e < 0 || e >= s_.size()) throw std::invalid_argument("gamma: element out of range");
    if (!is_idempotent(s_, e))
        throw std::invalid_argument("gamma: " + s_.name(e) + " is not idempotent");
    Elem rep = -1;
    for (Elem c = 0; c < s_.size(); ++c)
        if (is_idempotent(s_, c) && green_.d_related(c, e)) {
            rep = c;
            break;
        }
    if (rep == e) return gamma_cache_.emplace(e, build_gamma_direct(s_, gen_, green_, e))
                      .first->second;
    const GammaGraph& base = gamma(rep);
    return gamma_cache_.emplace(e, translate_gamma(s_, green_, base, e)).first->second;
}

const BliwRep& Context::bliw(Elem a) {
    auto it = bliw_cache_.find(a);
    if (it != bliw_cache_.end()) return it->second;
    if (a < 0 || a >= s_.size()) throw std::invalid_argument("bliw: element out of range");
    Elem e = -1;
    for (Elem c = 0; c < s_.size(); ++c)
        if (is_idempotent(s_, c) && green_.r_related(c, a)) {
            e = c;
            break;
        }
    if (e == -1)
        throw std::runtime_error("bliw: no idempotent in the R-class of " + s_.name(a));
    const GammaGraph& gg = gamma(e);
    BliwRep rep;
    rep.elem = a;
    rep.e = e;
    rep.graph.g = gg.g;
    rep.graph.left_root = gg.left_vertex(e);
    rep.graph.right_root = gg.right_vertex(a);
    if (rep.graph.left_root == -1 || rep.graph.right_root == -1)
        throw std::logic_error("bliw: roots missing from the graph of " + s_.name(e));
    return bliw_cache_.emplace(a, std::move(rep)).first->second;
}

bool r_via_graphs(Context& ctx, Elem a, Elem b) {
    return is_isomorphic(ctx.bliw(a).graph, ctx.bliw(b).graph, HomMode::left);
}

bool l_via_graphs(Context& ctx, Elem a, Elem b) {
    return is_isomorphic(ctx.bliw(a).graph, ctx.bliw(b).graph, HomMode::right);
}

bool h_via_graphs(Context& ctx, Elem a, Elem b) {
    const BliwGraph& ga = ctx.bliw(a).graph;
    const BliwGraph& gb = ctx.bliw(b).graph;
    return is_isomorphic(ga, gb, HomMode::left) && is_isomorphic(ga, gb, HomMode::right);
}

bool d_via_graphs(Context& ctx, Elem a, Elem b) {
    return is_isomorphic(ctx.bliw(a).graph, ctx.bliw(b).graph, HomMode::weak);
}

bool j_via_graphs(Context& ctx, Elem a, Elem b) {
    const BliwGraph& ga = ctx.bliw(a).graph;
    const BliwGraph& gb = ctx.bliw(b).graph;
    return find_hom(ga, gb, HomMode::weak).has_value() &&
           find_hom(gb, ga, HomMode::weak).has_value();
}

bool leq_via_graphs(Context& ctx, Elem t, Elem s) {
    return find_hom(ctx.bliw(s).graph, ctx.bliw(t).graph, HomMode::full).has_value();
}

bool leq_r_via_graphs(Context& ctx, Elem t, Elem s) {
    return find_hom(ctx.bliw(s).graph, ctx.bliw(t).graph, HomMode::left).has_value();
}

bool leq_l_via_graphs(Context& ctx, Elem t, Elem s) {
    return find_hom(ctx.bliw(s).graph, ctx.bliw(t).graph, HomMode::right).has_value();
}

bool leq_h_via_graphs(Context& ctx, Elem t, Elem s) {
    return leq_r_via_graphs(ctx, t, s) && leq_l_via_graphs(ctx, t, s);
}

bool leq_j_via_graphs(Context& ctx, Elem t, Elem s) {
    return find_hom(ctx.bliw(s).graph, ctx.bliw(t).graph, HomMode::weak).has_value();
}

namespace {

void require_idempotent(Context& ctx, Elem e, const char* who) {
    if (!is_idempotent(ctx.s(), e))
        throw std::invalid_argument(std::string(who) + ": " + ctx.s().name(e) +
                                    " is not idempotent");
}

}  // namespace

bool omega_r_via_graphs(Context& ctx, Elem e, Elem f) {
    require_idempotent(ctx, e, "omega_r_via_graphs");
    require_idempotent(ctx, f, "omega_r_via_graphs");
    return leq_r_via_graphs(ctx, e, f);
}

bool omega_l_via_graphs(Context& ctx, Elem e, Elem f) {
    require_idempotent(ctx, e, "omega_l_via_graphs");
    require_idempotent(ctx, f, "omega_l_via_graphs");
    return leq_l_via_graphs(ctx, e, f);
}

bool omega_via_graphs(Context& ctx, Elem e, Elem f) {
    return omega_r_via_graphs(ctx, e, f) && omega_l_via_graphs(ctx, e, f);
}

bool idempotent_via_graph(Context& ctx, Elem s) {
    const BliwGraph& a = ctx.bliw(s).graph;
    return a.g.has_line(a.left_root, a.right_root);
}

std::vector<Elem> inverses_via_graph(Context& ctx, Elem s) {
    const BliwGraph& a = ctx.bliw(s).graph;
    std::vector<Elem> out;
    for (Elem t = 0; t < ctx.s().size(); ++t) {
        const BliwGraph& b = ctx.bliw(t).graph;
        bool witness = false;
        for (Vertex w = 0; w < static_cast<Vertex>(b.g.side.size()) && !witness; ++w) {
            if (b.g.side[w] != Side::left) continue;
            auto m = hom_from_anchor(a.g, b.g, a.left_root, w);
            if (!m || !is_isomorphism(a.g, b.g, *m)) continue;
            witness = b.g.has_line((*m)(a.left_root), b.right_root) &&
                      b.g.has_line(b.left_root, (*m)(a.right_root));
        }
        if (witness) out.push_back(t);
    }
    return out;
}

namespace {

/// Disjoint union of the two graphs plus one bridging line; returns the
/// combined graph and the vertex offset of the second summand.
std::pair<BliwGraph, Vertex> disjoint_union(const BliwGraph& a1, const BliwGraph& a2) {
    BliwGraph out;
    for (Vertex v = 0; v < static_cast<Vertex>(a1.g.side.size()); ++v)
        out.g.add_vertex(a1.g.side[v], "1:" + a1.g.name[v]);
    Vertex off = static_cast<Vertex>(a1.g.side.size());
    for (Vertex v = 0; v < static_cast<Vertex>(a2.g.side.size()); ++v)
        out.g.add_vertex(a2.g.side[v], "2:" + a2.g.name[v]);
    for (const Line& ln : a1.g.lines) out.g.add_line(ln.first, ln.second);
    for (const Arrow& ar : a1.g.arrows) out.g.add_arrow(ar.from, ar.label, ar.to);
    for (const Line& ln : a2.g.lines) out.g.add_line(off + ln.first, off + ln.second);
    for (const Arrow& ar : a2.g.arrows) out.g.add_arrow(off + ar.from, ar.label, off + ar.to);
    out.left_root = a1.left_root;
    out.right_root = off + a2.right_root;
    return {out, off};
}

}  // namespace

BliwGraph wedge_raw(const BliwGraph& a1, const BliwGraph& a2) {
    auto [out, off] = disjoint_union(a1, a2);
    out.g.add_line(a1.left_root, off + a2.right_root);
    out.g.normalize();
    return out;
}

BliwGraph dot_raw(const BliwGraph& a1, const BliwGraph& a2) {
    auto [out, off] = disjoint_union(a1, a2);
    out.g.add_line(off + a2.left_root, a1.right_root);
    out.g.normalize();
    return out;
}

ReductionResult wedge(const BliwGraph& a1, const BliwGraph& a2) {
    return reduce(wedge_raw(a1, a2));
}

ReductionResult dot(const BliwGraph& a1, const BliwGraph& a2) {
    return reduce(dot_raw(a1, a2));
}

namespace {

void fail(UniversalReport& rep, std::string what) {
    rep.ok = false;
    rep.failures.push_back(std::move(what));
}

}  // namespace

UniversalReport verify_universal_properties(Context& ctx) {
    UniversalReport rep;
    const FiniteSemigroup& s = ctx.s();
    const int n = s.size();
    for (Elem p = 0; p < n; ++p) {
        for (Elem q = 0; q < n; ++q) {
            const std::string pq = "(" + s.name(p) + ", " + s.name(q) + ")";
            const BliwGraph& ap = ctx.bliw(p).graph;
            const BliwGraph& aq = ctx.bliw(q).graph;
            BliwGraph w = wedge(ap, aq).graph;
            BliwGraph d = dot(ap, aq).graph;
            Elem prod = s.mul(p, q);
            Elem meet = sandwich_ext(s, p, q);

            auto hd = find_hom(d, ctx.bliw(prod).graph, HomMode::full);
            ++rep.checks;
            if (!hd) fail(rep, "dot " + pq + ": no canonical morphism onto the product");
            auto hw = find_hom(w, ctx.bliw(meet).graph, HomMode::full);
            ++rep.checks;
            if (!hw) fail(rep, "wedge " + pq + ": no canonical morphism onto the meet");

            for (Elem a = 0; a < n; ++a) {
                auto hom_d = find_hom(d, ctx.bliw(a).graph, HomMode::full);
                bool below = natural_leq(s, a, prod);
                ++rep.checks;
                if (hom_d.has_value() != below)
                    fail(rep, "dot " + pq + " vs " + s.name(a) +
                                  ": morphism existence disagrees with the order");
                if (hom_d && hd) {
                    auto psi = find_hom(ctx.bliw(prod).graph, ctx.bliw(a).graph, HomMode::full);
                    ++rep.checks;
                    if (!psi || compose(*hd, *psi) != *hom_d)
                        fail(rep, "dot " + pq + " vs " + s.name(a) +
                                      ": morphism does not factor through the product");
                }
                auto hom_w = find_hom(w, ctx.bliw(a).graph, HomMode::full);
                bool under = is_idempotent(s, a) && s.mul(meet, a) == a && s.mul(a, meet) == a;
                ++rep.checks;
                if (hom_w.has_value() != under)
                    fail(rep, "wedge " + pq + " vs " + s.name(a) +
                                  ": morphism existence disagrees with the idempotent order");
                if (hom_w && hw) {
                    auto psi = find_hom(ctx.bliw(meet).graph, ctx.bliw(a).graph, HomMode::full);
                    ++rep.checks;
                    if (!psi || compose(*hw, *psi) != *hom_w)
                        fail(rep, "wedge " + pq + " vs " + s.name(a) +
                                      ": morphism does not factor through the meet");
                }
            }

            // Absorption read off root-adjacent one-sided morphisms.
            auto lh = find_hom(ap, aq, HomMode::left);
            bool absorb_right = lh && aq.g.has_line(aq.left_root, (*lh)(ap.right_root));
            ++rep.checks;
            if (absorb_right != (prod == q))
                fail(rep, "dot " + pq + ": right absorption witness disagrees");
            auto rh = find_hom(aq, ap, HomMode::right);
            bool absorb_left = rh && ap.g.has_line((*rh)(aq.left_root), ap.right_root);
            ++rep.checks;
            if (absorb_left != (prod == p))
                fail(rep, "dot " + pq + ": left absorption witness disagrees");
        }
    }
    return rep;
}

}  // namespace liw
