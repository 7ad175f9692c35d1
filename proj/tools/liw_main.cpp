// Command-line front end: build canonical graphs from semigroup fixtures or
// files, reduce graphs, search morphisms, decide relations, classify, and
// export DOT.  Exit codes: 0 success or positive decision, 1 negative
// decision, 2 input error.
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "liw/classifier.hpp"
#include "liw/fixtures.hpp"
#include "liw/io.hpp"
#include "liw/morphism.hpp"
#include "liw/nfa.hpp"
#include "liw/reduction.hpp"
#include "liw/semantics.hpp"
#include "liw/words.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct SemigroupSource {
    std::string fixture_name;
    std::string file;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--fixture", fixture_name,
                        "builtin fixture (s1, s2, trivial, band22, b2, chain3)");
        cmd->add_option("--semigroup", file, "semigroup file path");
    }

    bool present() const { return !fixture_name.empty() || !file.empty(); }

    liw::SemigroupFile load_raw(std::optional<liw::Presentation>* pres_out = nullptr) const {
        if (!fixture_name.empty() && !file.empty())
            throw std::runtime_error("give either --fixture or --semigroup, not both");
        if (!fixture_name.empty()) {
            const liw::Fixture& f = liw::fixture(fixture_name);
            if (pres_out) *pres_out = f.pres;
            return {f.s, f.gen};
        }
        if (!file.empty()) return liw::parse_semigroup(liw::read_file(file));
        throw std::runtime_error("need --fixture or --semigroup");
    }

    liw::Context load(std::optional<liw::Presentation>* pres_out = nullptr) const {
        liw::SemigroupFile sf = load_raw(pres_out);
        return liw::Context(std::move(sf.s), std::move(sf.gen));
    }
};

liw::Elem elem_of(liw::Context& ctx, const std::string& text) {
    if (auto e = ctx.s().by_name(text)) return *e;
    return liw::evaluate(liw::parse_word(text), ctx.s(), ctx.gen());
}

std::pair<liw::Side, std::string> split_ref(const std::string& ref) {
    if (ref.rfind("l:", 0) == 0) return {liw::Side::left, ref.substr(2)};
    if (ref.rfind("r:", 0) == 0) return {liw::Side::right, ref.substr(2)};
    throw std::runtime_error("vertex reference must look like l:<name> or r:<name>: " + ref);
}

liw::Vertex vertex_ref(const liw::LiwGraph& g, const std::string& ref) {
    auto [side, name] = split_ref(ref);
    liw::Vertex v = g.by_name(side, name);
    if (v < 0) throw std::runtime_error("no vertex " + ref);
    return v;
}

std::string ref_name(const liw::LiwGraph& g, liw::Vertex v) {
    return (g.side[v] == liw::Side::left ? "l:" : "r:") + g.name[v];
}

void print_morphism(const liw::LiwGraph& g, const liw::LiwGraph& h, const liw::Morphism& m) {
    for (liw::Vertex v = 0; v < static_cast<liw::Vertex>(g.side.size()); ++v)
        std::cout << ref_name(g, v) << " -> " << ref_name(h, m(v)) << "\n";
}

liw::HomMode mode_of(const std::string& name) {
    if (name == "full") return liw::HomMode::full;
    if (name == "left") return liw::HomMode::left;
    if (name == "right") return liw::HomMode::right;
    if (name == "weak") return liw::HomMode::weak;
    throw std::runtime_error("unknown mode '" + name + "' (full, left, right, weak)");
}

liw::BliwGraph load_graph_file(const std::string& path) {
    return liw::parse_graph(liw::read_file(path));
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"birooted locally inverse word graphs"};
    app.require_subcommand(1);
    std::function<int()> action;

    {  // validate
        auto* cmd = app.add_subcommand("validate", "check a semigroup or a graph file");
        auto src = std::make_shared<SemigroupSource>();
        auto graph_file = std::make_shared<std::string>();
        src->add_options(cmd);
        cmd->add_option("--graph", *graph_file, "graph file to validate instead");
        cmd->callback([&action, src, graph_file] {
            action = [src, graph_file]() -> int {
                if (!graph_file->empty()) {
                    liw::BliwGraph g = load_graph_file(*graph_file);
                    liw::GraphReport rep =
                        g.left_root >= 0 ? liw::validate_bliw(g) : liw::validate_liw(g.g);
                    for (const std::string& v : rep.violations) std::cout << v << "\n";
                    std::cout << (rep.ok ? "valid" : "invalid") << "\n";
                    return rep.ok ? kYes : kNo;
                }
                liw::SemigroupFile sf = src->load_raw();
                liw::SemigroupReport rep = liw::validate(sf.s);
                for (const std::string& v : rep.violations) std::cout << v << "\n";
                bool ok = rep.ok;
                if (ok) {
                    liw::SemigroupReport arep = liw::validate_assignment(sf.s, sf.gen);
                    for (const std::string& v : arep.violations) std::cout << v << "\n";
                    bool li = liw::is_locally_inverse(sf.s);
                    std::cout << "elements " << sf.s.size() << "\n";
                    std::cout << "idempotents " << liw::idempotents(sf.s).size() << "\n";
                    std::cout << "locally inverse " << yn(li) << "\n";
                    ok = arep.ok && li;
                }
                std::cout << (ok ? "valid" : "invalid") << "\n";
                return ok ? kYes : kNo;
            };
        });
    }

    {  // gamma
        auto* cmd = app.add_subcommand("gamma", "canonical graph of an idempotent");
        auto src = std::make_shared<SemigroupSource>();
        auto idem = std::make_shared<std::string>();
        auto dot = std::make_shared<bool>(false);
        src->add_options(cmd);
        cmd->add_option("--idempotent", *idem, "idempotent element (name or word)")->required();
        cmd->add_flag("--export-dot", *dot, "emit DOT instead of graph text");
        cmd->callback([&action, src, idem, dot] {
            action = [src, idem, dot]() -> int {
                liw::Context ctx = src->load();
                const liw::GammaGraph& gg = ctx.gamma(elem_of(ctx, *idem));
                std::cout << (*dot ? liw::emit_dot(gg.g) : liw::emit_graph(gg.g));
                return kYes;
            };
        });
    }

    {  // bliw
        auto* cmd = app.add_subcommand("bliw", "birooted representation of an element");
        auto src = std::make_shared<SemigroupSource>();
        auto elem = std::make_shared<std::string>();
        auto dot = std::make_shared<bool>(false);
        src->add_options(cmd);
        cmd->add_option("--element", *elem, "element (name or word)")->required();
        cmd->add_flag("--export-dot", *dot, "emit DOT instead of graph text");
        cmd->callback([&action, src, elem, dot] {
            action = [src, elem, dot]() -> int {
                liw::Context ctx = src->load();
                const liw::BliwRep& rep = ctx.bliw(elem_of(ctx, *elem));
                std::cout << (*dot ? liw::emit_dot(rep.graph) : liw::emit_graph(rep.graph));
                return kYes;
            };
        });
    }

    {  // reduce
        auto* cmd = app.add_subcommand("reduce", "reduce a graph file");
        auto graph_file = std::make_shared<std::string>();
        auto trace = std::make_shared<bool>(false);
        auto dot = std::make_shared<bool>(false);
        cmd->add_option("--graph", *graph_file, "graph file")->required();
        cmd->add_flag("--trace", *trace, "log each elementary step to stderr");
        cmd->add_flag("--export-dot", *dot, "emit DOT instead of graph text");
        cmd->callback([&action, graph_file, trace, dot] {
            action = [graph_file, trace, dot]() -> int {
                liw::BliwGraph a = load_graph_file(*graph_file);
                bool rooted = a.left_root >= 0;
                if (!rooted) {
                    std::vector<liw::Vertex> ls = a.g.left_vertices(), rs = a.g.right_vertices();
                    if (ls.empty() || rs.empty())
                        throw std::runtime_error("graph needs vertices on both sides");
                    a.left_root = ls.front();
                    a.right_root = rs.front();
                }
                liw::GraphReport rep = liw::validate_liw(a.g);
                if (!rep.ok) throw std::runtime_error("invalid graph: " + rep.violations.front());
                liw::ReductionResult r = liw::reduce(a);
                if (*trace)
                    for (const liw::ReductionStep& st : r.log)
                        std::cerr << (st.kind == liw::Violation::Kind::determination
                                          ? "determination"
                                          : "injection")
                                  << " left " << st.merged_left.first << "="
                                  << st.merged_left.second << " right "
                                  << st.merged_right.first << "=" << st.merged_right.second
                                  << "\n";
                if (!rooted) r.graph.left_root = r.graph.right_root = -1;
                std::cout << (*dot ? liw::emit_dot(r.graph) : liw::emit_graph(r.graph));
                return kYes;
            };
        });
    }

    {  // hom
        auto* cmd = app.add_subcommand("hom", "find a root-preserving morphism between graphs");
        auto mode = std::make_shared<std::string>("full");
        auto files = std::make_shared<std::vector<std::string>>();
        cmd->add_option("--mode", *mode, "full | left | right | weak (default full)");
        cmd->add_option("--graph", *files, "two graph files, source then target")
            ->expected(2)
            ->required();
        cmd->callback([&action, mode, files] {
            action = [mode, files]() -> int {
                liw::BliwGraph a = load_graph_file((*files)[0]);
                liw::BliwGraph b = load_graph_file((*files)[1]);
                if (a.left_root < 0 || b.left_root < 0)
                    throw std::runtime_error("both graphs need roots sections");
                auto m = liw::find_hom(a, b, mode_of(*mode));
                if (!m) {
                    std::cout << "none\n";
                    return kNo;
                }
                print_morphism(a.g, b.g, *m);
                return kYes;
            };
        });
    }

    {  // iso
        auto* cmd = app.add_subcommand("iso", "decide isomorphism of graphs");
        auto src = std::make_shared<SemigroupSource>();
        auto gammas = std::make_shared<std::vector<std::string>>();
        auto files = std::make_shared<std::vector<std::string>>();
        auto mode = std::make_shared<std::string>("full");
        src->add_options(cmd);
        cmd->add_option("--gamma", *gammas, "two idempotents whose canonical graphs to compare");
        cmd->add_option("--graph", *files, "two graph files");
        cmd->add_option("--mode", *mode, "root mode for rooted graph files (default full)");
        cmd->callback([&action, src, gammas, files, mode] {
            action = [src, gammas, files, mode]() -> int {
                std::optional<liw::Morphism> m;
                if (gammas->size() == 2) {
                    liw::Context ctx = src->load();
                    const liw::LiwGraph& g1 = ctx.gamma(elem_of(ctx, (*gammas)[0])).g;
                    const liw::LiwGraph& g2 = ctx.gamma(elem_of(ctx, (*gammas)[1])).g;
                    m = liw::find_graph_iso(g1, g2);
                    if (m) print_morphism(g1, g2, *m);
                } else if (files->size() == 2) {
                    liw::BliwGraph a = load_graph_file((*files)[0]);
                    liw::BliwGraph b = load_graph_file((*files)[1]);
                    if (a.left_root >= 0 && b.left_root >= 0)
                        m = liw::find_iso(a, b, mode_of(*mode));
                    else
                        m = liw::find_graph_iso(a.g, b.g);
                    if (m) print_morphism(a.g, b.g, *m);
                } else {
                    throw std::runtime_error("need two --gamma idempotents or two --graph files");
                }
                if (!m) {
                    std::cout << "none\n";
                    return kNo;
                }
                return kYes;
            };
        });
    }

    {  // aut
        auto* cmd = app.add_subcommand("aut", "list automorphisms of a reduced graph");
        auto src = std::make_shared<SemigroupSource>();
        auto idem = std::make_shared<std::string>();
        auto graph_file = std::make_shared<std::string>();
        src->add_options(cmd);
        cmd->add_option("--idempotent", *idem, "idempotent element (with --fixture/--semigroup)");
        cmd->add_option("--graph", *graph_file, "graph file");
        cmd->callback([&action, src, idem, graph_file] {
            action = [src, idem, graph_file]() -> int {
                liw::LiwGraph g;
                if (!graph_file->empty()) {
                    g = load_graph_file(*graph_file).g;
                } else {
                    liw::Context ctx = src->load();
                    g = ctx.gamma(elem_of(ctx, *idem)).g;
                }
                std::vector<liw::Morphism> auts = liw::automorphisms(g);
                std::cout << "automorphisms " << auts.size() << "\n";
                for (const liw::Morphism& m : auts) {
                    for (liw::Vertex v = 0; v < static_cast<liw::Vertex>(g.side.size()); ++v)
                        std::cout << (v ? "  " : "") << ref_name(g, v) << "->"
                                  << ref_name(g, m(v));
                    std::cout << "\n";
                }
                return kYes;
            };
        });
    }

    {  // green
        auto* cmd = app.add_subcommand("green", "Green's relations from the table");
        auto src = std::make_shared<SemigroupSource>();
        auto check = std::make_shared<bool>(false);
        src->add_options(cmd);
        cmd->add_flag("--check", *check, "verify graph-side verdicts against the table");
        cmd->callback([&action, src, check] {
            action = [src, check]() -> int {
                liw::Context ctx = src->load();
                const liw::GreenSummary& gr = ctx.green_summary();
                for (liw::Elem a = 0; a < ctx.s().size(); ++a)
                    std::cout << ctx.s().name(a) << ": R=" << gr.r_class[a]
                              << " L=" << gr.l_class[a] << " H=" << gr.h_class[a]
                              << " D=" << gr.d_class[a] << " J=" << gr.j_class[a] << "\n";
                if (!*check) return kYes;
                long mismatches = 0;
                for (liw::Elem a = 0; a < ctx.s().size(); ++a)
                    for (liw::Elem b = 0; b < ctx.s().size(); ++b) {
                        if (liw::r_via_graphs(ctx, a, b) != gr.r_related(a, b)) ++mismatches;
                        if (liw::l_via_graphs(ctx, a, b) != gr.l_related(a, b)) ++mismatches;
                        if (liw::h_via_graphs(ctx, a, b) != gr.h_related(a, b)) ++mismatches;
                        if (liw::d_via_graphs(ctx, a, b) != gr.d_related(a, b)) ++mismatches;
                        if (liw::j_via_graphs(ctx, a, b) != gr.j_related(a, b)) ++mismatches;
                    }
                std::cout << "graph agreement: "
                          << (mismatches == 0 ? "ok" : std::to_string(mismatches) + " mismatches")
                          << "\n";
                return mismatches == 0 ? kYes : kNo;
            };
        });
    }

    {  // order
        auto* cmd = app.add_subcommand("order", "natural partial order");
        auto src = std::make_shared<SemigroupSource>();
        auto below = std::make_shared<std::string>();
        auto above = std::make_shared<std::string>();
        auto check = std::make_shared<bool>(false);
        src->add_options(cmd);
        cmd->add_option("--below", *below, "candidate smaller element");
        cmd->add_option("--above", *above, "candidate larger element");
        cmd->add_flag("--check", *check, "verify graph-side verdicts against the table");
        cmd->callback([&action, src, below, above, check] {
            action = [src, below, above, check]() -> int {
                liw::Context ctx = src->load();
                const liw::FiniteSemigroup& s = ctx.s();
                if (!below->empty() || !above->empty()) {
                    if (below->empty() || above->empty())
                        throw std::runtime_error("--below and --above go together");
                    liw::Elem t = elem_of(ctx, *below), u = elem_of(ctx, *above);
                    bool table = liw::natural_leq(s, t, u);
                    bool graph = liw::leq_via_graphs(ctx, t, u);
                    if (table != graph) {
                        std::cerr << "internal disagreement between table and graphs\n";
                        return kError;
                    }
                    std::cout << yn(table) << "\n";
                    return table ? kYes : kNo;
                }
                for (liw::Elem t = 0; t < s.size(); ++t)
                    for (liw::Elem u = 0; u < s.size(); ++u)
                        if (t != u && liw::natural_leq(s, t, u))
                            std::cout << s.name(t) << " < " << s.name(u) << "\n";
                if (*check) {
                    long mismatches = 0;
                    for (liw::Elem t = 0; t < s.size(); ++t)
                        for (liw::Elem u = 0; u < s.size(); ++u)
                            if (liw::leq_via_graphs(ctx, t, u) != liw::natural_leq(s, t, u))
                                ++mismatches;
                    std::cout << "graph agreement: "
                              << (mismatches == 0 ? "ok"
                                                  : std::to_string(mismatches) + " mismatches")
                              << "\n";
                    if (mismatches != 0) return kNo;
                }
                return kYes;
            };
        });
    }

    {  // member
        auto* cmd = app.add_subcommand("member", "decide word membership between two vertices");
        auto src = std::make_shared<SemigroupSource>();
        auto idem = std::make_shared<std::string>();
        auto graph_file = std::make_shared<std::string>();
        auto from = std::make_shared<std::string>();
        auto to = std::make_shared<std::string>();
        auto word_text = std::make_shared<std::string>();
        src->add_options(cmd);
        cmd->add_option("--idempotent", *idem,
                        "idempotent whose canonical graph to use (defaults to the element "
                        "naming --from, if idempotent)");
        cmd->add_option("--graph", *graph_file, "graph file to use instead");
        cmd->add_option("--from", *from, "start vertex, l:<name> or r:<name>")->required();
        cmd->add_option("--to", *to, "end vertex, l:<name> or r:<name>")->required();
        cmd->add_option("--word", *word_text, "word over the doubled alphabet; empty for the "
                                              "empty word")
            ->required();
        cmd->callback([&action, src, idem, graph_file, from, to, word_text] {
            action = [src, idem, graph_file, from, to, word_text]() -> int {
                liw::LiwGraph g;
                if (!graph_file->empty()) {
                    g = load_graph_file(*graph_file).g;
                } else {
                    liw::Context ctx = src->load();
                    std::string ename = idem->empty() ? split_ref(*from).second : *idem;
                    g = ctx.gamma(elem_of(ctx, ename)).g;
                }
                liw::Vertex a = vertex_ref(g, *from), b = vertex_ref(g, *to);
                liw::Word w = liw::parse_word(*word_text);
                bool in = liw::member(g, a, b, w);
                std::cout << (in ? "member" : "not member") << "\n";
                return in ? kYes : kNo;
            };
        });
    }

    {  // wedge and dot-product
        for (bool is_wedge : {true, false}) {
            auto* cmd = app.add_subcommand(is_wedge ? "wedge" : "dot-product",
                                           is_wedge
                                               ? "reduced join bridging left root to right root"
                                               : "reduced join realizing the product");
            auto src = std::make_shared<SemigroupSource>();
            auto elems = std::make_shared<std::vector<std::string>>();
            auto dot = std::make_shared<bool>(false);
            src->add_options(cmd);
            cmd->add_option("--element", *elems, "the two operands")->expected(2)->required();
            cmd->add_flag("--export-dot", *dot, "emit DOT instead of graph text");
            cmd->callback([&action, src, elems, dot, is_wedge] {
                action = [src, elems, dot, is_wedge]() -> int {
                    liw::Context ctx = src->load();
                    liw::Elem p = elem_of(ctx, (*elems)[0]);
                    liw::Elem q = elem_of(ctx, (*elems)[1]);
                    liw::ReductionResult r = is_wedge
                                                 ? liw::wedge(ctx.bliw(p).graph, ctx.bliw(q).graph)
                                                 : liw::dot(ctx.bliw(p).graph, ctx.bliw(q).graph);
                    liw::Elem val = is_wedge ? liw::sandwich_ext(ctx.s(), p, q)
                                             : ctx.s().mul(p, q);
                    std::cout << "# " << (is_wedge ? "meet " : "product ") << ctx.s().name(val)
                              << "\n";
                    std::cout << (*dot ? liw::emit_dot(r.graph) : liw::emit_graph(r.graph));
                    return kYes;
                };
            });
        }
    }

    {  // classify
        auto* cmd = app.add_subcommand("classify", "graph-side classes vs table-side oracles");
        auto src = std::make_shared<SemigroupSource>();
        src->add_options(cmd);
        cmd->callback([&action, src] {
            action = [src]() -> int {
                std::optional<liw::Presentation> pres;
                liw::Context ctx = src->load(&pres);
                liw::Classification c = pres ? liw::classify(ctx, *pres) : liw::classify(ctx);
                for (const liw::ClassRow& r : c.rows)
                    std::cout << r.property << ": graph=" << yn(r.graph_side)
                              << " table=" << yn(r.table_side)
                              << (r.agree() ? "" : "  MISMATCH") << "\n";
                return c.all_agree() ? kYes : kNo;
            };
        });
    }

    {  // export-dot
        auto* cmd = app.add_subcommand("export-dot", "emit DOT for a graph");
        auto src = std::make_shared<SemigroupSource>();
        auto idem = std::make_shared<std::string>();
        auto elem = std::make_shared<std::string>();
        auto graph_file = std::make_shared<std::string>();
        src->add_options(cmd);
        cmd->add_option("--idempotent", *idem, "canonical graph of this idempotent");
        cmd->add_option("--element", *elem, "birooted representation of this element");
        cmd->add_option("--graph", *graph_file, "graph file");
        cmd->callback([&action, src, idem, elem, graph_file] {
            action = [src, idem, elem, graph_file]() -> int {
                if (!graph_file->empty()) {
                    liw::BliwGraph g = load_graph_file(*graph_file);
                    std::cout << (g.left_root >= 0 ? liw::emit_dot(g) : liw::emit_dot(g.g));
                    return kYes;
                }
                liw::Context ctx = src->load();
                if (!elem->empty()) {
                    std::cout << liw::emit_dot(ctx.bliw(elem_of(ctx, *elem)).graph);
                    return kYes;
                }
                if (!idem->empty()) {
                    std::cout << liw::emit_dot(ctx.gamma(elem_of(ctx, *idem)).g);
                    return kYes;
                }
                throw std::runtime_error("need --graph, --idempotent or --element");
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kYes : kError;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
