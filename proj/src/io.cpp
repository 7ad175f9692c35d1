#include "liw/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "liw/letters.hpp"

namespace liw {

namespace {

struct Token {
    std::string text;
    int line = 1, col = 1;
};

class Cursor {
public:
    explicit Cursor(const std::string& text) {
        int line = 1, col = 1;
        std::size_t i = 0;
        while (i < text.size()) {
            char c = text[i];
            if (c == '\n') {
                ++line;
                col = 1;
                ++i;
            } else if (c == '#') {
                while (i < text.size() && text[i] != '\n') ++i;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col;
                ++i;
            } else {
                Token t{"", line, col};
                while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
                       text[i] != '#') {
                    t.text += text[i];
                    ++i;
                    ++col;
                }
                toks_.push_back(std::move(t));
            }
        }
        end_line_ = line;
        end_col_ = col;
    }

    bool done() const { return pos_ >= toks_.size(); }
    const Token& peek() const { return toks_[pos_]; }

    Token next(const std::string& what) {
        if (done())
            throw ParseError(end_line_, end_col_, "expected " + what + ", found end of input");
        return toks_[pos_++];
    }

    void expect(const std::string& kw) {
        Token t = next("'" + kw + "'");
        if (t.text != kw)
            throw ParseError(t.line, t.col, "expected '" + kw + "', found '" + t.text + "'");
    }

    void expect_end() {
        if (!done()) {
            const Token& t = peek();
            throw ParseError(t.line, t.col, "unexpected trailing input '" + t.text + "'");
        }
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int end_line_ = 1, end_col_ = 1;
};

int as_int(const Token& t, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t.text, &used);
    } catch (...) {
        used = 0;
    }
    if (used != t.text.size())
        throw ParseError(t.line, t.col, "expected " + what + ", found '" + t.text + "'");
    return v;
}

BarLetter bar_letter_token(const Token& t) {
    try {
        return parse_bar_letter(t.text);
    } catch (const std::exception& e) {
        throw ParseError(t.line, t.col, "bad letter '" + t.text + "': " + e.what());
    }
}

const std::set<std::string>& graph_keywords() {
    static const std::set<std::string> kw = {"graph", "left", "right", "lines",
                                             "arrows", "roots", "end"};
    return kw;
}

}  // namespace

SemigroupFile parse_semigroup(const std::string& text) {
    Cursor c(text);
    c.expect("semigroup");
    Token nt = c.next("element count");
    int n = as_int(nt, "element count");
    if (n <= 0) throw ParseError(nt.line, nt.col, "element count must be positive");

    c.expect("names");
    SemigroupFile out;
    std::set<std::string> seen;
    for (int i = 0; i < n; ++i) {
        Token t = c.next("element name");
        if (!seen.insert(t.text).second)
            throw ParseError(t.line, t.col, "duplicate element name '" + t.text + "'");
        out.s.names.push_back(t.text);
    }

    c.expect("table");
    out.s.table.assign(n, std::vector<Elem>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int q = 0; q < n; ++q) {
            Token t = c.next("table entry");
            int v = as_int(t, "table entry");
            if (v < 0 || v >= n)
                throw ParseError(t.line, t.col, "table entry " + t.text + " out of range");
            out.s.table[r][q] = v;
        }

    c.expect("generators");
    while (!c.done() && c.peek().text != "end") {
        Token lt = c.next("generator letter");
        BarLetter bl = bar_letter_token(lt);
        if (out.gen.images.count(bl))
            throw ParseError(lt.line, lt.col, "duplicate generator letter '" + lt.text + "'");
        c.expect("->");
        Token et = c.next("element name");
        std::optional<Elem> e = out.s.by_name(et.text);
        if (!e) throw ParseError(et.line, et.col, "unknown element '" + et.text + "'");
        out.gen.images[bl] = *e;
    }
    if (!c.done()) c.expect("end");
    c.expect_end();
    return out;
}

std::string emit_semigroup(const FiniteSemigroup& s, const GeneratorAssignment& gen) {
    std::ostringstream o;
    o << "semigroup " << s.size() << "\nnames";
    for (Elem a = 0; a < s.size(); ++a) o << ' ' << s.name(a);
    o << "\ntable\n";
    for (Elem a = 0; a < s.size(); ++a) {
        for (Elem b = 0; b < s.size(); ++b) o << (b ? " " : "") << s.mul(a, b);
        o << '\n';
    }
    o << "generators\n";
    for (const auto& [l, e] : gen.images) o << to_string(l) << " -> " << s.name(e) << '\n';
    o << "end\n";
    return o.str();
}

namespace {

std::vector<Vertex> parse_vertex_section(Cursor& c, BliwGraph& out, Side side,
                                         std::map<std::string, Vertex>& by_name) {
    std::vector<Vertex> vs;
    while (!c.done() && !graph_keywords().count(c.peek().text)) {
        Token t = c.next("vertex name");
        if (by_name.count(t.text))
            throw ParseError(t.line, t.col, "duplicate vertex name '" + t.text + "'");
        by_name[t.text] = out.g.add_vertex(side, t.text);
        vs.push_back(by_name[t.text]);
    }
    return vs;
}

Vertex resolve(const std::map<std::string, Vertex>& by_name, const Token& t, const char* side) {
    auto it = by_name.find(t.text);
    if (it == by_name.end())
        throw ParseError(t.line, t.col,
                         "unknown " + std::string(side) + " vertex '" + t.text + "'");
    return it->second;
}

}  // namespace

BliwGraph parse_graph(const std::string& text) {
    Cursor c(text);
    c.expect("graph");
    BliwGraph out;
    out.left_root = out.right_root = -1;
    std::map<std::string, Vertex> lefts, rights;
    c.expect("left");
    parse_vertex_section(c, out, Side::left, lefts);
    c.expect("right");
    parse_vertex_section(c, out, Side::right, rights);

    c.expect("lines");
    while (!c.done() && !graph_keywords().count(c.peek().text)) {
        Token a = c.next("left endpoint");
        Token b = c.next("right endpoint");
        out.g.add_line(resolve(lefts, a, "left"), resolve(rights, b, "right"));
    }
    c.expect("arrows");
    while (!c.done() && !graph_keywords().count(c.peek().text)) {
        Token a = c.next("arrow start");
        Token lt = c.next("arrow label");
        Token b = c.next("arrow end");
        out.g.add_arrow(resolve(lefts, a, "left"), bar_letter_token(lt),
                        resolve(rights, b, "right"));
    }
    if (!c.done() && c.peek().text == "roots") {
        c.expect("roots");
        Token a = c.next("left root");
        Token b = c.next("right root");
        out.left_root = resolve(lefts, a, "left");
        out.right_root = resolve(rights, b, "right");
    }
    if (!c.done()) c.expect("end");
    c.expect_end();
    out.g.normalize();
    return out;
}

namespace {

std::string emit_graph_impl(const LiwGraph& g, Vertex lr, Vertex rr) {
    std::ostringstream o;
    o << "graph\nleft";
    for (Vertex v : g.left_vertices()) o << ' ' << g.name[v];
    o << "\nright";
    for (Vertex v : g.right_vertices()) o << ' ' << g.name[v];
    o << "\nlines\n";
    for (const Line& ln : g.lines) o << g.name[ln.first] << ' ' << g.name[ln.second] << '\n';
    o << "arrows\n";
    for (const Arrow& a : g.arrows)
        o << g.name[a.from] << ' ' << to_string(a.label) << ' ' << g.name[a.to] << '\n';
    if (lr >= 0 && rr >= 0) o << "roots " << g.name[lr] << ' ' << g.name[rr] << '\n';
    o << "end\n";
    return o.str();
}

std::string dot_id(const LiwGraph& g, Vertex v) {
    return (g.side[v] == Side::left ? "l" : "r") + std::to_string(v);
}

std::string emit_dot_impl(const LiwGraph& g, Vertex lr, Vertex rr) {
    std::ostringstream o;
    o << "digraph liw {\n  rankdir=LR;\n";
    for (Vertex v = 0; v < static_cast<Vertex>(g.side.size()); ++v) {
        o << "  " << dot_id(g, v) << " [label=\"" << g.name[v] << "\"";
        if (v == lr || v == rr) o << ", shape=doublecircle";
        o << "];\n";
    }
    for (const Line& ln : g.lines)
        o << "  " << dot_id(g, ln.first) << " -> " << dot_id(g, ln.second)
          << " [style=dashed, dir=none];\n";
    for (const Arrow& a : g.arrows)
        o << "  " << dot_id(g, a.from) << " -> " << dot_id(g, a.to) << " [label=\""
          << to_string(a.label) << "\"];\n";
    o << "}\n";
    return o.str();
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r;");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string emit_graph(const LiwGraph& g) { return emit_graph_impl(g, -1, -1); }
std::string emit_graph(const BliwGraph& g) {
    return emit_graph_impl(g.g, g.left_root, g.right_root);
}
std::string emit_dot(const LiwGraph& g) { return emit_dot_impl(g, -1, -1); }
std::string emit_dot(const BliwGraph& g) { return emit_dot_impl(g.g, g.left_root, g.right_root); }

BliwGraph parse_dot(const std::string& text) {
    BliwGraph out;
    out.left_root = out.right_root = -1;
    std::map<std::string, Vertex> by_id;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool saw_header = false;

    auto attr_value = [](const std::string& s, const std::string& key) -> std::string {
        std::size_t p = s.find(key + "=\"");
        if (p == std::string::npos) return "";
        p += key.size() + 2;
        std::size_t q = s.find('"', p);
        return q == std::string::npos ? "" : s.substr(p, q - p);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = trim(raw);
        if (s.empty() || s == "}") continue;
        if (s.rfind("digraph", 0) == 0) {
            saw_header = true;
            continue;
        }
        if (s.rfind("rankdir", 0) == 0 || s.rfind("node", 0) == 0) continue;
        if (!saw_header) throw ParseError(lineno, 1, "expected 'digraph' header");

        std::size_t arrow = s.find("->");
        std::string attrs;
        if (std::size_t br = s.find('['); br != std::string::npos) {
            attrs = s.substr(br);
            s = trim(s.substr(0, br));
        }
        auto vertex_of = [&](const std::string& id) -> Vertex {
            auto it = by_id.find(id);
            if (it == by_id.end())
                throw ParseError(lineno, 1, "undeclared vertex id '" + id + "'");
            return it->second;
        };
        if (arrow == std::string::npos) {
            // vertex statement
            const std::string& id = s;
            if (id.empty() || (id[0] != 'l' && id[0] != 'r'))
                throw ParseError(lineno, 1, "vertex id must start with 'l' or 'r'");
            if (by_id.count(id)) throw ParseError(lineno, 1, "duplicate vertex id '" + id + "'");
            Side side = id[0] == 'l' ? Side::left : Side::right;
            std::string label = attr_value(attrs, "label");
            Vertex v = out.g.add_vertex(side, label.empty() ? id : label);
            by_id[id] = v;
            if (attrs.find("doublecircle") != std::string::npos) {
                if (side == Side::left)
                    out.left_root = v;
                else
                    out.right_root = v;
            }
        } else {
            std::string from = trim(s.substr(0, arrow));
            std::string to = trim(s.substr(arrow + 2));
            Vertex u = vertex_of(from), w = vertex_of(to);
            if (attrs.find("style=dashed") != std::string::npos) {
                if (out.g.side[u] != Side::left || out.g.side[w] != Side::right)
                    throw ParseError(lineno, 1, "line endpoints must be left then right");
                out.g.add_line(u, w);
            } else {
                std::string label = attr_value(attrs, "label");
                if (label.empty()) throw ParseError(lineno, 1, "arrow without label");
                try {
                    out.g.add_arrow(u, parse_bar_letter(label), w);
                } catch (const ParseError&) {
                    throw;
                } catch (const std::exception& e) {
                    throw ParseError(lineno, 1, std::string("bad arrow label: ") + e.what());
                }
            }
        }
    }
    if (!saw_header) throw ParseError(1, 1, "expected 'digraph' header");
    out.g.normalize();
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream o;
    o << in.rdbuf();
    return o.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace liw
