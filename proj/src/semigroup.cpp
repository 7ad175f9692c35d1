#include "liw/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace liw {

std::optional<Elem> FiniteSemigroup::by_name(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

SemigroupReport validate(const FiniteSemigroup& s) {
    SemigroupReport rep;
    auto bad = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    const int n = s.size();
    if (n == 0) bad("empty semigroup");
    if (s.names.size() != s.table.size())
        bad("name count does not match element count");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(s.table[a].size()) != n) {
            bad("table row " + std::to_string(a) + " has wrong length");
            return rep;  // further checks would index out of range
        }
        for (int b = 0; b < n; ++b)
            if (s.table[a][b] < 0 || s.table[a][b] >= n)
                bad("table entry out of range at (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
    }
    if (!rep.ok) return rep;

    std::set<std::string> seen;
    for (const auto& nm : s.names)
        if (!seen.insert(nm).second) bad("duplicate element name '" + nm + "'");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) {
                    bad("associativity fails at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
                    return rep;
                }
    return rep;
}

std::vector<Elem> inverses(const FiniteSemigroup& s, Elem a) {
    std::vector<Elem> out;
    for (Elem b = 0; b < s.size(); ++b)
        if (s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b) out.push_back(b);
    return out;
}

bool is_idempotent(const FiniteSemigroup& s, Elem a) { return s.mul(a, a) == a; }

std::vector<Elem> idempotents(const FiniteSemigroup& s) {
    std::vector<Elem> out;
    for (Elem a = 0; a < s.size(); ++a)
        if (is_idempotent(s, a)) out.push_back(a);
    return out;
}

namespace {

// Dense class ids from an equivalence given as "related" predicate, numbered
// in order of least member.
template <typename Rel>
std::pair<std::vector<int>, int> classes_of(int n, Rel related) {
    std::vector<int> cls(n, -1);
    int next = 0;
    for (int a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        cls[a] = next;
        for (int b = a + 1; b < n; ++b)
            if (cls[b] < 0 && related(a, b)) cls[b] = next;
        ++next;
    }
    return {cls, next};
}

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

GreenSummary green(const FiniteSemigroup& s) {
    const int n = s.size();
    GreenSummary g;
    auto mk = [n] { return std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)); };
    g.leq_r = mk();
    g.leq_l = mk();
    g.leq_j = mk();
    g.leq_h = mk();

    for (Elem b = 0; b < n; ++b) {
        // Principal ideals of b, with b itself adjoined (identity simulated).
        std::vector<bool> right(n, false), left(n, false);
        right[b] = left[b] = true;
        for (Elem t = 0; t < n; ++t) {
            right[s.mul(b, t)] = true;
            left[s.mul(t, b)] = true;
        }
        std::vector<bool> two(n, false);
        two[b] = true;
        for (Elem t = 0; t < n; ++t) {
            two[s.mul(b, t)] = true;
            two[s.mul(t, b)] = true;
            for (Elem u = 0; u < n; ++u) two[s.mul(s.mul(t, b), u)] = true;
        }
        for (Elem a = 0; a < n; ++a) {
            g.leq_r[a][b] = right[a];
            g.leq_l[a][b] = left[a];
            g.leq_j[a][b] = two[a];
            g.leq_h[a][b] = right[a] && left[a];
        }
    }

    auto r_rel = [&g](int a, int b) { return g.leq_r[a][b] && g.leq_r[b][a]; };
    auto l_rel = [&g](int a, int b) { return g.leq_l[a][b] && g.leq_l[b][a]; };
    auto h_rel = [&](int a, int b) { return r_rel(a, b) && l_rel(a, b); };
    auto j_rel = [&g](int a, int b) { return g.leq_j[a][b] && g.leq_j[b][a]; };

    std::tie(g.r_class, g.n_r) = classes_of(n, r_rel);
    std::tie(g.l_class, g.n_l) = classes_of(n, l_rel);
    std::tie(g.h_class, g.n_h) = classes_of(n, h_rel);
    std::tie(g.j_class, g.n_j) = classes_of(n, j_rel);

    // D as the join of R and L.
    UnionFind uf(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (r_rel(a, b) || l_rel(a, b)) uf.unite(a, b);
    std::tie(g.d_class, g.n_d) =
        classes_of(n, [&uf](int a, int b) { return uf.find(a) == uf.find(b); });

    return g;
}

namespace {

std::vector<Elem> class_members(int n, const std::vector<int>& cls, Elem a) {
    std::vector<Elem> out;
    for (Elem b = 0; b < n; ++b)
        if (cls[b] == cls[a]) out.push_back(b);
    return out;
}

}  // namespace

std::vector<Elem> r_class_of(const FiniteSemigroup& s, const GreenSummary& g, Elem a) {
    return class_members(s.size(), g.r_class, a);
}
std::vector<Elem> l_class_of(const FiniteSemigroup& s, const GreenSummary& g, Elem a) {
    return class_members(s.size(), g.l_class, a);
}
std::vector<Elem> h_class_of(const FiniteSemigroup& s, const GreenSummary& g, Elem a) {
    return class_members(s.size(), g.h_class, a);
}
std::vector<Elem> d_class_of(const FiniteSemigroup& s, const GreenSummary& g, Elem a) {
    return class_members(s.size(), g.d_class, a);
}

bool natural_leq(const FiniteSemigroup& s, Elem t, Elem u) {
    if (t == u) return true;
    bool left = false, right = false;
    for (Elem f : idempotents(s)) {
        if (s.mul(f, u) == t) left = true;
        if (s.mul(u, f) == t) right = true;
        if (left && right) return true;
    }
    return false;
}

namespace {

void require_idempotent(const FiniteSemigroup& s, Elem e, const char* who) {
    if (!is_idempotent(s, e))
        throw std::invalid_argument(std::string(who) + ": argument " + s.name(e) +
                                    " is not idempotent");
}

}  // namespace

bool omega_r(const FiniteSemigroup& s, Elem e, Elem f) {
    require_idempotent(s, e, "omega_r");
    require_idempotent(s, f, "omega_r");
    return s.mul(f, e) == e;
}

bool omega_l(const FiniteSemigroup& s, Elem e, Elem f) {
    require_idempotent(s, e, "omega_l");
    require_idempotent(s, f, "omega_l");
    return s.mul(e, f) == e;
}

bool omega(const FiniteSemigroup& s, Elem e, Elem f) {
    return omega_r(s, e, f) && omega_l(s, e, f);
}

namespace {

std::optional<Elem> try_sandwich(const FiniteSemigroup& s, Elem e, Elem f) {
    // Intersection of the right ideal of e with the left ideal of f, within
    // the idempotents.
    std::vector<Elem> meet;
    for (Elem g : idempotents(s))
        if (s.mul(e, g) == g && s.mul(g, f) == g) meet.push_back(g);
    // The sandwich is the g whose full omega-ideal equals that set.
    for (Elem g : meet) {
        std::vector<Elem> ideal;
        for (Elem h : idempotents(s))
            if (s.mul(g, h) == h && s.mul(h, g) == h) ideal.push_back(h);
        if (ideal == meet) return g;
    }
    return std::nullopt;
}

}  // namespace

Elem sandwich(const FiniteSemigroup& s, Elem e, Elem f) {
    require_idempotent(s, e, "sandwich");
    require_idempotent(s, f, "sandwich");
    auto g = try_sandwich(s, e, f);
    if (!g)
        throw std::runtime_error("not locally inverse at (" + s.name(e) + ", " + s.name(f) + ")");
    return *g;
}

Elem sandwich_ext(const FiniteSemigroup& s, Elem a, Elem b) {
    auto va = inverses(s, a), vb = inverses(s, b);
    if (va.empty() || vb.empty())
        throw std::runtime_error("sandwich_ext: non-regular argument " +
                                 s.name(va.empty() ? a : b));
    return sandwich(s, s.mul(a, va.front()), s.mul(vb.front(), b));
}

bool is_locally_inverse(const FiniteSemigroup& s) {
    for (Elem a = 0; a < s.size(); ++a)
        if (inverses(s, a).empty()) return false;
    auto es = idempotents(s);
    for (Elem e : es)
        for (Elem f : es)
            if (!try_sandwich(s, e, f)) return false;
    return true;
}

std::vector<Elem> core(const FiniteSemigroup& s) {
    std::vector<bool> in(s.size(), false);
    std::vector<Elem> work = idempotents(s);
    for (Elem e : work) in[e] = true;
    while (!work.empty()) {
        Elem a = work.back();
        work.pop_back();
        for (Elem b = 0; b < s.size(); ++b) {
            if (!in[b]) continue;
            for (Elem c : {s.mul(a, b), s.mul(b, a)})
                if (!in[c]) {
                    in[c] = true;
                    work.push_back(c);
                }
        }
    }
    std::vector<Elem> out;
    for (Elem a = 0; a < s.size(); ++a)
        if (in[a]) out.push_back(a);
    return out;
}

FiniteSemigroup subsemigroup(const FiniteSemigroup& s, const std::vector<Elem>& members) {
    std::vector<int> index(s.size(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) {
        Elem a = members[i];
        if (a < 0 || a >= s.size())
            throw std::invalid_argument("subsemigroup: member out of range");
        if (index[a] != -1) throw std::invalid_argument("subsemigroup: duplicate member");
        index[a] = static_cast<int>(i);
    }
    FiniteSemigroup out;
    for (Elem a : members) out.names.push_back(s.name(a));
    out.table.assign(members.size(), std::vector<Elem>(members.size(), 0));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            Elem p = s.mul(members[i], members[j]);
            if (index[p] == -1)
                throw std::invalid_argument("subsemigroup: not closed: " + s.name(members[i]) +
                                            " * " + s.name(members[j]) + " = " + s.name(p));
            out.table[i][j] = index[p];
        }
    return out;
}

std::vector<BarLetter> GeneratorAssignment::base_letters() const {
    std::vector<BarLetter> out;
    for (const auto& [l, e] : images)
        if (!l.primed) out.push_back(l);
    return out;
}

std::vector<BarLetter> GeneratorAssignment::bar_letters() const {
    std::vector<BarLetter> out;
    for (const auto& [l, e] : images) out.push_back(l);
    return out;
}

SemigroupReport validate_assignment(const FiniteSemigroup& s, const GeneratorAssignment& g) {
    SemigroupReport rep;
    auto bad = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    for (const auto& [l, e] : g.images) {
        if (e < 0 || e >= s.size()) {
            bad("image of " + to_string(l) + " out of range");
            continue;
        }
        if (!g.has(l.partner())) {
            bad("letter " + to_string(l) + " has no assigned partner");
            continue;
        }
        Elem a = e, b = g.images.at(l.partner());
        if (s.mul(s.mul(a, b), a) != a || s.mul(s.mul(b, a), b) != b)
            bad("images of " + to_string(l) + " and " + to_string(l.partner()) +
                " are not mutually inverse");
    }
    if (!rep.ok) return rep;

    // Closure of the images under product and sandwich must be everything.
    std::vector<bool> in(s.size(), false);
    std::vector<Elem> work;
    for (const auto& [l, e] : g.images)
        if (!in[e]) {
            in[e] = true;
            work.push_back(e);
        }
    while (!work.empty()) {
        Elem a = work.back();
        work.pop_back();
        for (Elem b = 0; b < s.size(); ++b) {
            if (!in[b]) continue;
            std::vector<Elem> next = {s.mul(a, b), s.mul(b, a)};
            try {
                next.push_back(sandwich_ext(s, a, b));
                next.push_back(sandwich_ext(s, b, a));
            } catch (const std::runtime_error&) {
                // Non-regular or sandwich-free pair: closure proceeds with
                // products only.
            }
            for (Elem c : next)
                if (!in[c]) {
                    in[c] = true;
                    work.push_back(c);
                }
        }
    }
    for (Elem a = 0; a < s.size(); ++a)
        if (!in[a]) {
            bad("generators do not reach element " + s.name(a));
            break;
        }
    return rep;
}

}  // namespace liw
