// Finite semigroups given by multiplication tables, their Green structure,
// the natural partial order, and the sandwich operation of locally inverse
// semigroups.
#ifndef LIW_SEMIGROUP_HPP
#define LIW_SEMIGROUP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liw/letters.hpp"

namespace liw {

using Elem = int;

/// A finite semigroup: elements 0..n-1, a full multiplication table and
/// display names.  The table is not assumed associative until validated.
struct FiniteSemigroup {
    std::vector<std::string> names;
    std::vector<std::vector<Elem>> table;  // table[a][b] = a*b

    int size() const { return static_cast<int>(table.size()); }

    Elem mul(Elem a, Elem b) const { return table[a][b]; }

    /// Element index by display name; nullopt if absent.
    std::optional<Elem> by_name(const std::string& name) const;

    const std::string& name(Elem a) const { return names[a]; }
};

/// Structural report for a semigroup table; `ok` iff no violations.
struct SemigroupReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks table shape, index ranges, name uniqueness and associativity.
SemigroupReport validate(const FiniteSemigroup& s);

/// All inverses of a: the b with aba = a and bab = b.
std::vector<Elem> inverses(const FiniteSemigroup& s, Elem a);

/// True iff aa = a.
bool is_idempotent(const FiniteSemigroup& s, Elem a);

/// All idempotents, ascending.
std::vector<Elem> idempotents(const FiniteSemigroup& s);

/// Green's equivalences and preorders.  Preorders are containment of
/// principal ideals with the identity adjoined implicitly: a leq_r b iff
/// a = b or a in bS, etc.  Class ids are dense and numbered by least member.
struct GreenSummary {
    // leq[a][b] = true iff a is below-or-equal b in the preorder.
    std::vector<std::vector<bool>> leq_r, leq_l, leq_j, leq_h;
    std::vector<int> r_class, l_class, h_class, d_class, j_class;
    int n_r, n_l, n_h, n_d, n_j;

    bool r_related(Elem a, Elem b) const { return r_class[a] == r_class[b]; }
    bool l_related(Elem a, Elem b) const { return l_class[a] == l_class[b]; }
    bool h_related(Elem a, Elem b) const { return h_class[a] == h_class[b]; }
    bool d_related(Elem a, Elem b) const { return d_class[a] == d_class[b]; }
    bool j_related(Elem a, Elem b) const { return j_class[a] == j_class[b]; }
};

/// Computes the full Green structure.  The D classes are computed as the join
/// R o L; in the finite case they coincide with the J classes.
GreenSummary green(const FiniteSemigroup& s);

/// Members of the R/L/H/D class of a, ascending.
std::vector<Elem> r_class_of(const FiniteSemigroup& s, const GreenSummary& g, Elem a);
std::vector<Elem> l_class_of(const FiniteSemigroup& s, const GreenSummary& g, Elem a);
std::vector<Elem> h_class_of(const FiniteSemigroup& s, const GreenSummary& g, Elem a);
std::vector<Elem> d_class_of(const FiniteSemigroup& s, const GreenSummary& g, Elem a);

/// Natural partial order: t <= u iff t = fu = ug for some idempotents f, g.
bool natural_leq(const FiniteSemigroup& s, Elem t, Elem u);

/// Idempotent orders: e omega_r f iff fe = e; e omega_l f iff ef = e;
/// omega is their conjunction.  Throw std::invalid_argument on
/// non-idempotent arguments.
bool omega_r(const FiniteSemigroup& s, Elem e, Elem f);
bool omega_l(const FiniteSemigroup& s, Elem e, Elem f);
bool omega(const FiniteSemigroup& s, Elem e, Elem f);

/// The sandwich e ^ f of two idempotents: the unique idempotent g whose
/// omega-ideal is the intersection of the omega_r-ideal of e with the
/// omega_l-ideal of f.  Exists for every pair iff the semigroup is locally
/// inverse; throws std::runtime_error when no such g exists.
Elem sandwich(const FiniteSemigroup& s, Elem e, Elem f);

/// Extension of the sandwich to arbitrary regular elements:
/// s ^ t = (s s") ^ (t" t) for any choice of inverses s", t"; the result is
/// independent of the choice.  Throws std::runtime_error on non-regular
/// arguments.
Elem sandwich_ext(const FiniteSemigroup& s, Elem a, Elem b);

/// True iff s is regular and every idempotent pair has a sandwich.
bool is_locally_inverse(const FiniteSemigroup& s);

/// The core: the subsemigroup generated by the idempotents, ascending.
std::vector<Elem> core(const FiniteSemigroup& s);

/// The subsemigroup on the given members, with names preserved.  Throws
/// std::invalid_argument if the members are not closed under the product.
FiniteSemigroup subsemigroup(const FiniteSemigroup& s, const std::vector<Elem>& members);

/// Assignment of the doubled letters of a generating alphabet to elements.
/// Each base letter x and its partner x' must both be mapped, the image of
/// x' must be an inverse of the image of x, and the images must generate the
/// whole semigroup under multiplication together with the sandwich operation.
struct GeneratorAssignment {
    std::map<BarLetter, Elem> images;

    Elem image(const BarLetter& l) const {
        auto it = images.find(l);
        if (it == images.end())
            throw std::invalid_argument("unassigned generator letter " + to_string(l));
        return it->second;
    }

    bool has(const BarLetter& l) const { return images.count(l) > 0; }

    /// The base letters (unprimed), ascending.
    std::vector<BarLetter> base_letters() const;

    /// All assigned letters, ascending.
    std::vector<BarLetter> bar_letters() const;
};

/// Checks the assignment: partners present, partner images are inverses, and
/// the images generate s under product and sandwich.
SemigroupReport validate_assignment(const FiniteSemigroup& s, const GeneratorAssignment& g);

}  // namespace liw

#endif  // LIW_SEMIGROUP_HPP
