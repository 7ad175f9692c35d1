#include "liw/words.hpp"

#include <stdexcept>

namespace liw {

namespace {

BarLetter head_bar(const Letter& l) { return l.a; }

BarLetter tail_bar(const Letter& l) { return l.is_wedge() ? l.b : l.a; }

// Inverse of a single extended letter, as a word.
Word letter_inverse(const Letter& l) {
    if (!l.is_wedge()) return {Letter::bar(l.a.partner())};
    // (a^b) inverts to (b'^b)(a^a').
    return {Letter::wedge(l.b.partner(), l.b), Letter::wedge(l.a, l.a.partner())};
}

}  // namespace

Boundary first_last(const Word& u) {
    if (u.empty()) throw std::invalid_argument("first_last: empty word");
    return {u.front(), u.back(), head_bar(u.front()), tail_bar(u.back())};
}

Word formal_inverse(const Word& u) {
    if (u.empty()) return {};
    Word out;
    for (size_t i = u.size(); i-- > 0;) {
        Word inv = letter_inverse(u[i]);
        out.insert(out.end(), inv.begin(), inv.end());
        if (i > 0) {
            // Interpose the sandwich of the adjacent boundary letters.
            BarLetter x = head_bar(u[i]);
            BarLetter y = tail_bar(u[i - 1]);
            out.push_back(Letter::wedge(x, y));
        }
    }
    return out;
}

Elem evaluate(const Word& u, const FiniteSemigroup& s, const GeneratorAssignment& g) {
    if (u.empty()) throw std::invalid_argument("evaluate: empty word");
    auto value = [&](const Letter& l) -> Elem {
        if (!l.is_wedge()) return g.image(l.a);
        return sandwich_ext(s, g.image(l.a), g.image(l.b));
    };
    Elem acc = value(u.front());
    for (size_t i = 1; i < u.size(); ++i) acc = s.mul(acc, value(u[i]));
    return acc;
}

bool check_presentation(const Presentation& p, const FiniteSemigroup& s,
                        const GeneratorAssignment& g) {
    for (const auto& [u, v] : p.relations)
        if (evaluate(u, s, g) != evaluate(v, s, g)) return false;
    return true;
}

bool is_x_straight(const Presentation& p) {
    for (const auto& [u, v] : p.relations) {
        Boundary bu = first_last(u), bv = first_last(v);
        if (bu.first != bv.first || bu.last != bv.last) return false;
    }
    return true;
}

bool s2_word_oracle(const Word& u, const Word& v) {
    auto profile = [](const Word& w) {
        if (w.empty()) throw std::invalid_argument("s2_word_oracle: empty word");
        // Expand sandwich letters into their two components.
        std::vector<BarLetter> flat;
        for (const auto& l : w) {
            if (l.a.base != "z" || (l.is_wedge() && l.b.base != "z"))
                throw std::invalid_argument("s2_word_oracle: alphabet is {z}");
            flat.push_back(l.a);
            if (l.is_wedge()) flat.push_back(l.b);
        }
        int n1 = 0, n2 = 0;
        bool in_block = false;
        for (const auto& l : flat) {
            if (!l.primed) {
                ++n1;
                if (!in_block) ++n2;
                in_block = true;
            } else {
                in_block = false;
            }
        }
        Boundary b = first_last(w);
        return std::tuple{b.first, b.last, (n1 - n2) & 1};
    };
    return profile(u) == profile(v);
}

}  // namespace liw
