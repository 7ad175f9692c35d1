// Letters and words over a doubled alphabet extended by sandwich letters.
//
// For an alphabet X, the doubled alphabet contains every base letter x and a
// formal partner x' ("x primed").  The extended alphabet additionally has one
// sandwich letter (a^b) for every ordered pair a, b of doubled letters.  Words
// are finite sequences of extended letters; the empty word is allowed and
// printed as "1".
#ifndef LIW_LETTERS_HPP
#define LIW_LETTERS_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace liw {

/// A letter of the doubled alphabet: a base name plus a primed flag.
struct BarLetter {
    std::string base;
    bool primed = false;

    /// The partner letter: x <-> x'.
    BarLetter partner() const { return {base, !primed}; }

    auto operator<=>(const BarLetter&) const = default;
};

/// Renders as "x" or "x'".
std::string to_string(const BarLetter& l);

/// A letter of the extended alphabet: either a doubled letter or a sandwich
/// letter (a^b) built from two doubled letters.
struct Letter {
    enum class Kind { bar, wedge };
    Kind kind = Kind::bar;
    BarLetter a;  // the letter itself, or the first component of a wedge
    BarLetter b;  // second component of a wedge; ignored for bar letters

    static Letter bar(BarLetter l) { return {Kind::bar, std::move(l), {}}; }
    static Letter wedge(BarLetter x, BarLetter y) {
        return {Kind::wedge, std::move(x), std::move(y)};
    }

    bool is_wedge() const { return kind == Kind::wedge; }

    auto operator<=>(const Letter&) const = default;
};

/// Renders as "x", "x'" or "(a^b)".
std::string to_string(const Letter& l);

using Word = std::vector<Letter>;

/// Renders letters juxtaposed, e.g. "(y'^x')xy'"; the empty word as "1".
std::string to_string(const Word& w);

/// Parses the textual word syntax: a base letter is a single alphabetic
/// character optionally followed by digits ("x", "q2"); a primed letter
/// appends an apostrophe ("x'"); a sandwich letter is written "(a^b)".
/// Whitespace between letters is optional.  Throws std::invalid_argument with
/// a position on malformed input.
Word parse_word(const std::string& text);

/// Parses a single doubled letter ("x" or "x'"); rejects wedges.
BarLetter parse_bar_letter(const std::string& text);

}  // namespace liw

template <>
struct std::hash<liw::BarLetter> {
    size_t operator()(const liw::BarLetter& l) const {
        return std::hash<std::string>()(l.base) * 2 + (l.primed ? 1 : 0);
    }
};

#endif  // LIW_LETTERS_HPP
