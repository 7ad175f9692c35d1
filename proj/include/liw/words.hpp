// Operations on words over the extended alphabet: boundary letters, formal
// inverses, evaluation in a semigroup through a generator assignment, and
// presentations as relation lists.
#ifndef LIW_WORDS_HPP
#define LIW_WORDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liw/letters.hpp"
#include "liw/semigroup.hpp"

namespace liw {

/// A presentation: base alphabet plus relations (pairs of words over the
/// extended alphabet).
struct Presentation {
    std::vector<std::string> alphabet;  // base letter names
    std::vector<std::pair<Word, Word>> relations;
};

/// Boundary letters of a nonempty word:
///   first_hat/last_hat: the first/last letter of the extended alphabet;
///   first/last: the first/last doubled letter, where a sandwich letter
///   (a^b) reads as a followed by b.
struct Boundary {
    Letter first_hat, last_hat;
    BarLetter first, last;
};

/// Throws std::invalid_argument on the empty word.
Boundary first_last(const Word& u);

/// The formal inverse: letters are inverted (x <-> x', and (a^b) inverts to
/// the two-letter block (b'^b)(a^a')), the order is reversed, and a sandwich
/// letter is interposed between consecutive inverted letters.  The result
/// evaluates to an inverse of the original word's value; it is generally not
/// an involution on the syntactic level.
Word formal_inverse(const Word& u);

/// Evaluates a nonempty word in s: doubled letters through the assignment,
/// sandwich letters (a^b) as the sandwich of the values of a and b, then the
/// product, left to right.  Throws on empty word, unassigned letters, or
/// failing sandwiches.
Elem evaluate(const Word& u, const FiniteSemigroup& s, const GeneratorAssignment& g);

/// True iff both sides of every relation evaluate to the same element.
/// A sound necessary condition for s (with g) to satisfy the presentation.
bool check_presentation(const Presentation& p, const FiniteSemigroup& s,
                        const GeneratorAssignment& g);

/// True iff every relation agrees on first and on last doubled letters.
bool is_x_straight(const Presentation& p);

/// Decides equality in the 8-element model over the one-letter alphabet {z}
/// with relations z = z^3 and z' = z'^2: words are equal iff they agree on
/// the first and last doubled letters and on the parity of n1 - n2, where n1
/// counts occurrences of z and n2 counts maximal z-blocks after expanding
/// every sandwich letter (a^b) into "a b".  Inputs must be nonempty words
/// whose doubled letters all have base name z.
bool s2_word_oracle(const Word& u, const Word& v);

}  // namespace liw

#endif  // LIW_WORDS_HPP
