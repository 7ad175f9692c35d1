// Built-in example semigroups with generator assignments and, where known,
// presentations.  All are locally inverse; they exercise the full range of
// the classifier predicates.
#ifndef LIW_FIXTURES_HPP
#define LIW_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "liw/semigroup.hpp"
#include "liw/words.hpp"

namespace liw {

struct Fixture {
    std::string name;
    std::string description;
    FiniteSemigroup s;
    GeneratorAssignment gen;
    std::optional<Presentation> pres;
};

/// All built-in fixtures:
///   s1       17 elements: combinatorial with a zero, generators x, y
///   s2        8 elements: completely simple over the one-letter alphabet z
///   trivial   1 element
///   band22    2x2 rectangular band
///   b2        5-element Brandt semigroup (an inverse semigroup)
///   chain3    3-element chain semilattice
const std::vector<Fixture>& builtin_fixtures();

/// Fixture by name; throws std::invalid_argument when unknown.
const Fixture& fixture(const std::string& name);

}  // namespace liw

#endif  // LIW_FIXTURES_HPP
