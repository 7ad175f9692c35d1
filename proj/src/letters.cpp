#include "liw/letters.hpp"

#include <cctype>
#include <stdexcept>

namespace liw {

std::string to_string(const BarLetter& l) {
    return l.primed ? l.base + "'" : l.base;
}

std::string to_string(const Letter& l) {
    if (l.kind == Letter::Kind::bar) return to_string(l.a);
    return "(" + to_string(l.a) + "^" + to_string(l.b) + ")";
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w) out += to_string(l);
    return out;
}

namespace {

struct Scanner {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("word syntax error at position " +
                                    std::to_string(pos + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    // A doubled letter: one alphabetic character, optional digits, optional '.
    BarLetter bar() {
        skip_ws();
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("expected a letter");
        std::string base(1, text[pos++]);
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            base += text[pos++];
        bool primed = false;
        if (pos < text.size() && text[pos] == '\'') {
            primed = true;
            ++pos;
        }
        return {base, primed};
    }

    Letter letter() {
        skip_ws();
        if (text[pos] == '(') {
            ++pos;
            BarLetter x = bar();
            skip_ws();
            if (pos >= text.size() || text[pos] != '^') fail("expected '^' in sandwich letter");
            ++pos;
            BarLetter y = bar();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') fail("expected ')' closing sandwich letter");
            ++pos;
            return Letter::wedge(std::move(x), std::move(y));
        }
        return Letter::bar(bar());
    }
};

}  // namespace

Word parse_word(const std::string& text) {
    Scanner sc{text};
    Word w;
    while (!sc.done()) w.push_back(sc.letter());
    return w;
}

BarLetter parse_bar_letter(const std::string& text) {
    Scanner sc{text};
    if (sc.done()) sc.fail("expected a letter");
    BarLetter l = sc.bar();
    if (!sc.done()) sc.fail("trailing input after letter");
    return l;
}

}  // namespace liw
