#include "klyachko/rational.hpp"

#include "klyachko/errors.hpp"

namespace klyachko {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    Rational r;
    if (r.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
    if (r.get_den() == 0) throw ParseError("zero denominator in rational literal: " + text);
    r.canonicalize();
    return r;
}

std::string render(const Rational& r) { return r.get_str(); }

}  // namespace klyachko
