#ifndef KLYACHKO_RATIONAL_HPP
#define KLYACHKO_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace klyachko {

// Exact rational with arbitrary-precision integer parts. GMP keeps the
// invariants we need: gcd(|num|, den) = 1 and den > 0 after canonicalize().
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a" or "a/b" in base 10.
Rational parse_rational(const std::string& text);

// Canonical rendering: "a" when the denominator is 1, else "a/b".
std::string render(const Rational& r);

}  // namespace klyachko

#endif
