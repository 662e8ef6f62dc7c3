#ifndef KLYACHKO_RING_HPP
#define KLYACHKO_RING_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klyachko/rational.hpp"

namespace klyachko {

// The ambient ring of coefficients: n Laurent variables, either free or
// subject to the single relation q1*q2*...*qn = 1 (cyclic). The variable
// letter only affects rendering ('q' for the group-algebra side, 'x' for the
// generating-function side).
struct RingMode {
    int n = 1;
    bool cyclic = false;
    char var = 'q';

    friend bool operator==(const RingMode&, const RingMode&) = default;
};

inline RingMode cyclic_mode(int n) { return RingMode{n, true, 'q'}; }
inline RingMode free_mode(int n, char var = 'x') { return RingMode{n, false, var}; }

// Laurent exponent vector of length mode.n; negative entries allowed.
using ExponentVec = std::vector<int>;

long total_degree(const ExponentVec& e);

// Term order: graded, ties broken lexicographically with q1 < q2 < ... (the
// exponent vectors are compared from the last variable down). A monomial
// order, so rbegin() of a term map is the leading term.
struct GradedLexLess {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const;
};

// Sign of a nonzero vector under the factor-normalization convention: the
// first nonzero entry decides.
bool lex_positive(const ExponentVec& e);

bool is_zero_vector(const ExponentVec& e);
ExponentVec negate(const ExponentVec& e);
ExponentVec add_vectors(const ExponentVec& a, const ExponentVec& b);

// Cyclic canonical form subtracts e[n-1]*(1,...,1) so the last entry is 0;
// free mode is the identity. Two vectors canonicalize equal iff they differ
// by an integer multiple of (1,...,1).
ExponentVec canonicalize_exponents(const ExponentVec& e, const RingMode& mode);

// Sparse exact Laurent polynomial. Stored terms always have nonzero
// coefficients and, in cyclic mode, canonical exponent vectors; zero is the
// empty map.
class Polynomial {
public:
    using TermMap = std::map<ExponentVec, Rational, GradedLexLess>;

    explicit Polynomial(const RingMode& mode) : mode_(mode) {}

    static Polynomial zero(const RingMode& mode);
    static Polynomial constant(const RingMode& mode, const Rational& c);
    static Polynomial one(const RingMode& mode);
    static Polynomial monomial(const RingMode& mode, const ExponentVec& e,
                               const Rational& c = 1);
    // 1 - q^e (the ubiquitous denominator-factor shape).
    static Polynomial one_minus_monomial(const RingMode& mode, const ExponentVec& e);

    const RingMode& mode() const { return mode_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // The unique term of a nonzero monomial, if this is one.
    std::optional<std::pair<ExponentVec, Rational>> as_monomial() const;
    long term_count() const { return static_cast<long>(terms_.size()); }
    Rational coefficient(const ExponentVec& e) const;

    void add_term(const ExponentVec& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial lhs, const Rational& c);

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Exact substitution. Cyclic mode requires the coordinate product to be
    // 1; all coordinates must be nonzero (Laurent exponents need inverses).
    Rational evaluate(const std::vector<Rational>& point) const;

    // Variable i goes to q_{sigma(i)}: the exponent of sigma(i) in the image
    // is the exponent of i in the source. `sigma_image` is one-line notation,
    // sigma_image[i-1] = sigma(i).
    Polynomial apply_permutation(const std::vector<int>& sigma_image) const;

    // Drop every term of total degree > degree.
    Polynomial truncate(long degree) const;

    std::string str() const;

private:
    RingMode mode_;
    TermMap terms_;
};

// Quotient with q*d == p exactly, or nullopt. Division in the Laurent ring:
// monomial units never block divisibility.
std::optional<Polynomial> poly_exact_div(const Polynomial& p, const Polynomial& d);

std::string render_monomial(const ExponentVec& e, char var);

// Inverse of Polynomial::str() for the deterministic rendering grammar.
Polynomial parse_polynomial(const std::string& text, const RingMode& mode);

}  // namespace klyachko

#endif
