#ifndef KLYACHKO_RATFUN_HPP
#define KLYACHKO_RATFUN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "klyachko/perm.hpp"
#include "klyachko/ring.hpp"

namespace klyachko {

// Denominator factor multiset: monomial m of the factor (1 - q^m) mapped to
// its multiplicity. Keys are canonical, nonzero and lex-positive; a
// construction that yields a lex-negative monomial is rewritten via
// 1 - q^m = -q^m (1 - q^{-m}) with the unit pushed into the numerator.
using FactorMap = std::map<ExponentVec, int, GradedLexLess>;

// Rational function num / prod (1 - q^m)^k with the structured denominator
// shape every expression in this artifact has (products of prefix-monomial
// factors). Zero is num = 0 with an empty denominator. After construction no
// factor exactly divides the numerator (best-effort cancellation).
class RatFun {
public:
    explicit RatFun(const RingMode& mode) : num_(Polynomial::zero(mode)) {}

    static RatFun make(Polynomial num, const std::vector<ExponentVec>& factors);
    static RatFun make(Polynomial num, const FactorMap& factors);
    static RatFun from_polynomial(Polynomial p);
    static RatFun zero(const RingMode& mode) { return RatFun(mode); }
    static RatFun one(const RingMode& mode) { return from_polynomial(Polynomial::one(mode)); }
    static RatFun constant(const RingMode& mode, const Rational& c) {
        return from_polynomial(Polynomial::constant(mode, c));
    }

    const RingMode& mode() const { return num_.mode(); }
    const Polynomial& num() const { return num_; }
    const FactorMap& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Polynomial denominator_product() const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& rhs);
    RatFun& operator-=(const RatFun& rhs);
    RatFun& operator*=(const RatFun& rhs);
    RatFun& operator*=(const Rational& c);
    RatFun& operator*=(const Polynomial& p);
    friend RatFun operator+(RatFun lhs, const RatFun& rhs) { return lhs += rhs; }
    friend RatFun operator-(RatFun lhs, const RatFun& rhs) { return lhs -= rhs; }
    friend RatFun operator*(RatFun lhs, const RatFun& rhs) { return lhs *= rhs; }
    friend RatFun operator*(RatFun lhs, const Rational& c) { return lhs *= c; }

    // Equality as field elements, by cross-multiplication; independent of
    // representation.
    bool equal(const RatFun& other) const;

    RatFun apply_permutation(const Permutation& sigma) const;

    // Exact substitution; PoleError when a denominator factor vanishes.
    Rational evaluate(const std::vector<Rational>& point) const;

    // `num / (1 - m)^k*...`; multi-factor denominators get outer parentheses,
    // multi-term numerators too. Factor order is the term order.
    std::string str() const;

private:
    Polynomial num_;
    FactorMap den_;

    void normalize_factors();
    void cancel();
};

// Inverse of RatFun::str().
RatFun parse_ratfun(const std::string& text, const RingMode& mode);

// A cyclic evaluation point: q1..q_{n-1} distinct random rationals a/b with
// a, b in [2, 10^6], qn = 1/(q1*...*q_{n-1}). Deterministic given the seed.
std::vector<Rational> random_cyclic_point(int n, std::uint64_t seed);

// Evaluates f at a random cyclic point; redraws (bounded, deterministic) when
// a denominator factor vanishes at the drawn point.
Rational rf_random_evaluate(const RatFun& f, std::uint64_t seed);

}  // namespace klyachko

#endif
