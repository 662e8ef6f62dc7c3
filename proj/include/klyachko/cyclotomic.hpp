#ifndef KLYACHKO_CYCLOTOMIC_HPP
#define KLYACHKO_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "klyachko/rational.hpp"
#include "klyachko/ring.hpp"

namespace klyachko {

// Residue class modulo the n-th cyclotomic polynomial: an element of K(zeta)
// with zeta a primitive n-th root of unity. coeffs has length deg Phi_n.
struct CyclotomicElement {
    int n = 1;
    std::vector<Rational> coeffs;

    bool is_zero() const;
    friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;
};

// The n-th cyclotomic polynomial, by exact division of x^n - 1 by Phi_d over
// the proper divisors d of n. Free mode, one variable, rendered in x.
Polynomial cyclotomic_polynomial(int n);

// Arithmetic in Q[x]/Phi_n. Working modulo Phi_n (not x^n - 1) keeps zeta
// genuinely primitive: zeta^m != 1 for 1 <= m < n.
class CyclotomicField {
public:
    explicit CyclotomicField(int n);

    int order() const { return n_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }

    CyclotomicElement zero() const;
    CyclotomicElement one() const { return from_rational(1); }
    CyclotomicElement from_rational(const Rational& c) const;
    CyclotomicElement zeta_pow(long k) const;

    CyclotomicElement add(const CyclotomicElement& a, const CyclotomicElement& b) const;
    CyclotomicElement sub(const CyclotomicElement& a, const CyclotomicElement& b) const;
    CyclotomicElement mul(const CyclotomicElement& a, const CyclotomicElement& b) const;
    CyclotomicElement mul(const CyclotomicElement& a, const Rational& c) const;
    // Extended gcd of the representative with Phi_n; throws on zero.
    CyclotomicElement invert(const CyclotomicElement& a) const;

    // Rendered as a polynomial in z, lowest power first.
    std::string str(const CyclotomicElement& a) const;

private:
    int n_;
    std::vector<Rational> phi_;  // dense coefficients of Phi_n, monic

    CyclotomicElement reduce(std::vector<Rational> poly) const;
    void check(const CyclotomicElement& a) const;
};

}  // namespace klyachko

#endif
