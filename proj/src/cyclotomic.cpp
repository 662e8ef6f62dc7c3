#include "klyachko/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "klyachko/errors.hpp"

namespace klyachko {

namespace {

// Dense univariate polynomials over Q, coefficient of x^i at index i, no
// trailing zeros.
using UniPoly = std::vector<Rational>;

void trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const UniPoly& p) { return p.empty(); }

UniPoly upoly_mul(const UniPoly& a, const UniPoly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    UniPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

UniPoly upoly_sub(UniPoly a, const UniPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Quotient and remainder; d must be nonzero.
std::pair<UniPoly, UniPoly> divmod(UniPoly a, const UniPoly& d) {
    if (is_zero(d)) throw std::invalid_argument("univariate division by zero");
    UniPoly q;
    if (a.size() >= d.size()) q.assign(a.size() - d.size() + 1, Rational(0));
    while (a.size() >= d.size() && !is_zero(a)) {
        size_t shift = a.size() - d.size();
        Rational c = a.back() / d.back();
        q[shift] = c;
        for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= c * d[i];
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

// Returns (g, t) with g = gcd(phi, a) and t*a == g (mod phi).
std::pair<UniPoly, UniPoly> half_xgcd(const UniPoly& phi, const UniPoly& a) {
    UniPoly r0 = phi, r1 = a;
    UniPoly t0 = {}, t1 = {Rational(1)};
    while (!is_zero(r1)) {
        auto [q, r] = divmod(r0, r1);
        UniPoly t2 = upoly_sub(t0, upoly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return {std::move(r0), std::move(t0)};
}

UniPoly x_pow_minus_one(int n) {
    UniPoly p(n + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

UniPoly cyclotomic_coeffs(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
    std::vector<UniPoly> phis(n + 1);
    for (int m = 1; m <= n; ++m) {
        UniPoly p = x_pow_minus_one(m);
        for (int d = 1; d < m; ++d) {
            if (m % d == 0) {
                auto [q, r] = divmod(std::move(p), phis[d]);
                if (!is_zero(r)) throw std::logic_error("cyclotomic division left a remainder");
                p = std::move(q);
            }
        }
        phis[m] = std::move(p);
    }
    return phis[n];
}

}  // namespace

bool CyclotomicElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

Polynomial cyclotomic_polynomial(int n) {
    UniPoly c = cyclotomic_coeffs(n);
    RingMode mode = free_mode(1, 'x');
    Polynomial p(mode);
    for (size_t i = 0; i < c.size(); ++i) {
        p.add_term({static_cast<int>(i)}, c[i]);
    }
    return p;
}

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(cyclotomic_coeffs(n)) {}

CyclotomicElement CyclotomicField::zero() const {
    return CyclotomicElement{n_, std::vector<Rational>(degree(), Rational(0))};
}

CyclotomicElement CyclotomicField::from_rational(const Rational& c) const {
    CyclotomicElement e = zero();
    e.coeffs[0] = c;
    return e;
}

CyclotomicElement CyclotomicField::reduce(std::vector<Rational> poly) const {
    trim(poly);
    auto [q, r] = divmod(std::move(poly), phi_);
    CyclotomicElement e = zero();
    for (size_t i = 0; i < r.size(); ++i) e.coeffs[i] = r[i];
    return e;
}

void CyclotomicField::check(const CyclotomicElement& a) const {
    if (a.n != n_ || static_cast<int>(a.coeffs.size()) != degree())
        throw IncompatibleModesError("cyclotomic element from a different field");
}

CyclotomicElement CyclotomicField::zeta_pow(long k) const {
    long r = ((k % n_) + n_) % n_;
    std::vector<Rational> p(r + 1, Rational(0));
    p[r] = 1;
    return reduce(std::move(p));
}

CyclotomicElement CyclotomicField::add(const CyclotomicElement& a,
                                       const CyclotomicElement& b) const {
    check(a);
    check(b);
    CyclotomicElement out = a;
    for (int i = 0; i < degree(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

CyclotomicElement CyclotomicField::sub(const CyclotomicElement& a,
                                       const CyclotomicElement& b) const {
    check(a);
    check(b);
    CyclotomicElement out = a;
    for (int i = 0; i < degree(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

CyclotomicElement CyclotomicField::mul(const CyclotomicElement& a,
                                       const CyclotomicElement& b) const {
    check(a);
    check(b);
    UniPoly pa = a.coeffs, pb = b.coeffs;
    trim(pa);
    trim(pb);
    return reduce(upoly_mul(pa, pb));
}

CyclotomicElement CyclotomicField::mul(const CyclotomicElement& a, const Rational& c) const {
    check(a);
    CyclotomicElement out = a;
    for (auto& x : out.coeffs) x *= c;
    return out;
}

CyclotomicElement CyclotomicField::invert(const CyclotomicElement& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("inversion of zero in a cyclotomic field");
    UniPoly pa = a.coeffs;
    trim(pa);
    auto [g, t] = half_xgcd(phi_, pa);
    if (g.size() != 1) throw std::logic_error("cyclotomic gcd is not a unit");
    UniPoly inv = t;
    for (auto& c : inv) c /= g[0];
    return reduce(std::move(inv));
}

std::string CyclotomicField::str(const CyclotomicElement& a) const {
    check(a);
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < degree(); ++i) {
        const Rational& c = a.coeffs[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << render(mag);
        } else {
            if (mag != 1) out << render(mag) << '*';
            out << 'z';
            if (i > 1) out << '^' << i;
        }
    }
    if (first) out << '0';
    return out.str();
}

}  // namespace klyachko
