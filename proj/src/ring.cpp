#include "klyachko/ring.hpp"

#include <algorithm>
#include <sstream>

#include "klyachko/errors.hpp"

namespace klyachko {

long total_degree(const ExponentVec& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

bool GradedLexLess::operator()(const ExponentVec& a, const ExponentVec& b) const {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // Tie-break with q1 < q2 < ...: compare from the last variable down.
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool lex_positive(const ExponentVec& e) {
    for (int x : e) {
        if (x != 0) return x > 0;
    }
    return false;
}

bool is_zero_vector(const ExponentVec& e) {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

ExponentVec negate(const ExponentVec& e) {
    ExponentVec r(e);
    for (int& x : r) x = -x;
    return r;
}

ExponentVec add_vectors(const ExponentVec& a, const ExponentVec& b) {
    if (a.size() != b.size()) throw DimensionError("exponent vector length mismatch");
    ExponentVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

ExponentVec canonicalize_exponents(const ExponentVec& e, const RingMode& mode) {
    if (static_cast<int>(e.size()) != mode.n)
        throw DimensionError("exponent vector length does not match ring dimension");
    if (!mode.cyclic) return e;
    ExponentVec r(e);
    int shift = r.back();
    if (shift != 0) {
        for (int& x : r) x -= shift;
    }
    return r;
}

Polynomial Polynomial::zero(const RingMode& mode) { return Polynomial(mode); }

Polynomial Polynomial::constant(const RingMode& mode, const Rational& c) {
    Polynomial p(mode);
    p.add_term(ExponentVec(mode.n, 0), c);
    return p;
}

Polynomial Polynomial::one(const RingMode& mode) { return constant(mode, 1); }

Polynomial Polynomial::monomial(const RingMode& mode, const ExponentVec& e, const Rational& c) {
    Polynomial p(mode);
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::one_minus_monomial(const RingMode& mode, const ExponentVec& e) {
    Polynomial p = one(mode);
    p.add_term(e, -1);
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && is_zero_vector(terms_.begin()->first) &&
           terms_.begin()->second == 1;
}

std::optional<std::pair<ExponentVec, Rational>> Polynomial::as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
}

Rational Polynomial::coefficient(const ExponentVec& e) const {
    auto it = terms_.find(canonicalize_exponents(e, mode_));
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVec& e, const Rational& c) {
    if (c == 0) return;
    ExponentVec key = canonicalize_exponents(e, mode_);
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(mode_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (mode_ != rhs.mode_) throw IncompatibleModesError("polynomial mode mismatch in +");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (mode_ != rhs.mode_) throw IncompatibleModesError("polynomial mode mismatch in -");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
}

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.mode_ != rhs.mode_) throw IncompatibleModesError("polynomial mode mismatch in *");
    Polynomial out(lhs.mode_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            out.add_term(add_vectors(ea, eb), ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(Polynomial lhs, const Rational& c) {
    lhs *= c;
    return lhs;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
}

namespace {

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw PoleError("zero coordinate raised to a negative exponent");
        return Rational(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), a);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), a);
    if (e < 0) {
        mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    }
    out.canonicalize();
    return out;
}

}  // namespace

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != mode_.n)
        throw DimensionError("evaluation point length does not match ring dimension");
    if (mode_.cyclic) {
        Rational prod(1);
        for (const auto& x : point) prod *= x;
        if (prod != 1)
            throw ConstraintError("cyclic-mode evaluation needs coordinate product 1");
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term(c);
        for (int i = 0; i < mode_.n; ++i) {
            if (e[i] != 0) term *= rational_pow(point[i], e[i]);
        }
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::apply_permutation(const std::vector<int>& sigma_image) const {
    if (static_cast<int>(sigma_image.size()) != mode_.n)
        throw DimensionError("permutation degree does not match ring dimension");
    Polynomial out(mode_);
    for (const auto& [e, c] : terms_) {
        ExponentVec img(mode_.n, 0);
        for (int i = 0; i < mode_.n; ++i) img[sigma_image[i] - 1] = e[i];
        out.add_term(img, c);
    }
    return out;
}

Polynomial Polynomial::truncate(long degree) const {
    Polynomial out(mode_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) <= degree) out.terms_.emplace(e, c);
    }
    return out;
}

std::optional<Polynomial> poly_exact_div(const Polynomial& p, const Polynomial& d) {
    if (p.mode() != d.mode()) throw IncompatibleModesError("polynomial mode mismatch in /");
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (p.is_zero()) return Polynomial::zero(p.mode());

    const int n = p.mode().n;
    // Normalize Laurent shifts: per-variable minimum exponent goes to 0, so
    // both operands become honest polynomials. Shifting multiplies by a
    // monomial unit, which never affects divisibility in the Laurent ring.
    auto min_shift = [n](const Polynomial& poly) {
        ExponentVec s(poly.terms().begin()->first);
        for (const auto& [e, c] : poly.terms()) {
            for (int i = 0; i < n; ++i) s[i] = std::min(s[i], e[i]);
        }
        return s;
    };
    ExponentVec sp = min_shift(p), sd = min_shift(d);

    using Shifted = std::map<ExponentVec, Rational, GradedLexLess>;
    auto shifted = [n](const Polynomial& poly, const ExponentVec& s) {
        Shifted out;
        for (const auto& [e, c] : poly.terms()) {
            ExponentVec k(e);
            for (int i = 0; i < n; ++i) k[i] -= s[i];
            out.emplace(std::move(k), c);
        }
        return out;
    };
    Shifted rem = shifted(p, sp);
    const Shifted div = shifted(d, sd);

    const auto& [lde, ldc] = *div.rbegin();
    Shifted quot;
    while (!rem.empty()) {
        const auto& [lre, lrc] = *rem.rbegin();
        ExponentVec diff(n);
        for (int i = 0; i < n; ++i) {
            diff[i] = lre[i] - lde[i];
            if (diff[i] < 0) return std::nullopt;
        }
        Rational c = lrc / ldc;
        quot.emplace(diff, c);
        for (const auto& [e, dc] : div) {
            ExponentVec k(n);
            for (int i = 0; i < n; ++i) k[i] = e[i] + diff[i];
            auto [it, inserted] = rem.emplace(k, -c * dc);
            if (!inserted) {
                it->second -= c * dc;
                if (it->second == 0) rem.erase(it);
            }
        }
    }

    Polynomial q(p.mode());
    for (const auto& [e, c] : quot) {
        ExponentVec k(n);
        for (int i = 0; i < n; ++i) k[i] = e[i] + sp[i] - sd[i];
        q.add_term(k, c);
    }
    return q;
}

std::string render_monomial(const ExponentVec& e, char var) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out << '*';
        first = false;
        out << var << (i + 1);
        if (e[i] != 1) out << '^' << e[i];
    }
    if (first) out << '1';
    return out.str();
}

namespace {

// "c*mono" with the unit coefficients elided; `c` must be nonzero.
std::string render_term(const Rational& c, const ExponentVec& e, char var) {
    if (is_zero_vector(e)) return render(c);
    std::string mono = render_monomial(e, var);
    if (c == 1) return mono;
    if (c == -1) return "-" + mono;
    return render(c) + "*" + mono;
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            out << render_term(c, e, mode_.var);
            first = false;
        } else if (c > 0) {
            out << " + " << render_term(c, e, mode_.var);
        } else {
            out << " - " << render_term(-c, e, mode_.var);
        }
    }
    return out.str();
}

}  // namespace klyachko
