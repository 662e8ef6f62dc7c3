#include "klyachko/ratfun.hpp"

#include <sstream>

#include "klyachko/errors.hpp"
#include "klyachko/rng.hpp"

namespace klyachko {

RatFun RatFun::make(Polynomial num, const std::vector<ExponentVec>& factors) {
    FactorMap fm;
    const RingMode mode = num.mode();
    for (const auto& f : factors) {
        ++fm[canonicalize_exponents(f, mode)];
    }
    return make(std::move(num), fm);
}

RatFun RatFun::make(Polynomial num, const FactorMap& factors) {
    RatFun r(num.mode());
    r.num_ = std::move(num);
    for (const auto& [m, k] : factors) {
        if (k < 0) throw std::invalid_argument("negative factor multiplicity");
        if (k == 0) continue;
        r.den_[canonicalize_exponents(m, r.mode())] += k;
    }
    r.normalize_factors();
    r.cancel();
    return r;
}

RatFun RatFun::from_polynomial(Polynomial p) {
    RatFun r(p.mode());
    r.num_ = std::move(p);
    return r;
}

void RatFun::normalize_factors() {
    FactorMap fixed;
    for (const auto& [m, k] : den_) {
        if (is_zero_vector(m))
            throw ZeroDenominatorError("denominator factor 1 - q^m with q^m = 1");
        if (lex_positive(m)) {
            fixed[m] += k;
        } else {
            // 1/(1 - q^m) = -q^{-m} / (1 - q^{-m})
            ExponentVec flipped = negate(m);
            Polynomial unit = Polynomial::monomial(num_.mode(), flipped, -1);
            for (int i = 0; i < k; ++i) num_ *= unit;
            fixed[flipped] += k;
        }
    }
    den_ = std::move(fixed);
}

void RatFun::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        Polynomial factor = Polynomial::one_minus_monomial(num_.mode(), it->first);
        while (it->second > 0) {
            auto quot = poly_exact_div(num_, factor);
            if (!quot) break;
            num_ = std::move(*quot);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

Polynomial RatFun::denominator_product() const {
    Polynomial prod = Polynomial::one(mode());
    for (const auto& [m, k] : den_) {
        Polynomial factor = Polynomial::one_minus_monomial(mode(), m);
        for (int i = 0; i < k; ++i) prod *= factor;
    }
    return prod;
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& rhs) {
    if (mode() != rhs.mode()) throw IncompatibleModesError("rational-function mode mismatch in +");
    // Common denominator: multiset LCM (max multiplicity per factor).
    FactorMap lcm = den_;
    for (const auto& [m, k] : rhs.den_) {
        auto [it, inserted] = lcm.emplace(m, k);
        if (!inserted) it->second = std::max(it->second, k);
    }
    auto complement_num = [&](const RatFun& f) {
        Polynomial out = f.num_;
        for (const auto& [m, k] : lcm) {
            auto it = f.den_.find(m);
            int missing = k - (it == f.den_.end() ? 0 : it->second);
            Polynomial factor = Polynomial::one_minus_monomial(f.mode(), m);
            for (int i = 0; i < missing; ++i) out *= factor;
        }
        return out;
    };
    Polynomial num = complement_num(*this) + complement_num(rhs);
    *this = make(std::move(num), lcm);
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& rhs) { return *this += -rhs; }

RatFun& RatFun::operator*=(const RatFun& rhs) {
    if (mode() != rhs.mode()) throw IncompatibleModesError("rational-function mode mismatch in *");
    FactorMap merged = den_;
    for (const auto& [m, k] : rhs.den_) merged[m] += k;
    *this = make(num_ * rhs.num_, merged);
    return *this;
}

RatFun& RatFun::operator*=(const Rational& c) {
    num_ *= c;
    if (num_.is_zero()) den_.clear();
    return *this;
}

RatFun& RatFun::operator*=(const Polynomial& p) {
    *this = make(num_ * p, den_);
    return *this;
}

bool RatFun::equal(const RatFun& other) const {
    if (mode() != other.mode()) throw IncompatibleModesError("rational-function mode mismatch in =");
    // Shared factors cancel before cross-multiplying.
    auto complement = [](const RatFun& f, const RatFun& g) {
        Polynomial out = f.num_;
        for (const auto& [m, k] : g.den_) {
            auto it = f.den_.find(m);
            int missing = k - (it == f.den_.end() ? 0 : it->second);
            Polynomial factor = Polynomial::one_minus_monomial(f.mode(), m);
            for (int i = 0; i < missing; ++i) out *= factor;
        }
        return out;
    };
    return complement(*this, other) == complement(other, *this);
}

RatFun RatFun::apply_permutation(const Permutation& sigma) const {
    if (sigma.size() != mode().n)
        throw DimensionError("permutation degree does not match ring dimension");
    FactorMap moved;
    for (const auto& [m, k] : den_) {
        ExponentVec img(mode().n, 0);
        for (int i = 0; i < mode().n; ++i) img[sigma(i + 1) - 1] = m[i];
        moved[canonicalize_exponents(img, mode())] += k;
    }
    return make(num_.apply_permutation(sigma.image()), moved);
}

Rational RatFun::evaluate(const std::vector<Rational>& point) const {
    Rational value = num_.evaluate(point);
    for (const auto& [m, k] : den_) {
        Rational factor = Rational(1) - Polynomial::monomial(mode(), m).evaluate(point);
        if (factor == 0) throw PoleError("denominator factor vanishes at the evaluation point");
        for (int i = 0; i < k; ++i) value /= factor;
    }
    return value;
}

std::string RatFun::str() const {
    if (den_.empty()) return num_.str();
    std::ostringstream out;
    if (num_.term_count() > 1) {
        out << '(' << num_.str() << ')';
    } else {
        out << num_.str();
    }
    out << " / ";
    std::ostringstream dout;
    bool first = true;
    for (const auto& [m, k] : den_) {
        if (!first) dout << '*';
        first = false;
        dout << "(1 - " << render_monomial(m, mode().var) << ')';
        if (k > 1) dout << '^' << k;
    }
    if (den_.size() > 1) {
        out << '(' << dout.str() << ')';
    } else {
        out << dout.str();
    }
    return out.str();
}

std::vector<Rational> random_cyclic_point(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_cyclic_point needs n >= 1");
    DeterministicRng rng(seed);
    std::vector<Rational> point;
    point.reserve(n);
    Rational prod(1);
    for (int i = 0; i + 1 < n; ++i) {
        Rational r;
        bool fresh = false;
        while (!fresh) {
            r = make_rational(rng.uniform(2, 1000000), rng.uniform(2, 1000000));
            fresh = true;
            for (const auto& prev : point) {
                if (prev == r) {
                    fresh = false;
                    break;
                }
            }
        }
        point.push_back(r);
        prod *= r;
    }
    point.push_back(1 / prod);
    return point;
}

Rational rf_random_evaluate(const RatFun& f, std::uint64_t seed) {
    if (!f.mode().cyclic)
        throw ConstraintError("rf_random_evaluate draws cyclic (product-1) points");
    constexpr int kMaxRetries = 64;
    for (int retry = 0; retry < kMaxRetries; ++retry) {
        std::vector<Rational> point = random_cyclic_point(f.mode().n, mix_seed(seed, retry));
        try {
            return f.evaluate(point);
        } catch (const PoleError&) {
            continue;
        }
    }
    throw DegeneratePointError("no non-degenerate evaluation point within the retry budget");
}

}  // namespace klyachko
