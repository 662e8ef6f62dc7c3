#include "klyachko/groupalg.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "klyachko/errors.hpp"
#include "klyachko/rng.hpp"

namespace klyachko {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::uint64_t point_seed(std::uint64_t seed, int point_index, int retry) {
    return mix_seed(mix_seed(seed, static_cast<std::uint64_t>(point_index)),
                    static_cast<std::uint64_t>(retry));
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::vector<Permutation> GroupAlgebraElement::support() const {
    std::vector<Permutation> out;
    out.reserve(coeffs_.size());
    for (const auto& [p, c] : coeffs_) out.push_back(p);
    return out;
}

RatFun GroupAlgebraElement::coefficient(const Permutation& sigma) const {
    auto it = coeffs_.find(sigma);
    return it == coeffs_.end() ? RatFun::zero(coefficient_mode()) : it->second;
}

void GroupAlgebraElement::set_coefficient(const Permutation& sigma, RatFun value) {
    if (sigma.size() != n_) throw DimensionError("permutation degree mismatch in element");
    if (value.mode() != coefficient_mode())
        throw IncompatibleModesError("coefficient mode mismatch in element");
    if (value.is_zero()) {
        coeffs_.erase(sigma);
    } else {
        coeffs_.insert_or_assign(sigma, std::move(value));
    }
}

void GroupAlgebraElement::add_to_coefficient(const Permutation& sigma, const RatFun& value) {
    if (value.is_zero()) return;
    auto it = coeffs_.find(sigma);
    if (it == coeffs_.end()) {
        set_coefficient(sigma, value);
        return;
    }
    it->second += value;
    if (it->second.is_zero()) coeffs_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& rhs) {
    if (n_ != rhs.n_) throw DimensionError("degree mismatch in element +");
    for (const auto& [p, c] : rhs.coeffs_) add_to_coefficient(p, c);
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const RatFun& c) const {
    GroupAlgebraElement out(n_);
    if (c.is_zero()) return out;
    for (const auto& [p, f] : coeffs_) out.set_coefficient(p, f * c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const {
    GroupAlgebraElement out(n_);
    if (c == 0) return out;
    for (const auto& [p, f] : coeffs_) out.set_coefficient(p, f * c);
    return out;
}

bool GroupAlgebraElement::equal(const GroupAlgebraElement& other) const {
    if (n_ != other.n_) return false;
    for (const auto& [p, c] : coeffs_) {
        if (!c.equal(other.coefficient(p))) return false;
    }
    for (const auto& [p, c] : other.coeffs_) {
        if (coeffs_.find(p) == coeffs_.end() && !c.is_zero()) return false;
    }
    return true;
}

std::string GroupAlgebraElement::str() const {
    std::ostringstream out;
    for (const auto& [p, c] : coeffs_) {
        out << c.str() << " * " << p.str() << '\n';
    }
    return out.str();
}

Polynomial word_descent_numerator(const Word& w, const RingMode& mode) {
    if (w.empty()) return Polynomial::one(mode);
    DescentStats stats = descent_stats(w);
    ExponentVec e(mode.n, 0);
    for (int j : stats.descents) {
        for (int i = 1; i <= j; ++i) e[w[i - 1] - 1] += 1;
    }
    return Polynomial::monomial(mode, e);
}

Polynomial gmaj_numerator(const Permutation& sigma, const RingMode& mode) {
    return word_descent_numerator(sigma.word(), mode);
}

std::vector<ExponentVec> prefix_factors(const Word& w, int limit, const RingMode& mode) {
    std::vector<ExponentVec> out;
    ExponentVec e(mode.n, 0);
    for (int i = 1; i <= limit; ++i) {
        e[w[i - 1] - 1] += 1;
        out.push_back(e);
    }
    return out;
}

RatFun word_genfun(const Word& w, int prefix_limit, const RingMode& mode) {
    return RatFun::make(word_descent_numerator(w, mode), prefix_factors(w, prefix_limit, mode));
}

RatFun gmaj(const Permutation& sigma, const RingMode& mode) {
    if (sigma.size() != mode.n) throw DimensionError("permutation degree mismatch in gmaj");
    if (sigma.size() == 0) return RatFun::one(mode);
    return word_genfun(sigma.word(), sigma.size() - 1, mode);
}

RatFun gmaj(const Permutation& sigma) { return gmaj(sigma, cyclic_mode(sigma.size())); }

GroupAlgebraElement klyachko_element(int n) {
    GroupAlgebraElement e(n);
    for (const Permutation& sigma : all_permutations(n)) {
        e.set_coefficient(sigma, gmaj(sigma));
    }
    return e;
}

GroupAlgebraElement partner_element(int n) {
    GroupAlgebraElement theta(n);
    for (int i = 0; i < n; ++i) {
        Permutation g = cycle_power(n, i);
        theta.set_coefficient(g, gmaj(g));
    }
    return theta;
}

GroupAlgebraElement unit_element(int n) {
    GroupAlgebraElement e(n);
    e.set_coefficient(Permutation::identity(n), RatFun::one(cyclic_mode(n)));
    return e;
}

GroupAlgebraElement twisted_product(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.n() != b.n()) throw DimensionError("degree mismatch in twisted product");
    GroupAlgebraElement out(a.n());
    for (const auto& [sigma, f] : a.coeffs()) {
        for (const auto& [tau, g] : b.coeffs()) {
            out.add_to_coefficient(compose(sigma, tau), f * g.apply_permutation(sigma));
        }
    }
    return out;
}

std::string render_gmaj_presentation(const Permutation& sigma) {
    return gmaj(sigma, free_mode(sigma.size(), 'q')).str();
}

std::string render_klyachko_presentation(int n) {
    std::ostringstream out;
    for (const Permutation& sigma : all_permutations(n)) {
        out << render_gmaj_presentation(sigma) << " * " << sigma.str() << '\n';
    }
    return out.str();
}

std::string render_partner_presentation(int n) {
    std::map<Permutation, std::string> lines;
    for (int i = 0; i < n; ++i) {
        Permutation g = cycle_power(n, i);
        lines[g] = render_gmaj_presentation(g);
    }
    std::ostringstream out;
    for (const auto& [p, text] : lines) out << text << " * " << p.str() << '\n';
    return out.str();
}

namespace {

Polynomial expanded_denominator(const Permutation& sigma, const RingMode& mode) {
    Polynomial d = Polynomial::one(mode);
    for (const auto& m : prefix_factors(sigma.word(), sigma.size() - 1, mode)) {
        d *= Polynomial::one_minus_monomial(mode, m);
    }
    return d;
}

ExponentVec prefix_exponents(const Permutation& sigma, int len, const RingMode& mode) {
    ExponentVec e(mode.n, 0);
    for (int i = 1; i <= len; ++i) e[sigma(i) - 1] += 1;
    return e;
}

}  // namespace

bool check_gamma_lemma(LemmaPart part, const Permutation& sigma, const Permutation& tau,
                       int i) {
    const int n = sigma.size();
    const RingMode mode = cyclic_mode(n);
    const Permutation gamma = cycle_power(n, 1);
    switch (part) {
        case LemmaPart::I: {
            Polynomial lhs = gmaj_numerator(sigma, mode).apply_permutation(gamma.image());
            ExponentVec q1(n, 0);
            q1[0] = 1;
            Polynomial rhs =
                Polynomial::monomial(mode, q1) * gmaj_numerator(compose(gamma, sigma), mode);
            return lhs == rhs;
        }
        case LemmaPart::II: {
            if (tau.size() != n) throw DimensionError("degree mismatch in lemma part ii");
            Polynomial lhs = expanded_denominator(sigma, mode).apply_permutation(tau.image());
            Polynomial rhs = expanded_denominator(compose(tau, sigma), mode);
            return lhs == rhs;
        }
        case LemmaPart::III: {
            Permutation gi = cycle_power(n, i);
            RatFun lhs = gmaj(sigma).apply_permutation(gi);
            ExponentVec e(n, 0);
            for (int k = 1; k <= ((i % n) + n) % n; ++k) e[k - 1] += 1;
            RatFun rhs = gmaj(compose(gi, sigma));
            rhs *= Polynomial::monomial(mode, e);
            return lhs.equal(rhs);
        }
        case LemmaPart::IV: {
            Permutation gi = cycle_power(n, i);
            Polynomial lhs = gmaj_numerator(compose(sigma, gi), mode);
            int dbar = descent_stats(sigma.word()).dbar;
            ExponentVec e = prefix_exponents(sigma, ((i % n) + n) % n, mode);
            for (int& x : e) x *= -dbar;
            Polynomial rhs = Polynomial::monomial(mode, e) * gmaj_numerator(sigma, mode);
            return lhs == rhs;
        }
    }
    throw std::logic_error("unreachable lemma part");
}

RatFun pare_sum(int n, int k) {
    if (k < 0 || k >= n) throw std::invalid_argument("pare_sum needs 0 <= k <= n-1");
    const RingMode mode = cyclic_mode(n);
    RatFun acc = RatFun::zero(mode);
    for (int i = 0; i < n; ++i) {
        ExponentVec num(n, 0);
        for (int p = i + 1; p <= n; ++p) num[p - 1] += k;
        std::vector<ExponentVec> factors;
        ExponentVec e(n, 0);
        for (int j = 1; j <= n - 1; ++j) {
            e[(i + j - 1) % n] += 1;
            factors.push_back(e);
        }
        acc += RatFun::make(Polynomial::monomial(mode, num), factors);
    }
    return acc;
}

std::vector<Rational> permute_point(const std::vector<Rational>& point,
                                    const Permutation& sigma) {
    if (point.size() != static_cast<size_t>(sigma.size()))
        throw DimensionError("point length does not match permutation degree");
    std::vector<Rational> out(point.size());
    for (size_t i = 0; i < point.size(); ++i) out[i] = point[sigma(static_cast<int>(i) + 1) - 1];
    return out;
}

std::string render_point(const std::vector<Rational>& point) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < point.size(); ++i) {
        if (i) out << ", ";
        out << render(point[i]);
    }
    out << ')';
    return out.str();
}

namespace {

void gmaj_walk(int n, const std::vector<Rational>& point, std::vector<bool>& used,
               std::vector<int>& word, const Rational& prefix, const Rational& num,
               const Rational& den, std::vector<Rational>& out) {
    const int depth = static_cast<int>(word.size());
    if (depth == n) {
        out.push_back(num / den);
        return;
    }
    for (int letter = 1; letter <= n; ++letter) {
        if (used[letter - 1]) continue;
        Rational next_num = num;
        if (depth >= 1 && word.back() > letter) next_num *= prefix;  // descent at `depth`
        Rational next_prefix = prefix * point[letter - 1];
        Rational next_den = den;
        if (depth + 1 <= n - 1) {
            Rational factor = Rational(1) - next_prefix;
            if (factor == 0)
                throw PoleError("prefix product equals 1 at the evaluation point");
            next_den *= factor;
        }
        used[letter - 1] = true;
        word.push_back(letter);
        gmaj_walk(n, point, used, word, next_prefix, next_num, next_den, out);
        word.pop_back();
        used[letter - 1] = false;
    }
}

}  // namespace

std::vector<Rational> gmaj_values_at_point(int n, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != n)
        throw DimensionError("point length does not match n");
    std::vector<Rational> out;
    out.reserve(factorial(n));
    std::vector<bool> used(n, false);
    std::vector<int> word;
    gmaj_walk(n, point, used, word, Rational(1), Rational(1), Rational(1), out);
    return out;
}

namespace {

struct PermIndex {
    std::vector<Permutation> perms;
    std::map<Permutation, int> rank;

    explicit PermIndex(int n) : perms(all_permutations(n)) {
        for (size_t i = 0; i < perms.size(); ++i) rank.emplace(perms[i], static_cast<int>(i));
    }
    int of(const Permutation& p) const { return rank.at(p); }
};

std::vector<Rational> draw_point_for_suite(int n, std::uint64_t seed, int point_index,
                                           int* retry_out) {
    constexpr int kMaxRetries = 64;
    for (int retry = 0; retry < kMaxRetries; ++retry) {
        std::vector<Rational> pt = random_cyclic_point(n, point_seed(seed, point_index, retry));
        try {
            // A usable point keeps every gmaj denominator nonzero for every
            // permuted copy of itself; probe the identity copy cheaply here,
            // the full walk rejects the rest via PoleError.
            gmaj_values_at_point(n, pt);
        } catch (const PoleError&) {
            continue;
        }
        if (retry_out) *retry_out = retry;
        return pt;
    }
    throw DegeneratePointError("no usable evaluation point within the retry budget");
}

}  // namespace

VerificationReport check_idempotency(int n, const RunOptions& options) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "idempotent";
    report.add_param("n", std::to_string(n));
    report.mode = options.mode_string();

    if (!options.randomized) {
        GroupAlgebraElement e = klyachko_element(n);
        GroupAlgebraElement theta = partner_element(n);
        GroupAlgebraElement ee = twisted_product(e, e);
        GroupAlgebraElement te = twisted_product(theta, e);
        GroupAlgebraElement et = twisted_product(e, theta);
        for (const Permutation& rho : all_permutations(n)) {
            RatFun expected = e.coefficient(rho);
            report.record(ee.coefficient(rho).equal(expected), "e*e=e/" + rho.str(),
                          "coefficient mismatch");
            report.record(te.coefficient(rho).equal(expected), "theta*e=e/" + rho.str(),
                          "coefficient mismatch");
            report.record(et.coefficient(rho).equal(theta.coefficient(rho)),
                          "e*theta=theta/" + rho.str(), "coefficient mismatch");
        }
        report.elapsed_ms = ms_since(start);
        return report;
    }

    const PermIndex index(n);
    const long nfact = factorial(n);
    const Permutation gamma = cycle_power(n, 1);
    std::vector<int> gamma_rank(n);
    for (int i = 0; i < n; ++i) gamma_rank[i] = index.of(cycle_power(n, i));

    for (int pt_idx = 0; pt_idx < options.points; ++pt_idx) {
        std::vector<Rational> point;
        std::vector<Rational> ref;           // gmaj values at the point itself
        std::vector<std::vector<Rational>> gamma_rows(n);
        std::vector<Rational> acc_ee(nfact, Rational(0));
        std::vector<Rational> acc_te(nfact, Rational(0));
        std::vector<Rational> acc_et(nfact, Rational(0));
        bool done = false;
        for (int retry = 0; retry < 64 && !done; ++retry) {
            point = random_cyclic_point(n, point_seed(options.seed, pt_idx, retry));
            try {
                ref = gmaj_values_at_point(n, point);
                for (int i = 0; i < n; ++i) {
                    gamma_rows[i] =
                        gmaj_values_at_point(n, permute_point(point, cycle_power(n, i)));
                }
                std::fill(acc_ee.begin(), acc_ee.end(), Rational(0));
                std::fill(acc_te.begin(), acc_te.end(), Rational(0));
                std::fill(acc_et.begin(), acc_et.end(), Rational(0));
                for (long si = 0; si < nfact; ++si) {
                    const Permutation& sigma = index.perms[si];
                    std::vector<Rational> row =
                        gmaj_values_at_point(n, permute_point(point, sigma));
                    for (long ti = 0; ti < nfact; ++ti) {
                        acc_ee[index.of(compose(sigma, index.perms[ti]))] += ref[si] * row[ti];
                    }
                    for (int i = 0; i < n; ++i) {
                        acc_et[index.of(compose(sigma, cycle_power(n, i)))] +=
                            ref[si] * row[gamma_rank[i]];
                    }
                }
                for (int i = 0; i < n; ++i) {
                    const std::vector<Rational>& row = gamma_rows[i];
                    const Permutation gi = cycle_power(n, i);
                    for (long ti = 0; ti < nfact; ++ti) {
                        acc_te[index.of(compose(gi, index.perms[ti]))] +=
                            ref[gamma_rank[i]] * row[ti];
                    }
                }
                done = true;
            } catch (const PoleError&) {
                continue;
            }
        }
        if (!done) throw DegeneratePointError("no usable evaluation point for idempotency");

        std::vector<bool> is_gamma_power(nfact, false);
        for (int i = 0; i < n; ++i) is_gamma_power[gamma_rank[i]] = true;
        const std::string witness = "point " + std::to_string(pt_idx) + " = " +
                                    render_point(point);
        for (long r = 0; r < nfact; ++r) {
            const std::string rho = index.perms[r].str();
            const std::string tag = "/point=" + std::to_string(pt_idx);
            report.record(acc_ee[r] == ref[r], "e*e=e/" + rho + tag, witness);
            report.record(acc_te[r] == ref[r], "theta*e=e/" + rho + tag, witness);
            Rational expected = is_gamma_power[r] ? ref[r] : Rational(0);
            report.record(acc_et[r] == expected, "e*theta=theta/" + rho + tag, witness);
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport check_lemma_suite(int n, const RunOptions& options, int samples) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "lemma";
    report.add_param("n", std::to_string(n));
    report.mode = options.mode_string();

    const Permutation id = Permutation::identity(n);
    auto run_one = [&](const Permutation& sigma, const Permutation& tau, int i,
                       const std::string& stamp) {
        report.record(check_gamma_lemma(LemmaPart::I, sigma, id, 0), "lemma-i/" + stamp,
                      "sigma=" + sigma.str());
        report.record(check_gamma_lemma(LemmaPart::II, sigma, tau, 0), "lemma-ii/" + stamp,
                      "sigma=" + sigma.str() + " tau=" + tau.str());
        report.record(check_gamma_lemma(LemmaPart::III, sigma, id, i), "lemma-iii/" + stamp,
                      "sigma=" + sigma.str() + " i=" + std::to_string(i));
        report.record(check_gamma_lemma(LemmaPart::IV, sigma, id, i), "lemma-iv/" + stamp,
                      "sigma=" + sigma.str() + " i=" + std::to_string(i));
    };

    if (!options.randomized) {
        const std::vector<Permutation> perms = all_permutations(n);
        for (const Permutation& sigma : perms) {
            report.record(check_gamma_lemma(LemmaPart::I, sigma, id, 0),
                          "lemma-i/sigma=" + sigma.str(), "exhaustive");
            for (const Permutation& tau : perms) {
                report.record(check_gamma_lemma(LemmaPart::II, sigma, tau, 0),
                              "lemma-ii/sigma=" + sigma.str() + "/tau=" + tau.str(),
                              "exhaustive");
            }
            for (int i = 0; i < n; ++i) {
                report.record(check_gamma_lemma(LemmaPart::III, sigma, id, i),
                              "lemma-iii/sigma=" + sigma.str() + "/i=" + std::to_string(i),
                              "exhaustive");
                report.record(check_gamma_lemma(LemmaPart::IV, sigma, id, i),
                              "lemma-iv/sigma=" + sigma.str() + "/i=" + std::to_string(i),
                              "exhaustive");
            }
        }
    } else {
        const std::vector<Permutation> perms = all_permutations(n);
        DeterministicRng rng(mix_seed(options.seed, 0));
        for (int s = 0; s < samples; ++s) {
            const Permutation& sigma = perms[rng.uniform(0, static_cast<long>(perms.size()) - 1)];
            const Permutation& tau = perms[rng.uniform(0, static_cast<long>(perms.size()) - 1)];
            int i = static_cast<int>(rng.uniform(0, n - 1));
            run_one(sigma, tau, i, "sample=" + std::to_string(s));
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport check_pare_suite(int n) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "pare";
    report.add_param("n", std::to_string(n));
    const RingMode mode = cyclic_mode(n);
    for (int k = 0; k < n; ++k) {
        RatFun expected = k == 0 ? RatFun::one(mode) : RatFun::zero(mode);
        RatFun value = pare_sum(n, k);
        report.record(value.equal(expected), "pare/k=" + std::to_string(k),
                      "value = " + value.str());
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

std::pair<Permutation, RatFun> ideal_spanning_scalar(const Permutation& tau) {
    const int n = tau.size();
    int j = ((1 - tau.inverse()(1)) % n + n) % n;
    Permutation sigma = compose(tau, cycle_power(n, -j));
    const RingMode mode = cyclic_mode(n);
    RatFun scalar =
        RatFun::from_polynomial(Polynomial::monomial(mode, prefix_exponents(sigma, j, mode)));
    return {std::move(sigma), std::move(scalar)};
}

std::vector<GroupAlgebraElement> ideal_basis(int n) {
    std::vector<GroupAlgebraElement> basis;
    GroupAlgebraElement theta = partner_element(n);
    for (const Permutation& sigma : all_permutations(n)) {
        if (sigma(1) != 1) continue;
        GroupAlgebraElement lhs(n);
        lhs.set_coefficient(sigma, RatFun::one(cyclic_mode(n)));
        basis.push_back(twisted_product(lhs, theta));
    }
    return basis;
}

VerificationReport check_ideal_suite(int n, const RunOptions& options) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "ideal";
    report.add_param("n", std::to_string(n));
    report.mode = options.mode_string();

    const std::vector<GroupAlgebraElement> basis = ideal_basis(n);
    report.record(static_cast<long>(basis.size()) == factorial(n - 1), "basis-size",
                  "got " + std::to_string(basis.size()));

    std::set<Permutation> seen;
    bool disjoint = true;
    bool full_orbits = true;
    for (const auto& b : basis) {
        if (b.support_size() != n) full_orbits = false;
        for (const auto& p : b.support()) {
            if (!seen.insert(p).second) disjoint = false;
        }
    }
    report.record(full_orbits, "support-size", "each basis element is supported on n cosets");
    report.record(disjoint, "support-disjoint", "supports overlap");

    GroupAlgebraElement theta = partner_element(n);
    for (const Permutation& tau : all_permutations(n)) {
        auto [sigma, scalar] = ideal_spanning_scalar(tau);
        GroupAlgebraElement tau_elt(n);
        tau_elt.set_coefficient(tau, RatFun::one(cyclic_mode(n)));
        GroupAlgebraElement sigma_elt(n);
        sigma_elt.set_coefficient(sigma, RatFun::one(cyclic_mode(n)));
        GroupAlgebraElement lhs = twisted_product(tau_elt, theta);
        GroupAlgebraElement rhs = twisted_product(sigma_elt, theta).scaled(scalar);
        if (!options.randomized) {
            report.record(lhs.equal(rhs), "spanning/tau=" + tau.str(),
                          "sigma=" + sigma.str() + " scalar=" + scalar.str());
        } else {
            bool ok = true;
            std::string witness = "sigma=" + sigma.str();
            for (int pt_idx = 0; pt_idx < options.points && ok; ++pt_idx) {
                std::vector<Rational> point =
                    draw_point_for_suite(n, options.seed, pt_idx, nullptr);
                for (const Permutation& rho : lhs.support()) {
                    Rational lv, rv;
                    try {
                        lv = lhs.coefficient(rho).evaluate(point);
                        rv = rhs.coefficient(rho).evaluate(point);
                    } catch (const PoleError&) {
                        continue;  // degenerate for this coefficient; other points cover it
                    }
                    if (lv != rv) {
                        ok = false;
                        witness += " point=" + render_point(point);
                        break;
                    }
                }
            }
            report.record(ok, "spanning/tau=" + tau.str(), witness);
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

CycloGroupAlgebraElement specialize_root_of_unity(const GroupAlgebraElement& a,
                                                  const CyclotomicField& field) {
    if (field.order() != a.n())
        throw IncompatibleModesError("cyclotomic field order does not match element degree");
    CycloGroupAlgebraElement out;
    out.n = a.n();
    for (const auto& [sigma, f] : a.coeffs()) {
        CyclotomicElement num = field.zero();
        for (const auto& [e, c] : f.num().terms()) {
            num = field.add(num, field.mul(field.zeta_pow(total_degree(e)), c));
        }
        CyclotomicElement den = field.one();
        for (const auto& [m, k] : f.den()) {
            CyclotomicElement factor =
                field.sub(field.one(), field.zeta_pow(total_degree(m)));
            if (factor.is_zero())
                throw PoleError("denominator factor vanishes at the root of unity");
            for (int i = 0; i < k; ++i) den = field.mul(den, factor);
        }
        CyclotomicElement value = field.mul(num, field.invert(den));
        if (!value.is_zero()) out.coeffs.emplace(sigma, std::move(value));
    }
    return out;
}

CycloGroupAlgebraElement klyachko_idempotent(const CyclotomicField& field) {
    const int n = field.order();
    CycloGroupAlgebraElement out;
    out.n = n;
    Rational inv_n = make_rational(1, n);
    for (const Permutation& sigma : all_permutations(n)) {
        long maj = descent_stats(sigma.word()).maj;
        out.coeffs.emplace(sigma, field.mul(field.zeta_pow(maj), inv_n));
    }
    return out;
}

CycloGroupAlgebraElement ordinary_product(const CycloGroupAlgebraElement& a,
                                          const CycloGroupAlgebraElement& b,
                                          const CyclotomicField& field) {
    if (a.n != b.n) throw DimensionError("degree mismatch in ordinary product");
    CycloGroupAlgebraElement out;
    out.n = a.n;
    for (const auto& [sigma, ca] : a.coeffs) {
        for (const auto& [tau, cb] : b.coeffs) {
            Permutation rho = compose(sigma, tau);
            CyclotomicElement term = field.mul(ca, cb);
            auto it = out.coeffs.find(rho);
            if (it == out.coeffs.end()) {
                out.coeffs.emplace(std::move(rho), std::move(term));
            } else {
                it->second = field.add(it->second, term);
            }
        }
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
        it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
    }
    return out;
}

VerificationReport check_cyclotomic_suite(int n) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "cyclotomic";
    report.add_param("n", std::to_string(n));

    CyclotomicField field(n);
    CyclotomicElement prod = field.one();
    for (int i = 1; i <= n - 1; ++i) {
        prod = field.mul(prod, field.sub(field.one(), field.zeta_pow(i)));
    }
    report.record(prod == field.from_rational(n), "product-identity",
                  "prod(1 - zeta^i) = " + field.str(prod));

    CycloGroupAlgebraElement kappa = klyachko_idempotent(field);
    CycloGroupAlgebraElement specialized = specialize_root_of_unity(klyachko_element(n), field);
    report.record(specialized == kappa, "specialize-e", "e_n does not map to kappa_n");

    // theta_n specializes to the classical partner (1/n) sum zeta^{-i} gamma^i.
    CycloGroupAlgebraElement eta;
    eta.n = n;
    Rational inv_n = make_rational(1, n);
    for (int i = 0; i < n; ++i) {
        eta.coeffs.emplace(cycle_power(n, i), field.mul(field.zeta_pow(-i), inv_n));
    }
    CycloGroupAlgebraElement specialized_theta =
        specialize_root_of_unity(partner_element(n), field);
    report.record(specialized_theta == eta, "specialize-theta",
                  "theta_n does not map to eta_n");

    CycloGroupAlgebraElement square = ordinary_product(kappa, kappa, field);
    report.record(square == kappa, "kappa-idempotent", "kappa_n^2 != kappa_n");

    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace klyachko
