#ifndef KLYACHKO_GROUPALG_HPP
#define KLYACHKO_GROUPALG_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klyachko/cyclotomic.hpp"
#include "klyachko/perm.hpp"
#include "klyachko/ratfun.hpp"
#include "klyachko/report.hpp"

namespace klyachko {

// Element of the twisted group algebra K(q)S_n: a sparse map from
// permutations to cyclic-mode rational functions. Zero coefficients are
// never stored.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n) : n_(n) {}

    int n() const { return n_; }
    RingMode coefficient_mode() const { return cyclic_mode(n_); }
    const std::map<Permutation, RatFun>& coeffs() const { return coeffs_; }
    long support_size() const { return static_cast<long>(coeffs_.size()); }
    std::vector<Permutation> support() const;

    RatFun coefficient(const Permutation& sigma) const;
    void set_coefficient(const Permutation& sigma, RatFun value);
    void add_to_coefficient(const Permutation& sigma, const RatFun& value);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs);
    friend GroupAlgebraElement operator+(GroupAlgebraElement lhs,
                                         const GroupAlgebraElement& rhs) {
        return lhs += rhs;
    }
    GroupAlgebraElement scaled(const RatFun& c) const;
    GroupAlgebraElement scaled(const Rational& c) const;

    // Coefficient-wise equality as field elements.
    bool equal(const GroupAlgebraElement& other) const;

    // One term per line, `<ratfun> * <one-line permutation>`, permutations in
    // lexicographic order.
    std::string str() const;

private:
    int n_;
    std::map<Permutation, RatFun> coeffs_;
};

// Product of the prefix monomials over the descents of w.
Polynomial word_descent_numerator(const Word& w, const RingMode& mode);
// N(sigma): the same, for a permutation.
Polynomial gmaj_numerator(const Permutation& sigma, const RingMode& mode);
// D(sigma) as its factor monomials: prefixes of length 1..limit
// (limit = n-1 for gmaj, n for the P-partition shape).
std::vector<ExponentVec> prefix_factors(const Word& w, int limit, const RingMode& mode);
// The gmaj shape for an arbitrary distinct-letter word and prefix range:
// word_descent_numerator(w) / prod of (1 - prefix_i), i = 1..prefix_limit.
RatFun word_genfun(const Word& w, int prefix_limit, const RingMode& mode);

// The q-major index gmaj(sigma) = N(sigma)/D(sigma). The two-argument form
// supports the free-mode presentation used by rendering and the shuffle
// identity; the algebra itself lives in cyclic mode.
RatFun gmaj(const Permutation& sigma, const RingMode& mode);
RatFun gmaj(const Permutation& sigma);

// e_n(q) = sum over S_n of gmaj(sigma) sigma.
GroupAlgebraElement klyachko_element(int n);
// theta_n(q) = sum over i of gmaj(gamma^i) gamma^i.
GroupAlgebraElement partner_element(int n);
// 1 * identity, the unit of the twisted algebra.
GroupAlgebraElement unit_element(int n);

// f sigma x g tau = (f * (sigma . g)) sigma tau, extended bilinearly.
GroupAlgebraElement twisted_product(const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b);

// Presentation-form rendering: the defining N(sigma)/D(sigma) formulas over
// free variables, where no quotient relation rewrites the prefix monomials.
std::string render_gmaj_presentation(const Permutation& sigma);
std::string render_klyachko_presentation(int n);
std::string render_partner_presentation(int n);

enum class LemmaPart { I, II, III, IV };

// The four exchange identities between gamma, N, D and gmaj:
//   (i)   gamma.N(sigma) = q1 N(gamma sigma)
//   (ii)  tau.D(sigma) = D(tau sigma)
//   (iii) gamma^i.gmaj(sigma) = q1...qi gmaj(gamma^i sigma)
//   (iv)  N(sigma gamma^i) = (q_{sigma(1)}...q_{sigma(i)})^{-dbar(sigma)} N(sigma)
// tau is used by part II, i by parts III and IV.
bool check_gamma_lemma(LemmaPart part, const Permutation& sigma, const Permutation& tau,
                       int i);

// sum_{i=0}^{n-1} (a_{i+1}...a_n)^k / prod_{j=1}^{n-1}(1 - a_{i+1}...a_{i+j})
// with a_i = q_i, subscripts mod n; equals 1 if k = 0 and 0 otherwise.
RatFun pare_sum(int n, int k);

// Verifies e x e = e, theta x e = e and e x theta = theta. Symbolic mode
// compares coefficients with rf_equal; randomized mode compares exact values
// at product-1 points.
VerificationReport check_idempotency(int n, const RunOptions& options);

// Exhaustive (sigma, tau, i) for small n; `samples` seeded random triples
// otherwise. Every check is exact.
VerificationReport check_lemma_suite(int n, const RunOptions& options, int samples = 200);

// pare_sum(n, k) = delta_{0,k} for 0 <= k <= n-1, symbolically.
VerificationReport check_pare_suite(int n);

// tau = sigma gamma^j with sigma(1) = 1; returns sigma and the scalar
// q_{sigma(1)}...q_{sigma(j)} with tau x theta = scalar (sigma x theta).
std::pair<Permutation, RatFun> ideal_spanning_scalar(const Permutation& tau);

// B = {sigma x theta_n | sigma(1) = 1}: (n-1)! elements with pairwise
// disjoint supports.
std::vector<GroupAlgebraElement> ideal_basis(int n);

// Basis size, disjoint supports, and the spanning relation for every tau.
VerificationReport check_ideal_suite(int n, const RunOptions& options);

// Sparse element over K(zeta).
struct CycloGroupAlgebraElement {
    int n = 1;
    std::map<Permutation, CyclotomicElement> coeffs;

    friend bool operator==(const CycloGroupAlgebraElement&,
                           const CycloGroupAlgebraElement&) = default;
};

// Substitutes every q_i by zeta; PoleError if a denominator factor vanishes
// in K(zeta).
CycloGroupAlgebraElement specialize_root_of_unity(const GroupAlgebraElement& a,
                                                  const CyclotomicField& field);

// kappa_n = (1/n) sum zeta^{maj sigma} sigma.
CycloGroupAlgebraElement klyachko_idempotent(const CyclotomicField& field);

// Ordinary (untwisted) product over K(zeta): coefficients are constants, so
// the twist acts trivially.
CycloGroupAlgebraElement ordinary_product(const CycloGroupAlgebraElement& a,
                                          const CycloGroupAlgebraElement& b,
                                          const CyclotomicField& field);

// prod (1 - zeta^i) = n, e_n |-> kappa_n coefficientwise and
// kappa_n kappa_n = kappa_n.
VerificationReport check_cyclotomic_suite(int n);

// Exact gmaj values of all of S_n at a point, indexed like
// all_permutations(n). Shares prefix products across permutations; the
// workhorse of the randomized suites.
std::vector<Rational> gmaj_values_at_point(int n, const std::vector<Rational>& point);

// point permuted by sigma: result[i] = point[sigma(i+1)-1].
std::vector<Rational> permute_point(const std::vector<Rational>& point,
                                    const Permutation& sigma);

std::string render_point(const std::vector<Rational>& point);

}  // namespace klyachko

#endif
