#ifndef KLYACHKO_THETA_HPP
#define KLYACHKO_THETA_HPP

#include <map>
#include <string>

#include "klyachko/perm.hpp"
#include "klyachko/report.hpp"
#include "klyachko/ring.hpp"

namespace klyachko {

struct SizeLexLess {
    bool operator()(const Permutation& a, const Permutation& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.image() < b.image();
    }
};

// Element of the direct sum over n of K[[x1..xn]] S_n, truncated two ways:
// permutations of size at most max_size, coefficient polynomials of total
// degree at most max_degree. The empty permutation indexes the S_0 part.
// `truncated` records that some over-size term was dropped along the way, so
// equality checks only speak for the jointly representable region.
class TruncatedSeries {
public:
    TruncatedSeries(int max_size, int max_degree)
        : max_size_(max_size), max_degree_(max_degree) {}

    int max_size() const { return max_size_; }
    int max_degree() const { return max_degree_; }
    bool truncated() const { return truncated_; }
    void mark_truncated() { truncated_ = true; }
    RingMode coefficient_mode() const { return free_mode(max_size_, 'x'); }

    const std::map<Permutation, Polynomial, SizeLexLess>& coeffs() const { return coeffs_; }
    Polynomial coefficient(const Permutation& sigma) const;
    void set_coefficient(const Permutation& sigma, Polynomial value);
    void add_to_coefficient(const Permutation& sigma, const Polynomial& value);

    // Same coefficients after re-truncation to the smaller degree bound.
    bool same_coefficients(const TruncatedSeries& other) const;

    TruncatedSeries retruncate(int max_degree) const;

    // One coefficient per line in (size, lex) order: `<poly> * <perm>`, the
    // empty permutation printed as "eps".
    std::string str() const;

private:
    int max_size_;
    int max_degree_;
    bool truncated_ = false;
    std::map<Permutation, Polynomial, SizeLexLess> coeffs_;
};

// The unit: 1 * eps.
TruncatedSeries epsilon_series(int max_size, int max_degree);

// (f sigma) star (g tau) = sum over w = u.v in S_{s+t} with st(u) = sigma,
// st(v) = tau of f relabelled along u times g relabelled along v, times w.
TruncatedSeries star_product(const TruncatedSeries& a, const TruncatedSeries& b);

// Closed-form coefficient of sigma in Theta(x): geometric expansion of
//   prod_{j in D(sigma)} x_{sigma(1)}..x_{sigma(j)}
//   / prod_{i=1}^{n} (1 - x_{sigma(1)}..x_{sigma(i)}),
// truncated at total degree D, in max_size variables.
Polynomial csigma_closed(const Permutation& sigma, int max_size, int degree);

// Independent enumeration: factorizations of sigma into nonempty increasing
// words u1..uk and strictly decreasing exponents n1 > ... > nk >= 0, summing
// (x_{u1})^{n1} ... (x_{uk})^{nk} within the degree bound.
Polynomial csigma_brute(const Permutation& sigma, int max_size, int degree);

// Theta(x) truncated: csigma_closed coefficient for every |sigma| <= N.
TruncatedSeries theta_closed(int max_size, int degree);

// The right-to-left product of the factors
//   F(m) = eps + x1^m 1 + x1^m x2^m 12 + ...
// folded from m = degree down to 0 (factors with m > degree only contribute
// eps within the degree bound).
TruncatedSeries product_expansion(int max_size, int degree);

// theta_closed == product_expansion coefficientwise, and
// csigma_closed == csigma_brute for every |sigma| <= max_size.
bool check_product_theorem(int max_size, int degree);

VerificationReport check_theta_suite(int max_size, int degree);

}  // namespace klyachko

#endif
