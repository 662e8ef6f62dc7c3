#ifndef KLYACHKO_PPART_HPP
#define KLYACHKO_PPART_HPP

#include <string>
#include <vector>

#include "klyachko/groupalg.hpp"
#include "klyachko/perm.hpp"
#include "klyachko/ratfun.hpp"
#include "klyachko/report.hpp"

namespace klyachko {

// Labelled poset that is a disjoint union of chains, each word listing one
// chain bottom-to-top. Elements are exactly {1..n} and the labelling is the
// identity (a non-identity labelling would silently break the closed chain
// formula, so it is not representable).
struct ChainPoset {
    std::vector<Word> chains;
    int n = 0;
};

ChainPoset poset_from_chains(std::vector<Word> chains);
ChainPoset poset_from_words(const Word& u, const Word& v);

// All words containing each chain as a subsequence, in lex order. For a
// two-chain poset this is exactly the support of the shuffle product.
std::vector<Word> linear_extensions(const ChainPoset& p);

// Product over chains c of
//   prod_{j in D(c)} x_{c(1)}..x_{c(j)} / prod_{i=1}^{|c|} (1 - x_{c(1)}..x_{c(i)}).
RatFun genfun_closed_form(const ChainPoset& p, char var = 'x');

// Brute-force sum over all order-reversing maps f with the strictness
// conditions of the identity labelling and total size <= degree.
Polynomial ppartitions_truncated(const ChainPoset& p, int degree, char var = 'x');

// Geometric expansion of a free-mode rational function whose denominator
// factors all have positive total degree; truncated at `degree`.
Polynomial truncated_expansion(const RatFun& f, long degree);

// Linear-extension sum (full-length denominators) expanded as a series
// against the brute-force enumeration.
bool check_stanley_formula(const ChainPoset& p, int degree);

// <e_n, u sh v> = (1 - q1..qn) F(P_{u,v}; q) as free rational functions, and
// the cyclic reduction of the left side vanishes.
bool check_shuffle_identity(const Word& u, const Word& v);

// `[2 1][3]`
std::string poset_str(const ChainPoset& p);

void append_two_chain_checks(VerificationReport& report, int n, int degree);
void append_single_chain_checks(VerificationReport& report, int len, int degree);

// Stanley-formula checks for every two-chain poset on {1..n} and every
// single chain of length n, at the given truncation degree.
VerificationReport check_ppartition_suite(int n, int degree);

// check_shuffle_identity over all complementary splits of {1..n}.
VerificationReport check_shuffle_identity_suite(int n);

}  // namespace klyachko

#endif
