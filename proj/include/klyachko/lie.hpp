#ifndef KLYACHKO_LIE_HPP
#define KLYACHKO_LIE_HPP

#include <map>

#include "klyachko/groupalg.hpp"
#include "klyachko/perm.hpp"
#include "klyachko/report.hpp"

namespace klyachko {

// Formal linear combination of words over the positive integers.
using WordSum = std::map<Word, Rational>;

// Sum of all interleavings of u and v; multiplicity-free because the letters
// of u and v are pairwise distinct (enforced).
WordSum shuffle_product(const Word& u, const Word& v);

// <A, S> with <u, v> = delta_{u,v} on words: picks A's coefficients out of
// the word sum. Words that are not permutations of {1..n} contribute zero.
RatFun scalar_product(const GroupAlgebraElement& a, const WordSum& s);

// Orthogonality criterion: A is a Lie element iff <A, u shuffle v> = 0 for
// every complementary ordered pair (u, v). Pairs are enumerated by subset
// (size, then lex; the subset containing 1 supplies u), words in lex order;
// <A, u sh v> = <A, v sh u> halves the work, both ordered pairs are recorded.
VerificationReport is_lie_element(const GroupAlgebraElement& a, const RunOptions& options);

// Left-bracketing expansion of one word: [[...[w1,w2],...],wk] written back
// into words, 2^{k-1} signed terms.
WordSum left_bracketing_expansion(const Word& w);

// Dynkin-Specht-Wever map: independent Lie-ness oracle. A homogeneous
// element of degree n is Lie iff left-bracketing sends it to n times itself.
GroupAlgebraElement dynkin_left_bracketing(const GroupAlgebraElement& a);

// dynkin(e_n) = n e_n, symbolically or at seeded points.
VerificationReport check_dynkin_suite(int n, const RunOptions& options);

// is_lie_element applied to e_n.
VerificationReport check_lie_suite(int n, const RunOptions& options);

}  // namespace klyachko

#endif
