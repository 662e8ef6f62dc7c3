#include "klyachko/ppart.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "klyachko/errors.hpp"

namespace klyachko {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void extension_walk(const ChainPoset& p, std::vector<size_t>& next, Word& acc,
                    std::vector<Word>& out) {
    if (static_cast<int>(acc.size()) == p.n) {
        out.push_back(acc);
        return;
    }
    for (size_t c = 0; c < p.chains.size(); ++c) {
        if (next[c] == p.chains[c].size()) continue;
        acc.push_back(p.chains[c][next[c]]);
        ++next[c];
        extension_walk(p, next, acc, out);
        --next[c];
        acc.pop_back();
    }
}

// All valid part assignments of one chain (bottom-to-top word), from the top
// element down, as a polynomial in the chain's variables.
void chain_parts_walk(const Word& chain, int pos, int lower_bound, int budget,
                      ExponentVec& exps, Polynomial& out) {
    if (pos < 0) {
        out.add_term(exps, 1);
        return;
    }
    // Remaining positions pos..0 all need at least the running lower bound,
    // so stop once even the cheapest completion blows the budget.
    for (int f = lower_bound; f * (pos + 1) <= budget; ++f) {
        exps[chain[pos] - 1] = f;
        int next_bound = f;
        if (pos > 0 && chain[pos - 1] > chain[pos]) next_bound = f + 1;  // strict drop
        chain_parts_walk(chain, pos - 1, next_bound, budget - f, exps, out);
        exps[chain[pos] - 1] = 0;
    }
}

}  // namespace

ChainPoset poset_from_chains(std::vector<Word> chains) {
    ChainPoset p;
    std::set<int> seen;
    int count = 0;
    for (const Word& c : chains) {
        if (c.empty()) throw std::invalid_argument("empty chain");
        for (int x : c) {
            if (x < 1 || !seen.insert(x).second)
                throw std::invalid_argument("chain elements must be distinct positive integers");
            ++count;
        }
    }
    if (count == 0 || *seen.rbegin() != count)
        throw std::invalid_argument("chain elements must cover {1..n}");
    p.chains = std::move(chains);
    p.n = count;
    return p;
}

ChainPoset poset_from_words(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("poset chains must be nonempty");
    return poset_from_chains({u, v});
}

std::vector<Word> linear_extensions(const ChainPoset& p) {
    std::vector<Word> out;
    std::vector<size_t> next(p.chains.size(), 0);
    Word acc;
    acc.reserve(p.n);
    extension_walk(p, next, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

RatFun genfun_closed_form(const ChainPoset& p, char var) {
    const RingMode mode = free_mode(p.n, var);
    Polynomial num = Polynomial::one(mode);
    std::vector<ExponentVec> factors;
    for (const Word& c : p.chains) {
        num *= word_descent_numerator(c, mode);
        for (auto& f : prefix_factors(c, static_cast<int>(c.size()), mode)) {
            factors.push_back(std::move(f));
        }
    }
    return RatFun::make(std::move(num), factors);
}

Polynomial ppartitions_truncated(const ChainPoset& p, int degree, char var) {
    const RingMode mode = free_mode(p.n, var);
    Polynomial out = Polynomial::one(mode);
    for (const Word& c : p.chains) {
        Polynomial chain_poly(mode);
        ExponentVec exps(mode.n, 0);
        chain_parts_walk(c, static_cast<int>(c.size()) - 1, 0, degree, exps, chain_poly);
        out = (out * chain_poly).truncate(degree);
    }
    return out;
}

Polynomial truncated_expansion(const RatFun& f, long degree) {
    if (f.mode().cyclic)
        throw ConstraintError("series expansion needs the free mode");
    Polynomial out = f.num().truncate(degree);
    for (const auto& [m, k] : f.den()) {
        long mdeg = total_degree(m);
        if (mdeg <= 0)
            throw ConstraintError("series expansion needs positive-degree denominator factors");
        Polynomial geo(f.mode());
        ExponentVec e(m.size(), 0);
        for (long j = 0; j * mdeg <= degree; ++j) {
            geo.add_term(e, 1);
            e = add_vectors(e, m);
        }
        for (int i = 0; i < k; ++i) out = (out * geo).truncate(degree);
    }
    return out;
}

bool check_stanley_formula(const ChainPoset& p, int degree) {
    const RingMode mode = free_mode(p.n, 'x');
    Polynomial lhs(mode);
    for (const Word& w : linear_extensions(p)) {
        lhs += truncated_expansion(word_genfun(w, p.n, mode), degree);
    }
    return lhs == ppartitions_truncated(p, degree, 'x');
}

bool check_shuffle_identity(const Word& u, const Word& v) {
    ChainPoset p = poset_from_words(u, v);
    const int n = p.n;
    const RingMode qfree = free_mode(n, 'q');
    const std::vector<Word> extensions = linear_extensions(p);

    RatFun lhs = RatFun::zero(qfree);
    for (const Word& w : extensions) lhs += word_genfun(w, n - 1, qfree);

    RatFun rhs = genfun_closed_form(p, 'q');
    rhs *= Polynomial::one_minus_monomial(qfree, ExponentVec(n, 1));
    if (!lhs.equal(rhs)) return false;

    // Under q1..qn = 1 the prefactor kills the product, so the scalar product
    // vanishes: the cyclic reduction of the same sum must be zero.
    const RingMode qcyc = cyclic_mode(n);
    RatFun cyclic_sum = RatFun::zero(qcyc);
    for (const Word& w : extensions) cyclic_sum += gmaj(Permutation(w));
    return cyclic_sum.equal(RatFun::zero(qcyc));
}

std::string poset_str(const ChainPoset& p) {
    std::ostringstream out;
    for (const Word& c : p.chains) {
        out << '[';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out << ' ';
            out << c[i];
        }
        out << ']';
    }
    return out.str();
}

namespace {

// Complementary splits {S, S^c} of {1..n} with 1 in S, each split once.
void splits_of(int n, std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
    std::vector<int> s{1};
    auto rec = [&](auto&& self, int next) -> void {
        if (!s.empty() && static_cast<int>(s.size()) < n) {
            std::vector<int> complement;
            for (int v = 1; v <= n; ++v) {
                if (!std::binary_search(s.begin(), s.end(), v)) complement.push_back(v);
            }
            out.emplace_back(s, complement);
        }
        for (int v = next; v <= n; ++v) {
            s.push_back(v);
            self(self, v + 1);
            s.pop_back();
        }
    };
    rec(rec, 2);
}

std::vector<Word> arrangements(std::vector<int> letters) {
    std::sort(letters.begin(), letters.end());
    std::vector<Word> out;
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

}  // namespace

void append_two_chain_checks(VerificationReport& report, int n, int degree) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
    splits_of(n, splits);
    for (const auto& [s, complement] : splits) {
        for (const Word& u : arrangements(s)) {
            for (const Word& v : arrangements(complement)) {
                ChainPoset p = poset_from_words(u, v);
                report.record(check_stanley_formula(p, degree),
                              "stanley/" + poset_str(p) + "/degree=" + std::to_string(degree),
                              "series mismatch");
            }
        }
    }
}

void append_single_chain_checks(VerificationReport& report, int len, int degree) {
    for (const Permutation& sigma : all_permutations(len)) {
        ChainPoset p = poset_from_chains({sigma.word()});
        report.record(check_stanley_formula(p, degree),
                      "stanley/" + poset_str(p) + "/degree=" + std::to_string(degree),
                      "series mismatch");
    }
}

VerificationReport check_ppartition_suite(int n, int degree) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "ppartition";
    report.add_param("n", std::to_string(n));
    report.add_param("degree", std::to_string(degree));
    if (n >= 2) append_two_chain_checks(report, n, degree);
    append_single_chain_checks(report, n, degree);
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport check_shuffle_identity_suite(int n) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "shuffle-identity";
    report.add_param("n", std::to_string(n));
    std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
    splits_of(n, splits);
    for (const auto& [s, complement] : splits) {
        for (const Word& u : arrangements(s)) {
            for (const Word& v : arrangements(complement)) {
                report.record(check_shuffle_identity(u, v),
                              "shuffle/u=" + word_str(u) + "|v=" + word_str(v),
                              "identity fails");
            }
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace klyachko
