#include "klyachko/theta.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "klyachko/errors.hpp"
#include "klyachko/groupalg.hpp"
#include "klyachko/ppart.hpp"

namespace klyachko {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Relabel the first `arity` variables of `poly` along the sorted letters:
// variable i goes to x_{letters[i-1]}.
Polynomial relabel(const Polynomial& poly, const std::vector<int>& letters) {
    Polynomial out(poly.mode());
    const int n = poly.mode().n;
    for (const auto& [e, c] : poly.terms()) {
        ExponentVec img(n, 0);
        for (int i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            if (i >= static_cast<int>(letters.size()))
                throw std::logic_error("coefficient uses a variable beyond its arity");
            img[letters[i] - 1] = e[i];
        }
        out.add_term(img, c);
    }
    return out;
}

void subsets_walk(int n, int r, int next, std::vector<int>& acc,
                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == r) {
        out.push_back(acc);
        return;
    }
    for (int v = next; v <= n; ++v) {
        acc.push_back(v);
        subsets_walk(n, r, v + 1, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    subsets_walk(n, r, 1, acc, out);
    return out;
}

}  // namespace

Polynomial TruncatedSeries::coefficient(const Permutation& sigma) const {
    auto it = coeffs_.find(sigma);
    return it == coeffs_.end() ? Polynomial::zero(coefficient_mode()) : it->second;
}

void TruncatedSeries::set_coefficient(const Permutation& sigma, Polynomial value) {
    if (sigma.size() > max_size_)
        throw DimensionError("permutation exceeds the series size bound");
    Polynomial t = value.truncate(max_degree_);
    if (t.is_zero()) {
        coeffs_.erase(sigma);
    } else {
        coeffs_.insert_or_assign(sigma, std::move(t));
    }
}

void TruncatedSeries::add_to_coefficient(const Permutation& sigma, const Polynomial& value) {
    Polynomial t = value.truncate(max_degree_);
    if (t.is_zero()) return;
    auto it = coeffs_.find(sigma);
    if (it == coeffs_.end()) {
        set_coefficient(sigma, std::move(t));
        return;
    }
    it->second += t;
    if (it->second.is_zero()) coeffs_.erase(it);
}

bool TruncatedSeries::same_coefficients(const TruncatedSeries& other) const {
    if (max_size_ != other.max_size_)
        throw IncompatibleModesError("series size bounds differ");
    int degree = std::min(max_degree_, other.max_degree_);
    TruncatedSeries a = retruncate(degree);
    TruncatedSeries b = other.retruncate(degree);
    return a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::retruncate(int max_degree) const {
    TruncatedSeries out(max_size_, std::min(max_degree, max_degree_));
    out.truncated_ = truncated_;
    for (const auto& [p, poly] : coeffs_) out.set_coefficient(p, poly);
    return out;
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    for (const auto& [p, poly] : coeffs_) {
        out << poly.str() << " * " << (p.size() == 0 ? std::string("eps") : p.str()) << '\n';
    }
    return out.str();
}

TruncatedSeries epsilon_series(int max_size, int max_degree) {
    TruncatedSeries s(max_size, max_degree);
    s.set_coefficient(Permutation(), Polynomial::one(s.coefficient_mode()));
    return s;
}

TruncatedSeries star_product(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.max_size() != b.max_size() || a.max_degree() != b.max_degree())
        throw IncompatibleModesError("series bounds differ in star product");
    TruncatedSeries out(a.max_size(), a.max_degree());
    if (a.truncated() || b.truncated()) out.mark_truncated();
    for (const auto& [sigma, f] : a.coeffs()) {
        const int s = sigma.size();
        for (const auto& [tau, g] : b.coeffs()) {
            const int t = tau.size();
            if (s + t > out.max_size()) {
                out.mark_truncated();
                continue;
            }
            for (const auto& uletters : subsets(s + t, s)) {
                std::vector<int> vletters;
                vletters.reserve(t);
                for (int v = 1; v <= s + t; ++v) {
                    if (!std::binary_search(uletters.begin(), uletters.end(), v))
                        vletters.push_back(v);
                }
                std::vector<int> w(s + t);
                for (int i = 1; i <= s; ++i) w[i - 1] = uletters[sigma(i) - 1];
                for (int j = 1; j <= t; ++j) w[s + j - 1] = vletters[tau(j) - 1];
                Polynomial term =
                    (relabel(f, uletters) * relabel(g, vletters)).truncate(out.max_degree());
                out.add_to_coefficient(Permutation(std::move(w)), term);
            }
        }
    }
    return out;
}

Polynomial csigma_closed(const Permutation& sigma, int max_size, int degree) {
    const RingMode mode = free_mode(max_size, 'x');
    if (sigma.size() > max_size)
        throw DimensionError("permutation exceeds the series size bound");
    if (sigma.size() == 0) return Polynomial::one(mode);
    return truncated_expansion(word_genfun(sigma.word(), sigma.size(), mode), degree);
}

namespace {

// blocks are the monomial vector and length of each factor u_i; assign
// exponents from the last block up, strictly increasing toward the front.
void exponents_walk(const std::vector<std::pair<ExponentVec, int>>& blocks, int index,
                    int lower, int budget, ExponentVec& acc, Polynomial& out) {
    if (index < 0) {
        out.add_term(acc, 1);
        return;
    }
    const auto& [mono, size] = blocks[index];
    for (int e = lower; e * size <= budget; ++e) {
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += e * mono[i];
        exponents_walk(blocks, index - 1, e + 1, budget - e * size, acc, out);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] -= e * mono[i];
    }
}

}  // namespace

Polynomial csigma_brute(const Permutation& sigma, int max_size, int degree) {
    const RingMode mode = free_mode(max_size, 'x');
    Polynomial out(mode);
    const int m = sigma.size();
    if (m == 0) {
        out.add_term(ExponentVec(max_size, 0), 1);
        return out;
    }
    // Cuts are mandatory at descents, optional at ascents.
    std::vector<int> ascents;
    std::set<int> descents = descent_stats(sigma.word()).descents;
    for (int i = 1; i < m; ++i) {
        if (!descents.count(i)) ascents.push_back(i);
    }
    const size_t na = ascents.size();
    for (size_t mask = 0; mask < (size_t{1} << na); ++mask) {
        std::set<int> cuts(descents);
        for (size_t b = 0; b < na; ++b) {
            if (mask & (size_t{1} << b)) cuts.insert(ascents[b]);
        }
        std::vector<std::pair<ExponentVec, int>> blocks;
        ExponentVec mono(max_size, 0);
        int block_len = 0;
        for (int i = 1; i <= m; ++i) {
            mono[sigma(i) - 1] += 1;
            ++block_len;
            if (i == m || cuts.count(i)) {
                blocks.emplace_back(mono, block_len);
                mono.assign(max_size, 0);
                block_len = 0;
            }
        }
        ExponentVec acc(max_size, 0);
        exponents_walk(blocks, static_cast<int>(blocks.size()) - 1, 0, degree, acc, out);
    }
    return out;
}

TruncatedSeries theta_closed(int max_size, int degree) {
    TruncatedSeries out(max_size, degree);
    for (int m = 0; m <= max_size; ++m) {
        for (const Permutation& sigma : all_permutations(m)) {
            out.set_coefficient(sigma, csigma_closed(sigma, max_size, degree));
        }
    }
    return out;
}

namespace {

TruncatedSeries ladder_factor(int m, int max_size, int degree) {
    TruncatedSeries f = epsilon_series(max_size, degree);
    const RingMode mode = f.coefficient_mode();
    for (int a = 1; a <= max_size; ++a) {
        if (static_cast<long>(m) * a > degree) break;
        ExponentVec e(max_size, 0);
        for (int i = 0; i < a; ++i) e[i] = m;
        f.set_coefficient(Permutation::identity(a), Polynomial::monomial(mode, e));
    }
    // The a > max_size tail is dropped whenever it would fit the degree bound.
    if (static_cast<long>(m) * (max_size + 1) <= degree) f.mark_truncated();
    return f;
}

}  // namespace

TruncatedSeries product_expansion(int max_size, int degree) {
    TruncatedSeries acc = ladder_factor(degree, max_size, degree);
    for (int m = degree - 1; m >= 0; --m) {
        acc = star_product(acc, ladder_factor(m, max_size, degree));
    }
    return acc;
}

bool check_product_theorem(int max_size, int degree) {
    if (!theta_closed(max_size, degree).same_coefficients(product_expansion(max_size, degree)))
        return false;
    for (int m = 0; m <= max_size; ++m) {
        for (const Permutation& sigma : all_permutations(m)) {
            if (!(csigma_closed(sigma, max_size, degree) ==
                  csigma_brute(sigma, max_size, degree)))
                return false;
        }
    }
    return true;
}

VerificationReport check_theta_suite(int max_size, int degree) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "theta";
    report.add_param("max_size", std::to_string(max_size));
    report.add_param("degree", std::to_string(degree));

    TruncatedSeries closed = theta_closed(max_size, degree);
    TruncatedSeries product = product_expansion(max_size, degree);
    for (int m = 0; m <= max_size; ++m) {
        for (const Permutation& sigma : all_permutations(m)) {
            std::string name = sigma.size() == 0 ? "eps" : sigma.str();
            report.record(closed.coefficient(sigma) == product.coefficient(sigma),
                          "theta-vs-product/" + name, "coefficient mismatch");
            report.record(csigma_closed(sigma, max_size, degree) ==
                              csigma_brute(sigma, max_size, degree),
                          "csigma-closed-vs-brute/" + name, "coefficient mismatch");
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace klyachko
