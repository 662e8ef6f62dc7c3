#include "klyachko/lie.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "klyachko/errors.hpp"
#include "klyachko/rng.hpp"

namespace klyachko {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void shuffle_walk(const Word& u, size_t iu, const Word& v, size_t iv, Word& acc,
                  WordSum& out) {
    if (iu == u.size() && iv == v.size()) {
        out[acc] += 1;
        return;
    }
    if (iu < u.size()) {
        acc.push_back(u[iu]);
        shuffle_walk(u, iu + 1, v, iv, acc, out);
        acc.pop_back();
    }
    if (iv < v.size()) {
        acc.push_back(v[iv]);
        shuffle_walk(u, iu, v, iv + 1, acc, out);
        acc.pop_back();
    }
}

// Subsets of {1..n} of size r that contain 1, in lex order of their sorted
// element lists.
void subsets_containing_one(int n, int r, std::vector<std::vector<int>>& out) {
    std::vector<int> current{1};
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == r) {
            out.push_back(current);
            return;
        }
        for (int v = next; v <= n; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 2);
}

std::vector<Word> word_arrangements(std::vector<int> letters) {
    std::sort(letters.begin(), letters.end());
    std::vector<Word> out;
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

}  // namespace

WordSum shuffle_product(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("shuffle of an empty word");
    std::set<int> seen(u.begin(), u.end());
    if (seen.size() != u.size()) throw std::invalid_argument("repeated letters within u");
    for (int x : v) {
        if (!seen.insert(x).second)
            throw std::invalid_argument("shuffle operands share a letter");
    }
    if (seen.size() != u.size() + v.size())
        throw std::invalid_argument("repeated letters within v");
    WordSum out;
    Word acc;
    acc.reserve(u.size() + v.size());
    shuffle_walk(u, 0, v, 0, acc, out);
    return out;
}

RatFun scalar_product(const GroupAlgebraElement& a, const WordSum& s) {
    const int n = a.n();
    RatFun acc = RatFun::zero(a.coefficient_mode());
    for (const auto& [w, c] : s) {
        if (static_cast<int>(w.size()) != n) continue;
        std::vector<bool> seen(n, false);
        bool is_perm = true;
        for (int x : w) {
            if (x < 1 || x > n || seen[x - 1]) {
                is_perm = false;
                break;
            }
            seen[x - 1] = true;
        }
        if (!is_perm) continue;
        RatFun coeff = a.coefficient(Permutation(w));
        if (!coeff.is_zero()) acc += coeff * c;
    }
    return acc;
}

VerificationReport is_lie_element(const GroupAlgebraElement& a, const RunOptions& options) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "lie";
    report.add_param("n", std::to_string(a.n()));
    report.mode = options.mode_string();

    const int n = a.n();
    struct Pair {
        Word u, v;
        WordSum shuffles;
    };
    std::vector<Pair> pairs;
    for (int r = 1; r <= n - 1; ++r) {
        std::vector<std::vector<int>> subsets;
        subsets_containing_one(n, r, subsets);
        for (const auto& s : subsets) {
            std::vector<int> complement;
            for (int v = 1; v <= n; ++v) {
                if (!std::binary_search(s.begin(), s.end(), v)) complement.push_back(v);
            }
            for (const Word& u : word_arrangements(s)) {
                for (const Word& v : word_arrangements(complement)) {
                    pairs.push_back({u, v, shuffle_product(u, v)});
                }
            }
        }
    }

    if (!options.randomized) {
        for (const Pair& p : pairs) {
            RatFun value = scalar_product(a, p.shuffles);
            bool ok = value.is_zero() || value.equal(RatFun::zero(a.coefficient_mode()));
            std::string witness = ok ? "" : "value = " + value.str();
            report.record(ok, "u=" + word_str(p.u) + "|v=" + word_str(p.v), witness);
            report.record(ok, "u=" + word_str(p.v) + "|v=" + word_str(p.u), witness);
        }
        report.elapsed_ms = ms_since(start);
        return report;
    }

    // Evaluate every coefficient of `a` once per point, then each pair is a
    // short exact sum.
    std::vector<std::map<Permutation, Rational>> values(options.points);
    std::vector<std::string> point_labels(options.points);
    for (int pt_idx = 0; pt_idx < options.points; ++pt_idx) {
        bool done = false;
        for (int retry = 0; retry < 64 && !done; ++retry) {
            std::uint64_t s =
                mix_seed(mix_seed(options.seed, static_cast<std::uint64_t>(pt_idx)),
                         static_cast<std::uint64_t>(retry));
            std::vector<Rational> point = random_cyclic_point(n, s);
            try {
                std::map<Permutation, Rational> vals;
                for (const auto& [p, c] : a.coeffs()) vals.emplace(p, c.evaluate(point));
                values[pt_idx] = std::move(vals);
                point_labels[pt_idx] = render_point(point);
                done = true;
            } catch (const PoleError&) {
                continue;
            }
        }
        if (!done) throw DegeneratePointError("no usable evaluation point for lie suite");
    }

    for (const Pair& p : pairs) {
        for (int pt_idx = 0; pt_idx < options.points; ++pt_idx) {
            Rational sum(0);
            for (const auto& [w, c] : p.shuffles) {
                auto it = values[pt_idx].find(Permutation(w));
                if (it != values[pt_idx].end()) sum += c * it->second;
            }
            bool ok = sum == 0;
            std::string witness =
                ok ? "" : "value " + render(sum) + " at " + point_labels[pt_idx];
            std::string tag = "/point=" + std::to_string(pt_idx);
            report.record(ok, "u=" + word_str(p.u) + "|v=" + word_str(p.v) + tag, witness);
            report.record(ok, "u=" + word_str(p.v) + "|v=" + word_str(p.u) + tag, witness);
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

WordSum left_bracketing_expansion(const Word& w) {
    if (w.empty()) throw std::invalid_argument("left bracketing of the empty word");
    WordSum acc;
    acc[{w[0]}] = 1;
    for (size_t k = 1; k < w.size(); ++k) {
        WordSum next;
        for (const auto& [word, c] : acc) {
            Word left = word;
            left.push_back(w[k]);
            next[left] += c;
            Word right;
            right.reserve(word.size() + 1);
            right.push_back(w[k]);
            right.insert(right.end(), word.begin(), word.end());
            next[right] -= c;
        }
        for (auto it = next.begin(); it != next.end();) {
            it = it->second == 0 ? next.erase(it) : std::next(it);
        }
        acc = std::move(next);
    }
    return acc;
}

GroupAlgebraElement dynkin_left_bracketing(const GroupAlgebraElement& a) {
    GroupAlgebraElement out(a.n());
    for (const auto& [sigma, f] : a.coeffs()) {
        for (const auto& [word, c] : left_bracketing_expansion(sigma.word())) {
            out.add_to_coefficient(Permutation(word), f * c);
        }
    }
    return out;
}

VerificationReport check_dynkin_suite(int n, const RunOptions& options) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "dynkin";
    report.add_param("n", std::to_string(n));
    report.mode = options.mode_string();

    if (!options.randomized) {
        GroupAlgebraElement e = klyachko_element(n);
        GroupAlgebraElement lhs = dynkin_left_bracketing(e);
        for (const Permutation& rho : all_permutations(n)) {
            bool ok = lhs.coefficient(rho).equal(e.coefficient(rho) * Rational(n));
            report.record(ok, "dynkin/" + rho.str(), "coefficient mismatch");
        }
        report.elapsed_ms = ms_since(start);
        return report;
    }

    const std::vector<Permutation> perms = all_permutations(n);
    std::map<Permutation, int> rank;
    for (size_t i = 0; i < perms.size(); ++i) rank.emplace(perms[i], static_cast<int>(i));
    std::vector<WordSum> expansions;
    expansions.reserve(perms.size());
    for (const auto& p : perms) expansions.push_back(left_bracketing_expansion(p.word()));

    for (int pt_idx = 0; pt_idx < options.points; ++pt_idx) {
        std::vector<Rational> point;
        std::vector<Rational> values;
        bool done = false;
        for (int retry = 0; retry < 64 && !done; ++retry) {
            std::uint64_t s =
                mix_seed(mix_seed(options.seed, static_cast<std::uint64_t>(pt_idx)),
                         static_cast<std::uint64_t>(retry));
            point = random_cyclic_point(n, s);
            try {
                values = gmaj_values_at_point(n, point);
                done = true;
            } catch (const PoleError&) {
                continue;
            }
        }
        if (!done) throw DegeneratePointError("no usable evaluation point for dynkin suite");

        std::vector<Rational> acc(perms.size(), Rational(0));
        for (size_t si = 0; si < perms.size(); ++si) {
            for (const auto& [word, c] : expansions[si]) {
                acc[rank.at(Permutation(word))] += values[si] * c;
            }
        }
        for (size_t r = 0; r < perms.size(); ++r) {
            bool ok = acc[r] == values[r] * Rational(n);
            report.record(ok, "dynkin/" + perms[r].str() + "/point=" + std::to_string(pt_idx),
                          ok ? "" : "point " + render_point(point));
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport check_lie_suite(int n, const RunOptions& options) {
    VerificationReport report = is_lie_element(klyachko_element(n), options);
    report.params.clear();
    report.add_param("n", std::to_string(n));
    return report;
}

}  // namespace klyachko
