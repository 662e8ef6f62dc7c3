#ifndef KLYACHKO_PERM_HPP
#define KLYACHKO_PERM_HPP

#include <set>
#include <string>
#include <vector>

namespace klyachko {

// A word over the positive integers with pairwise distinct letters.
using Word = std::vector<int>;

// One-line permutation of {1,...,n}; positions and values are 1-indexed.
// n = 0 (the empty permutation) is allowed; it indexes the size-0 component
// of permutation-indexed series.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i - 1]; }
    const std::vector<int>& image() const { return image_; }
    Word word() const { return image_; }

    Permutation inverse() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    // "231" for n <= 9, comma-separated above.
    std::string str() const;

private:
    std::vector<int> image_;
};

// (sigma tau)(i) = sigma(tau(i)): composition from right to left.
Permutation compose(const Permutation& sigma, const Permutation& tau);

// gamma^i where gamma is the n-cycle k -> k+1 (one-line 2 3 ... n 1);
// i may be negative.
Permutation cycle_power(int n, long i);

// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

struct DescentStats {
    std::set<int> descents;       // D(w)
    long maj = 0;                 // sum of D(w)
    std::set<int> circular;       // D(w), plus n when w(n) > w(1)
    int dbar = 0;                 // |circular|
};

DescentStats descent_stats(const Word& w);

// The unique permutation order-isomorphic to w, e.g. st(5716) = 2413.
Permutation standardize(const Word& w);

std::string word_str(const Word& w);
Permutation parse_permutation(const std::string& text);

}  // namespace klyachko

#endif
