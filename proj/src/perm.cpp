#include "klyachko/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "klyachko/errors.hpp"

namespace klyachko {

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 1; i <= size(); ++i) inv[image_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i) {
        if (image_[i - 1] != i) return false;
    }
    return true;
}

std::string Permutation::str() const { return word_str(image_); }

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size())
        throw DimensionError("permutation degree mismatch in composition");
    std::vector<int> img(sigma.size());
    for (int i = 1; i <= sigma.size(); ++i) img[i - 1] = sigma(tau(i));
    return Permutation(std::move(img));
}

Permutation cycle_power(int n, long i) {
    if (n < 1) throw std::invalid_argument("cycle_power needs n >= 1");
    long r = ((i % n) + n) % n;
    std::vector<int> img(n);
    for (int k = 1; k <= n; ++k) img[k - 1] = static_cast<int>((k - 1 + r) % n) + 1;
    return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

DescentStats descent_stats(const Word& w) {
    if (w.empty()) throw std::invalid_argument("descent statistics of the empty word");
    const int n = static_cast<int>(w.size());
    DescentStats s;
    for (int i = 1; i < n; ++i) {
        if (w[i - 1] > w[i]) {
            s.descents.insert(i);
            s.maj += i;
        }
    }
    s.circular = s.descents;
    if (n > 1 && w[n - 1] > w[0]) s.circular.insert(n);
    s.dbar = static_cast<int>(s.circular.size());
    return s;
}

Permutation standardize(const Word& w) {
    std::vector<int> sorted(w);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("standardization needs distinct letters");
    std::vector<int> img(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        img[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w[i]) -
                                  sorted.begin()) +
                 1;
    }
    return Permutation(std::move(img));
}

std::string word_str(const Word& w) {
    bool compact = std::all_of(w.begin(), w.end(), [](int v) { return v <= 9; });
    std::ostringstream out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !compact) out << ',';
        out << w[i];
    }
    return out.str();
}

Permutation parse_permutation(const std::string& text) {
    if (text.empty()) throw ParseError("empty permutation literal");
    std::vector<int> img;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw ParseError("bad permutation literal: " + text);
            img.push_back(c - '0');
        }
    } else {
        std::istringstream in(text);
        std::string part;
        while (std::getline(in, part, ',')) img.push_back(std::stoi(part));
    }
    try {
        return Permutation(std::move(img));
    } catch (const std::invalid_argument&) {
        throw ParseError("not a permutation: " + text);
    }
}

}  // namespace klyachko
