#include <doctest.h>

#include "klyachko/groupalg.hpp"
#include "klyachko/ppart.hpp"
#include "klyachko/rng.hpp"
#include "klyachko/theta.hpp"

using namespace klyachko;

namespace {

Polynomial xpoly(const std::string& text, int n) {
    return parse_polynomial(text, free_mode(n, 'x'));
}

TruncatedSeries monomial_series(int max_size, int max_degree, const Permutation& p,
                                const std::string& poly) {
    TruncatedSeries s(max_size, max_degree);
    s.set_coefficient(p, parse_polynomial(poly, s.coefficient_mode()));
    return s;
}

}  // namespace

TEST_CASE("star product: constant coefficients") {
    TruncatedSeries a = monomial_series(4, 8, parse_permutation("132"), "1");
    TruncatedSeries b = monomial_series(4, 8, parse_permutation("1"), "1");
    TruncatedSeries prod = star_product(a, b);
    CHECK(prod.coeffs().size() == 4);
    for (const char* w : {"1324", "1423", "1432", "2431"}) {
        CHECK(prod.coefficient(parse_permutation(w)) == xpoly("1", 4));
    }
}

TEST_CASE("star product: coefficient relabelling") {
    TruncatedSeries a = monomial_series(4, 8, parse_permutation("132"), "x1^2*x2^2*x3");
    TruncatedSeries b = monomial_series(4, 8, parse_permutation("1"), "x1^3");
    TruncatedSeries prod = star_product(a, b);
    CHECK(prod.coeffs().size() == 4);
    CHECK(prod.coefficient(parse_permutation("1324")) == xpoly("x1^2*x2^2*x3*x4^3", 4));
    CHECK(prod.coefficient(parse_permutation("1423")) == xpoly("x1^2*x2^2*x4*x3^3", 4));
    CHECK(prod.coefficient(parse_permutation("1432")) == xpoly("x1^2*x3^2*x4*x2^3", 4));
    CHECK(prod.coefficient(parse_permutation("2431")) == xpoly("x2^2*x3^2*x4*x1^3", 4));
}

TEST_CASE("epsilon is a two-sided unit") {
    DeterministicRng rng(71);
    TruncatedSeries eps = epsilon_series(3, 4);
    for (int trial = 0; trial < 5; ++trial) {
        TruncatedSeries s(3, 4);
        for (int m = 0; m <= 3; ++m) {
            auto perms = all_permutations(m);
            const Permutation& p = perms[rng.uniform(0, static_cast<long>(perms.size()) - 1)];
            ExponentVec e(3, 0);
            for (int i = 0; i < m && i < 3; ++i) e[i] = static_cast<int>(rng.uniform(0, 1));
            s.add_to_coefficient(p, Polynomial::monomial(s.coefficient_mode(), e,
                                                         make_rational(rng.uniform(1, 5))));
        }
        CHECK(star_product(eps, s).same_coefficients(s));
        CHECK(star_product(s, eps).same_coefficients(s));
    }
}

TEST_CASE("star product is associative on truncated series") {
    DeterministicRng rng(73);
    auto random_series = [&rng]() {
        TruncatedSeries s(3, 4);
        long terms = rng.uniform(1, 3);
        for (long t = 0; t < terms; ++t) {
            int m = static_cast<int>(rng.uniform(0, 2));
            auto perms = all_permutations(m);
            const Permutation& p = perms[rng.uniform(0, static_cast<long>(perms.size()) - 1)];
            ExponentVec e(3, 0);
            for (int i = 0; i < m; ++i) e[i] = static_cast<int>(rng.uniform(0, 2));
            s.add_to_coefficient(p, Polynomial::monomial(s.coefficient_mode(), e,
                                                         make_rational(rng.uniform(-3, 3))));
        }
        return s;
    };
    for (int trial = 0; trial < 8; ++trial) {
        TruncatedSeries a = random_series();
        TruncatedSeries b = random_series();
        TruncatedSeries c = random_series();
        CHECK(star_product(star_product(a, b), c)
                  .same_coefficients(star_product(a, star_product(b, c))));
    }
}

TEST_CASE("closed-form coefficients") {
    CHECK(csigma_closed(parse_permutation("1"), 1, 3) == xpoly("1 + x1 + x1^2 + x1^3", 1));
    CHECK(csigma_closed(parse_permutation("21"), 2, 3) ==
          xpoly("x2 + x2^2 + x1*x2^2 + x2^3", 2));
    CHECK(csigma_closed(Permutation(), 2, 5) == xpoly("1", 2));
}

TEST_CASE("brute-force coefficients: frozen enumerations") {
    CHECK(csigma_brute(parse_permutation("21"), 2, 3) ==
          xpoly("x2 + x2^2 + x1*x2^2 + x2^3", 2));
    CHECK(csigma_brute(parse_permutation("12"), 2, 2) ==
          xpoly("1 + x1 + x1^2 + x1*x2", 2));
    CHECK(csigma_brute(Permutation(), 3, 4) == xpoly("1", 3));
}

TEST_CASE("theta closed") {
    TruncatedSeries t1 = theta_closed(1, 3);
    CHECK(t1.coefficient(Permutation()) == xpoly("1", 1));
    CHECK(t1.coefficient(parse_permutation("1")) == xpoly("1 + x1 + x1^2 + x1^3", 1));

    TruncatedSeries t3 = theta_closed(3, 2);
    CHECK(t3.coefficient(parse_permutation("123")) == xpoly("1 + x1 + x1^2 + x1*x2", 3));
}

TEST_CASE("(1 - x1..xn) times a theta coefficient recovers free-mode gmaj") {
    const int degree = 6;
    RingMode mode = free_mode(2, 'x');
    Polynomial c21 = csigma_closed(parse_permutation("21"), 2, degree);
    Polynomial lhs = (c21 * Polynomial::one_minus_monomial(mode, {1, 1})).truncate(degree);
    Polynomial rhs = truncated_expansion(word_genfun({2, 1}, 1, mode), degree);
    CHECK(lhs == rhs);
}

TEST_CASE("product expansion") {
    TruncatedSeries p = product_expansion(2, 4);
    CHECK(p.coefficient(Permutation()) == xpoly("1", 2));
    CHECK(p.coefficient(parse_permutation("1")) ==
          xpoly("1 + x1 + x1^2 + x1^3 + x1^4", 2));
    CHECK(p.coefficient(parse_permutation("21")) ==
          csigma_brute(parse_permutation("21"), 2, 4));
}

TEST_CASE("the product theorem at increasing scales") {
    CHECK(check_product_theorem(2, 4));
    CHECK(check_product_theorem(3, 5));
    CHECK(check_theta_suite(2, 4).pass());
}

TEST_CASE("monotone truncation consistency") {
    CHECK(theta_closed(3, 6).retruncate(3).same_coefficients(theta_closed(3, 3)));
    CHECK(product_expansion(2, 5).retruncate(2).same_coefficients(product_expansion(2, 2)));
}

TEST_CASE("over-size terms are dropped with the truncation flag") {
    TruncatedSeries a = monomial_series(2, 4, parse_permutation("12"), "1");
    TruncatedSeries b = monomial_series(2, 4, parse_permutation("1"), "1");
    TruncatedSeries prod = star_product(a, b);
    CHECK(prod.coeffs().empty());
    CHECK(prod.truncated());
    CHECK_FALSE(a.truncated());
}

TEST_CASE("series rendering") {
    TruncatedSeries t = theta_closed(1, 1);
    CHECK(t.str() == "1 * eps\n1 + x1 * 1\n");
}
