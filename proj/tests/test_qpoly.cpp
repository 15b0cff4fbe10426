#include "doctest.h"

#include "clusterforge/qpoly.hpp"

using namespace clusterforge;

namespace {
QPolynomial poly(std::vector<long long> c) {
    std::vector<BigInt> v(c.begin(), c.end());
    return QPolynomial(std::move(v));
}
}  // namespace

TEST_SUITE("qpoly") {

TEST_CASE("basic arithmetic and trimming") {
    QPolynomial p = poly({1, 2});          // 1 + 2q
    QPolynomial q = poly({0, 1, 1});       // q + q^2
    CHECK((p + q) == poly({1, 3, 1}));
    CHECK((p * q) == poly({0, 1, 3, 2}));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(QPolynomial(std::vector<BigInt>{1, 0, 0}).degree() == 0);
    CHECK(p.at(0) == 1);
    CHECK(p.at(5) == 0);
    CHECK(p.value_at_one() == 3);
    CHECK(p.shifted(2) == poly({0, 0, 1, 2}));
    CHECK(QPolynomial::power(3) == poly({0, 0, 0, 1}));
    CHECK(QPolynomial::one() == poly({1}));
}

TEST_CASE("q-integers") {
    CHECK(q_number(1) == poly({1}));
    CHECK(q_number(4) == poly({1, 1, 1, 1}));
    CHECK(q_number(4).value_at_one() == 4);
    CHECK(q_number(0).is_zero());
}

TEST_CASE("gaussian binomials") {
    CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
    // frozen: [6 choose 3]_q, the rank generating function of a 3x3 grid
    CHECK(q_binomial(6, 3) == poly({1, 1, 2, 3, 3, 3, 3, 2, 1, 1}));
    CHECK(q_binomial(6, 3).value_at_one() == 20);
    CHECK(q_binomial(5, 0) == QPolynomial::one());
    CHECK(q_binomial(5, 5) == QPolynomial::one());
    CHECK(q_binomial(3, 5).is_zero());

    // Pascal rule [n k] = [n-1 k-1] + q^k [n-1 k]
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(q_binomial(n, k) ==
                  q_binomial(n - 1, k - 1) +
                      q_binomial(n - 1, k).shifted(static_cast<std::size_t>(k)));
}

TEST_CASE("palindromicity") {
    CHECK(q_binomial(6, 3).is_palindromic());
    CHECK(q_number(5).is_palindromic());
    CHECK(poly({1, 2, 1}).is_palindromic());
    CHECK_FALSE(poly({1, 2}).is_palindromic());
    CHECK(QPolynomial::zero().is_palindromic());
}

TEST_CASE("printing") {
    CHECK(poly({1, 2, 0, 1}).to_string() == "1 + 2q + q^3");
    CHECK(poly({1, 1}).to_string() == "1 + q");
    CHECK(poly({0, 1}).to_string() == "q");
    CHECK(QPolynomial::zero().to_string() == "0");
}

}  // TEST_SUITE
