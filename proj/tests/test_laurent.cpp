#include "doctest.h"

#include "clusterforge/laurent.hpp"

#include <stdexcept>
#include <vector>

using namespace clusterforge;

namespace {
Laurent var(int v, int e = 1) { return Laurent::variable(3, v, e); }
const std::vector<std::string> kNames{"x1", "x2", "x3"};
}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("construction and term bookkeeping") {
    Laurent z = Laurent::zero(3);
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);
    CHECK(Laurent::one(3).is_monomial());
    CHECK(Laurent::monomial({0, 0, 0}, 0).is_zero());
    CHECK(var(0).coefficient({1, 0, 0}) == 1);
    CHECK(var(0).coefficient({0, 1, 0}) == 0);
    CHECK_THROWS_AS(Laurent(-1), std::invalid_argument);
    CHECK_THROWS_AS(var(0) + Laurent::one(2), std::invalid_argument);
}

TEST_CASE("ring arithmetic") {
    Laurent p = var(0) + var(1);
    CHECK((p - p).is_zero());
    CHECK(p * Laurent::one(3) == p);
    CHECK(p * Laurent::zero(3) == Laurent::zero(3));
    CHECK((var(0) + var(1)) * (var(0) - var(1)) ==
          var(0) * var(0) - var(1) * var(1));
    CHECK(p.pow(2) == p * p);
    CHECK(p.pow(0) == Laurent::one(3));
    CHECK((-p) + p == Laurent::zero(3));

    // negative exponents multiply like any other monomial
    CHECK(var(0, -1) * var(0, 1) == Laurent::one(3));
    CHECK(var(0, -2) * var(0, -1) == var(0, -3));
}

TEST_CASE("exact division") {
    Laurent p = var(0) * var(1) + var(1) * var(2);
    CHECK(p.exact_div(var(1)) == var(0) + var(2));
    CHECK(p.exact_div(p) == Laurent::one(3));
    CHECK_THROWS_AS(p.exact_div(var(0)), ExactDivisionFailed);
    CHECK_THROWS_AS(p.exact_div(Laurent::zero(3)), ExactDivisionFailed);
    CHECK(Laurent::zero(3).exact_div(var(0)).is_zero());

    // dividing by a pure monomial just shifts exponents
    CHECK(p.exact_div(var(0) * var(1)) == Laurent::one(3) + var(0, -1) * var(2));
    // a quotient with integer coefficients is required, not just monomials
    Laurent q = Laurent::monomial({2, 0, 0}, 2) + Laurent::monomial({1, 1, 0}, 3) +
                Laurent::monomial({0, 2, 0}, 1);
    CHECK(q.exact_div(var(0) + var(1)) ==
          Laurent::monomial({1, 0, 0}, 2) + Laurent::monomial({0, 1, 0}, 1));
    CHECK_THROWS_AS((var(0) * var(0) + var(1)).exact_div(var(0) + var(1)),
                    ExactDivisionFailed);
}

TEST_CASE("lowest exponents and evaluation") {
    Laurent p = var(0, -2) * var(1) + var(2, 3);
    CHECK(p.lowest_exponents() == Exponents{-2, 0, 0});
    CHECK(Laurent::zero(3).lowest_exponents() == Exponents{0, 0, 0});
    CHECK(p.value_at_ones() == 2);
    CHECK((var(0) - var(1)).value_at_ones() == 0);
    Laurent big = Laurent::monomial({1, 0, 0}, 5) + Laurent::monomial({0, 1, 0}, -2);
    CHECK(big.value_at_ones() == 3);
}

TEST_CASE("printing") {
    CHECK(Laurent::zero(3).to_string(kNames) == "0");
    CHECK(Laurent::one(3).to_string(kNames) == "1");
    Laurent p = var(0, 2) + Laurent::monomial({0, 1, 0}, 2);
    CHECK(p.to_string(kNames) == "x1^2 + 2*x2");
    CHECK(var(1, -1).to_string(kNames) == "x2^-1");
    CHECK((var(0) * var(1) - Laurent::one(3)).to_string(kNames) == "x1*x2 - 1");
    CHECK((-var(2)).to_string(kNames) == "-x3");
    CHECK_THROWS_AS(p.to_string({"x1"}), std::invalid_argument);
}

}  // TEST_SUITE
