#include "doctest.h"

#include "clusterforge/cf.hpp"

#include <stdexcept>
#include <vector>

using namespace clusterforge;

namespace {
// All compositions (ordered tuples of positive integers) of n.
void compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    for (int k = 1; k <= n; ++k) {
        cur.push_back(k);
        compositions(n - k, cur, out);
        cur.pop_back();
    }
}
}  // namespace

TEST_SUITE("cf") {

TEST_CASE("validation") {
    CHECK_THROWS_AS(ContinuedFraction(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(ContinuedFraction({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ContinuedFraction({-1}), std::invalid_argument);
}

TEST_CASE("values") {
    CHECK(ContinuedFraction({1, 1, 1, 1}).value() == Rational(5, 3));
    CHECK(ContinuedFraction({2, 1, 1}).value() == Rational(5, 2));
    CHECK(ContinuedFraction({1, 1, 1}).value() == Rational(3, 2));
    CHECK(ContinuedFraction({3}).value() == Rational(3, 1));
    CHECK(ContinuedFraction({4}).value() == Rational(4, 1));
    CHECK(ContinuedFraction({1, 1}).value() == Rational(2, 1));
    CHECK(ContinuedFraction({2, 2}).value() == Rational(5, 2));
}

TEST_CASE("sign sequences round trip") {
    CHECK(ContinuedFraction({1, 1, 1, 1}).sign_sequence() ==
          std::vector<int>{-1, 1, -1, 1});
    CHECK(ContinuedFraction({4}).sign_sequence() ==
          std::vector<int>{-1, -1, -1, -1});
    CHECK(ContinuedFraction({2, 1, 1}).sign_sequence() ==
          std::vector<int>{-1, -1, 1, -1});

    CHECK(ContinuedFraction::from_sign_sequence({-1, 1, -1, 1}) ==
          ContinuedFraction({1, 1, 1, 1}));
    CHECK_THROWS_AS(ContinuedFraction::from_sign_sequence({1, -1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ContinuedFraction::from_sign_sequence({}),
                    std::invalid_argument);

    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(8, cur, comps);
    for (const auto& c : comps) {
        ContinuedFraction cf(c);
        CHECK(ContinuedFraction::from_sign_sequence(cf.sign_sequence()) == cf);
    }
}

TEST_CASE("duality") {
    CHECK(ContinuedFraction({1, 1, 1, 1}).dual() == ContinuedFraction({4}));
    CHECK(ContinuedFraction({4}).dual() == ContinuedFraction({1, 1, 1, 1}));
    CHECK(ContinuedFraction({2, 2}).dual() == ContinuedFraction({1, 2, 1}));
    CHECK(ContinuedFraction({1, 2, 1}).dual() == ContinuedFraction({2, 2}));

    // involution on un-normalized continued fractions
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    for (int n = 1; n <= 9; ++n) compositions(n, cur, comps);
    for (const auto& c : comps) {
        ContinuedFraction cf(c);
        CHECK(cf.dual().dual() == cf);
        // the dual has the same total sign count
        CHECK(cf.dual().sign_sequence().size() == cf.sign_sequence().size());
    }
}

TEST_CASE("normalization preserves the value") {
    CHECK(ContinuedFraction({2, 1, 1}).normalized() == ContinuedFraction({2, 2}));
    CHECK(ContinuedFraction({1, 1, 1, 1}).normalized() ==
          ContinuedFraction({1, 1, 2}));
    CHECK(ContinuedFraction({1, 1}).normalized() == ContinuedFraction({2}));
    CHECK(ContinuedFraction({3}).normalized() == ContinuedFraction({3}));

    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    for (int n = 1; n <= 9; ++n) compositions(n, cur, comps);
    for (const auto& c : comps) {
        ContinuedFraction cf(c);
        CHECK(cf.normalized().value() == cf.value());
        auto norm = cf.normalized();
        CHECK((norm.entries.size() == 1 || norm.entries.back() > 1));
    }
}

TEST_CASE("printing") {
    CHECK(ContinuedFraction({1, 1, 1, 1}).to_string() == "[1,1,1,1]");
    CHECK(ContinuedFraction({12}).to_string() == "[12]");
}

}  // TEST_SUITE
