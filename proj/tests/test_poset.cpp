#include "doctest.h"

#include "clusterforge/poset.hpp"
#include "clusterforge/qpoly.hpp"

#include <utility>
#include <vector>

using namespace clusterforge;

namespace {
FinitePoset make(std::vector<std::string> pay, std::vector<std::pair<int, int>> rel) {
    return FinitePoset(std::move(pay), std::move(rel));
}
}  // namespace

TEST_SUITE("poset") {

TEST_CASE("construction validates its input") {
    CHECK_THROWS_AS(make({"x", "x"}, {}), PosetError);
    CHECK_THROWS_AS(make({"x", "y"}, {{0, 2}}), PosetError);
    CHECK_THROWS_AS(make({"x"}, {{0, 0}}), PosetError);
    CHECK_THROWS_AS(make({"x", "y", "z"}, {{0, 1}, {1, 2}, {2, 0}}), PosetError);
}

TEST_CASE("transitive reduction keeps only covers") {
    auto p = make({"0", "1", "2"}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
    CHECK(p.leq(0, 0));
    CHECK_FALSE(p.leq(2, 0));
    CHECK(p.upper_covers(0) == std::vector<int>{1});
    CHECK(p.lower_covers(2) == std::vector<int>{1});
    CHECK(p.minimal_elements() == std::vector<int>{0});
    CHECK(p.maximal_elements() == std::vector<int>{2});
    CHECK(p.index_of("1") == 1);
    CHECK(p.index_of("nope") == -1);
}

TEST_CASE("grading and rank generating functions") {
    auto c = chain_poset(4);
    CHECK(c.is_graded());
    CHECK(c.ranks() == std::vector<int>{0, 1, 2, 3});
    CHECK(c.rank_generating_function() == q_number(4));

    // two saturated chains of different lengths up to the same top
    auto bad = make({"0", "1", "2", "3", "4"},
                    {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}});
    CHECK_FALSE(bad.is_graded());
    CHECK_THROWS_AS(bad.ranks(), NotGraded);

    CHECK(antichain_poset(3).rank_generating_function() ==
          QPolynomial::constant(3));
}

TEST_CASE("fence posets") {
    auto f = fence_poset(Word("ab"));
    CHECK(f.size() == 3);
    CHECK(f.covers() == std::vector<std::pair<int, int>>{{1, 0}, {1, 2}});

    auto g = fence_poset(Word("ba"));
    CHECK(g.covers() == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}});

    CHECK(fence_poset(Word("")).size() == 1);
}

TEST_CASE("order ideals") {
    auto ideals = fence_poset(Word("ab")).order_ideals();
    CHECK(ideals.size() == 5);
    CHECK(ideals.index_of("{}") >= 0);
    CHECK(ideals.index_of("{1}") >= 0);
    CHECK(ideals.index_of("{0,1}") >= 0);
    CHECK(ideals.index_of("{1,2}") >= 0);
    CHECK(ideals.index_of("{0,1,2}") >= 0);
    CHECK(ideals.index_of("{0}") == -1);  // 0 requires 1 below it
    CHECK(ideals.is_graded());
    CHECK(ideals.rank_generating_function() ==
          QPolynomial(std::vector<BigInt>{1, 1, 2, 1}));
    CHECK(ideals.is_lattice());
    CHECK(ideals.is_distributive());

    CHECK_THROWS_AS(antichain_poset(65).order_ideals(), PosetError);
}

TEST_CASE("standard lattices") {
    auto b3 = boolean_lattice(3);
    CHECK(b3.size() == 8);
    CHECK(b3.is_lattice());
    CHECK(b3.is_distributive());
    CHECK(b3.rank_generating_function() ==
          QPolynomial(std::vector<BigInt>{1, 3, 3, 1}));

    // ideal counts of alternating fences follow the Fibonacci numbers
    int fib[] = {2, 3, 5, 8, 13, 21};
    for (int n = 1; n <= 6; ++n) CHECK(fibonacci_cube(n).size() == fib[n - 1]);
    CHECK_THROWS_AS(fibonacci_cube(0), PosetError);

    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto g = grid_lattice(m, n);
            CHECK(g.rank_generating_function() == q_binomial(m + n, m));
            CHECK(g.is_distributive());
        }

    auto prod = product_poset(chain_poset(2), chain_poset(3));
    CHECK(prod.size() == 6);
    CHECK(prod.rank_generating_function() == q_number(2) * q_number(3));
}

TEST_CASE("lattice recognition") {
    // diamond M3: a lattice, but not distributive
    auto m3 = make({"bot", "p", "q", "r", "top"},
                   {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(m3.is_lattice());
    CHECK_FALSE(m3.is_distributive());

    // pentagon N5: a lattice, but not distributive
    auto n5 = make({"bot", "x", "y", "z", "top"},
                   {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    CHECK(n5.is_lattice());
    CHECK_FALSE(n5.is_distributive());

    // two maximal elements: no joins
    CHECK_FALSE(make({"a", "b", "c"}, {{0, 1}, {0, 2}}).is_lattice());

    // join irreducibles of a boolean lattice are its atoms
    CHECK(boolean_lattice(4).join_irreducible_elements().size() == 4);
    CHECK(boolean_lattice(4).join_irreducibles().covers().empty());
}

TEST_CASE("order dual and subposet") {
    auto f = fence_poset(Word("ab"));
    auto d = f.order_dual();
    CHECK(d.covers() == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}});
    CHECK(poset_isomorphic(f, fence_poset(Word("ba")).order_dual()));

    auto c = chain_poset(5).subposet({0, 2, 4});
    CHECK(c.size() == 3);
    CHECK(poset_isomorphic(c, chain_poset(3)));
}

TEST_CASE("weights") {
    auto p = chain_poset(2);
    CHECK_FALSE(p.has_weights());
    CHECK_THROWS_AS(p.weight_sum(), PosetError);
    p.set_weights({Laurent::variable(2, 0), Laurent::variable(2, 1)});
    CHECK(p.has_weights());
    CHECK(p.weight_sum() == Laurent::variable(2, 0) + Laurent::variable(2, 1));
}

TEST_CASE("isomorphism testing") {
    CHECK(poset_isomorphic(
        boolean_lattice(3),
        product_poset(product_poset(chain_poset(2), chain_poset(2)),
                      chain_poset(2))));
    CHECK_FALSE(poset_isomorphic(chain_poset(3), fence_poset(Word("ab"))));
    CHECK_FALSE(poset_isomorphic(chain_poset(3), chain_poset(4)));

    // relabeled fence: find the explicit map
    auto f = fence_poset(Word("ab"));
    auto g = make({"u", "v", "w"}, {{0, 1}, {0, 2}});
    auto iso = find_poset_isomorphism(f, g);
    REQUIRE(iso.has_value());
    CHECK((*iso)[1] == 0);  // the fence's bottom goes to g's bottom

    // weight matching can reject an otherwise fine isomorphism
    auto p = chain_poset(2);
    auto q = chain_poset(2);
    p.set_weights({Laurent::variable(1, 0), Laurent::variable(1, 0, 2)});
    q.set_weights({Laurent::variable(1, 0), Laurent::variable(1, 0, 3)});
    CHECK(poset_isomorphic(p, q));
    CHECK_FALSE(poset_isomorphic(p, q, true));
    auto r = chain_poset(2);
    r.set_weights({Laurent::variable(1, 0), Laurent::variable(1, 0, 2)});
    CHECK(poset_isomorphic(p, r, true));
}

}  // TEST_SUITE
