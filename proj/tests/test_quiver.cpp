#include "doctest.h"

#include "clusterforge/expansions.hpp"
#include "clusterforge/quiver.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace clusterforge;

TEST_SUITE("quiver") {

TEST_CASE("mutation of a 2-path") {
    Quiver q(3, 3);
    q.add_arrow(0, 1);
    q.add_arrow(1, 2);
    Quiver m = q.mutated(1);
    // arrows through the mutated vertex reverse, the composite appears
    CHECK(m.arrows(1, 0) == 1);
    CHECK(m.arrows(2, 1) == 1);
    CHECK(m.arrows(0, 2) == 1);
    CHECK(m.mutated(1) == q);
}

TEST_CASE("frozen vertices reject mutation") {
    Quiver q(1, 3);
    q.add_arrow(0, 1);
    CHECK_THROWS_AS(q.mutated(1), FrozenVertexMutation);
    CHECK_THROWS_AS(q.mutated(-1), FrozenVertexMutation);
    CHECK(q.is_mutable(0));
    CHECK_FALSE(q.is_mutable(2));
}

TEST_CASE("quiver of the empty word") {
    Quiver q = word_quiver(Word(""));
    CHECK(q.mutable_count() == 1);
    CHECK(q.total_count() == 5);
    // two oriented triangles through the diagonal node 0
    CHECK(q.arrows(2, 0) == 1);
    CHECK(q.arrows(0, 1) == 1);
    CHECK(q.arrows(1, 2) == 1);
    CHECK(q.arrows(0, 3) == 1);
    CHECK(q.arrows(3, 4) == 1);
    CHECK(q.arrows(4, 0) == 1);
    CHECK(q.arrows(1, 3) == 0);
}

TEST_CASE("hat-y exponents") {
    Quiver q = word_quiver(Word("ab"));
    CHECK(q.mutable_count() == 3);
    CHECK(q.total_count() == 9);
    CHECK(q.hat_y_exponents(0) ==
          std::vector<int>{0, 1, 0, -1, 0, -1, 1, 0, 0});

    // column k of the exchange matrix, entry by entry
    for (int k = 0; k < q.mutable_count(); ++k) {
        auto col = q.hat_y_exponents(k);
        for (int i = 0; i < q.total_count(); ++i) CHECK(col[i] == q.arrows(i, k));
    }
}

TEST_CASE("seed mutation is the exchange relation") {
    Seed s(word_quiver(Word("")));
    auto v = [](int i) { return Laurent::variable(5, i); };
    CHECK(s.attachment(0) == v(0));

    Seed t = s.mutated(0);
    CHECK(t.attachment(0) == (v(2) * v(4) + v(1) * v(3)).exact_div(v(0)));
    for (int i = 1; i < 5; ++i) CHECK(t.attachment(i) == v(i));
    CHECK(t.mutated(0) == s);
    CHECK_THROWS_AS(s.mutated(3), FrozenVertexMutation);
}

TEST_CASE("support orbit reproduces a full expansion support") {
    // the five monomials of the expansion attached to "ab"
    const std::vector<Exponents> support{
        {-1, 1, -1, 0, 0, 0, 1, 1, 0}, {-1, 0, -1, 0, 1, 0, 1, 0, 1},
        {-1, -1, -1, 1, 1, 1, 0, 0, 1}, {-1, 0, -1, 1, 0, 1, 0, 1, 0},
        {0, -1, 0, 0, 0, 1, 0, 0, 1}};
    std::set<Exponents> expected(support.begin(), support.end());

    Quiver q = word_quiver(Word("ab"));
    for (const Exponents& start : support) {
        auto orbit = support_orbit(start, q);
        std::set<Exponents> got(orbit.begin(), orbit.end());
        CHECK(got == expected);
    }

    // matches the Laurent expansion's own support
    Laurent x = expand_word(ExpansionKind::matchings, Word("ab"));
    std::set<Exponents> from_poly;
    for (const auto& [e, c] : x.terms()) from_poly.insert(e);
    CHECK(from_poly == expected);

    // frozen variables stay within exponents {0, 1}
    for (const Exponents& e : expected)
        for (int i = q.mutable_count(); i < q.total_count(); ++i) {
            CHECK(e[i] >= 0);
            CHECK(e[i] <= 1);
        }
}

}  // TEST_SUITE
