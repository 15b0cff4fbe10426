#include "doctest.h"

#include "clusterforge/expansions.hpp"
#include "clusterforge/ptolemy.hpp"
#include "clusterforge/triangulation.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

using namespace clusterforge;

namespace {

int vid(const WordTriangulation& t, const std::string& name) {
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.vertex_name(v) == name) return v;
    return -1;
}

std::set<int> vertex_set(const Triangle& t) {
    return {t.verts.begin(), t.verts.end()};
}

}  // namespace

TEST_SUITE("triangulation") {

TEST_CASE("square of the empty word") {
    auto t = WordTriangulation::from_word(Word(""));
    CHECK(t.diagonal_count() == 1);
    CHECK(t.label_count() == 5);
    CHECK(t.vertex_count() == 4);
    int a = vid(t, "a"), l1 = vid(t, "l1"), r1 = vid(t, "r1"), b = vid(t, "b");
    REQUIRE(a >= 0);
    REQUIRE(l1 >= 0);
    REQUIRE(r1 >= 0);
    REQUIRE(b >= 0);
    CHECK(t.source() == a);
    CHECK(t.sink() == b);
    CHECK(t.label_of(l1, r1) == 1);
    CHECK(t.label_of(a, r1) == 2);
    CHECK(t.label_of(a, l1) == 3);
    CHECK(t.label_of(l1, b) == 4);
    CHECK(t.label_of(r1, b) == 5);
    CHECK(t.is_fan());
    CHECK(t.triangles().size() == 2);
    CHECK(vertex_set(t.triangles()[0]) == std::set<int>{a, l1, r1});
    CHECK(vertex_set(t.triangles()[1]) == std::set<int>{l1, r1, b});
}

TEST_CASE("zigzag strip of ab") {
    auto t = WordTriangulation::from_word(Word("ab"));
    CHECK(t.diagonal_count() == 3);
    CHECK(t.label_count() == 9);
    CHECK(t.vertex_count() == 6);
    int a = vid(t, "a"), b = vid(t, "b");
    int l1 = vid(t, "l1"), l2 = vid(t, "l2");
    int r1 = vid(t, "r1"), r2 = vid(t, "r2");
    REQUIRE(std::min({a, b, l1, l2, r1, r2}) >= 0);

    CHECK(t.label_of(l1, r1) == 1);
    CHECK(t.label_of(l2, r1) == 2);
    CHECK(t.label_of(l2, r2) == 3);
    CHECK(t.label_of(l1, l2) == 4);
    CHECK(t.label_of(r1, r2) == 5);
    CHECK(t.label_of(a, r1) == 6);
    CHECK(t.label_of(a, l1) == 7);
    CHECK(t.label_of(r2, b) == 8);
    CHECK(t.label_of(l2, b) == 9);

    CHECK(t.left(1) == l1);
    CHECK(t.right(1) == r1);
    CHECK(t.left(2) == l2);
    CHECK(t.right(2) == r1);
    CHECK(t.left(3) == l2);
    CHECK(t.right(3) == r2);

    CHECK(t.is_diagonal_label(3));
    CHECK_FALSE(t.is_diagonal_label(4));
    CHECK_FALSE(t.is_fan());

    REQUIRE(t.triangles().size() == 4);
    CHECK(vertex_set(t.triangles()[0]) == std::set<int>{a, l1, r1});
    CHECK(vertex_set(t.triangles()[1]) == std::set<int>{l1, r1, l2});
    CHECK(vertex_set(t.triangles()[2]) == std::set<int>{r1, l2, r2});
    CHECK(vertex_set(t.triangles()[3]) == std::set<int>{l2, r2, b});
}

TEST_CASE("fan strip of bb") {
    auto t = WordTriangulation::from_word(Word("bb"));
    int a = vid(t, "a"), b = vid(t, "b"), l1 = vid(t, "l1");
    int r1 = vid(t, "r1"), r2 = vid(t, "r2"), r3 = vid(t, "r3");
    REQUIRE(std::min({a, b, l1, r1, r2, r3}) >= 0);

    CHECK(t.label_of(l1, r1) == 1);
    CHECK(t.label_of(l1, r2) == 2);
    CHECK(t.label_of(l1, r3) == 3);
    CHECK(t.label_of(r1, r2) == 4);
    CHECK(t.label_of(r2, r3) == 5);
    CHECK(t.label_of(a, r1) == 6);
    CHECK(t.label_of(a, l1) == 7);
    CHECK(t.label_of(l1, b) == 8);
    CHECK(t.label_of(r3, b) == 9);
    CHECK(t.is_fan());

    // all five inner labels meet at the fan vertex
    auto at_l1 = t.labels_at_vertex(l1);
    CHECK(at_l1 == std::vector<int>{1, 2, 3, 7, 8});
}

TEST_CASE("edge lookups are symmetric and consistent") {
    for (const char* s : {"", "a", "b", "ab", "ba", "aab", "bab"}) {
        auto t = WordTriangulation::from_word(Word(s));
        for (int label = 1; label <= t.label_count(); ++label) {
            auto [u, v] = t.endpoints(label);
            CHECK(t.has_edge(u, v));
            CHECK(t.has_edge(v, u));
            CHECK(t.label_of(u, v) == label);
            CHECK(t.label_of(v, u) == label);
        }
        // boundary cycle visits every vertex once, along boundary labels
        const auto& cyc = t.boundary_cycle();
        CHECK(static_cast<int>(cyc.size()) == t.vertex_count());
        CHECK(std::set<int>(cyc.begin(), cyc.end()).size() == cyc.size());
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            CHECK(t.has_edge(u, v));
            CHECK_FALSE(t.is_diagonal_label(t.label_of(u, v)));
        }
    }
}

TEST_CASE("triangle side bookkeeping") {
    for (const char* s : {"", "ab", "bab"}) {
        auto t = WordTriangulation::from_word(Word(s));
        for (std::size_t i = 0; i < t.triangles().size(); ++i) {
            const Triangle& tr = t.triangles()[i];
            for (int k = 0; k < 3; ++k) {
                int u = tr.verts[k];
                int p = tr.verts[(k + 1) % 3], q = tr.verts[(k + 2) % 3];
                // the side opposite u joins the other two vertices
                CHECK(tr.opposite_labels[k] == t.label_of(p, q));
                CHECK(t.opposite_label(static_cast<int>(i), u) ==
                      tr.opposite_labels[k]);
                auto sides = t.sides_at(static_cast<int>(i), u);
                std::set<int> got{sides[0], sides[1]};
                CHECK(got == std::set<int>{t.label_of(u, p), t.label_of(u, q)});
            }
        }
    }
}

TEST_CASE("smoothing the square") {
    auto t = WordTriangulation::from_word(Word(""));
    auto v = [](int i) { return Laurent::variable(5, i); };

    CurveSystem start{CurvePiece{t.source(), {1}, t.sink()}};
    CurveSystem left = resolve_crossing(start, t, 1, true);
    REQUIRE(left.size() == 2);
    std::sort(left.begin(), left.end());
    CHECK(left[0].crossings.empty());
    CHECK(left[1].crossings.empty());
    CHECK(resolved_weight(left, t) == v(2) * v(4));

    CurveSystem right = resolve_crossing(start, t, 1, false);
    CHECK(resolved_weight(right, t) == v(1 /*label 2*/) * v(3 /*label 4*/));

    // both smoothings together
    CHECK(resolution_sum(t) == v(2) * v(4) + v(1) * v(3));
    CHECK(enumerate_resolutions(t).size() == 2);
}

TEST_CASE("smoothing totals match the chord expansions") {
    for (const char* s : {"", "a", "b", "ab", "ba", "aa", "bb", "aab"}) {
        Word w(s);
        auto t = WordTriangulation::from_word(w);
        ChordOracle oracle(t);
        CHECK(resolution_sum(t).exact_div(diagonal_product(w)) ==
              oracle.word_variable());
    }
}

TEST_CASE("loop smoothings drop out") {
    // three of four smoothings of the single-a strip survive
    auto t = WordTriangulation::from_word(Word("a"));
    auto systems = enumerate_resolutions(t);
    CHECK(systems.size() == 4);
    int nonzero = 0;
    for (const auto& sys : systems)
        if (!resolved_weight(sys, t).is_zero()) ++nonzero;
    CHECK(nonzero == 3);
    CHECK(resolution_sum(t).value_at_ones() == 3);
}

TEST_CASE("dual smoothings") {
    for (const char* s : {"", "a", "b", "ab", "ba", "bb", "aba"}) {
        Word w(s);
        auto t = WordTriangulation::from_word(w);
        auto td = WordTriangulation::from_word(w.dual());
        CHECK(dual_resolution_sum(t) == resolution_sum(td));
        CHECK(t.dual().word() == w.dual());
    }
    // the vertex-visit weights of the fan match the zigzag's smoothings
    CHECK(dual_resolution_sum(WordTriangulation::from_word(Word("bb"))) ==
          resolution_sum(WordTriangulation::from_word(Word("ab"))));
}

}  // TEST_SUITE
