#include "doctest.h"

#include "clusterforge/snakegraph.hpp"
#include "clusterforge/word.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace clusterforge;

namespace {

int side_label(const SnakeGraph& g, int tile, Side s) {
    return g.label(g.side(tile, s));
}

// Segment lengths predicted from a continued fraction: normalize, fold a
// leading 1 into its successor, and drop one unit when a single segment
// remains.
std::vector<int> predicted_segments(const ContinuedFraction& cf) {
    std::vector<int> e = cf.normalized().entries;
    if (e.size() >= 2 && e.front() == 1) {
        e.erase(e.begin());
        ++e.front();
    }
    if (e.size() == 1) --e.front();
    return e;
}

}  // namespace

TEST_SUITE("snakegraph") {

TEST_CASE("tile placement follows the gluing word") {
    auto g = SnakeGraph::from_shape(Word("ab"));
    CHECK(g.tile_count() == 3);
    CHECK(g.tiles() == std::vector<GridPoint>{{0, 0}, {1, 0}, {1, 1}});
    CHECK(g.ne_corner() == GridPoint{2, 2});

    auto col = SnakeGraph::from_shape(Word("bb"));
    CHECK(col.tiles() == std::vector<GridPoint>{{0, 0}, {0, 1}, {0, 2}});

    auto one = SnakeGraph::from_shape(Word(""));
    CHECK(one.tile_count() == 1);
    CHECK(one.edges().size() == 4);
    CHECK(one.ne_corner() == GridPoint{1, 1});
    CHECK(one.neighbors({0, 0}) == std::vector<GridPoint>{{1, 0}, {0, 1}});
}

TEST_CASE("boundary detection") {
    auto g = SnakeGraph::from_shape(Word("b"));
    CHECK(g.edges().size() == 7);
    GridEdge shared({0, 1}, {1, 1});
    CHECK_FALSE(g.is_boundary(shared));
    int boundary = 0;
    for (const GridEdge& e : g.edges())
        if (g.is_boundary(e)) ++boundary;
    CHECK(boundary == 6);
}

TEST_CASE("labels unfold from the triangulation") {
    // snake graph of "ab": straight column, gluing word dual(ab) = bb
    auto g = snake_graph(Word("ab"));
    CHECK(g.shape() == Word("bb"));
    REQUIRE(g.has_labels());
    CHECK(side_label(g, 0, Side::S) == 6);
    CHECK(side_label(g, 0, Side::E) == 2);
    CHECK(side_label(g, 0, Side::N) == 4);
    CHECK(side_label(g, 0, Side::W) == 7);
    CHECK(side_label(g, 1, Side::S) == 4);
    CHECK(side_label(g, 1, Side::E) == 3);
    CHECK(side_label(g, 1, Side::N) == 5);
    CHECK(side_label(g, 1, Side::W) == 1);
    CHECK(side_label(g, 2, Side::S) == 5);
    CHECK(side_label(g, 2, Side::E) == 8);
    CHECK(side_label(g, 2, Side::N) == 9);
    CHECK(side_label(g, 2, Side::W) == 2);

    // snake graph of "bb": zigzag, gluing word ab
    auto h = snake_graph(Word("bb"));
    CHECK(h.shape() == Word("ab"));
    CHECK(side_label(h, 0, Side::S) == 6);
    CHECK(side_label(h, 0, Side::W) == 7);
    CHECK(side_label(h, 0, Side::N) == 2);
    CHECK(side_label(h, 0, Side::E) == 4);
    CHECK(side_label(h, 1, Side::S) == 1);
    CHECK(side_label(h, 1, Side::W) == 4);
    CHECK(side_label(h, 1, Side::E) == 3);
    CHECK(side_label(h, 1, Side::N) == 5);
    CHECK(side_label(h, 2, Side::S) == 5);
    CHECK(side_label(h, 2, Side::W) == 2);
    CHECK(side_label(h, 2, Side::N) == 8);
    CHECK(side_label(h, 2, Side::E) == 9);
}

TEST_CASE("every snake edge is labeled and every label is used") {
    for (const Word& w : all_words_up_to(5)) {
        auto g = snake_graph(w);
        const int label_count = 2 * g.tile_count() + 3;
        std::set<int> seen;
        for (const GridEdge& e : g.edges()) {
            REQUIRE(g.has_label(e));
            int label = g.label(e);
            CHECK(label >= 1);
            CHECK(label <= label_count);
            seen.insert(label);
        }
        CHECK(static_cast<int>(seen.size()) == label_count);
    }
}

TEST_CASE("sign sequences") {
    auto signs = [](const char* s) { return sign_sequence(snake_graph(Word(s))); };
    CHECK(signs("") == std::vector<int>{-1, 1});
    CHECK(signs("a") == std::vector<int>{-1, 1, -1});
    CHECK(signs("b") == std::vector<int>{-1, -1, -1});
    CHECK(signs("ab") == std::vector<int>{-1, 1, -1, 1});
    CHECK(signs("ba") == std::vector<int>{-1, -1, 1, -1});
    CHECK(signs("aa") == std::vector<int>{-1, 1, 1, 1});
    CHECK(signs("bb") == std::vector<int>{-1, -1, -1, -1});
}

TEST_CASE("continued fractions of words") {
    CHECK(continued_fraction(Word("ab")) == ContinuedFraction({1, 1, 1, 1}));
    CHECK(continued_fraction(Word("ba")) == ContinuedFraction({2, 1, 1}));
    CHECK(continued_fraction(Word("a")) == ContinuedFraction({1, 1, 1}));
    CHECK(continued_fraction(Word("b")) == ContinuedFraction({3}));
    CHECK(continued_fraction(Word("bb")) == ContinuedFraction({4}));
    CHECK(continued_fraction(Word("")) == ContinuedFraction({1, 1}));
    CHECK(continued_fraction(Word("ab")).value() == Rational(5, 3));
    CHECK(continued_fraction(Word("ba")).value() == Rational(5, 2));

    for (const Word& w : all_words_up_to(6)) {
        auto g = snake_graph(w);
        CHECK(cf_from_snake(g) == continued_fraction(w));
        // sign count is one more than the tile count
        CHECK(sign_sequence(g).size() ==
              static_cast<std::size_t>(g.tile_count()) + 1);
    }
}

TEST_CASE("words recovered from signs and continued fractions") {
    CHECK(word_from_signs({-1, 1}) == Word(""));
    CHECK(word_from_signs({-1, -1, -1}) == Word("b"));
    CHECK(word_from_signs({-1, 1, -1}) == Word("a"));
    CHECK_FALSE(word_from_signs({1, -1}).has_value());
    CHECK_FALSE(word_from_signs({-1}).has_value());
    CHECK_FALSE(word_from_signs({}).has_value());

    CHECK(word_from_cf(ContinuedFraction({5})) == Word("bbb"));
    CHECK_FALSE(word_from_cf(ContinuedFraction({1})).has_value());

    for (const Word& w : all_words_up_to(7)) {
        CHECK(word_from_signs(sign_sequence(snake_graph(w))) == w);
        CHECK(word_from_cf(continued_fraction(w)) == w);
    }
}

TEST_CASE("straight segments") {
    CHECK(straight_segments(snake_graph(Word("ab"))) == std::vector<int>{3});
    CHECK(straight_segments(snake_graph(Word("bb"))) == std::vector<int>{2, 2});
    CHECK(straight_segments(SnakeGraph::from_shape(Word(""))) ==
          std::vector<int>{1});
    CHECK(straight_segments(SnakeGraph::from_shape(Word("aabaa"))) ==
          std::vector<int>{3, 1, 3});
    CHECK(straight_segments(SnakeGraph::from_shape(Word("abba"))) ==
          std::vector<int>{2, 2, 2});
}

TEST_CASE("segment lengths read off the dual continued fraction") {
    for (const Word& w : all_words_up_to(8)) {
        CHECK(straight_segments(snake_graph(w)) ==
              predicted_segments(continued_fraction(w.dual())));
    }
}

TEST_CASE("matching and path counts") {
    CHECK(all_perfect_matchings(SnakeGraph::from_shape(Word("bb"))).size() == 5);
    CHECK(all_lattice_paths(SnakeGraph::from_shape(Word("bb"))).size() == 4);
    CHECK(all_perfect_matchings(SnakeGraph::from_shape(Word(""))).size() == 2);
    CHECK(all_lattice_paths(SnakeGraph::from_shape(Word(""))).size() == 2);

    // the continued fraction of a word is the matching count of its snake
    // graph over the count after deleting the first-entry tiles
    for (const Word& w : all_words_up_to(6)) {
        auto g = snake_graph(w);
        auto cf = continued_fraction(w);
        BigInt total(static_cast<long long>(all_perfect_matchings(g).size()));
        CHECK(cf.value() ==
              Rational(total, matching_count_after_deleting(g, cf.entries[0])));
    }

    auto g = snake_graph(Word("ab"));
    CHECK(matching_count_after_deleting(g, 0) == 5);
    CHECK(matching_count_after_deleting(g, 1) == 3);
    CHECK(matching_count_after_deleting(g, 2) == 2);
    CHECK(matching_count_after_deleting(g, 3) == 1);
    CHECK(matching_count_after_deleting(g, 7) == 1);
}

TEST_CASE("reflecting a labeled snake") {
    for (const Word& w : all_words_up_to(6)) {
        auto g = snake_graph(w);
        auto dual = dual_snake_graph(g);
        auto expected = snake_graph(w.dual());
        CHECK(dual.graph.shape() == expected.shape());
        CHECK(dual.graph.tiles() == expected.tiles());
        REQUIRE(dual.graph.has_labels());
        for (const GridEdge& e : expected.edges())
            CHECK(dual.graph.label(e) == expected.label(e));
        // the reflection carries each edge to an edge of the same label
        for (const GridEdge& e : g.edges()) {
            REQUIRE(dual.edge_image.contains(e));
            CHECK(dual.graph.label(dual.edge_image.at(e)) == g.label(e));
        }
    }
}

TEST_CASE("swap orbits of gluing shapes") {
    auto two = orbit_poset(3, 1);
    CHECK(two.size() == 2);
    CHECK(two.payload(0) == "ab");
    CHECK(two.payload(1) == "ba");
    CHECK(two.covers() == std::vector<std::pair<int, int>>{{0, 1}});

    auto big = orbit_poset(7, 3);
    CHECK(big.size() == 20);
    CHECK(big.is_graded());
    CHECK(big.rank_generating_function() == q_binomial(6, 3));

    CHECK(orbit_poset(4, 0).size() == 1);
}

TEST_CASE("swap neighbors") {
    auto names = [](const Word& w) {
        std::vector<std::string> out;
        for (const Word& v : groupoid_neighbors(w)) out.push_back(v.str());
        return out;
    };
    CHECK(names(Word("ab")) == std::vector<std::string>{"ba"});
    CHECK(names(Word("ba")) == std::vector<std::string>{"ab"});
    CHECK(names(Word("aba")) == std::vector<std::string>{"aab", "baa"});
    CHECK(names(Word("aa")).empty());
    CHECK(names(Word("")).empty());

    // neighbor lists are symmetric
    for (const Word& w : all_words(4))
        for (const Word& v : groupoid_neighbors(w)) {
            auto back = groupoid_neighbors(v);
            CHECK(std::find(back.begin(), back.end(), w) != back.end());
        }
}

TEST_CASE("lattice paths embed two sizes up") {
    auto emb = embed_lattice_paths(SnakeGraph::from_shape(Word("a")));
    CHECK(emb.low == Word("aab"));
    CHECK(emb.high == Word("baa"));
    REQUIRE(emb.member_shapes.size() == 3);
    CHECK(emb.member_shapes[0] == Word("aab"));
    CHECK(emb.member_shapes[1] == Word("aba"));
    CHECK(emb.member_shapes[2] == Word("baa"));

    // the three embeddings of the one-b four-tile shapes tile the two-b
    // six-tile orbit
    std::set<std::string> covered;
    auto small = orbit_poset(4, 1);
    for (int i = 0; i < small.size(); ++i) {
        auto e = embed_lattice_paths(SnakeGraph::from_shape(Word(small.payload(i))));
        for (const Word& s : e.member_shapes) covered.insert(s.str());
    }
    auto target = orbit_poset(6, 2);
    CHECK(static_cast<int>(covered.size()) == target.size());
    for (int i = 0; i < target.size(); ++i)
        CHECK(covered.contains(target.payload(i)));
}

}  // TEST_SUITE
