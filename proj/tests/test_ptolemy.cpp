#include "doctest.h"

#include "clusterforge/expansions.hpp"
#include "clusterforge/ptolemy.hpp"
#include "clusterforge/triangulation.hpp"
#include "clusterforge/word.hpp"

#include <string>
#include <vector>

using namespace clusterforge;

namespace {

int vid(const WordTriangulation& t, const std::string& name) {
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.vertex_name(v) == name) return v;
    return -1;
}

Laurent sum_of_monomials(int nvars, const std::vector<Exponents>& exps) {
    Laurent s = Laurent::zero(nvars);
    for (const Exponents& e : exps) s += Laurent::monomial(e, 1);
    return s;
}

}  // namespace

TEST_SUITE("ptolemy") {

TEST_CASE("trivial chords") {
    auto t = WordTriangulation::from_word(Word("ab"));
    ChordOracle oracle(t);
    int a = vid(t, "a"), l1 = vid(t, "l1"), r1 = vid(t, "r1");
    CHECK(oracle.chord(a, a) == Laurent::one(9));
    CHECK(oracle.chord(a, l1) == Laurent::variable(9, 6));  // boundary edge 7
    CHECK(oracle.chord(l1, r1) == Laurent::variable(9, 0));  // diagonal 1
    CHECK(oracle.chord(l1, a) == oracle.chord(a, l1));
}

TEST_CASE("expansion of the zigzag word ab") {
    auto t = WordTriangulation::from_word(Word("ab"));
    ChordOracle oracle(t);
    // numerator x2^2 x7 x8 + x2 x5 x7 x9 + x4 x5 x6 x9 + x2 x4 x6 x8
    //         + x1 x3 x6 x9, over the diagonal product x1 x2 x3
    Laurent numerator = sum_of_monomials(9, {{0, 2, 0, 0, 0, 0, 1, 1, 0},
                                             {0, 1, 0, 0, 1, 0, 1, 0, 1},
                                             {0, 0, 0, 1, 1, 1, 0, 0, 1},
                                             {0, 1, 0, 1, 0, 1, 0, 1, 0},
                                             {1, 0, 1, 0, 0, 1, 0, 0, 1}});
    CHECK(oracle.word_variable() ==
          numerator.exact_div(diagonal_product(Word("ab"))));
    CHECK(oracle.word_variable().term_count() == 5);
    CHECK(oracle.word_variable().value_at_ones() == 5);
}

TEST_CASE("expansion of the fan word bb") {
    auto t = WordTriangulation::from_word(Word("bb"));
    ChordOracle oracle(t);
    Laurent numerator = sum_of_monomials(9, {{1, 1, 0, 0, 0, 0, 1, 0, 1},
                                             {1, 0, 0, 0, 1, 0, 1, 1, 0},
                                             {0, 0, 1, 1, 0, 0, 1, 1, 0},
                                             {0, 1, 1, 0, 0, 1, 0, 1, 0}});
    CHECK(oracle.word_variable() ==
          numerator.exact_div(diagonal_product(Word("bb"))));
    CHECK(oracle.word_variable().term_count() == 4);
}

TEST_CASE("exchange relation inside the hexagon") {
    auto t = WordTriangulation::from_word(Word("ab"));
    ChordOracle oracle(t);
    int a = vid(t, "a"), l1 = vid(t, "l1"), l2 = vid(t, "l2"), r1 = vid(t, "r1");
    // quadrilateral a, l1, l2, r1 in convex position: the product of its two
    // diagonals equals the sum of the products of opposite sides
    Laurent lhs = oracle.chord(a, l2) * oracle.chord(l1, r1);
    Laurent rhs = oracle.chord(a, l1) * oracle.chord(l2, r1) +
                  oracle.chord(l1, l2) * oracle.chord(a, r1);
    CHECK(lhs == rhs);
}

TEST_CASE("chord denominators stay inside the diagonals") {
    for (const Word& w : all_words_up_to(4)) {
        auto t = WordTriangulation::from_word(w);
        ChordOracle oracle(t);
        const Laurent& x = oracle.word_variable();
        const int n = t.diagonal_count();
        Exponents low = x.lowest_exponents();
        for (int i = 0; i < x.nvars(); ++i) {
            if (i < n)
                CHECK(low[i] >= -1);
            else
                CHECK(low[i] >= 0);
        }
        // positive coefficients throughout
        for (const auto& [e, c] : x.terms()) CHECK(c > 0);
    }
}

TEST_CASE("smoothings agree with the oracle on a sweep") {
    for (const Word& w : all_words_up_to(4)) {
        auto t = WordTriangulation::from_word(w);
        ChordOracle oracle(t);
        CHECK(resolution_sum(t) ==
              oracle.word_variable() * diagonal_product(w));
    }
}

}  // TEST_SUITE
