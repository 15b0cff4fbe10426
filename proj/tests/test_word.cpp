#include "doctest.h"

#include "clusterforge/word.hpp"

#include <set>
#include <stdexcept>

using namespace clusterforge;

TEST_SUITE("word") {

TEST_CASE("construction and letter access") {
    Word w("ab");
    CHECK(w.size() == 2);
    CHECK(w.letter(1) == 'a');
    CHECK(w.letter(2) == 'b');
    CHECK(w.str() == "ab");
    CHECK(Word("").empty());
    CHECK_THROWS_AS(Word("ac"), std::invalid_argument);
    CHECK(Word::valid("abba"));
    CHECK_FALSE(Word::valid("abc"));
}

TEST_CASE("reversal and flip") {
    CHECK(Word("aab").reversed() == Word("baa"));
    CHECK(Word("aab").flipped() == Word("bba"));
    CHECK(Word("").reversed() == Word(""));
}

TEST_CASE("dual flips odd positions and is an involution") {
    CHECK(Word("ab").dual() == Word("bb"));
    CHECK(Word("bb").dual() == Word("ab"));
    CHECK(Word("a").dual() == Word("b"));
    CHECK(Word("").dual() == Word(""));
    CHECK(Word("aabab").dual() == Word("babbb"));
    for (const Word& w : all_words_up_to(7)) {
        CHECK(w.dual().dual() == w);
        CHECK(w.dual().size() == w.size());
    }
}

TEST_CASE("shape predicates") {
    CHECK(Word("aaa").is_straight());
    CHECK(Word("b").is_straight());
    CHECK(Word("").is_straight());
    CHECK_FALSE(Word("aab").is_straight());

    CHECK(Word("abab").is_zigzag());
    CHECK(Word("").is_zigzag());
    CHECK_FALSE(Word("abb").is_zigzag());

    CHECK(Word("aba").is_symmetric());
    CHECK_FALSE(Word("ab").is_symmetric());

    // reverse-and-flip fixed points
    CHECK(Word("ab").is_self_conjugate());
    CHECK(Word("aabb").is_self_conjugate());
    CHECK_FALSE(Word("aa").is_self_conjugate());
}

TEST_CASE("run lengths") {
    CHECK(Word("aabaa").run_lengths() == std::vector<int>{2, 1, 2});
    CHECK(Word("b").run_lengths() == std::vector<int>{1});
    CHECK(Word("").run_lengths().empty());
    CHECK(Word("aabbb").run_lengths() == std::vector<int>{2, 3});
}

TEST_CASE("word enumeration") {
    auto w3 = all_words(3);
    CHECK(w3.size() == 8);
    CHECK(w3.front() == Word("aaa"));
    CHECK(w3.back() == Word("bbb"));
    std::set<Word> distinct(w3.begin(), w3.end());
    CHECK(distinct.size() == 8);

    auto up4 = all_words_up_to(4);
    CHECK(up4.size() == 1 + 2 + 4 + 8 + 16);
    CHECK(up4.front() == Word(""));
    for (std::size_t i = 1; i < up4.size(); ++i)
        CHECK(up4[i - 1].size() <= up4[i].size());
}

}  // TEST_SUITE
