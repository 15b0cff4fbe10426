#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clusterforge {

// A binary word over the alphabet {a,b}.  Words drive every construction in
// the library: a word of length n-1 encodes an n-tile snake graph, an
// (n+3)-gon triangulation, a fence poset on n nodes, and so on.  The empty
// word is legal and corresponds to the one-tile / square case throughout.
class Word {
public:
  Word() = default;
  explicit Word(std::string_view s) : s_(s) {
    for (char c : s_)
      if (c != 'a' && c != 'b')
        throw std::invalid_argument("Word: letters must be 'a' or 'b'");
  }

  static bool valid(std::string_view s) {
    for (char c : s)
      if (c != 'a' && c != 'b') return false;
    return true;
  }

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  // 1-based letter access, matching the convention used everywhere else
  // (letter i sits between snake tiles i and i+1).
  char letter(std::size_t i) const { return s_.at(i - 1); }
  const std::string& str() const { return s_; }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  Word reversed() const {
    return Word(std::string(s_.rbegin(), s_.rend()));
  }

  // Swap a<->b in every position.
  Word flipped() const {
    std::string t = s_;
    for (char& c : t) c = (c == 'a') ? 'b' : 'a';
    return Word(t);
  }

  // The dual word: flip the letters in the odd positions (1-based) and keep
  // the even ones.  This is an involution; "ab" <-> "bb".
  Word dual() const {
    std::string t = s_;
    for (std::size_t i = 0; i < t.size(); i += 2)
      t[i] = (t[i] == 'a') ? 'b' : 'a';
    return Word(t);
  }

  // One repeated letter (or too short to have two distinct ones).
  bool is_straight() const {
    for (std::size_t i = 1; i < s_.size(); ++i)
      if (s_[i] != s_[0]) return false;
    return true;
  }

  // No two equal adjacent letters.
  bool is_zigzag() const {
    for (std::size_t i = 1; i < s_.size(); ++i)
      if (s_[i] == s_[i - 1]) return false;
    return true;
  }

  // Palindrome.
  bool is_symmetric() const { return reversed() == *this; }

  // Fixed by reverse-and-flip ("aabb" -> reverse "bbaa" -> flip "aabb").
  bool is_self_conjugate() const { return reversed().flipped() == *this; }

  // Maximal runs of equal letters, e.g. "aabaa" -> {2,1,2}.
  std::vector<int> run_lengths() const {
    std::vector<int> runs;
    for (std::size_t i = 0; i < s_.size(); ++i) {
      if (i == 0 || s_[i] != s_[i - 1])
        runs.push_back(1);
      else
        ++runs.back();
    }
    return runs;
  }

private:
  std::string s_;
};

// All words of the given length, in lexicographic order (a < b).
std::vector<Word> all_words(std::size_t length);

// All words of length 0..max_length inclusive, shorter first.
std::vector<Word> all_words_up_to(std::size_t max_length);

}  // namespace clusterforge
