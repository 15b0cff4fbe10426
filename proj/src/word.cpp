#include "clusterforge/word.hpp"

namespace clusterforge {

std::vector<Word> all_words(std::size_t length) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << length);
  std::string buf(length, 'a');
  while (true) {
    out.emplace_back(buf);
    // increment as a base-2 counter, a=0, b=1
    std::size_t i = length;
    while (i > 0 && buf[i - 1] == 'b') buf[--i] = 'a';
    if (i == 0) break;
    buf[i - 1] = 'b';
  }
  return out;
}

std::vector<Word> all_words_up_to(std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t l = 0; l <= max_length; ++l) {
    auto ws = all_words(l);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

}  // namespace clusterforge
