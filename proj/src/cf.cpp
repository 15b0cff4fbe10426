#include "clusterforge/cf.hpp"

#include <sstream>
#include <stdexcept>

namespace clusterforge {

ContinuedFraction::ContinuedFraction(std::vector<int> e) : entries(std::move(e)) {
  if (entries.empty())
    throw std::invalid_argument("ContinuedFraction: no entries");
  for (int a : entries)
    if (a < 1)
      throw std::invalid_argument("ContinuedFraction: entries must be >= 1");
}

Rational ContinuedFraction::value() const {
  boost::multiprecision::cpp_int num = entries.back(), den = 1;
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    // a + den/num = (a*num + den)/num
    boost::multiprecision::cpp_int next = *it * num + den;
    den = num;
    num = next;
  }
  return Rational(num, den);
}

std::vector<int> ContinuedFraction::sign_sequence() const {
  std::vector<int> signs;
  int sign = -1;
  for (int a : entries) {
    signs.insert(signs.end(), static_cast<std::size_t>(a), sign);
    sign = -sign;
  }
  return signs;
}

ContinuedFraction ContinuedFraction::from_sign_sequence(const std::vector<int>& signs) {
  if (signs.empty() || signs.front() != -1)
    throw std::invalid_argument("from_sign_sequence: first sign must be -1");
  std::vector<int> entries{1};
  int current = -1;
  for (std::size_t i = 1; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1)
      throw std::invalid_argument("from_sign_sequence: signs must be +-1");
    if (signs[i] == current) {
      ++entries.back();
    } else {
      entries.push_back(1);
      current = signs[i];
    }
  }
  return ContinuedFraction(entries);
}

ContinuedFraction ContinuedFraction::dual() const {
  std::vector<int> signs = sign_sequence();
  for (std::size_t i = 1; i < signs.size(); i += 2) signs[i] = -signs[i];
  return from_sign_sequence(signs);
}

ContinuedFraction ContinuedFraction::normalized() const {
  std::vector<int> e = entries;
  while (e.size() >= 2 && e.back() == 1) {
    e.pop_back();
    ++e.back();
  }
  return ContinuedFraction(e);
}

std::string ContinuedFraction::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ",";
    os << entries[i];
  }
  os << "]";
  return os.str();
}

}  // namespace clusterforge
