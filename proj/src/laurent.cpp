#include "clusterforge/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace clusterforge {

void Laurent::add_term(const Exponents& e, const Coef& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  check_compatible(o);
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  check_compatible(o);
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  check_compatible(o);
  Laurent r(nvars_);
  Exponents e(static_cast<std::size_t>(nvars_));
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

Laurent Laurent::pow(unsigned k) const {
  Laurent r = one(nvars_);
  Laurent base = *this;
  while (k) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1u;
  }
  return r;
}

Laurent Laurent::exact_div(const Laurent& d) const {
  check_compatible(d);
  if (d.is_zero()) throw ExactDivisionFailed("division by zero");
  if (is_zero()) return zero(nvars_);

  Laurent q(nvars_);
  if (d.is_monomial()) {
    const auto& [de, dc] = *d.terms_.begin();
    Exponents e(static_cast<std::size_t>(nvars_));
    for (const auto& [re, rc] : terms_) {
      if (rc % dc != 0)
        throw ExactDivisionFailed("coefficient not divisible");
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = re[i] - de[i];
      q.add_term(e, rc / dc);
    }
    return q;
  }

  // Lex-greedy division.  When the quotient exists it is produced one
  // leading term at a time; when it does not, either a coefficient fails to
  // divide or we run past any plausible quotient size.
  Laurent r = *this;
  const auto& dlead = *d.terms_.rbegin();
  Exponents e(static_cast<std::size_t>(nvars_));
  constexpr std::size_t kStepLimit = 200000;
  for (std::size_t step = 0; !r.is_zero(); ++step) {
    if (step > kStepLimit)
      throw ExactDivisionFailed("no exact quotient (step limit)");
    const auto& rlead = *r.terms_.rbegin();
    if (rlead.second % dlead.second != 0)
      throw ExactDivisionFailed("coefficient not divisible");
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = rlead.first[i] - dlead.first[i];
    Coef c = rlead.second / dlead.second;
    q.add_term(e, c);
    r -= monomial(e, c) * d;
  }
  return q;
}

Exponents Laurent::lowest_exponents() const {
  Exponents lo(static_cast<std::size_t>(nvars_), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < lo.size(); ++i)
      lo[i] = first ? e[i] : std::min(lo[i], e[i]);
    first = false;
  }
  return lo;
}

Coef Laurent::value_at_ones() const {
  Coef s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string Laurent::to_string(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_)
    throw std::invalid_argument("Laurent::to_string: name count mismatch");
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print lex-descending so leading terms come first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Coef c = it->second;
    if (first) {
      if (c < 0) os << "-", c = -c;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool all_zero = std::all_of(it->first.begin(), it->first.end(),
                                [](int v) { return v == 0; });
    if (c != 1 || all_zero) os << c.str();
    bool printed_var = false;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      int ex = it->first[i];
      if (ex == 0) continue;
      if (printed_var || c != 1) os << "*";
      os << names[i];
      if (ex != 1) os << "^" << ex;
      printed_var = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace clusterforge
