#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterforge {

using Coef = boost::multiprecision::cpp_int;
// Exponent vector; entry i is the (possibly negative) exponent of variable i.
using Exponents = std::vector<int>;

struct ExactDivisionFailed : std::runtime_error {
  explicit ExactDivisionFailed(const std::string& what)
      : std::runtime_error(what) {}
};

// Multivariate Laurent polynomial with exact integer coefficients.  Terms are
// kept in a map ordered lexicographically by exponent vector, which doubles
// as the monomial order for exact division.  Variable names live outside the
// type and are only supplied for printing/serialization.
class Laurent {
public:
  explicit Laurent(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("Laurent: negative nvars");
  }

  static Laurent zero(int nvars) { return Laurent(nvars); }
  static Laurent one(int nvars) {
    return monomial(Exponents(static_cast<std::size_t>(nvars), 0), 1);
  }
  static Laurent variable(int nvars, int v, int exponent = 1) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(v)) = exponent;
    return monomial(std::move(e), 1);
  }
  static Laurent monomial(Exponents e, Coef c) {
    Laurent m(static_cast<int>(e.size()));
    if (c != 0) m.terms_.emplace(std::move(e), std::move(c));
    return m;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Coef>& terms() const { return terms_; }
  Coef coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  bool operator==(const Laurent&) const = default;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent operator-() const;

  Laurent pow(unsigned k) const;

  // Exact quotient; throws ExactDivisionFailed when *this is not a multiple
  // of d over the integer Laurent ring.
  Laurent exact_div(const Laurent& d) const;

  // Per-variable lowest exponent across all terms (0 for the zero
  // polynomial); x^(-lowest) * this has all exponents >= 0.
  Exponents lowest_exponents() const;

  // Substitute 1 for every variable (sum of coefficients).
  Coef value_at_ones() const;

  std::string to_string(const std::vector<std::string>& names) const;

private:
  void add_term(const Exponents& e, const Coef& c);
  void check_compatible(const Laurent& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("Laurent: mixed variable counts");
  }

  int nvars_;
  std::map<Exponents, Coef> terms_;  // never holds zero coefficients
};

}  // namespace clusterforge
