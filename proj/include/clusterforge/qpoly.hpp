#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace clusterforge {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in one variable q with arbitrary-precision integer coefficients,
// stored densely by degree.  Used for rank generating functions, q-integers
// and q-binomials; all arithmetic is exact.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static QPolynomial zero() { return QPolynomial(); }
  static QPolynomial one() { return constant(1); }
  static QPolynomial constant(BigInt v);
  // q^k
  static QPolynomial power(std::size_t k);

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is reported as -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt at(std::size_t k) const {
    return k < c_.size() ? c_[k] : BigInt(0);
  }
  BigInt value_at_one() const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }
  QPolynomial& operator-=(const QPolynomial& o) { return *this = *this - o; }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }
  bool operator==(const QPolynomial&) const = default;

  QPolynomial shifted(std::size_t k) const;  // multiply by q^k

  // coefficient list read the same in both directions
  bool is_palindromic() const;

  std::string to_string() const;  // e.g. "1 + 2q + q^3"

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

// [m]_q = 1 + q + ... + q^(m-1)
QPolynomial q_number(int m);

// Gaussian binomial coefficient [n choose k]_q, exact via the Pascal rule.
QPolynomial q_binomial(int n, int k);

}  // namespace clusterforge
