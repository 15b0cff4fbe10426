#include "clusterforge/qpoly.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace clusterforge {

QPolynomial QPolynomial::constant(BigInt v) {
  if (v == 0) return QPolynomial();
  return QPolynomial(std::vector<BigInt>{std::move(v)});
}

QPolynomial QPolynomial::power(std::size_t k) {
  std::vector<BigInt> c(k + 1, BigInt(0));
  c[k] = 1;
  return QPolynomial(std::move(c));
}

BigInt QPolynomial::value_at_one() const {
  BigInt s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return QPolynomial();
  std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return QPolynomial();
  std::vector<BigInt> c(c_.size() + k, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return QPolynomial(std::move(c));
}

bool QPolynomial::is_palindromic() const {
  for (std::size_t i = 0, j = c_.size(); i < j; ++i)
    if (c_[i] != c_[c_.size() - 1 - i]) return false;
  return true;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt v = c_[i];
    if (first) {
      if (v < 0) os << "-", v = -v;
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (v != 1 || i == 0) os << v.str();
    if (i == 1) os << "q";
    if (i > 1) os << "q^" << i;
    first = false;
  }
  return os.str();
}

QPolynomial q_number(int m) {
  if (m < 0) throw std::invalid_argument("q_number: negative argument");
  return QPolynomial(std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(1)));
}

QPolynomial q_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("q_binomial: negative n");
  if (k < 0 || k > n) return QPolynomial::zero();
  // [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q, computed row by row
  std::vector<QPolynomial> row{QPolynomial::one()};  // row for n'=0
  for (int np = 1; np <= n; ++np) {
    std::vector<QPolynomial> next(static_cast<std::size_t>(np) + 1);
    next[0] = QPolynomial::one();
    next[static_cast<std::size_t>(np)] = QPolynomial::one();
    for (int kp = 1; kp < np; ++kp)
      next[static_cast<std::size_t>(kp)] =
          row[static_cast<std::size_t>(kp - 1)] +
          row[static_cast<std::size_t>(kp)].shifted(static_cast<std::size_t>(kp));
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace clusterforge
