#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace clusterforge {

// Exact rational number, always kept in lowest terms with positive
// denominator.
struct Rational {
  boost::multiprecision::cpp_int num{0};
  boost::multiprecision::cpp_int den{1};

  Rational() = default;
  Rational(boost::multiprecision::cpp_int n, boost::multiprecision::cpp_int d)
      : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    auto g = gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  explicit Rational(long long n) : num(n), den(1) {}

  bool operator==(const Rational&) const = default;

  Rational reciprocal() const { return Rational(den, num); }

  Rational operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
  }

  std::string to_string() const {
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }
};

}  // namespace clusterforge
