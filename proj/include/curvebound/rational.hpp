#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace curvebound {

/// Exact rational with 64-bit numerator and denominator, always stored
/// reduced with a positive denominator.  Intermediate products run through
/// 128-bit arithmetic; a result that does not fit back into 64 bits throws.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // implicit: integers embed
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// "num/den", or just "num" when the value is an integer.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Parses "num" or "num/den".  Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& s);

}  // namespace curvebound
