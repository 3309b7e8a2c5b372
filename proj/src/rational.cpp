#include "curvebound/rational.hpp"

#include <cstdlib>
#include <limits>

namespace curvebound {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(i128 n, i128 d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(long long n, long long d) {
  Rational r = make(n, d);
  num_ = r.num_;
  den_ = r.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

bool operator<(const Rational& a, const Rational& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

Rational parse_rational(const std::string& s) {
  size_t slash = s.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("");
      return Rational(n);
    }
    long long n = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("");
    std::string denpart = s.substr(slash + 1);
    long long d = std::stoll(denpart, &used);
    if (used != denpart.size()) throw std::invalid_argument("");
    return Rational(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

}  // namespace curvebound
