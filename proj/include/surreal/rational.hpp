#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace surreal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational p/q, always reduced, q >= 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    reduce();
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  /// Power-of-two denominator (integers included).
  bool is_dyadic() const {
    BigInt d = den_;
    while ((d & 1) == 0) d >>= 1;
    return d == 1;
  }

  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

 private:
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    num_ /= g;
    den_ /= g;
  }

  BigInt num_;
  BigInt den_;
};

/// Exact dyadic rational num / 2^exp, reduced (num odd unless exp == 0).
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(BigInt n) : num_(std::move(n)), exp_(0) {}
  Dyadic(long long n) : num_(n), exp_(0) {}
  Dyadic(BigInt num, unsigned exp) : num_(std::move(num)), exp_(exp) { reduce(); }

  static std::optional<Dyadic> from_rational(const Rational& q) {
    if (!q.is_dyadic()) return std::nullopt;
    unsigned e = 0;
    BigInt d = q.denominator();
    while ((d & 1) == 0) {
      d >>= 1;
      ++e;
    }
    return Dyadic(q.numerator(), e);
  }

  Rational as_rational() const { return Rational(num_, BigInt(1) << exp_); }

  const BigInt& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const unsigned e = std::max(a.exp_, b.exp_);
    return Dyadic(a.num_ * (BigInt(1) << (e - a.exp_)) + b.num_ * (BigInt(1) << (e - b.exp_)), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  Dyadic operator-() const {
    Dyadic r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const unsigned e = std::max(a.exp_, b.exp_);
    const BigInt lhs = a.num_ * (BigInt(1) << (e - a.exp_));
    const BigInt rhs = b.num_ * (BigInt(1) << (e - b.exp_));
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s = num_.str();
    if (exp_ != 0) s += "/" + (BigInt(1) << exp_).str();
    return s;
  }

 private:
  void reduce() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --exp_;
    }
  }

  BigInt num_;
  unsigned exp_;
};

}  // namespace surreal
