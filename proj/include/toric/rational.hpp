#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "toric/integer.hpp"

namespace toric {

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Integer value) : num_(std::move(value)) {}  // NOLINT(implicit)
  template <std::integral T>
  Rational(T value) : num_(value) {}  // NOLINT(implicit)
  // Throws std::domain_error when den == 0.
  Rational(Integer num, Integer den);

  // Accepts "p", "-p", "p/q". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_.is_one(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const noexcept { return num_.sign(); }

  Integer floor() const { return is_integer() ? num_ : floor_div(num_, den_); }
  Integer ceil() const { return is_integer() ? num_ : -floor_div(-num_, den_); }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  // Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

}  // namespace toric
