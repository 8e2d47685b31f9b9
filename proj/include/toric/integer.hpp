#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

namespace toric {

// Arbitrary-precision integer. Values that fit in int64 are kept inline and
// operated on with overflow-checked machine arithmetic; anything larger lives
// in a GMP integer. The representation is always normalized: a value that fits
// in int64 is never stored in the GMP form.
class Integer {
 public:
  Integer() noexcept = default;

  template <std::signed_integral T>
  Integer(T value) noexcept : small_(static_cast<std::int64_t>(value)) {}  // NOLINT(implicit)

  template <std::unsigned_integral T>
  Integer(T value) {  // NOLINT(implicit)
    if (value <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      small_ = static_cast<std::int64_t>(value);
    } else {
      big_ = std::make_unique<mpz_class>(static_cast<unsigned long>(value));
    }
  }

  explicit Integer(const mpz_class& value);

  Integer(const Integer& other)
      : small_(other.small_), big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& other) {
    if (this != &other) {
      small_ = other.small_;
      big_ = other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  // Accepts an optional sign followed by decimal digits. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  bool fits_int64() const noexcept { return !big_; }
  // Throws std::overflow_error when the value does not fit.
  std::int64_t to_int64() const;
  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }

  int sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
  }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }

  std::string to_string() const;

  Integer operator-() const {
    if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
    return from_mpz(-to_mpz());
  }

  friend Integer operator+(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
    return from_mpz(a.to_mpz() + b.to_mpz());
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
    return from_mpz(a.to_mpz() - b.to_mpz());
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
    return from_mpz(a.to_mpz() * b.to_mpz());
  }
  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return cmp(*a.big_, *b.big_) == 0;
    return false;  // normalized: a big value never equals a small one
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Quotient rounded toward negative infinity. Throws std::domain_error on b == 0.
  friend Integer floor_div(const Integer& a, const Integer& b);
  // a - b * floor_div(a, b); has the sign of b.
  friend Integer floor_mod(const Integer& a, const Integer& b);
  // Division known to be exact (b divides a).
  friend Integer exact_div(const Integer& a, const Integer& b);
  // Nonnegative gcd; gcd(0, 0) = 0.
  friend Integer gcd(const Integer& a, const Integer& b);
  friend Integer lcm(const Integer& a, const Integer& b);
  friend Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  static Integer from_mpz(const mpz_class& v) { return Integer(v); }

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace toric
