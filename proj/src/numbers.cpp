#include <numeric>
#include <ostream>
#include <stdexcept>

#include "toric/error.hpp"
#include "toric/integer.hpp"
#include "toric/rational.hpp"

namespace toric {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotFullRank: return "NotFullRank";
    case ErrorCode::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::NotInCone: return "NotInCone";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::NotInteriorPoint: return "NotInteriorPoint";
    case ErrorCode::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorCode::NotQCartier: return "NotQCartier";
    case ErrorCode::NoPointBelowBound: return "NoPointBelowBound";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::TooManyRays: return "TooManyRays";
    case ErrorCode::DependentVectors: return "DependentVectors";
    case ErrorCode::InvalidGerm: return "InvalidGerm";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Integer

Integer::Integer(const mpz_class& value) {
  if (mpz_fits_slong_p(value.get_mpz_t())) {
    small_ = mpz_get_si(value.get_mpz_t());
  } else {
    big_ = std::make_unique<mpz_class>(value);
  }
}

Integer Integer::parse(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(mpz_class(digits, 10));
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
  return small_;
}

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

namespace {
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && a.small_ != kMin) {
    std::int64_t q = a.small_ / b.small_;
    std::int64_t r = a.small_ % b.small_;
    if (r != 0 && ((r < 0) != (b.small_ < 0))) --q;
    return Integer(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - b * floor_div(a, b); }

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && a.small_ != kMin) return Integer(a.small_ / b.small_);
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && a.small_ != kMin && b.small_ != kMin) {
    return Integer(std::gcd(a.small_, b.small_));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(exact_div(a, gcd(a, b)) * b);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

// ---------------------------------------------------------------- Rational

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_.is_one()) return;
  Integer g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  Integer den = Integer::parse(text.substr(slash + 1));
  if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(Integer::parse(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer()) return Rational(a.num_ + b.num_);
  if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer()) return Rational(a.num_ - b.num_);
  if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer()) return Rational(a.num_ * b.num_);
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace toric
