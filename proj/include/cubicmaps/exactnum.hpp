// Exact integer and rational arithmetic for the enumeration formulas.
//
// Every count is carried as an arbitrary-precision integer (BigCount) and
// every intermediate value as a reduced fraction (ExactRational). GMP does
// the heavy lifting; this header adds the combinatorial and number-theoretic
// helpers the formulas consume.
#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cubicmaps {

using BigCount = mpz_class;

/// Raised when a public operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a value that must be a whole number turns out fractional.
/// This always indicates a defect in a formula, never bad user input.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reduced fraction with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigCount& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigCount& numerator, const BigCount& denominator);

  BigCount numerator() const { return value_.get_num(); }
  BigCount denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Returns the value as an integer; throws IntegralityError naming `what`
  /// if the denominator is not 1.
  BigCount to_integer(std::string_view what) const;

  std::string to_string() const { return value_.get_str(); }

  ExactRational& operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  ExactRational& operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  ExactRational& operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  friend ExactRational operator-(const ExactRational& x) {
    ExactRational r;
    r.value_ = -x.value_;
    return r;
  }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const ExactRational& a, const ExactRational& b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& x) { return os << x.to_string(); }

 private:
  mpq_class value_;
};

/// n! for n >= 0. Results are memoized; the table is shared between threads.
BigCount factorial(long n);

/// 1/n! for n >= 0 and 0 for negative n (a pole of Gamma kills the summand).
ExactRational factorial_or_zero_reciprocal(long n);

/// C(n, k); zero when k lies outside [0, n].
BigCount binomial(long n, long k);

/// base^exponent for a non-negative exponent.
BigCount power(long base, unsigned long exponent);

/// base^exponent for any integer exponent; base must be non-zero when the
/// exponent is negative.
ExactRational power(const ExactRational& base, long exponent);

/// Euler's totient. Trial factorization, adequate up to about 10^12.
BigCount euler_phi(std::int64_t n);

/// Jordan's totient J_k(num/den), or 0 when den does not divide num.
/// J_0 is the indicator of 1.
BigCount jordan_totient_or_zero(unsigned k, std::uint64_t num, std::uint64_t den);

/// Least common multiple; the empty list gives 1.
BigCount lcm_list(std::span<const std::uint64_t> values);

}  // namespace cubicmaps
