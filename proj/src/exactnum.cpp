#include "cubicmaps/exactnum.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace cubicmaps {

namespace {

struct FactorialTable {
  std::shared_mutex mutex;
  std::vector<BigCount> values{BigCount(1)};
};

FactorialTable& factorial_table() {
  static FactorialTable table;
  return table;
}

// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned exponent = 0;
    while (n % p == 0) {
      n /= p;
      ++exponent;
    }
    factors.emplace_back(p, exponent);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

}  // namespace

ExactRational::ExactRational(const BigCount& numerator, const BigCount& denominator) {
  if (denominator == 0) throw DomainError("ExactRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.value_ == 0) throw DomainError("ExactRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigCount ExactRational::to_integer(std::string_view what) const {
  if (!is_integer()) {
    throw IntegralityError(std::string(what) + " is not an integer: " + to_string());
  }
  return value_.get_num();
}

BigCount factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative argument " + std::to_string(n));
  auto& table = factorial_table();
  const auto index = static_cast<std::size_t>(n);
  {
    std::shared_lock lock(table.mutex);
    if (index < table.values.size()) return table.values[index];
  }
  std::unique_lock lock(table.mutex);
  table.values.reserve(index + 1);
  while (table.values.size() <= index) {
    BigCount next = table.values.back() * static_cast<unsigned long>(table.values.size());
    table.values.push_back(std::move(next));
  }
  return table.values[index];
}

ExactRational factorial_or_zero_reciprocal(long n) {
  if (n < 0) return ExactRational(0);
  return ExactRational(BigCount(1), factorial(n));
}

BigCount binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  BigCount result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

BigCount power(long base, unsigned long exponent) {
  BigCount result;
  BigCount b(base);
  mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), exponent);
  return result;
}

ExactRational power(const ExactRational& base, long exponent) {
  if (exponent >= 0) {
    BigCount num;
    BigCount den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return ExactRational(num, den);
  }
  if (base.sign() == 0) throw DomainError("zero raised to a negative power");
  return ExactRational(1) / power(base, -exponent);
}

BigCount euler_phi(std::int64_t n) {
  if (n <= 0) throw DomainError("euler_phi requires a positive argument, got " + std::to_string(n));
  return jordan_totient_or_zero(1, static_cast<std::uint64_t>(n), 1);
}

BigCount jordan_totient_or_zero(unsigned k, std::uint64_t num, std::uint64_t den) {
  if (num == 0 || den == 0) throw DomainError("jordan_totient_or_zero requires positive arguments");
  if (num % den != 0) return 0;
  // J_k is multiplicative with J_k(p^a) = p^{ak} - p^{(a-1)k}; for k = 0
  // every prime-power factor vanishes, leaving the indicator of 1.
  BigCount result(1);
  for (const auto& [prime, exponent] : factorize(num / den)) {
    BigCount p(static_cast<unsigned long>(prime));
    BigCount lower;
    mpz_pow_ui(lower.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(exponent - 1) * k);
    BigCount upper;
    mpz_pow_ui(upper.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(exponent) * k);
    result *= upper - lower;
  }
  return result;
}

BigCount lcm_list(std::span<const std::uint64_t> values) {
  BigCount result(1);
  for (const auto v : values) {
    if (v == 0) throw DomainError("lcm_list requires positive values");
    BigCount x(static_cast<unsigned long>(v));
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), x.get_mpz_t());
  }
  return result;
}

}  // namespace cubicmaps
