#include "cubicmaps/rooted_counts.hpp"

#include <mutex>
#include <vector>

namespace cubicmaps {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

// Evaluates 2 c_h (2k+6h-3)! / (k! (k+3h-2)!) exactly; arguments may be
// negative, which makes the summand vanish.
ExactRational even_precubic(int h, long top, long bottom_a, long bottom_b) {
  if (top < 0) return 0;
  return 2 * c_coefficient(h) * ExactRational(factorial(top)) * factorial_or_zero_reciprocal(bottom_a) *
         factorial_or_zero_reciprocal(bottom_b);
}

}  // namespace

SurfaceClass SurfaceClass::orientable_surface(int handles) {
  require(handles >= 0, "orientable genus must be non-negative");
  return {true, handles};
}

SurfaceClass SurfaceClass::nonorientable_surface(int crosscaps) {
  require(crosscaps >= 1, "non-orientable genus must be at least 1");
  return {false, crosscaps};
}

std::string SurfaceClass::name() const {
  return (orientable ? "orientable genus " : "non-orientable genus ") + std::to_string(genus);
}

int precubic_edges(const SurfaceClass& surface, int leaves) {
  return 2 * leaves + 3 * (2 - surface.euler_characteristic()) - 3;
}

std::optional<int> precubic_leaves(const SurfaceClass& surface, int edges) {
  const int twice = edges + 3 - 3 * (2 - surface.euler_characteristic());
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

BigCount rooted_cubic_orientable(int g) {
  require(g >= 1, "rooted_cubic_orientable requires g >= 1");
  const ExactRational value = ExactRational(2 * factorial(6L * g - 3)) /
                              ExactRational(power(12, g) * factorial(g) * factorial(3L * g - 2));
  return value.to_integer("rooted cubic orientable count");
}

BigCount rooted_cubic_nonorientable(int g) {
  require(g >= 1, "rooted_cubic_nonorientable requires g >= 1");
  if (g % 2 == 0) {
    const int h = g / 2;
    // The even case equals c_h (6h-2)!/(3h-1)!.
    const ExactRational value = c_coefficient(h) * ExactRational(factorial(6L * h - 2)) *
                                factorial_or_zero_reciprocal(3L * h - 1);
    return value.to_integer("rooted cubic non-orientable count");
  }
  const int h = (g - 1) / 2;
  const ExactRational value =
      ExactRational(power(2, 6UL * h) * factorial(3L * h)) / ExactRational(power(3, h) * factorial(h));
  return value.to_integer("rooted cubic non-orientable count");
}

ExactRational c_coefficient(int h) {
  require(h >= 1, "c_coefficient requires h >= 1");
  static std::mutex mutex;
  static std::vector<ExactRational> memo;  // memo[h - 1]
  std::lock_guard lock(mutex);
  while (static_cast<int>(memo.size()) < h) {
    const long hh = static_cast<long>(memo.size()) + 1;
    ExactRational sum;
    for (long i = 0; i < hh; ++i) {
      sum += ExactRational(binomial(2 * i, i), power(16, static_cast<unsigned long>(i)));
    }
    memo.push_back(ExactRational(power(2, static_cast<unsigned long>(2 * hh - 2)) * factorial(hh),
                                 power(3, static_cast<unsigned long>(hh - 1)) * factorial(2 * hh)) *
                   sum);
  }
  return memo[static_cast<std::size_t>(h - 1)];
}

BigCount precubic_orientable(int g, int orbifold_genus) {
  const long m = static_cast<long>(g) - orbifold_genus - 2;
  if (orbifold_genus < 0 || m < 0) return 0;
  const ExactRational value = ExactRational(2 * factorial(2 * m + 1)) *
                              ExactRational(BigCount(1), power(12, static_cast<unsigned long>(orbifold_genus))) *
                              factorial_or_zero_reciprocal(orbifold_genus) *
                              factorial_or_zero_reciprocal(m + 2 - 3L * orbifold_genus) *
                              factorial_or_zero_reciprocal(m);
  return value.to_integer("precubic orientable count");
}

BigCount precubic_nonorientable_by_leaves(int crosscaps, int leaves) {
  if (crosscaps < 1 || leaves < 0) return 0;
  if (precubic_edges(SurfaceClass{false, crosscaps}, leaves) <= 0) return 0;
  const long k = leaves;
  if (crosscaps % 2 == 0) {
    const int h = crosscaps / 2;
    return even_precubic(h, 2 * k + 6L * h - 3, k, k + 3L * h - 2).to_integer("precubic non-orientable count");
  }
  const long h = (crosscaps - 1) / 2;
  const ExactRational value = ExactRational(power(2, static_cast<unsigned long>(6 * h + 2 * k)) * factorial(k + 3 * h)) /
                              ExactRational(power(3, static_cast<unsigned long>(h)) * factorial(h) * factorial(k));
  return value.to_integer("precubic non-orientable count");
}

BigCount precubic_nonorientable_by_genus_pair(int g, int crosscaps) {
  if (g < 2 || crosscaps < 1 || crosscaps > g / 2) return 0;
  if (crosscaps % 2 == 0) {
    const int h = crosscaps / 2;
    return even_precubic(h, 2L * g - 2L * h - 3, static_cast<long>(g) - h - 2, static_cast<long>(g) - 4L * h)
        .to_integer("precubic non-orientable count");
  }
  const long h = (crosscaps - 1) / 2;
  const long top = g - h - 2;
  const long exponent = 2L * g - 2 * h - 4;
  if (top < 0 || exponent < 0) return 0;
  const ExactRational value = ExactRational(power(2, static_cast<unsigned long>(exponent)) * factorial(top)) /
                              ExactRational(power(3, static_cast<unsigned long>(h)) * factorial(h)) *
                              factorial_or_zero_reciprocal(g - 4 * h - 2);
  return value.to_integer("precubic non-orientable count");
}

}  // namespace cubicmaps
