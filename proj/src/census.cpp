#include "cubicmaps/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "cubicmaps/orbifolds.hpp"

namespace cubicmaps {

namespace {

void require_genus(int g, int minimum, const char* what) {
  if (g < minimum) {
    throw DomainError(std::string(what) + " requires g >= " + std::to_string(minimum) + ", got " +
                      std::to_string(g));
  }
}

ExactRational rational_power(long num, long den, long exponent) {
  return power(ExactRational(BigCount(num), BigCount(den)), exponent);
}

ExactRational sign_power(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

int cubic_edge_count(const SurfaceClass& surface) {
  return surface.orientable ? 6 * surface.genus - 3 : 3 * surface.genus - 3;
}

BigCount sensed_cubic_orientable(int g) {
  require_genus(g, 1, "sensed_cubic_orientable");
  const long G = g;

  // Identity term.
  ExactRational total = ExactRational(rooted_cubic_orientable(g)) / ExactRational(2 * (6 * G - 3));

  // Period-2 rotations.
  for (long k = 0; k <= G / 2; ++k) {
    const BigCount denominator = 2 * power(3, static_cast<unsigned long>(k)) * factorial(k);
    total += ExactRational(factorial(4 * G - 2 - 2 * k)) / ExactRational(denominator) *
             factorial_or_zero_reciprocal(2 * G - 1 - k) * factorial_or_zero_reciprocal(2 * G - 4 * k + 1);
  }

  // Period-3 rotations.
  ExactRational period3;
  for (long k = 0; 3 * k <= G + 1; ++k) {
    const ExactRational bracket = ExactRational(power(2, static_cast<unsigned long>(G + 1 - 3 * k))) + sign_power(G - k);
    period3 += rational_power(3, 4, k - 1) * bracket *
               factorial_or_zero_reciprocal(k) * factorial_or_zero_reciprocal(G + 1 - 3 * k);
  }
  total += ExactRational(factorial(2 * G - 2)) / ExactRational(6 * factorial(G - 1)) * period3;

  // Period-6 rotations.
  for (long k = G / 2; k <= (2 * G - 2) / 3; ++k) {
    const ExactRational bracket = rational_power(2, 1, 2 * G - 1 - 3 * k) + sign_power(k);
    for (long j = 0; j <= k - G / 2; ++j) {
      total += rational_power(3, 1, j - 2) * bracket * ExactRational(factorial(2 * k - 2 * j)) *
               factorial_or_zero_reciprocal(j) * factorial_or_zero_reciprocal(k - j) *
               factorial_or_zero_reciprocal(4 * k + 3 - 2 * G - 4 * j) *
               factorial_or_zero_reciprocal(2 * G - 1 - 3 * k);
    }
  }
  return total.to_integer("sensed cubic orientable count at g=" + std::to_string(g));
}

BigCount unsensed_cubic_orientable(int g) {
  require_genus(g, 1, "unsensed_cubic_orientable");
  ExactRational total = ExactRational(sensed_cubic_orientable(g)) + ExactRational(rooted_cubic_nonorientable(g));
  if (g % 2 == 0) total += ExactRational(rooted_cubic_orientable(g / 2));
  total /= 2;
  return total.to_integer("unsensed cubic orientable count at g=" + std::to_string(g));
}

ExactRational h2_term_nonorientable(int g) {
  require_genus(g, 2, "h2_term_nonorientable");
  ExactRational total;
  for (const auto& orbifold : h2_orbifold_family(g)) {
    const BigCount maps = orbifold.orientable ? precubic_orientable(g, orbifold.genus)
                                              : precubic_nonorientable_by_genus_pair(g, orbifold.genus);
    total += ExactRational(epsilon_h2(orbifold) * maps);
  }
  return total / 2;
}

ExactRational hl_term_nonorientable(int g) {
  require_genus(g, 2, "hl_term_nonorientable");
  ExactRational total;
  for (const auto& s : solve_closed_orbifolds(g)) {
    if (!s.contributes()) continue;
    const int leaves = s.semiedge_points + s.vertex_points;
    const BigCount weighted =
        s.epsilon * binomial(leaves, s.semiedge_points) * precubic_nonorientable_by_leaves(s.genus, leaves);
    // 3g - 3 + l ns / 2, kept as a fraction.
    const ExactRational darts(BigCount(6L * g - 6 + static_cast<long>(s.period) * s.semiedge_points), BigCount(2));
    total += ExactRational(weighted) / darts;
  }
  return total / 4;
}

BigCount unsensed_cubic_nonorientable(int g) {
  require_genus(g, 2, "unsensed_cubic_nonorientable");
  const ExactRational identity =
      ExactRational(rooted_cubic_nonorientable(g)) / ExactRational(BigCount(4L * (3L * g - 3)));
  const ExactRational total = identity + h2_term_nonorientable(g) + hl_term_nonorientable(g);
  return total.to_integer("unsensed cubic non-orientable count at g=" + std::to_string(g));
}

CensusRow orientable_census_row(int g) {
  return {g, rooted_cubic_orientable(g), sensed_cubic_orientable(g), unsensed_cubic_orientable(g)};
}

CensusRow nonorientable_census_row(int g) {
  return {g, rooted_cubic_nonorientable(g), std::nullopt, unsensed_cubic_nonorientable(g)};
}

std::vector<CensusRow> census_table(bool orientable, int g_min, int g_max) {
  require_genus(g_min, orientable ? 1 : 2, "census_table");
  if (g_max < g_min) throw DomainError("census_table: empty genus range");
  const int count = g_max - g_min + 1;
  std::vector<CensusRow> rows(static_cast<std::size_t>(count));
  const unsigned workers = std::clamp<unsigned>(std::thread::hardware_concurrency(), 1U, static_cast<unsigned>(count));

  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned worker) {
    try {
      for (int i = next++; i < count; i = next++) {
        const int g = g_min + i;
        rows[static_cast<std::size_t>(i)] = orientable ? orientable_census_row(g) : nonorientable_census_row(g);
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace cubicmaps
