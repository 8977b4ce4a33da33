#include "cubicmaps/orbifolds.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace cubicmaps {

namespace {

std::uint64_t to_u64(const BigCount& value, const char* what) {
  if (value < 0 || !value.fits_ulong_p()) throw DomainError(std::string(what) + " does not fit in 64 bits");
  return value.get_ui();
}

std::uint64_t lcm_u64(std::vector<std::uint64_t> values) {
  return to_u64(lcm_list(values), "lcm of branch indices");
}

BigCount product_of_phi(const OrbifoldSignature& orbifold) {
  BigCount product(1);
  for (const auto m : orbifold.branch_indices) {
    if (m < 2) throw DomainError("branch indices must be at least 2");
    product *= euler_phi(static_cast<std::int64_t>(m));
  }
  return product;
}

// base^exponent * J_exponent(numerator / denominator).
BigCount scaled_jordan(std::uint64_t base, unsigned exponent, std::uint64_t numerator, std::uint64_t denominator) {
  return power(static_cast<long>(base), exponent) * jordan_totient_or_zero(exponent, numerator, denominator);
}

std::vector<std::uint64_t> with_two(const OrbifoldSignature& orbifold) {
  std::vector<std::uint64_t> values = orbifold.branch_indices;
  values.push_back(2);
  return values;
}

// Reduced denominator of sum_i 1/(2 m_i).
std::uint64_t half_reciprocal_denominator(const OrbifoldSignature& orbifold) {
  ExactRational sum;
  for (const auto m : orbifold.branch_indices) {
    sum += ExactRational(BigCount(1), BigCount(static_cast<unsigned long>(2 * m)));
  }
  return to_u64(sum.denominator(), "denominator of the branch-index sum");
}

unsigned boundary_exponent(const OrbifoldSignature& orbifold, int handle_weight) {
  if (orbifold.boundary_components < 1) throw DomainError("formula requires at least one boundary component");
  if (orbifold.genus < 0) throw DomainError("orbifold genus must be non-negative");
  return static_cast<unsigned>(handle_weight * orbifold.genus + orbifold.boundary_components - 1);
}

unsigned closed_exponent(const OrbifoldSignature& orbifold) {
  if (orbifold.orientable) throw DomainError("closed formula is for non-orientable orbifolds");
  if (orbifold.boundary_components != 0) throw DomainError("closed formula requires no boundary");
  if (orbifold.genus < 1) throw DomainError("non-orientable orbifold genus must be at least 1");
  return static_cast<unsigned>(orbifold.genus - 1);
}

BigCount boundary_epi(const OrbifoldSignature& orbifold, std::uint64_t order, int handle_weight) {
  if (order == 0 || order % 2 != 0) throw DomainError("Epi_o with boundary is defined here for even order");
  const unsigned exponent = boundary_exponent(orbifold, handle_weight);
  const std::uint64_t m_prime = lcm_u64(with_two(orbifold));
  return scaled_jordan(m_prime, exponent, order, m_prime) * product_of_phi(orbifold);
}

BigCount boundary_epi_plus(const OrbifoldSignature& orbifold, std::uint64_t order, int handle_weight) {
  if (order == 0 || order % 4 != 2) throw DomainError("Epi_o^+ with boundary is defined here for order 2l, l odd");
  const unsigned exponent = boundary_exponent(orbifold, handle_weight);
  const std::uint64_t l = order / 2;
  const std::uint64_t m = lcm_u64(orbifold.branch_indices);
  return scaled_jordan(m, exponent, l, m) * product_of_phi(orbifold);
}

}  // namespace

std::vector<H2OrbifoldClass> h2_orbifold_family(int g) {
  std::vector<H2OrbifoldClass> family;
  if (g < 2) return family;
  for (int genus = 0; genus <= g / 4; ++genus) family.push_back({true, genus, g - 4 * genus});
  for (int genus = 1; genus <= g / 2; ++genus) family.push_back({false, genus, g - 2 * genus});
  return family;
}

BigCount epsilon_h2_orientable(int genus, int branch_points) {
  if (genus < 0 || branch_points < 0) throw DomainError("epsilon_h2_orientable: negative argument");
  BigCount value = power(2, 2UL * static_cast<unsigned long>(genus));
  if (branch_points == 0) value -= 1;
  return value;
}

BigCount epsilon_h2_nonorientable(int genus, int branch_points) {
  if (genus < 1 || branch_points < 0) throw DomainError("epsilon_h2_nonorientable: invalid argument");
  BigCount value = power(2, static_cast<unsigned long>(genus));
  if (branch_points == 0) value -= 1;
  return value;
}

BigCount epsilon_h2(const H2OrbifoldClass& orbifold) {
  return orbifold.orientable ? epsilon_h2_orientable(orbifold.genus, orbifold.branch_points)
                             : epsilon_h2_nonorientable(orbifold.genus, orbifold.branch_points);
}

int period_bound(int g) { return g % 2 == 0 ? 2 * g - 2 : 2 * g; }

std::vector<SignatureSolution> solve_closed_orbifolds(int g) {
  std::vector<SignatureSolution> solutions;
  if (g < 2) return solutions;
  const int total = 6 * g - 6;
  for (int l = 2; l <= period_bound(g); ++l) {
    if (total % l != 0) continue;
    for (int genus = 1; genus <= (g + l - 1) / l; ++genus) {
      const int rest = total / l - (6 * genus - 6);  // = 3 ns + 4 nv
      if (rest < 0) continue;
      for (int ns = 0; 3 * ns <= rest; ++ns) {
        if ((rest - 3 * ns) % 4 != 0) continue;
        const int nv = (rest - 3 * ns) / 4;
        if (ns > 0 && l % 2 != 0) continue;
        if (nv > 0 && l % 3 != 0) continue;
        solutions.push_back({l, genus, ns, nv, epsilon_hl(l, genus, ns, nv)});
      }
    }
  }
  std::sort(solutions.begin(), solutions.end(), [](const auto& a, const auto& b) {
    return std::tie(a.period, a.genus, a.semiedge_points, a.vertex_points) <
           std::tie(b.period, b.genus, b.semiedge_points, b.vertex_points);
  });
  return solutions;
}

BigCount epsilon_hl(int period, int genus, int semiedge_points, int vertex_points) {
  if (period < 2 || genus < 1 || semiedge_points < 0 || vertex_points < 0) {
    throw DomainError("epsilon_hl: invalid signature parameters");
  }
  if (semiedge_points > 0 && period % 2 != 0) throw DomainError("epsilon_hl: ns > 0 requires an even period");
  if (vertex_points > 0 && period % 3 != 0) throw DomainError("epsilon_hl: nv > 0 requires 3 | period");
  BigCount base = power(period, static_cast<unsigned long>(genus - 1)) * euler_phi(period) *
                  power(2, static_cast<unsigned long>(vertex_points));
  if (period % 2 != 0) return base;
  // Terms with a zero count drop out even where l/3 is not integral.
  long parity = 1;
  if (semiedge_points > 0) parity += static_cast<long>(period / 2) * semiedge_points;
  if (vertex_points > 0) parity += static_cast<long>(period / 3) * vertex_points;
  if (parity % 2 == 0) return 2 * base;
  return 0;
}

OrbifoldSignature census_signature(const SignatureSolution& solution) {
  OrbifoldSignature signature{false, solution.genus, 0, {}};
  signature.branch_indices.insert(signature.branch_indices.end(), static_cast<std::size_t>(solution.semiedge_points), 2);
  signature.branch_indices.insert(signature.branch_indices.end(), static_cast<std::size_t>(solution.vertex_points), 3);
  signature.branch_indices.push_back(static_cast<std::uint64_t>(solution.period));
  std::sort(signature.branch_indices.begin(), signature.branch_indices.end());
  return signature;
}

BigCount epi_orientable_boundary(const OrbifoldSignature& orbifold, std::uint64_t order) {
  if (!orbifold.orientable) throw DomainError("epi_orientable_boundary needs an orientable orbifold");
  return boundary_epi(orbifold, order, 2);
}

BigCount epi_plus_orientable_boundary(const OrbifoldSignature& orbifold, std::uint64_t order) {
  if (!orbifold.orientable) throw DomainError("epi_plus_orientable_boundary needs an orientable orbifold");
  return boundary_epi_plus(orbifold, order, 2);
}

BigCount epi_nonorientable_boundary(const OrbifoldSignature& orbifold, std::uint64_t order) {
  if (orbifold.orientable) throw DomainError("epi_nonorientable_boundary needs a non-orientable orbifold");
  return boundary_epi(orbifold, order, 1);
}

BigCount epi_plus_nonorientable_boundary(const OrbifoldSignature& orbifold, std::uint64_t order) {
  if (orbifold.orientable) throw DomainError("epi_plus_nonorientable_boundary needs a non-orientable orbifold");
  return boundary_epi_plus(orbifold, order, 1);
}

BigCount epi_nonorientable_closed(const OrbifoldSignature& orbifold, std::uint64_t order) {
  const unsigned exponent = closed_exponent(orbifold);
  if (order < 2) throw DomainError("epi_nonorientable_closed requires order >= 2");
  const BigCount phi_product = product_of_phi(orbifold);
  const std::uint64_t m = lcm_u64(orbifold.branch_indices);
  if (order % 2 != 0) return scaled_jordan(m, exponent, order, m) * phi_product;

  std::vector<std::uint64_t> extended = with_two(orbifold);
  extended.push_back(half_reciprocal_denominator(orbifold));
  const std::uint64_t m_prime = lcm_u64(extended);
  BigCount value = 2 * scaled_jordan(m_prime, exponent, order, m_prime);
  if (order % 4 == 2) value -= scaled_jordan(m, exponent, order, 2 * m);
  return value * phi_product;
}

BigCount epi_plus_nonorientable_closed(const OrbifoldSignature& orbifold, std::uint64_t order) {
  const unsigned exponent = closed_exponent(orbifold);
  if (order < 2) throw DomainError("epi_plus_nonorientable_closed requires order >= 2");
  if (order % 2 != 0) return 0;
  const BigCount phi_product = product_of_phi(orbifold);
  if (order % 4 == 2) {
    const std::uint64_t m = lcm_u64(orbifold.branch_indices);
    return scaled_jordan(m, exponent, order, 2 * m) * phi_product;
  }
  const std::uint64_t m_prime = lcm_u64(with_two(orbifold));
  return 2 * scaled_jordan(m_prime, exponent, order, 2 * m_prime) * phi_product;
}

}  // namespace cubicmaps
