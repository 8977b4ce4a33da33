// Quotient orbifolds of cubic one-face maps on non-orientable surfaces.
//
// A symmetry of period 2 with a boundary in the quotient gives an h2 orbifold
// (orientable or not, carrying index-2 branch points). Every other symmetry
// gives a closed non-orientable orbifold O(genus, [2^ns, 3^nv, l]). Each
// orbifold is weighted by epsilon = Epi_o - Epi_o^+, the difference between
// order-preserving and orientation-and-order-preserving epimorphism counts.
#pragma once

#include <cstdint>
#include <vector>

#include "cubicmaps/exactnum.hpp"

namespace cubicmaps {

struct H2OrbifoldClass {
  bool orientable = true;
  int genus = 0;
  int branch_points = 0;  // index-2 branch points

  friend bool operator==(const H2OrbifoldClass&, const H2OrbifoldClass&) = default;
};

/// One solution of 6g - 6 = l (6 genus - 6 + 3 ns + 4 nv).
struct SignatureSolution {
  int period = 0;          // l
  int genus = 0;           // crosscaps of the quotient
  int semiedge_points = 0; // ns: index-2 points at semiedge ends
  int vertex_points = 0;   // nv: index-3 points at vertices
  BigCount epsilon;

  bool contributes() const { return epsilon != 0; }

  friend bool operator==(const SignatureSolution&, const SignatureSolution&) = default;
};

/// General orbifold descriptor O(genus, [m_1, ..., m_r]) with h boundary
/// components.
struct OrbifoldSignature {
  bool orientable = true;
  int genus = 0;
  int boundary_components = 0;
  std::vector<std::uint64_t> branch_indices;
};

/// All h2 orbifolds for the non-orientable surface of genus g: orientable
/// ones first (genus 0..g/4), then non-orientable ones (genus 1..g/2).
std::vector<H2OrbifoldClass> h2_orbifold_family(int g);

BigCount epsilon_h2_orientable(int genus, int branch_points);
BigCount epsilon_h2_nonorientable(int genus, int branch_points);
BigCount epsilon_h2(const H2OrbifoldClass& orbifold);

/// Largest admissible period of a map symmetry on the non-orientable surface
/// of genus g.
int period_bound(int g);

/// Every closed-orbifold signature for genus g >= 2, sorted by
/// (period, genus, ns, nv). Solutions with epsilon = 0 are kept.
std::vector<SignatureSolution> solve_closed_orbifolds(int g);

/// epsilon(l, genus, nv) for a signature of the census form.
BigCount epsilon_hl(int period, int genus, int semiedge_points, int vertex_points);

/// The signature O^-(genus, [2^ns, 3^nv, l]) of a solution.
OrbifoldSignature census_signature(const SignatureSolution& solution);

// General epimorphism counts onto the cyclic group of the given order.
// Each formula is stated for a particular parity of the order and throws
// DomainError outside it.

/// Orientable with boundary, even order l.
BigCount epi_orientable_boundary(const OrbifoldSignature& orbifold, std::uint64_t order);
/// Orientable with boundary, order 2l with l odd.
BigCount epi_plus_orientable_boundary(const OrbifoldSignature& orbifold, std::uint64_t order);
/// Non-orientable with boundary, even order l.
BigCount epi_nonorientable_boundary(const OrbifoldSignature& orbifold, std::uint64_t order);
/// Non-orientable with boundary, order 2l with l odd.
BigCount epi_plus_nonorientable_boundary(const OrbifoldSignature& orbifold, std::uint64_t order);
/// Closed non-orientable, any order >= 2.
BigCount epi_nonorientable_closed(const OrbifoldSignature& orbifold, std::uint64_t order);
/// Closed non-orientable, any order >= 2.
BigCount epi_plus_nonorientable_closed(const OrbifoldSignature& orbifold, std::uint64_t order);

}  // namespace cubicmaps
