// Sensed and unsensed counts of cubic one-face maps.
//
// All assembly happens in exact rationals; each final count is checked to be
// integral and an IntegralityError is raised otherwise.
#pragma once

#include <optional>
#include <vector>

#include "cubicmaps/exactnum.hpp"
#include "cubicmaps/rooted_counts.hpp"

namespace cubicmaps {

/// Number of edges of a cubic one-face map on the surface: 6g-3 when
/// orientable, 3g-3 otherwise.
int cubic_edge_count(const SurfaceClass& surface);

/// Cubic one-face maps on the orientable surface of genus g, up to
/// orientation-preserving homeomorphism.
BigCount sensed_cubic_orientable(int g);

/// Cubic one-face maps on the orientable surface of genus g, up to all
/// homeomorphisms.
BigCount unsensed_cubic_orientable(int g);

/// Contribution of period-2 symmetries whose quotient has a boundary.
ExactRational h2_term_nonorientable(int g);

/// Contribution of symmetries whose quotient is a closed orbifold.
ExactRational hl_term_nonorientable(int g);

/// Cubic one-face maps on the non-orientable surface of genus g >= 2, up to
/// homeomorphism.
BigCount unsensed_cubic_nonorientable(int g);

struct CensusRow {
  int genus = 0;
  BigCount rooted;
  std::optional<BigCount> sensed;  // orientable surfaces only
  BigCount unsensed;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

CensusRow orientable_census_row(int g);
CensusRow nonorientable_census_row(int g);

/// Rows for every genus in [g_min, g_max]. Genera are evaluated on a small
/// worker pool; the result is ordered by genus.
std::vector<CensusRow> census_table(bool orientable, int g_min, int g_max);

}  // namespace cubicmaps
