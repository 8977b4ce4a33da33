// Closed-form counts of rooted cubic and precubic one-face maps.
//
// Cubic maps have every vertex of degree 3; precubic maps allow degree 1
// (leaves) as well. Orientable counts are rooted at a dart, non-orientable
// counts at a flag.
#pragma once

#include <optional>
#include <string>

#include "cubicmaps/exactnum.hpp"

namespace cubicmaps {

/// A closed surface: handles when orientable, crosscaps otherwise.
struct SurfaceClass {
  bool orientable = true;
  int genus = 0;

  static SurfaceClass orientable_surface(int handles);
  static SurfaceClass nonorientable_surface(int crosscaps);

  int euler_characteristic() const { return orientable ? 2 - 2 * genus : 2 - genus; }
  std::string name() const;

  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

/// Edge and leaf counts of a precubic one-face map on a fixed surface.
struct PrecubicShape {
  int edges = 0;
  int leaves = 0;
};

/// Edge count of the precubic one-face map with `leaves` leaves on `surface`.
/// Follows from Euler's relation and the handshake lemma:
/// edges = 2*leaves + 3*(2 - chi) - 3.
int precubic_edges(const SurfaceClass& surface, int leaves);

/// Inverse of precubic_edges; empty when no leaf count fits.
std::optional<int> precubic_leaves(const SurfaceClass& surface, int edges);

/// Rooted cubic one-face maps on the orientable surface of genus g >= 1.
BigCount rooted_cubic_orientable(int g);

/// Rooted cubic one-face maps on the non-orientable surface of genus g >= 1.
/// At g = 1 this is the edgeless map (value 1) that the reflection quotient
/// of the torus contracts to.
BigCount rooted_cubic_nonorientable(int g);

/// The constant c_h of the even-genus non-orientable precubic formula.
ExactRational c_coefficient(int h);

/// Rooted precubic maps with 2m+1 edges on the orientable surface of genus
/// `orbifold_genus`, where m = g - orbifold_genus - 2 and the map has
/// g - 4*orbifold_genus leaves. Zero outside the valid range.
BigCount precubic_orientable(int g, int orbifold_genus);

/// Rooted precubic maps with `leaves` leaves on the non-orientable surface
/// with `crosscaps` crosscaps, rooted at an arbitrary flag. Zero when the
/// implied edge count is not positive.
BigCount precubic_nonorientable_by_leaves(int crosscaps, int leaves);

/// Same family indexed by the covering genus g: the map has 2g - crosscaps - 3
/// edges. Unlike the by-leaves form, the edgeless case counts as 1.
BigCount precubic_nonorientable_by_genus_pair(int g, int crosscaps);

}  // namespace cubicmaps
