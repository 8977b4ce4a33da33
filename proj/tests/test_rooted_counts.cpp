#include <doctest.h>

#include "cubicmaps/reference_tables.hpp"
#include "cubicmaps/rooted_counts.hpp"

using namespace cubicmaps;

TEST_CASE("surface classes") {
  const auto torus = SurfaceClass::orientable_surface(1);
  const auto klein = SurfaceClass::nonorientable_surface(2);
  CHECK(torus.euler_characteristic() == 0);
  CHECK(klein.euler_characteristic() == 0);
  CHECK(SurfaceClass::nonorientable_surface(1).euler_characteristic() == 1);
  CHECK_FALSE(torus == klein);
}

TEST_CASE("precubic shape relation") {
  CHECK(precubic_edges(SurfaceClass::orientable_surface(0), 4) == 5);
  CHECK(precubic_edges(SurfaceClass::nonorientable_surface(2), 1) == 5);
  CHECK(precubic_edges(SurfaceClass::nonorientable_surface(1), 1) == 2);
  CHECK(precubic_edges(SurfaceClass::orientable_surface(2), 0) == 9);
  CHECK(precubic_leaves(SurfaceClass::orientable_surface(0), 5) == 4);
  CHECK_FALSE(precubic_leaves(SurfaceClass::orientable_surface(0), 4).has_value());
  CHECK_FALSE(precubic_leaves(SurfaceClass::orientable_surface(2), 7).has_value());
  for (int genus = 0; genus <= 6; ++genus) {
    for (bool orientable : {true, false}) {
      if (!orientable && genus == 0) continue;
      const SurfaceClass s{orientable, genus};
      for (int leaves = 0; leaves <= 20; ++leaves) {
        const int e = precubic_edges(s, leaves);
        if (e > 0) CHECK(precubic_leaves(s, e) == leaves);
      }
    }
  }
}

TEST_CASE("rooted cubic orientable") {
  CHECK(rooted_cubic_orientable(1) == 1);
  CHECK(rooted_cubic_orientable(2) == 105);
  CHECK(rooted_cubic_orientable(3) == 50050);
  CHECK_THROWS_AS(rooted_cubic_orientable(0), DomainError);
  for (const auto& row : reference::kOrientable) {
    CHECK(rooted_cubic_orientable(row.genus).get_str() == row.rooted);
  }
}

TEST_CASE("rooted cubic non-orientable") {
  CHECK(rooted_cubic_nonorientable(2) == 6);
  CHECK(rooted_cubic_nonorientable(3) == 128);
  CHECK(rooted_cubic_nonorientable(4) == 3780);
  CHECK(rooted_cubic_nonorientable(1) == 1);
  CHECK_THROWS_AS(rooted_cubic_nonorientable(0), DomainError);
  for (const auto& row : reference::kNonorientable) {
    CHECK(rooted_cubic_nonorientable(row.genus).get_str() == row.rooted);
  }
}

TEST_CASE("c coefficients") {
  CHECK(c_coefficient(1) == ExactRational(1, 2));
  CHECK(c_coefficient(2) == ExactRational(1, 8));
  CHECK_THROWS_AS(c_coefficient(0), DomainError);
}

TEST_CASE("precubic orientable") {
  CHECK(precubic_orientable(4, 0) == 5);
  CHECK(precubic_orientable(4, 1) == 1);
  CHECK(precubic_orientable(5, 2) == 0);
  CHECK(precubic_orientable(2, 0) == 1);
}

TEST_CASE("precubic non-orientable by leaves") {
  CHECK(precubic_nonorientable_by_leaves(2, 1) == 60);
  CHECK(precubic_nonorientable_by_leaves(1, 1) == 4);
  CHECK(precubic_nonorientable_by_leaves(2, 0) == 6);
  CHECK(precubic_nonorientable_by_leaves(1, 0) == 0);
  for (int g = 2; g <= 30; ++g) {
    CHECK(precubic_nonorientable_by_leaves(g, 0) == rooted_cubic_nonorientable(g));
  }
}

TEST_CASE("precubic non-orientable by genus pair") {
  CHECK(precubic_nonorientable_by_genus_pair(4, 2) == 6);
  CHECK(precubic_nonorientable_by_genus_pair(3, 1) == 4);
  CHECK(precubic_nonorientable_by_genus_pair(2, 1) == 1);
  CHECK(precubic_nonorientable_by_genus_pair(4, 3) == 0);
}

TEST_CASE("both non-orientable precubic forms agree") {
  for (int g = 2; g <= 40; ++g) {
    for (int crosscaps = 1; crosscaps <= g / 2; ++crosscaps) {
      const int edges = 2 * g - crosscaps - 3;
      if (edges <= 0) continue;
      const auto leaves = precubic_leaves(SurfaceClass::nonorientable_surface(crosscaps), edges);
      REQUIRE(leaves.has_value());
      CHECK(precubic_nonorientable_by_genus_pair(g, crosscaps) ==
            precubic_nonorientable_by_leaves(crosscaps, *leaves));
    }
  }
}

TEST_CASE("orientable precubic with no leaves is the cubic count") {
  for (int genus = 1; genus <= 15; ++genus) {
    CHECK(precubic_orientable(4 * genus, genus) == rooted_cubic_orientable(genus));
  }
}
