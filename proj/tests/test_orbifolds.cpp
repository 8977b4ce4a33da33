#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "cubicmaps/orbifolds.hpp"
#include "cubicmaps/reference_tables.hpp"

using namespace cubicmaps;

namespace {

using Row = std::tuple<int, int, int, int, long>;

std::vector<Row> rows(int g) {
  std::vector<Row> out;
  for (const auto& s : solve_closed_orbifolds(g)) {
    if (s.contributes()) out.emplace_back(s.period, s.genus, s.semiedge_points, s.vertex_points, s.epsilon.get_si());
  }
  return out;
}

}  // namespace

TEST_CASE("h2 orbifold family") {
  using V = std::vector<H2OrbifoldClass>;
  CHECK(h2_orbifold_family(2) == V{{true, 0, 2}, {false, 1, 0}});
  CHECK(h2_orbifold_family(4) == V{{true, 0, 4}, {true, 1, 0}, {false, 1, 2}, {false, 2, 0}});
  CHECK(h2_orbifold_family(5) == V{{true, 0, 5}, {true, 1, 1}, {false, 1, 3}, {false, 2, 1}});
  CHECK(h2_orbifold_family(1).empty());
}

TEST_CASE("h2 coefficients") {
  CHECK(epsilon_h2_orientable(1, 2) == 4);
  CHECK(epsilon_h2_orientable(1, 0) == 3);
  CHECK(epsilon_h2_orientable(0, 5) == 1);
  CHECK(epsilon_h2_nonorientable(1, 1) == 2);
  CHECK(epsilon_h2_nonorientable(2, 0) == 3);
  CHECK(epsilon_h2_nonorientable(3, 4) == 8);
}

TEST_CASE("closed orbifold solutions") {
  CHECK(rows(2) == std::vector<Row>{{2, 1, 1, 0, 2}});
  CHECK(rows(4) == std::vector<Row>{{2, 1, 3, 0, 2}, {2, 2, 1, 0, 4}, {3, 2, 0, 0, 6}, {6, 1, 1, 0, 4}});
  CHECK(rows(5) == std::vector<Row>{{3, 1, 0, 2, 8}});
  CHECK(rows(7) == std::vector<Row>{{3, 1, 0, 3, 16}, {3, 3, 0, 0, 18}, {9, 1, 0, 1, 12}});
  CHECK(rows(6).size() == 6);
  CHECK(solve_closed_orbifolds(1).empty());
}

TEST_CASE("solutions match the published orbifold table") {
  std::vector<std::tuple<int, int, int, int, int, long>> expected, computed;
  for (const auto& r : reference::kOrbifolds) {
    expected.emplace_back(r.genus, r.period, r.orbifold_genus, r.semiedge_points, r.vertex_points, r.epsilon);
  }
  for (int g = 2; g <= 8; ++g) {
    for (const auto& [l, genus, ns, nv, eps] : rows(g)) computed.emplace_back(g, l, genus, ns, nv, eps);
  }
  std::sort(expected.begin(), expected.end());
  std::sort(computed.begin(), computed.end());
  CHECK(computed == expected);
}

TEST_CASE("solver output is sorted and satisfies Riemann-Hurwitz") {
  for (int g = 2; g <= 60; ++g) {
    const auto solutions = solve_closed_orbifolds(g);
    CHECK(std::is_sorted(solutions.begin(), solutions.end(), [](const auto& a, const auto& b) {
      return std::tie(a.period, a.genus, a.semiedge_points, a.vertex_points) <
             std::tie(b.period, b.genus, b.semiedge_points, b.vertex_points);
    }));
    for (const auto& s : solutions) {
      CHECK(6 * g - 6 == s.period * (6 * s.genus - 6 + 3 * s.semiedge_points + 4 * s.vertex_points));
      CHECK(s.period >= 2);
      CHECK(s.period <= period_bound(g));
      CHECK(s.genus >= 1);
      CHECK(s.epsilon == epsilon_hl(s.period, s.genus, s.semiedge_points, s.vertex_points));
    }
  }
}

TEST_CASE("odd genus never needs periods above 2g-2") {
  for (int g = 3; g <= 50; g += 2) {
    for (const auto& s : solve_closed_orbifolds(g)) CHECK(s.period <= 2 * g - 2);
  }
}

TEST_CASE("zero-coefficient solutions are kept") {
  bool any_zero = false;
  for (int g = 2; g <= 30; ++g) {
    for (const auto& s : solve_closed_orbifolds(g)) any_zero = any_zero || !s.contributes();
  }
  CHECK(any_zero);
}

TEST_CASE("epsilon") {
  CHECK(epsilon_hl(3, 1, 0, 1) == 4);
  CHECK(epsilon_hl(5, 2, 0, 0) == 20);
  CHECK(epsilon_hl(6, 1, 1, 0) == 4);
  CHECK(epsilon_hl(2, 1, 1, 0) == 2);
  CHECK_THROWS_AS(epsilon_hl(4, 1, 0, 1), DomainError);
}

TEST_CASE("census signature") {
  const SignatureSolution s{6, 1, 1, 0, 4};
  const auto o = census_signature(s);
  CHECK_FALSE(o.orientable);
  CHECK(o.genus == 1);
  CHECK(o.boundary_components == 0);
  CHECK(o.branch_indices == std::vector<std::uint64_t>{2, 6});
  const auto t = census_signature({3, 2, 0, 3, 0});
  CHECK(t.branch_indices == std::vector<std::uint64_t>{3, 3, 3, 3});
}

TEST_CASE("boundary epimorphism counts at order 2") {
  for (int genus = 0; genus <= 6; ++genus) {
    for (int r = 0; r <= 6; ++r) {
      const OrbifoldSignature o{true, genus, 1, std::vector<std::uint64_t>(static_cast<std::size_t>(r), 2)};
      CHECK(epi_orientable_boundary(o, 2) == power(2, 2U * static_cast<unsigned>(genus)));
      CHECK(epi_plus_orientable_boundary(o, 2) == (r == 0 ? 1 : 0));
      if (genus >= 1) {
        const OrbifoldSignature n{false, genus, 1, o.branch_indices};
        CHECK(epi_nonorientable_boundary(n, 2) == power(2, static_cast<unsigned>(genus)));
        CHECK(epi_plus_nonorientable_boundary(n, 2) == (r == 0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("epimorphism formulas reject the wrong order parity") {
  const OrbifoldSignature o{true, 1, 1, {}};
  CHECK_THROWS_AS(epi_orientable_boundary(o, 3), DomainError);
  CHECK_THROWS_AS(epi_plus_orientable_boundary(o, 4), DomainError);
}

TEST_CASE("closed epimorphism difference specializes to epsilon") {
  for (int g = 2; g <= 12; ++g) {
    for (const auto& s : solve_closed_orbifolds(g)) {
      const auto o = census_signature(s);
      const auto l = static_cast<std::uint64_t>(s.period);
      CHECK(epi_plus_nonorientable_closed(o, l) == 0);
      CHECK(epi_nonorientable_closed(o, l) - epi_plus_nonorientable_closed(o, l) == s.epsilon);
    }
  }
}

TEST_CASE("closed odd-order count") {
  const OrbifoldSignature o{false, 2, 0, {3, 3, 3, 3}};
  CHECK(epi_nonorientable_closed(o, 3) == epsilon_hl(3, 2, 0, 3));
  CHECK(epi_plus_nonorientable_closed(o, 3) == 0);
}
