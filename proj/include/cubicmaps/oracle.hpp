// Brute-force enumeration of one-face maps as polygon gluings.
//
// A one-face map with n edges is a 2n-gon whose sides are glued in pairs.
// A pair glued with opposite boundary directions is untwisted; a twisted pair
// keeps the direction and inserts a crosscap. Vertices are the classes of
// polygon corners identified by the gluing, and a vertex's degree is the
// size of its class. Reading the face boundary from a root flag yields a
// unique gluing, so rooted maps are counted by counting gluings, and
// unrooted maps by counting orbits of the dihedral group of the polygon.
//
// Enumeration is exhaustive: (2n-1)!! matchings in orientable mode and
// (2n-1)!! * 2^n gluings in full mode.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubicmaps/exactnum.hpp"
#include "cubicmaps/rooted_counts.hpp"

namespace cubicmaps::oracle {

inline constexpr int kMaxEdges = 10;
inline constexpr int kMaxSides = 2 * kMaxEdges;

/// Sides are numbered 0..2n-1 around the polygon; side s runs from corner s
/// to corner s+1 (mod 2n).
struct PolygonGluing {
  int edges = 0;
  std::array<std::uint8_t, kMaxSides> partner{};
  std::array<bool, kMaxSides> twisted{};  // equal on both sides of a pair

  /// Builds a gluing from 0-based side pairs and one twist flag per pair.
  static PolygonGluing from_pairs(int edges, std::span<const std::pair<int, int>> pairs,
                                  std::span<const bool> twists = {});

  int sides() const { return 2 * edges; }
  bool valid() const;
  bool orientable() const;

  friend bool operator==(const PolygonGluing& a, const PolygonGluing& b);
};

/// Vertex-degree multiset as a histogram: count[d] vertices have degree d.
struct DegreeProfile {
  std::array<std::uint8_t, kMaxSides + 1> count{};

  int vertices() const;
  std::vector<int> sorted() const;
  bool operator==(const DegreeProfile&) const = default;
};

struct MapInvariants {
  bool orientable = true;
  int genus = 0;
  std::vector<int> degrees;  // ascending

  SurfaceClass surface() const { return {orientable, genus}; }
};

MapInvariants classify(const PolygonGluing& gluing);

using DegreeFilter = std::function<bool(const DegreeProfile&)>;

DegreeFilter any_degrees();
DegreeFilter all_degrees(int degree);
/// Degrees in {1, 3} with exactly `leaves` vertices of degree 1.
DegreeFilter precubic_filter(int leaves);

enum class EnumerationMode { kOrientable, kFull };

/// How twist flags travel when the polygon is reflected.
enum class TwistTransport { kInvariant, kFlipOnReflection };

struct OracleLimits {
  int max_edges_orientable = 9;
  int max_edges_full = 6;
};

class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rooted maps: gluings classifying to `surface` whose degrees pass `filter`.
BigCount count_rooted(int edges, const SurfaceClass& surface, const DegreeFilter& filter,
                      const OracleLimits& limits = {});

/// Orbits of the matching class under the 2n rotations.
BigCount count_sensed_orientable(int edges, int genus, const DegreeFilter& filter, const OracleLimits& limits = {});

/// Orbits of the gluing class under the dihedral group of order 4n.
BigCount count_unsensed(int edges, const SurfaceClass& surface, const DegreeFilter& filter,
                        TwistTransport transport = TwistTransport::kInvariant, const OracleLimits& limits = {});

BigCount count_precubic(int edges, const SurfaceClass& surface, int leaves, const OracleLimits& limits = {});

/// All gluings of the class, in canonical enumeration order.
std::vector<PolygonGluing> collect_gluings(int edges, const SurfaceClass& surface, const DegreeFilter& filter,
                                           const OracleLimits& limits = {});

PolygonGluing rotate(const PolygonGluing& gluing, int shift);
PolygonGluing reflect(const PolygonGluing& gluing, TwistTransport transport);

struct BurnsideResult {
  BigCount fixed_point_sum;
  std::uint64_t group_order = 0;

  bool divisible() const;
  /// The orbit count; throws IntegralityError if the sum is not divisible.
  BigCount orbits() const;
};

BurnsideResult burnside_rotations(std::span<const PolygonGluing> gluings);
BurnsideResult burnside_dihedral(std::span<const PolygonGluing> gluings, TwistTransport transport);

/// One-pass tally of the whole gluing space.
struct GluingTally {
  int edges = 0;
  EnumerationMode mode = EnumerationMode::kOrientable;
  std::uint64_t total = 0;
  std::uint64_t euler_violations = 0;
  /// (orientable, genus) -> gluings.
  std::map<std::pair<bool, int>, std::uint64_t> by_surface;
  /// (orientable, genus, leaves) -> precubic gluings.
  std::map<std::tuple<bool, int, int>, std::uint64_t> precubic;
};

GluingTally tally_gluings(int edges, EnumerationMode mode, const OracleLimits& limits = {});

/// (2n-1)!!, or (2n-1)!! 2^n in full mode.
BigCount gluing_space_size(int edges, EnumerationMode mode);

}  // namespace cubicmaps::oracle
