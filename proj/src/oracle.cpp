#include "cubicmaps/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

namespace cubicmaps::oracle {

namespace {

// Depth-first walk over all gluings of a 2n-gon. Sides are matched in
// canonical order (the smallest unmatched side first); corner classes are
// kept in a union-find with an undo log so each step is O(log n) and the
// degree histogram is always current.
class GluingWalker {
 public:
  GluingWalker(int edges, EnumerationMode mode) : edges_(edges), sides_(2 * edges), mode_(mode) {
    partner_.fill(kUnmatched);
    for (int c = 0; c < sides_; ++c) {
      parent_[c] = static_cast<std::uint8_t>(c);
      size_[c] = 1;
    }
    profile_.count[1] = static_cast<std::uint8_t>(sides_);
    components_ = sides_;
  }

  int edges() const { return edges_; }
  int vertices() const { return components_; }
  bool orientable() const { return twisted_pairs_ == 0; }
  const DegreeProfile& profile() const { return profile_; }

  // 2 - 2g or 2 - g.
  int euler_characteristic() const { return components_ - edges_ + 1; }
  int genus() const {
    const int deficit = 2 - euler_characteristic();
    return orientable() ? deficit / 2 : deficit;
  }

  PolygonGluing gluing() const {
    PolygonGluing g;
    g.edges = edges_;
    for (int s = 0; s < sides_; ++s) {
      g.partner[s] = static_cast<std::uint8_t>(partner_[s]);
      g.twisted[s] = twisted_[s];
    }
    return g;
  }

  // First level choices: partner of side 0 (and the twist of that pair).
  int partition_count() const { return sides_ - 1; }

  template <class Visitor>
  void walk_partition(int partition, Visitor& visit) {
    const int partner = partition + 1;
    for (int twist = 0; twist < twist_choices(); ++twist) {
      glue(0, partner, twist != 0);
      descend(visit);
      unglue(0, partner, twist != 0);
    }
  }

 private:
  static constexpr std::int8_t kUnmatched = -1;

  struct UndoEntry {
    std::uint8_t child;  // kNoMerge when the union was a no-op
    std::uint8_t root;
  };
  static constexpr std::uint8_t kNoMerge = 0xff;

  int twist_choices() const { return mode_ == EnumerationMode::kFull ? 2 : 1; }

  template <class Visitor>
  void descend(Visitor& visit, int from = 1) {
    int s = from;
    while (s < sides_ && partner_[s] != kUnmatched) ++s;
    if (s == sides_) {
      visit(*this);
      return;
    }
    for (int t = s + 1; t < sides_; ++t) {
      if (partner_[t] != kUnmatched) continue;
      for (int twist = 0; twist < twist_choices(); ++twist) {
        glue(s, t, twist != 0);
        descend(visit, s + 1);
        unglue(s, t, twist != 0);
      }
    }
  }

  int corner(int c) const { return c % sides_; }

  void glue(int s, int t, bool twist) {
    partner_[s] = static_cast<std::int8_t>(t);
    partner_[t] = static_cast<std::int8_t>(s);
    twisted_[s] = twisted_[t] = twist;
    if (twist) {
      ++twisted_pairs_;
      unite(s, t);
      unite(corner(s + 1), corner(t + 1));
    } else {
      unite(s, corner(t + 1));
      unite(corner(s + 1), t);
    }
  }

  void unglue(int s, int t, bool twist) {
    undo();
    undo();
    if (twist) --twisted_pairs_;
    twisted_[s] = twisted_[t] = false;
    partner_[s] = partner_[t] = kUnmatched;
  }

  int find(int c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  void unite(int a, int b) {
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) {
      undo_[undo_size_++] = {kNoMerge, 0};
      return;
    }
    if (size_[ra] > size_[rb]) std::swap(ra, rb);
    --profile_.count[size_[ra]];
    --profile_.count[size_[rb]];
    size_[rb] = static_cast<std::uint8_t>(size_[rb] + size_[ra]);
    ++profile_.count[size_[rb]];
    parent_[ra] = static_cast<std::uint8_t>(rb);
    --components_;
    undo_[undo_size_++] = {static_cast<std::uint8_t>(ra), static_cast<std::uint8_t>(rb)};
  }

  void undo() {
    const UndoEntry e = undo_[--undo_size_];
    if (e.child == kNoMerge) return;
    --profile_.count[size_[e.root]];
    size_[e.root] = static_cast<std::uint8_t>(size_[e.root] - size_[e.child]);
    ++profile_.count[size_[e.root]];
    ++profile_.count[size_[e.child]];
    parent_[e.child] = e.child;
    ++components_;
  }

  int edges_;
  int sides_;
  EnumerationMode mode_;
  int twisted_pairs_ = 0;
  int components_ = 0;
  std::array<std::int8_t, kMaxSides> partner_{};
  std::array<bool, kMaxSides> twisted_{};
  std::array<std::uint8_t, kMaxSides> parent_{};
  std::array<std::uint8_t, kMaxSides> size_{};
  std::array<UndoEntry, kMaxSides> undo_{};
  int undo_size_ = 0;
  DegreeProfile profile_;
};

// Runs `prototype` over every partition (first matched pair) on a worker
// pool and merges the per-partition visitors in partition order, so the
// result never depends on scheduling.
template <class Visitor>
Visitor enumerate(int edges, EnumerationMode mode, const Visitor& prototype) {
  const int partitions = 2 * edges - 1;
  std::vector<Visitor> results(static_cast<std::size_t>(partitions), prototype);
  const unsigned workers =
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1U, static_cast<unsigned>(partitions));
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned worker) {
    try {
      GluingWalker walker(edges, mode);
      for (int p = next++; p < partitions; p = next++) walker.walk_partition(p, results[static_cast<std::size_t>(p)]);
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
  Visitor merged = prototype;
  for (const auto& r : results) merged.merge(r);
  return merged;
}

EnumerationMode mode_for(const SurfaceClass& surface) {
  return surface.orientable ? EnumerationMode::kOrientable : EnumerationMode::kFull;
}

void check_limits(int edges, EnumerationMode mode, const OracleLimits& limits) {
  if (edges < 1) throw DomainError("oracle enumeration needs at least one edge");
  const int limit = mode == EnumerationMode::kOrientable ? limits.max_edges_orientable : limits.max_edges_full;
  const char* label = mode == EnumerationMode::kOrientable ? "orientable" : "full (twisted)";
  if (edges > limit || edges > kMaxEdges) {
    throw EnumerationLimitError("refusing " + std::string(label) + " enumeration with " + std::to_string(edges) +
                                " edges: limit is " + std::to_string(std::min(limit, kMaxEdges)));
  }
}

struct ClassCounter {
  SurfaceClass surface;
  const DegreeFilter* filter;
  std::uint64_t count = 0;

  void operator()(const GluingWalker& w) {
    if (w.orientable() != surface.orientable || w.genus() != surface.genus) return;
    if ((*filter)(w.profile())) ++count;
  }
  void merge(const ClassCounter& other) { count += other.count; }
};

struct ClassCollector {
  SurfaceClass surface;
  const DegreeFilter* filter;
  std::vector<PolygonGluing> gluings;

  void operator()(const GluingWalker& w) {
    if (w.orientable() != surface.orientable || w.genus() != surface.genus) return;
    if ((*filter)(w.profile())) gluings.push_back(w.gluing());
  }
  void merge(const ClassCollector& other) {
    gluings.insert(gluings.end(), other.gluings.begin(), other.gluings.end());
  }
};

struct Tallier {
  // Index: orientable flag, then genus (crosscaps run up to n, handles to n/2).
  std::array<std::array<std::uint64_t, kMaxEdges + 2>, 2> surfaces{};
  std::array<std::array<std::array<std::uint64_t, kMaxSides + 1>, kMaxEdges + 2>, 2> precubic{};
  std::uint64_t total = 0;
  std::uint64_t euler_violations = 0;

  void operator()(const GluingWalker& w) {
    ++total;
    const int deficit = 2 - w.euler_characteristic();
    if (deficit < 0 || (w.orientable() && deficit % 2 != 0) || (!w.orientable() && deficit == 0)) {
      ++euler_violations;
      return;
    }
    const int o = w.orientable() ? 1 : 0;
    const int genus = w.genus();
    ++surfaces[o][genus];
    const auto& c = w.profile().count;
    if (c[1] + c[3] == w.vertices()) ++precubic[o][genus][c[1]];
  }
  void merge(const Tallier& other) {
    total += other.total;
    euler_violations += other.euler_violations;
    for (int o = 0; o < 2; ++o) {
      for (int g = 0; g < kMaxEdges + 2; ++g) {
        surfaces[o][g] += other.surfaces[o][g];
        for (int k = 0; k <= kMaxSides; ++k) precubic[o][g][k] += other.precubic[o][g][k];
      }
    }
  }
};

bool same_after(const PolygonGluing& image, const PolygonGluing& original) { return image == original; }

}  // namespace

PolygonGluing PolygonGluing::from_pairs(int edges, std::span<const std::pair<int, int>> pairs,
                                        std::span<const bool> twists) {
  if (edges < 1 || edges > kMaxEdges) throw DomainError("gluing edge count out of range");
  if (static_cast<int>(pairs.size()) != edges) throw DomainError("gluing needs exactly one pair per edge");
  if (!twists.empty() && twists.size() != pairs.size()) throw DomainError("one twist flag per pair expected");
  PolygonGluing g;
  g.edges = edges;
  std::array<bool, kMaxSides> seen{};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    if (a < 0 || b < 0 || a >= 2 * edges || b >= 2 * edges || a == b || seen[a] || seen[b]) {
      throw DomainError("gluing pairs must form a perfect matching of the sides");
    }
    seen[a] = seen[b] = true;
    g.partner[a] = static_cast<std::uint8_t>(b);
    g.partner[b] = static_cast<std::uint8_t>(a);
    g.twisted[a] = g.twisted[b] = !twists.empty() && twists[i];
  }
  return g;
}

bool PolygonGluing::valid() const {
  if (edges < 1 || edges > kMaxEdges) return false;
  for (int s = 0; s < sides(); ++s) {
    const int t = partner[s];
    if (t >= sides() || t == s || partner[t] != s || twisted[t] != twisted[s]) return false;
  }
  return true;
}

bool PolygonGluing::orientable() const {
  return std::none_of(twisted.begin(), twisted.begin() + sides(), [](bool t) { return t; });
}

bool operator==(const PolygonGluing& a, const PolygonGluing& b) {
  if (a.edges != b.edges) return false;
  for (int s = 0; s < a.sides(); ++s) {
    if (a.partner[s] != b.partner[s] || a.twisted[s] != b.twisted[s]) return false;
  }
  return true;
}

int DegreeProfile::vertices() const { return std::accumulate(count.begin(), count.end(), 0); }

std::vector<int> DegreeProfile::sorted() const {
  std::vector<int> degrees;
  for (int d = 0; d <= kMaxSides; ++d) degrees.insert(degrees.end(), count[d], d);
  return degrees;
}

MapInvariants classify(const PolygonGluing& gluing) {
  if (!gluing.valid()) throw DomainError("classify: invalid gluing");
  const int sides = gluing.sides();
  std::vector<int> parent(static_cast<std::size_t>(sides));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  };
  auto unite = [&](int a, int b) { parent[find(a % sides)] = find(b % sides); };
  for (int s = 0; s < sides; ++s) {
    const int t = gluing.partner[s];
    if (t < s) continue;
    if (gluing.twisted[s]) {
      unite(s, t);
      unite(s + 1, t + 1);
    } else {
      unite(s, t + 1);
      unite(s + 1, t);
    }
  }
  std::map<int, int> class_size;
  for (int c = 0; c < sides; ++c) ++class_size[find(c)];

  MapInvariants result;
  result.orientable = gluing.orientable();
  for (const auto& [root, size] : class_size) result.degrees.push_back(size);
  std::sort(result.degrees.begin(), result.degrees.end());
  const int chi = static_cast<int>(result.degrees.size()) - gluing.edges + 1;
  result.genus = result.orientable ? (2 - chi) / 2 : 2 - chi;
  return result;
}

DegreeFilter any_degrees() {
  return [](const DegreeProfile&) { return true; };
}

DegreeFilter all_degrees(int degree) {
  return [degree](const DegreeProfile& p) { return p.count[degree] == p.vertices(); };
}

DegreeFilter precubic_filter(int leaves) {
  return [leaves](const DegreeProfile& p) { return p.count[1] == leaves && p.count[1] + p.count[3] == p.vertices(); };
}

BigCount count_rooted(int edges, const SurfaceClass& surface, const DegreeFilter& filter, const OracleLimits& limits) {
  const EnumerationMode mode = mode_for(surface);
  check_limits(edges, mode, limits);
  const ClassCounter result = enumerate(edges, mode, ClassCounter{surface, &filter});
  return BigCount(static_cast<unsigned long>(result.count));
}

std::vector<PolygonGluing> collect_gluings(int edges, const SurfaceClass& surface, const DegreeFilter& filter,
                                           const OracleLimits& limits) {
  const EnumerationMode mode = mode_for(surface);
  check_limits(edges, mode, limits);
  return enumerate(edges, mode, ClassCollector{surface, &filter, {}}).gluings;
}

BigCount count_sensed_orientable(int edges, int genus, const DegreeFilter& filter, const OracleLimits& limits) {
  const auto gluings = collect_gluings(edges, SurfaceClass{true, genus}, filter, limits);
  return burnside_rotations(gluings).orbits();
}

BigCount count_unsensed(int edges, const SurfaceClass& surface, const DegreeFilter& filter, TwistTransport transport,
                        const OracleLimits& limits) {
  const auto gluings = collect_gluings(edges, surface, filter, limits);
  return burnside_dihedral(gluings, transport).orbits();
}

BigCount count_precubic(int edges, const SurfaceClass& surface, int leaves, const OracleLimits& limits) {
  return count_rooted(edges, surface, precubic_filter(leaves), limits);
}

PolygonGluing rotate(const PolygonGluing& gluing, int shift) {
  const int sides = gluing.sides();
  const int k = ((shift % sides) + sides) % sides;
  PolygonGluing image;
  image.edges = gluing.edges;
  for (int s = 0; s < sides; ++s) {
    const int to = (s + k) % sides;
    image.partner[to] = static_cast<std::uint8_t>((gluing.partner[s] + k) % sides);
    image.twisted[to] = gluing.twisted[s];
  }
  return image;
}

PolygonGluing reflect(const PolygonGluing& gluing, TwistTransport transport) {
  // Reversing the boundary sends side s to side 2n-1-s.
  const int sides = gluing.sides();
  PolygonGluing image;
  image.edges = gluing.edges;
  for (int s = 0; s < sides; ++s) {
    const int to = sides - 1 - s;
    image.partner[to] = static_cast<std::uint8_t>(sides - 1 - gluing.partner[s]);
    image.twisted[to] = transport == TwistTransport::kInvariant ? gluing.twisted[s] : !gluing.twisted[s];
  }
  return image;
}

bool BurnsideResult::divisible() const {
  return group_order != 0 && mpz_divisible_ui_p(fixed_point_sum.get_mpz_t(), group_order) != 0;
}

BigCount BurnsideResult::orbits() const {
  if (!divisible()) {
    throw IntegralityError("Burnside sum " + fixed_point_sum.get_str() + " is not divisible by group order " +
                           std::to_string(group_order));
  }
  return BigCount(fixed_point_sum / static_cast<unsigned long>(group_order));
}

BurnsideResult burnside_rotations(std::span<const PolygonGluing> gluings) {
  BurnsideResult result;
  if (gluings.empty()) {
    result.group_order = 1;
    return result;
  }
  const int sides = gluings.front().sides();
  std::uint64_t fixed = 0;
  for (const auto& g : gluings) {
    for (int k = 0; k < sides; ++k) fixed += same_after(rotate(g, k), g) ? 1 : 0;
  }
  result.fixed_point_sum = BigCount(static_cast<unsigned long>(fixed));
  result.group_order = static_cast<std::uint64_t>(sides);
  return result;
}

BurnsideResult burnside_dihedral(std::span<const PolygonGluing> gluings, TwistTransport transport) {
  BurnsideResult result;
  if (gluings.empty()) {
    result.group_order = 1;
    return result;
  }
  const int sides = gluings.front().sides();
  std::uint64_t fixed = 0;
  for (const auto& g : gluings) {
    const PolygonGluing mirrored = reflect(g, transport);
    for (int k = 0; k < sides; ++k) {
      fixed += same_after(rotate(g, k), g) ? 1 : 0;
      fixed += same_after(rotate(mirrored, k), g) ? 1 : 0;
    }
  }
  result.fixed_point_sum = BigCount(static_cast<unsigned long>(fixed));
  result.group_order = 2 * static_cast<std::uint64_t>(sides);
  return result;
}

GluingTally tally_gluings(int edges, EnumerationMode mode, const OracleLimits& limits) {
  check_limits(edges, mode, limits);
  const Tallier t = enumerate(edges, mode, Tallier{});
  GluingTally tally;
  tally.edges = edges;
  tally.mode = mode;
  tally.total = t.total;
  tally.euler_violations = t.euler_violations;
  for (int o = 0; o < 2; ++o) {
    for (int g = 0; g < kMaxEdges + 2; ++g) {
      if (t.surfaces[o][g] != 0) tally.by_surface[{o == 1, g}] = t.surfaces[o][g];
      for (int k = 0; k <= kMaxSides; ++k) {
        if (t.precubic[o][g][k] != 0) tally.precubic[{o == 1, g, k}] = t.precubic[o][g][k];
      }
    }
  }
  return tally;
}

BigCount gluing_space_size(int edges, EnumerationMode mode) {
  if (edges < 0) throw DomainError("gluing_space_size: negative edge count");
  BigCount size(1);
  for (long odd = 2L * edges - 1; odd > 1; odd -= 2) size *= odd;
  if (mode == EnumerationMode::kFull) size *= power(2, static_cast<unsigned long>(edges));
  return size;
}

}  // namespace cubicmaps::oracle
