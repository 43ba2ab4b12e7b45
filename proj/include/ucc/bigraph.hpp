#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ucc/bitset.hpp"

namespace ucc {

enum class Side : std::uint8_t { X, Y };

constexpr Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }
std::string_view toString(Side s);

struct VertexRef {
  Side side = Side::X;
  std::size_t index = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// "X:3" style rendering, 0-based.
std::string toString(const VertexRef& v);

struct Edge {
  std::size_t x = 0;
  std::size_t y = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Number of maximal stable sets; arbitrary precision.
using MssCount = boost::multiprecision::cpp_int;

/// Immutable bipartite graph with bitset adjacency in both directions.
///
/// Besides the per-side views, vertices live in a combined index space:
/// X-vertices are 0..nX-1 and Y-vertices are nX..nX+nY-1. Vertex subsets
/// over the combined space ("vertex masks") are how subgraphs and stable
/// sets are passed to the enumeration routines.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Edgeless graph.
  BipartiteGraph(std::size_t nX, std::size_t nY);

  /// Duplicate edges collapse. Throws IndexOutOfRange.
  static BipartiteGraph build(std::size_t nX, std::size_t nY, const std::vector<Edge>& edges);

  std::size_t nX() const { return nX_; }
  std::size_t nY() const { return nY_; }
  std::size_t order() const { return nX_ + nY_; }
  std::size_t size(Side s) const { return s == Side::X ? nX_ : nY_; }

  /// Neighbors of X-vertex x, as a bitset over Y.
  const Bitset& neighborsOfX(std::size_t x) const { return adjXY_[x]; }
  /// Neighbors of Y-vertex y, as a bitset over X.
  const Bitset& neighborsOfY(std::size_t y) const { return adjYX_[y]; }
  /// Neighbors of v as a bitset over the opposite side.
  const Bitset& neighbors(const VertexRef& v) const;

  bool hasEdge(std::size_t x, std::size_t y) const { return adjXY_[x].test(y); }
  std::size_t edgeCount() const;
  /// Sorted by (x, y).
  std::vector<Edge> edges() const;

  std::size_t id(const VertexRef& v) const { return v.side == Side::X ? v.index : nX_ + v.index; }
  VertexRef ref(std::size_t id) const {
    return id < nX_ ? VertexRef{Side::X, id} : VertexRef{Side::Y, id - nX_};
  }
  /// Throws IndexOutOfRange.
  void checkVertex(const VertexRef& v) const;

  /// Neighbors of combined vertex `id`, over the combined space.
  const Bitset& adjacency(std::size_t id) const { return adj_[id]; }
  Bitset allVertices() const { return Bitset::full(order()); }
  Bitset emptyMask() const { return Bitset(order()); }
  Bitset sideMask(Side s) const;
  /// Union of adjacency over `mask`, restricted to `domain`.
  Bitset neighborhood(const Bitset& mask, const Bitset& domain) const;

  /// Mirror image: X and Y swap roles.
  BipartiteGraph transposed() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.nX_ == b.nX_ && a.nY_ == b.nY_ && a.adjXY_ == b.adjXY_;
  }

 private:
  std::size_t nX_ = 0;
  std::size_t nY_ = 0;
  std::vector<Bitset> adjXY_;
  std::vector<Bitset> adjYX_;
  std::vector<Bitset> adj_;
};

struct StableSet {
  Bitset x;
  Bitset y;

  friend bool operator==(const StableSet&, const StableSet&) = default;
  friend auto operator<=>(const StableSet& a, const StableSet& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

StableSet splitMask(const BipartiteGraph& g, const Bitset& mask);
Bitset joinMask(const BipartiteGraph& g, const StableSet& s);
bool isStable(const BipartiteGraph& g, const StableSet& s);

struct StableSetCollection {
  /// Canonical order: lexicographic on (x, y).
  std::vector<StableSet> sets;
  MssCount count() const { return MssCount(sets.size()); }
};

struct EnumerationLimits {
  std::size_t vertexCap = 64;
  std::uint64_t outputCap = std::uint64_t{1} << 24;
};

struct CountConstraint {
  std::vector<VertexRef> include;
  std::vector<VertexRef> exclude;
};

/// Visits every maximal stable set of the subgraph induced on `domain` that
/// contains `include` and avoids `exclude`. Maximality is with respect to
/// the induced subgraph. Sets are passed as combined-space masks in
/// discovery order. An inconsistent constraint (include outside domain,
/// include not stable, include meeting exclude) yields zero sets.
/// Returns the number of sets visited. Throws CapacityExceeded when the
/// subgraph exceeds limits.vertexCap or the count exceeds limits.outputCap.
std::uint64_t forEachMaximalStable(const BipartiteGraph& g, const Bitset& domain,
                                   const Bitset& include, const Bitset& exclude,
                                   const EnumerationLimits& limits,
                                   const std::function<void(const Bitset&)>& visit);

/// Constrained count without materializing sets (see forEachMaximalStable).
MssCount countMaximalStable(const BipartiteGraph& g, const Bitset& domain, const Bitset& include,
                            const Bitset& exclude, const EnumerationLimits& limits = {});

/// Sorted combined-space masks (see forEachMaximalStable).
std::vector<Bitset> collectMaximalStable(const BipartiteGraph& g, const Bitset& domain,
                                         const Bitset& include, const Bitset& exclude,
                                         const EnumerationLimits& limits = {});

StableSetCollection enumerateMss(const BipartiteGraph& g, const EnumerationLimits& limits = {});

MssCount wTotal(const BipartiteGraph& g, const EnumerationLimits& limits = {});
MssCount wOf(const BipartiteGraph& g, const VertexRef& v, const EnumerationLimits& limits = {});
/// Throws ConstraintConflict if include and exclude overlap.
MssCount wConstrained(const BipartiteGraph& g, const CountConstraint& c,
                      const EnumerationLimits& limits = {});

/// Total count plus, for every vertex of the domain, how many sets contain it
/// (indexed by combined id; vertices outside the domain stay 0).
struct MssProfile {
  MssCount total;
  std::vector<MssCount> perVertex;
};

MssProfile mssProfile(const BipartiteGraph& g, const Bitset& domain,
                      const EnumerationLimits& limits = {});
MssProfile mssProfile(const BipartiteGraph& g, const EnumerationLimits& limits = {});

/// 2 * count <= total.
inline bool rareCount(const MssCount& count, const MssCount& total) { return 2 * count <= total; }

bool isRare(const BipartiteGraph& g, const VertexRef& v, const EnumerationLimits& limits = {});

struct RareVertices {
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;
};

RareVertices rareVerticesByClass(const BipartiteGraph& g, const EnumerationLimits& limits = {});
/// Rare vertices of the subgraph induced on `domain`, as a combined mask.
Bitset rareMask(const BipartiteGraph& g, const Bitset& domain, const EnumerationLimits& limits = {});

enum class GraphVerdict { Holds, Fails, NoEdges };
std::string_view toString(GraphVerdict v);

GraphVerdict franklGraphVerdict(const BipartiteGraph& g, const EnumerationLimits& limits = {});

std::size_t degree(const BipartiteGraph& g, const VertexRef& v);
bool isPendant(const BipartiteGraph& g, const VertexRef& v);
std::vector<VertexRef> neighbors(const BipartiteGraph& g, const VertexRef& v);
/// Number of degree-1 vertices.
std::size_t pendantCount(const BipartiteGraph& g);

struct Component {
  BipartiteGraph graph;
  /// Parent index of each component X-vertex / Y-vertex.
  std::vector<std::size_t> xToParent;
  std::vector<std::size_t> yToParent;
};

/// Connected components ordered by their smallest combined vertex id.
std::vector<Component> components(const BipartiteGraph& g);

/// Product of per-component totals.
MssCount wViaComponents(const BipartiteGraph& g, const EnumerationLimits& limits = {});

/// Graph on the same vertex set keeping only `edges` (each must be in g).
BipartiteGraph edgeSubgraph(const BipartiteGraph& g, const std::vector<Edge>& edges);

/// Graph with the vertices of `keep` (combined mask) renumbered densely,
/// preserving order within each side.
BipartiteGraph inducedSubgraph(const BipartiteGraph& g, const Bitset& keep,
                               std::vector<std::size_t>* xToParent = nullptr,
                               std::vector<std::size_t>* yToParent = nullptr);

/// Disjoint union; b's vertices follow a's on each side.
BipartiteGraph disjointUnion(const BipartiteGraph& a, const BipartiteGraph& b);

}  // namespace ucc
