#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ucc/bigraph.hpp"
#include "ucc/decomp.hpp"
#include "ucc/setfam.hpp"

namespace ucc {

/// SplitMix64 (Steele, Lea, Flood 2014) with the standard constants:
/// state += 0x9E3779B97F4A7C15, then the two xor-shift-multiply rounds with
/// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB. Streams are identical on every
/// platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, n) by 128-bit multiply-shift; n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// True with probability permille / 1000.
  bool chance(std::int64_t permille) { return static_cast<std::int64_t>(below(1000)) < permille; }

  /// The i-th output (0-based) of the stream started at `seed`, in O(1).
  static std::uint64_t nth(std::uint64_t seed, std::uint64_t i);

 private:
  std::uint64_t state_;
};

enum class GenKind {
  RandomBipartite,
  Star,
  Path,
  EvenCycle,
  PendantSaturated,
  TwoLayeredGadget,
  MergedGadgets,
  RandomFamily,
  ExhaustiveBipartite,
  GadgetDecomposition,
};

std::string_view toString(GenKind k);
/// Throws InvalidParams for an unknown name.
GenKind parseGenKind(std::string_view name);
std::vector<GenKind> allGenKinds();

/// Kind plus integer parameters and a seed. Parameters not given take the
/// kind's defaults; unknown names are rejected by validate().
struct GenSpec {
  GenKind kind = GenKind::RandomBipartite;
  std::map<std::string, std::int64_t> params;
  std::uint64_t seed = 0;

  std::int64_t param(const std::string& name) const;
  /// Throws InvalidParams.
  void validate() const;

  /// "kind(k=v,...,seed=S)" with every parameter spelled out.
  std::string toString() const;
  /// Inverse of toString(); missing parameters take defaults.
  static GenSpec parse(std::string_view text);
};

/// Parameter names and defaults of a kind, in declaration order.
const std::vector<std::pair<std::string, std::int64_t>>& genParams(GenKind k);

struct Generated {
  std::variant<BipartiteGraph, SetFamily, EdgeSplit> value;
  /// Vertices the construction promises something about (2-layered gadget
  /// vertices, the merged vertex, a star center).
  std::vector<VertexRef> designated;

  const BipartiteGraph* graph() const { return std::get_if<BipartiteGraph>(&value); }
  const SetFamily* family() const { return std::get_if<SetFamily>(&value); }
  const EdgeSplit* split() const { return std::get_if<EdgeSplit>(&value); }
};

/// Every instance of the spec in order. Random kinds produce `count` items;
/// instance i draws from SplitMix64(SplitMix64::nth(seed, i)), so a single
/// instance can be replayed without the ones before it.
std::vector<Generated> generate(const GenSpec& spec);

/// Number of instances generate(spec) yields.
std::size_t instanceCount(const GenSpec& spec);

/// Instance `index` of the spec. Throws InvalidParams when out of range.
Generated generateAt(const GenSpec& spec, std::size_t index);

// ---------------------------------------------------------------------------
// Exhaustive streams

/// Sorted Y-neighborhood signature after relabeling X by descending degree
/// (stable). Equal signatures imply isomorphic graphs; the converse fails,
/// so deduplication is not canonical.
std::vector<Bitset> adjacencySignature(const BipartiteGraph& g);

/// All labeled graphs on nX × nY (or every size up to it when `upto`),
/// optionally keeping only the first graph per signature. Returns the number
/// of graphs visited. Requires nX·nY ≤ 24.
std::size_t forEachExhaustive(std::size_t nX, std::size_t nY, bool upto, bool dedup,
                              const std::function<void(const BipartiteGraph&)>& visit);

/// One side of a glued decomposition: X-vertices 0..m-1 are the common set,
/// each Y-neighbor gets a fresh pendant X witness, and an optional extra
/// X-vertex hangs on a subset of the Y-neighbors.
struct GadgetSide {
  std::size_t common = 1;
  /// Subsets of the common set, one per Y-neighbor (bit i = X:i).
  std::vector<std::uint32_t> neighbors;
  /// Y-neighbors adjacent to the extra X-vertex; 0 means no extra vertex.
  std::uint32_t extra = 0;
};

BipartiteGraph gadgetSideGraph(const GadgetSide& side);

/// Glues two parts along X:0..m-1. The remaining vertices of C come first,
/// then those of H.
EdgeSplit glueAtCommon(const BipartiteGraph& c, const BipartiteGraph& h, std::size_t common);

/// Every pair of gadget sides with a common set of size 1..maxCommon, up to
/// `maxNeighbors` Y-neighbors per side. Returns the number visited.
std::size_t forEachGadgetDecomposition(std::size_t maxCommon, std::size_t maxNeighbors,
                                       const std::function<void(const EdgeSplit&)>& visit);

// ---------------------------------------------------------------------------
// Corpus export

struct ManifestEntry {
  std::string spec;
  std::size_t index = 0;
  std::string file;
  std::string checksum;
};

/// Writes every instance to `directory` in the graph, family or
/// decomposition format plus manifest.json. Throws IoError.
std::vector<ManifestEntry> corpusExport(const std::vector<GenSpec>& specs,
                                        const std::filesystem::path& directory);

}  // namespace ucc
