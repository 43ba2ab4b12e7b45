#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ucc/bigraph.hpp"
#include "ucc/gen.hpp"
#include "ucc/setfam.hpp"

namespace ucc {

/// Concatenation of generator streams.
struct CorpusSpec {
  std::vector<GenSpec> sources;

  /// Every graph up to nX × nY, one per adjacency signature.
  static CorpusSpec exhaustive(std::size_t nX, std::size_t nY);
  /// Sources joined by ';'.
  std::string toString() const;
  static CorpusSpec parse(std::string_view text);
};

/// Position of an instance inside one generator stream; "spec#index".
struct InstanceId {
  GenSpec spec;
  std::size_t index = 0;

  std::string toString() const;
  static InstanceId parse(std::string_view text);
};

struct CorpusInstance {
  InstanceId id;
  Generated item;
};

std::vector<CorpusInstance> buildCorpus(const CorpusSpec& corpus);
/// Regenerates one instance bit-identically.
Generated replay(const InstanceId& id);

struct Violation {
  std::string instanceId;
  std::string predicate;
  std::string detail;
};

struct SuiteReport {
  std::string suiteName;
  std::string corpus;
  /// How the executable bounds differ from the stated result, if at all.
  std::string reduction;
  std::size_t instancesChecked = 0;
  /// Instances whose hypothesis failed.
  std::size_t skipped = 0;
  std::vector<Violation> violations;
  double elapsedMs = 0;

  bool passed() const { return violations.empty(); }
  std::size_t corpusSize() const { return instancesChecked + skipped; }
};

struct SuiteOptions {
  /// 0 picks the hardware concurrency.
  std::size_t threads = 0;
  EnumerationLimits enumeration;
  ClosureLimits closure;
};

std::vector<std::string> suiteNames();

/// Outcome of one suite on one graph: nullopt when the hypothesis fails,
/// otherwise (predicate, detail) pairs for each violated conclusion.
using SuiteOutcome = std::optional<std::vector<std::pair<std::string, std::string>>>;

/// Graph instances feed the family suites through their X-side incidence
/// family; family instances feed graph suites through their incidence graph.
/// Throws UnknownSuite.
SuiteOutcome evaluateSuite(const std::string& name, const Generated& item, const SuiteOptions& options = {});

/// Throws UnknownSuite, CapacityExceeded.
SuiteReport runSuite(const std::string& name, const CorpusSpec& corpus, const SuiteOptions& options = {});

enum class PendantClass { NoPendant, ExactlyOnePendant, AtLeastOnePendant };

std::string_view toString(PendantClass c);
/// Throws InvalidParams.
PendantClass parsePendantClass(std::string_view name);
bool inPendantClass(const BipartiteGraph& g, PendantClass c);

struct HuntOptions {
  std::size_t maxX = 4;
  std::size_t maxY = 4;
  /// Caps the number of class members checked; without it only the
  /// exhaustive phase runs.
  std::optional<std::size_t> budget;
  std::uint64_t seed = 0;
  /// Failures are written here as graph files when set.
  std::string witnessDir;
  SuiteOptions suite;
};

/// Exhaustive stream up to the bounds (when nX·nY ≤ 24), then seeded random
/// graphs up to the budget. Every class member with an edge is checked with
/// franklGraphVerdict. Throws CapacityExceeded.
SuiteReport hunt(PendantClass cls, const HuntOptions& options);

}  // namespace ucc
