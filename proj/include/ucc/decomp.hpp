#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucc/bigraph.hpp"
#include "ucc/setfam.hpp"

namespace ucc {

// ---------------------------------------------------------------------------
// 2-layered vertices

struct TwoLayeredReport {
  VertexRef vertex;
  std::vector<VertexRef> neighborsChecked;
  /// (neighbor, pendant vertex adjacent to it), one entry per neighbor.
  std::vector<std::pair<VertexRef, VertexRef>> pendantWitness;
};

/// A vertex is 2-layered when every neighbor has a pendant neighbor of its
/// own. Vacuously true for isolated vertices. Throws IndexOutOfRange.
std::optional<TwoLayeredReport> isTwoLayered(const BipartiteGraph& g, const VertexRef& v);

/// Variant on the subgraph induced by `domain` that ignores witnesses in
/// `forbidden` (combined masks, vertex given by combined id).
bool isTwoLayeredWithin(const BipartiteGraph& g, const Bitset& domain, std::size_t v,
                        const Bitset& forbidden);

// ---------------------------------------------------------------------------
// Decompositions {C, H}

/// Edge-disjoint split of g. C and H are kept as graphs on g's vertex space
/// together with their vertex masks. A vertex belongs to a part iff it has
/// an edge there; isolated vertices of g are assigned to C. The common set
/// [n] is therefore made of vertices with edges in both parts.
struct Decomposition {
  BipartiteGraph g;
  std::vector<Edge> edgesC;
  std::vector<Edge> edgesH;
  BipartiteGraph c;
  BipartiteGraph h;
  Bitset vertexC;
  Bitset vertexH;
  Bitset common;
  std::vector<VertexRef> commonVertices;
};

/// Raw edge assignment as read from a decomposition file.
struct EdgeSplit {
  BipartiteGraph graph;
  std::vector<Edge> edgesC;
  std::vector<Edge> edgesH;
};

/// Throws Overlap (edge in both parts), Undercover (edge of g in neither),
/// InvalidInstance (edge not in g).
Decomposition validateDecomposition(const BipartiteGraph& g, std::vector<Edge> edgesC,
                                    std::vector<Edge> edgesH);
inline Decomposition validateDecomposition(const EdgeSplit& split) {
  return validateDecomposition(split.graph, split.edgesC, split.edgesH);
}

struct Theorem42Hypotheses {
  bool sameClass = true;
  std::vector<VertexRef> notTwoLayered;
  bool passed() const { return sameClass && notTwoLayered.empty(); }
};

Theorem42Hypotheses theorem42Hypotheses(const Decomposition& d);

struct IdentityCheck {
  std::string identity;
  std::optional<VertexRef> vertex;
  MssCount lhs;
  MssCount rhs;
  bool holds = false;
};

struct Theorem42Report {
  MssCount wG;
  MssCount wC;
  MssCount wH;
  std::vector<VertexRef> rareC;
  std::vector<VertexRef> rareH;
  std::vector<VertexRef> rareG;
  /// Rare in C (anywhere) or in H outside [n], but not rare in G.
  std::vector<VertexRef> lostRare;
  /// Rare in H, in [n], not rare in G. Reported separately.
  std::vector<VertexRef> hCommonAsymmetry;
  std::vector<IdentityCheck> identities;

  bool identitiesHold() const;
  bool passed() const { return lostRare.empty() && hCommonAsymmetry.empty() && identitiesHold(); }
};

/// Rareness in C and H is measured in the standalone part graphs.
/// Throws HypothesisFailed if theorem42Hypotheses fails.
Theorem42Report theorem42Check(const Decomposition& d, const EnumerationLimits& limits = {});

// ---------------------------------------------------------------------------
// Counting lemmas over a part C with common vertex set [n]

struct LemmaInstance {
  std::vector<VertexRef> theta;
  std::vector<VertexRef> gamma;
  /// Second Γ for the disjointness lemma.
  std::vector<VertexRef> gamma2;
  std::optional<VertexRef> distinguished;
};

struct LemmaOptions {
  EnumerationLimits enumeration;
  /// Γ-vertices must be 2-layered in C with pendant witnesses outside [n].
  bool requireTwoLayered = true;
  std::size_t commonLimit = 8;
};

struct Lemma4Report {
  MssCount lhs;
  MssCount rhs;
  std::optional<MssCount> lhsWithB;
  std::optional<MssCount> rhsWithB;
  bool passed() const { return lhs == rhs && lhsWithB == rhsWithB; }
};

/// Counts across the bijection B -> B ∪ Γ between constrained maximal
/// stable sets of C∖Γ and of C. `domain` is V(C) within c's vertex space.
/// Throws InvalidInstance for malformed instances.
Lemma4Report lemma4Check(const BipartiteGraph& c, const Bitset& domain,
                         const std::vector<VertexRef>& common, const LemmaInstance& inst,
                         const LemmaOptions& options = {});
Lemma4Report lemma4Check(const BipartiteGraph& c, const std::vector<VertexRef>& common,
                         const LemmaInstance& inst, const LemmaOptions& options = {});

struct Lemma6Report {
  std::size_t size1 = 0;
  std::size_t size2 = 0;
  std::size_t shared = 0;
  std::optional<std::size_t> sharedWithB;
  bool passed() const { return shared == 0 && sharedWithB.value_or(0) == 0; }
};

/// Distinct Γ1, Γ2 give disjoint constrained collections. Throws
/// InvalidInstance when Γ1 == Γ2 or containments fail.
Lemma6Report lemma6Check(const BipartiteGraph& c, const Bitset& domain,
                         const std::vector<VertexRef>& common, const LemmaInstance& inst,
                         const LemmaOptions& options = {});
Lemma6Report lemma6Check(const BipartiteGraph& c, const std::vector<VertexRef>& common,
                         const LemmaInstance& inst, const LemmaOptions& options = {});

/// Every valid instance of both lemmas over one part (all Θ, Γ, Γ2, b).
struct LemmaSweepReport {
  std::size_t lemma4Instances = 0;
  std::size_t lemma6Instances = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

LemmaSweepReport lemmaSweep(const BipartiteGraph& c, const Bitset& domain,
                            const std::vector<VertexRef>& common, const LemmaOptions& options = {});

struct SumCheck {
  std::optional<VertexRef> vertex;
  MssCount sum;
  MssCount direct;
  bool holds() const { return sum == direct; }
};

struct Lemma7Report {
  SumCheck total;
  std::vector<SumCheck> perB;
  std::vector<SumCheck> perA;
  bool passed() const;
};

/// Triple sums over Θ ⊆ [n], Γ ⊆ Θᶜ, Ψ ⊆ Θᶜ∖Γ compared with direct counts
/// in G. Without b (resp. a) every vertex of V(C)∖[n] (resp. [n]) is checked.
/// Throws CommonSetTooLarge above options.commonLimit, InvalidInstance for a
/// misplaced b or a, HypothesisFailed if the decomposition fails the
/// theorem hypotheses.
Lemma7Report lemma7Check(const Decomposition& d, std::optional<VertexRef> b = std::nullopt,
                         std::optional<VertexRef> a = std::nullopt, const LemmaOptions& options = {});

// ---------------------------------------------------------------------------
// Merging at 2-layered vertices

struct MergePart {
  BipartiteGraph graph;
  VertexRef vertex;
};

struct MergeResult {
  BipartiteGraph graph;
  /// The merged vertex; keeps the position of the first part's vertex.
  VertexRef merged;
  /// vertexMap[i][id] is the merged vertex of part i's combined vertex id.
  std::vector<std::vector<VertexRef>> vertexMap;
  /// Merged edges contributed by each part.
  std::vector<std::vector<Edge>> partEdges;
};

/// Identifies the chosen vertices of vertex-disjoint parts into one vertex
/// in the class of the first part's vertex (other parts are mirrored when
/// needed). The first part keeps its indices; later parts are appended. With two or more
/// parts each chosen vertex must be 2-layered without serving as its own
/// pendant witness, which keeps the merged vertex 2-layered. Throws
/// NotTwoLayered or InvalidParams (no parts).
MergeResult mergeGraphs(const std::vector<MergePart>& parts);

/// C = parts [0, split), H = parts [split, k).
Decomposition mergeDecomposition(const MergeResult& merged, std::size_t split);

struct Prop411Report {
  /// Rare in some part, as merged vertices.
  std::vector<VertexRef> rareInParts;
  std::vector<VertexRef> lost;
  bool passed() const { return lost.empty(); }
};

Prop411Report prop411Check(const std::vector<MergePart>& parts, const EnumerationLimits& limits = {});

// ---------------------------------------------------------------------------
// Pendant-driven consequences

struct RarenessReport {
  std::vector<VertexRef> checked;
  std::vector<VertexRef> notRare;
  bool passed() const { return notRare.empty(); }
};

/// v needs a pendant neighbor and every non-pendant neighbor 2-layered;
/// asserts v and N(v) rare. Throws HypothesisFailed.
RarenessReport prop48Check(const BipartiteGraph& g, const VertexRef& v,
                           const EnumerationLimits& limits = {});

struct Cor49Report {
  Side saturatedClass = Side::X;
  RarenessReport rareness;
  bool passed() const { return rareness.passed(); }
};

/// No isolated vertices and one class entirely adjacent to pendants; asserts
/// every vertex rare. Throws HypothesisFailed.
Cor49Report cor49Check(const BipartiteGraph& g, const EnumerationLimits& limits = {});

// ---------------------------------------------------------------------------
// Set-family counterparts

struct SetVersionReport {
  UccVerdict verdict = UccVerdict::Degenerate;
  /// Elements the proposition promises to be abundant in the closure.
  std::vector<ElementId> expectedAbundant;
  std::vector<ElementId> notAbundant;
  /// Verdict the proposition promises, when it promises one.
  bool verdictRequired = false;
  bool passed() const {
    return notAbundant.empty() && (!verdictRequired || verdict == UccVerdict::Holds);
  }
};

/// F1 and F2 share no member set; every member meeting A = U(F1) ∩ U(F2)
/// holds an element of frequency 1 in F1 ∪ F2. Abundant elements of ⟨F1⟩
/// and ⟨F2⟩ must stay abundant in ⟨F1 ∪ F2⟩.
SetVersionReport setTheorem42Check(const SetFamily& f1, const SetFamily& f2,
                                   const ClosureLimits& limits = {});

/// Member `anchor` holds a frequency-1 element, as does every member meeting
/// it. Every element of the anchor must be abundant in ⟨F⟩.
SetVersionReport setProp48Check(const SetFamily& f, std::size_t anchor,
                                const ClosureLimits& limits = {});

/// Every member holds a frequency-1 element. ⟨F⟩ must satisfy the
/// conjecture with every element of U(F) abundant.
SetVersionReport setCor49Check(const SetFamily& f, const ClosureLimits& limits = {});

/// Families over one index space with pairwise disjoint universes; chosen[i]
/// lies in U(F_i) and every member containing it holds another element of
/// frequency 1. All chosen elements are identified with chosen[0]; abundant
/// elements of each ⟨F_i⟩ must stay abundant in the merged closure.
SetVersionReport setProp411Check(const std::vector<SetFamily>& families,
                                 const std::vector<ElementId>& chosen,
                                 const ClosureLimits& limits = {});

}  // namespace ucc
