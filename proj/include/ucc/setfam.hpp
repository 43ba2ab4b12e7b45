#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ucc/bitset.hpp"

namespace ucc {

/// Dense 0-based element index into a family's universe.
using ElementId = std::size_t;

/// A member set is a bitset whose width is the owning family's universe size.
using MemberSet = Bitset;

/// Ordered, duplicate-free collection of member sets over a universe of
/// `universeSize` dense element indices.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::size_t universeSize);

  /// Duplicates are collapsed (first occurrence wins) and counted in
  /// duplicatesCollapsed(). Throws IndexOutOfRange on a width mismatch.
  SetFamily(std::size_t universeSize, std::vector<MemberSet> sets);

  /// Throws IndexOutOfRange if an index is >= universeSize.
  static SetFamily fromLists(std::size_t universeSize,
                             const std::vector<std::vector<std::size_t>>& sets);

  std::size_t universeSize() const { return universeSize_; }
  const std::vector<MemberSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  std::size_t duplicatesCollapsed() const { return duplicatesCollapsed_; }

  bool contains(const MemberSet& s) const;

  /// Same member sets regardless of order.
  bool sameSetsAs(const SetFamily& other) const;

 private:
  std::size_t universeSize_ = 0;
  std::vector<MemberSet> sets_;
  std::size_t duplicatesCollapsed_ = 0;
};

/// Result of close(): sets are sorted canonically and always include the
/// empty set.
struct UnionClosedFamily {
  SetFamily family;
  bool containsEmpty = true;
};

struct ClosureLimits {
  std::size_t maxSets = std::size_t{1} << 24;
};

/// Smallest union-closed family containing f's sets and the empty set.
/// Throws CapacityExceeded once the closure would exceed limits.maxSets.
UnionClosedFamily close(const SetFamily& f, const ClosureLimits& limits = {});

MemberSet universe(const SetFamily& f);

std::size_t frequency(const SetFamily& f, ElementId x);

/// 2 * frequency >= |f|.
bool isAbundant(const SetFamily& f, ElementId x);

std::vector<ElementId> abundantElements(const SetFamily& f);

enum class UccVerdict { Holds, Fails, Degenerate };
std::string_view toString(UccVerdict v);

/// Evaluates the conjecture on close(f). Fails marks a counterexample
/// candidate.
UccVerdict uccVerdict(const SetFamily& f, const ClosureLimits& limits = {});

bool isUnionClosed(const SetFamily& f);

struct FamilyPredicates {
  bool hasSingleton = false;
  /// Some member equals U(f), with U(f) nonempty.
  bool hasFullUniverseSet = false;
  /// Every pair of distinct elements of U(f) is split by some member.
  bool isSeparating = false;
  std::size_t minMemberSize = 0;
  std::size_t maxMemberSize = 0;
  std::size_t maxFrequency = 0;
};

FamilyPredicates familyPredicates(const SetFamily& f);

/// Elements of U(f) contained in exactly one member set.
Bitset frequencyOneElements(const SetFamily& f);

/// Union of the member lists; duplicates collapse. Universes must match.
SetFamily unite(const SetFamily& a, const SetFamily& b);

}  // namespace ucc
