#include "ucc/setfam.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ucc/error.hpp"

namespace ucc {

namespace {

void checkIndex(const SetFamily& f, ElementId x) {
  if (x >= f.universeSize())
    throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(x) +
                                                " outside universe of size " +
                                                std::to_string(f.universeSize()));
}

}  // namespace

SetFamily::SetFamily(std::size_t universeSize) : universeSize_(universeSize) {
  (void)Bitset(universeSize);  // validates the width
}

SetFamily::SetFamily(std::size_t universeSize, std::vector<MemberSet> sets)
    : SetFamily(universeSize) {
  std::unordered_set<MemberSet, BitsetHash> seen;
  sets_.reserve(sets.size());
  for (auto& s : sets) {
    if (s.width() != universeSize)
      throw Error(ErrorKind::IndexOutOfRange, "member set width " + std::to_string(s.width()) +
                                                  " differs from universe size " +
                                                  std::to_string(universeSize));
    if (seen.insert(s).second)
      sets_.push_back(std::move(s));
    else
      ++duplicatesCollapsed_;
  }
}

SetFamily SetFamily::fromLists(std::size_t universeSize,
                               const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<MemberSet> bits;
  bits.reserve(sets.size());
  for (const auto& s : sets) bits.push_back(Bitset::fromIndices(universeSize, s));
  return SetFamily(universeSize, std::move(bits));
}

bool SetFamily::contains(const MemberSet& s) const {
  return std::find(sets_.begin(), sets_.end(), s) != sets_.end();
}

bool SetFamily::sameSetsAs(const SetFamily& other) const {
  if (universeSize_ != other.universeSize_ || sets_.size() != other.sets_.size()) return false;
  auto a = sets_;
  auto b = other.sets_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

UnionClosedFamily close(const SetFamily& f, const ClosureLimits& limits) {
  const std::size_t n = f.universeSize();
  std::unordered_set<MemberSet, BitsetHash> seen;
  std::vector<MemberSet> members;
  std::vector<std::size_t> frontier;

  auto admit = [&](const MemberSet& s) {
    if (!seen.insert(s).second) return;
    if (members.size() >= limits.maxSets)
      throw Error(ErrorKind::CapacityExceeded,
                  "closure exceeds " + std::to_string(limits.maxSets) + " member sets");
    frontier.push_back(members.size());
    members.push_back(s);
  };

  admit(Bitset(n));
  // every closure member is a union of generators, so extending each new
  // member by each generator reaches the fixed point
  while (!frontier.empty()) {
    const MemberSet current = members[frontier.back()];
    frontier.pop_back();
    for (const auto& g : f.sets()) {
      if (g.isSubsetOf(current)) continue;
      admit(current | g);
    }
  }

  std::sort(members.begin(), members.end());
  return UnionClosedFamily{SetFamily(n, std::move(members)), true};
}

MemberSet universe(const SetFamily& f) {
  Bitset u(f.universeSize());
  for (const auto& s : f.sets()) u |= s;
  return u;
}

std::size_t frequency(const SetFamily& f, ElementId x) {
  checkIndex(f, x);
  return static_cast<std::size_t>(
      std::count_if(f.sets().begin(), f.sets().end(), [x](const MemberSet& s) { return s.test(x); }));
}

bool isAbundant(const SetFamily& f, ElementId x) { return 2 * frequency(f, x) >= f.size(); }

std::vector<ElementId> abundantElements(const SetFamily& f) {
  std::vector<std::size_t> freq(f.universeSize(), 0);
  for (const auto& s : f.sets()) s.forEach([&](std::size_t i) { ++freq[i]; });
  std::vector<ElementId> out;
  for (ElementId x = 0; x < f.universeSize(); ++x)
    if (2 * freq[x] >= f.size()) out.push_back(x);
  return out;
}

std::string_view toString(UccVerdict v) {
  switch (v) {
    case UccVerdict::Holds: return "Holds";
    case UccVerdict::Fails: return "Fails";
    case UccVerdict::Degenerate: return "Degenerate";
  }
  return "?";
}

UccVerdict uccVerdict(const SetFamily& f, const ClosureLimits& limits) {
  const auto closed = close(f, limits);
  if (closed.family.size() == 1) return UccVerdict::Degenerate;
  return abundantElements(closed.family).empty() ? UccVerdict::Fails : UccVerdict::Holds;
}

bool isUnionClosed(const SetFamily& f) {
  std::unordered_set<MemberSet, BitsetHash> members(f.sets().begin(), f.sets().end());
  const auto& sets = f.sets();
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!members.contains(sets[i] | sets[j])) return false;
  return true;
}

FamilyPredicates familyPredicates(const SetFamily& f) {
  FamilyPredicates p;
  const MemberSet u = universe(f);
  std::vector<std::size_t> freq(f.universeSize(), 0);
  bool firstSet = true;
  for (const auto& s : f.sets()) {
    const std::size_t size = s.count();
    p.hasSingleton = p.hasSingleton || size == 1;
    p.hasFullUniverseSet = p.hasFullUniverseSet || (u.any() && s == u);
    p.minMemberSize = firstSet ? size : std::min(p.minMemberSize, size);
    p.maxMemberSize = std::max(p.maxMemberSize, size);
    firstSet = false;
    s.forEach([&](std::size_t i) { ++freq[i]; });
  }
  for (auto v : freq) p.maxFrequency = std::max(p.maxFrequency, v);

  const auto elements = u.indices();
  p.isSeparating = true;
  for (std::size_t i = 0; i < elements.size() && p.isSeparating; ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const auto a = elements[i];
      const auto b = elements[j];
      const bool split = std::any_of(f.sets().begin(), f.sets().end(),
                                     [&](const MemberSet& s) { return s.test(a) != s.test(b); });
      if (!split) {
        p.isSeparating = false;
        break;
      }
    }
  }
  return p;
}

Bitset frequencyOneElements(const SetFamily& f) {
  Bitset seenOnce(f.universeSize());
  Bitset seenTwice(f.universeSize());
  for (const auto& s : f.sets()) {
    seenTwice |= seenOnce & s;
    seenOnce |= s;
  }
  return seenOnce - seenTwice;
}

SetFamily unite(const SetFamily& a, const SetFamily& b) {
  if (a.universeSize() != b.universeSize())
    throw Error(ErrorKind::InvalidParams, "families over different universes");
  auto sets = a.sets();
  sets.insert(sets.end(), b.sets().begin(), b.sets().end());
  return SetFamily(a.universeSize(), std::move(sets));
}

}  // namespace ucc
