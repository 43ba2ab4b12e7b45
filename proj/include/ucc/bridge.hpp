#pragma once

#include <cstddef>
#include <vector>

#include "ucc/bigraph.hpp"
#include "ucc/setfam.hpp"

namespace ucc {

/// Incidence graph of a family: X-vertices are the elements of U(f) (in
/// ascending element order), Y-vertices are the member sets (in family
/// order), and x ~ y iff element x lies in set y.
struct IncidenceMap {
  BipartiteGraph graph;
  /// Position in f.sets() of the member set behind each Y-vertex.
  std::vector<std::size_t> setForY;
  /// Element behind each X-vertex.
  std::vector<ElementId> elementForX;
};

/// Throws EmptyFamily for an empty family and EmptyMemberSet if some member
/// is empty (it would be an isolated Y-vertex).
IncidenceMap incidenceGraph(const SetFamily& f);

struct IncidenceFamilyOptions {
  /// Drop isolated ground vertices instead of throwing IsolatedVertexPresent.
  bool removeIsolated = false;
};

/// F^side = { N(v) : v on the other side }, over a universe indexed by the
/// retained ground-side vertices.
struct GroundFamily {
  SetFamily family;
  /// Ground-side vertex index behind each element.
  std::vector<std::size_t> vertexForElement;
  /// Ground-side vertices dropped because they were isolated.
  std::vector<std::size_t> removedIsolated;
  /// Opposite-side vertices whose neighborhood duplicated an earlier one.
  std::size_t twinsCollapsed = 0;
};

GroundFamily incidenceFamily(const BipartiteGraph& g, Side ground,
                             const IncidenceFamilyOptions& options = {});

struct Prop31Violation {
  std::size_t x = 0;
  bool rare = false;
  bool abundant = false;
};

/// Outcome of comparing rareness in g against abundance in the closure of
/// the X-side incidence family. Violations indicate an implementation bug.
struct Prop31Report {
  std::size_t checked = 0;
  std::vector<Prop31Violation> violations;
  std::vector<std::size_t> rareX;
  std::vector<std::size_t> abundantX;
  MssCount mssCount;
  std::size_t closureSize = 0;
  /// Distinct X-traces of the maximal stable sets.
  std::size_t distinctTraces = 0;
  /// The traces complemented within X coincide with the closure members.
  bool traceBijection = false;
  std::size_t twinsCollapsed = 0;
  std::vector<std::size_t> removedIsolated;

  bool passed() const { return violations.empty() && traceBijection; }
};

struct Prop31Options {
  IncidenceFamilyOptions family;
  EnumerationLimits enumeration;
  ClosureLimits closure;
};

/// Throws IsolatedVertexPresent for isolated X-vertices unless removal is
/// requested, in which case the check runs on g without them.
Prop31Report prop31Check(const BipartiteGraph& g, const Prop31Options& options = {});

struct RoundTripReport {
  bool identical = false;
  /// Families are compared after relabeling through the incidence map.
  SetFamily recovered;
  std::size_t twinsCollapsed = 0;
};

/// incidenceFamily(incidenceGraph(f).graph, X) mapped back to f's labels.
RoundTripReport roundTrip(const SetFamily& f);

}  // namespace ucc
