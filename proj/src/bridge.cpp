#include "ucc/bridge.hpp"

#include <algorithm>
#include <set>

#include "ucc/error.hpp"

namespace ucc {

IncidenceMap incidenceGraph(const SetFamily& f) {
  if (f.empty()) throw Error(ErrorKind::EmptyFamily, "incidence graph of an empty family");
  IncidenceMap map;
  const MemberSet u = universe(f);
  map.elementForX = u.indices();
  std::vector<std::size_t> xOfElement(f.universeSize(), 0);
  for (std::size_t i = 0; i < map.elementForX.size(); ++i) xOfElement[map.elementForX[i]] = i;

  std::vector<Edge> edges;
  for (std::size_t y = 0; y < f.size(); ++y) {
    const auto& s = f.sets()[y];
    if (s.none())
      throw Error(ErrorKind::EmptyMemberSet, "member set " + std::to_string(y) + " is empty");
    s.forEach([&](std::size_t e) { edges.push_back({xOfElement[e], y}); });
    map.setForY.push_back(y);
  }
  map.graph = BipartiteGraph::build(map.elementForX.size(), f.size(), edges);
  return map;
}

GroundFamily incidenceFamily(const BipartiteGraph& g, Side ground, const IncidenceFamilyOptions& options) {
  const Side other = opposite(ground);
  GroundFamily out;
  std::vector<std::size_t> elementOfVertex(g.size(ground), 0);
  for (std::size_t v = 0; v < g.size(ground); ++v) {
    if (g.neighbors({ground, v}).none()) {
      if (!options.removeIsolated)
        throw Error(ErrorKind::IsolatedVertexPresent,
                    "ground vertex " + toString(VertexRef{ground, v}) + " is isolated");
      out.removedIsolated.push_back(v);
      continue;
    }
    elementOfVertex[v] = out.vertexForElement.size();
    out.vertexForElement.push_back(v);
  }

  const std::size_t n = out.vertexForElement.size();
  std::vector<MemberSet> sets;
  for (std::size_t w = 0; w < g.size(other); ++w) {
    MemberSet s(n);
    g.neighbors({other, w}).forEach([&](std::size_t v) { s.set(elementOfVertex[v]); });
    sets.push_back(s);
  }
  out.family = SetFamily(n, std::move(sets));
  out.twinsCollapsed = out.family.duplicatesCollapsed();
  return out;
}

Prop31Report prop31Check(const BipartiteGraph& input, const Prop31Options& options) {
  const auto ground = incidenceFamily(input, Side::X, options.family);

  // restrict g to the retained X-vertices so both sides index X identically
  Bitset keep = input.allVertices();
  for (auto x : ground.removedIsolated) keep.reset(x);
  const BipartiteGraph g = ground.removedIsolated.empty() ? input : inducedSubgraph(input, keep);

  Prop31Report report;
  report.twinsCollapsed = ground.twinsCollapsed;
  report.removedIsolated = ground.removedIsolated;

  const auto closed = close(ground.family, options.closure);
  report.closureSize = closed.family.size();
  const auto abundant = abundantElements(closed.family);

  std::set<Bitset> traces;
  std::vector<std::uint64_t> tally(g.order(), 0);
  std::uint64_t total = 0;
  const std::function<void(const Bitset&)> visit = [&](const Bitset& s) {
    ++total;
    s.forEach([&](std::size_t v) { ++tally[v]; });
    traces.insert(~splitMask(g, s).x);
  };
  forEachMaximalStable(g, g.allVertices(), g.emptyMask(), g.emptyMask(), options.enumeration, visit);
  report.mssCount = total;
  report.distinctTraces = traces.size();

  const std::set<Bitset> members(closed.family.sets().begin(), closed.family.sets().end());
  report.traceBijection = traces == members;

  for (std::size_t x = 0; x < g.nX(); ++x) {
    const bool rare = 2 * tally[x] <= total;
    const bool isAbund = std::binary_search(abundant.begin(), abundant.end(), x);
    const std::size_t original = ground.vertexForElement[x];
    if (rare) report.rareX.push_back(original);
    if (isAbund) report.abundantX.push_back(original);
    if (rare != isAbund) report.violations.push_back({original, rare, isAbund});
    ++report.checked;
  }
  return report;
}

RoundTripReport roundTrip(const SetFamily& f) {
  const auto map = incidenceGraph(f);
  const auto ground = incidenceFamily(map.graph, Side::X);
  std::vector<MemberSet> relabeled;
  for (const auto& s : ground.family.sets()) {
    MemberSet back(f.universeSize());
    s.forEach([&](std::size_t e) { back.set(map.elementForX[ground.vertexForElement[e]]); });
    relabeled.push_back(back);
  }
  RoundTripReport report;
  report.recovered = SetFamily(f.universeSize(), std::move(relabeled));
  report.twinsCollapsed = ground.twinsCollapsed;
  report.identical = report.recovered.sameSetsAs(f);
  return report;
}

}  // namespace ucc
