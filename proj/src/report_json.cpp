#include "ucc/report_json.hpp"

#include <limits>

namespace ucc {

// Vertices are rendered 1-based ("x2", "y1") to match the graph file format.

Json toJson(const MssCount& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

Json toJson(const VertexRef& v) {
  return std::string(v.side == Side::X ? "x" : "y") + std::to_string(v.index + 1);
}

Json toJson(const std::vector<VertexRef>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(toJson(v));
  return out;
}

Json toJson(const Edge& e) { return Json::array({e.x + 1, e.y + 1}); }

Json vertexMask(const BipartiteGraph& g, const Bitset& mask) {
  Json out = Json::array();
  mask.forEach([&](std::size_t id) { out.push_back(toJson(g.ref(id))); });
  return out;
}

Json elements(const std::vector<ElementId>& es, const Labels& labels) {
  Json out = Json::array();
  for (auto e : es) {
    if (e < labels.size())
      out.push_back(labels[e]);
    else
      out.push_back(e);
  }
  return out;
}

Json elements(const Bitset& s, const Labels& labels) { return elements(s.indices(), labels); }

Json toJson(const SetFamily& f, const Labels& labels) {
  Json sets = Json::array();
  for (const auto& s : f.sets()) sets.push_back(elements(s, labels));
  Json out;
  out["universe"] = f.universeSize();
  if (!labels.empty()) out["labels"] = labels;
  out["size"] = f.size();
  out["sets"] = std::move(sets);
  return out;
}

Json toJson(const FamilyPredicates& p) {
  return {{"hasSingleton", p.hasSingleton},     {"hasFullUniverseSet", p.hasFullUniverseSet},
          {"isSeparating", p.isSeparating},     {"minMemberSize", p.minMemberSize},
          {"maxMemberSize", p.maxMemberSize},   {"maxFrequency", p.maxFrequency}};
}

Json graphSummary(const BipartiteGraph& g) {
  return {{"nX", g.nX()}, {"nY", g.nY()}, {"edges", g.edgeCount()}};
}

Json toJson(const StableSetCollection& c, const BipartiteGraph& g) {
  Json sets = Json::array();
  for (const auto& s : c.sets) sets.push_back(vertexMask(g, joinMask(g, s)));
  return {{"count", toJson(c.count())}, {"sets", std::move(sets)}};
}

Json toJson(const MssProfile& p, const BipartiteGraph& g) {
  Json per = Json::object();
  for (std::size_t id = 0; id < p.perVertex.size(); ++id)
    per[toJson(g.ref(id)).get<std::string>()] = toJson(p.perVertex[id]);
  return {{"w", toJson(p.total)}, {"perVertex", std::move(per)}};
}

Json toJson(const RareVertices& r) {
  Json x = Json::array();
  Json y = Json::array();
  for (auto i : r.x) x.push_back(toJson(VertexRef{Side::X, i}));
  for (auto i : r.y) y.push_back(toJson(VertexRef{Side::Y, i}));
  return {{"rareX", std::move(x)}, {"rareY", std::move(y)}};
}

Json toJson(const std::vector<Component>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) {
    Json xs = Json::array();
    Json ys = Json::array();
    for (auto x : c.xToParent) xs.push_back(toJson(VertexRef{Side::X, x}));
    for (auto y : c.yToParent) ys.push_back(toJson(VertexRef{Side::Y, y}));
    out.push_back({{"x", std::move(xs)}, {"y", std::move(ys)}, {"edges", c.graph.edgeCount()}});
  }
  return out;
}

Json toJson(const Prop31Report& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"x", toJson(VertexRef{Side::X, v.x})}, {"rare", v.rare}, {"abundant", v.abundant}});
  auto xs = [](const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(toJson(VertexRef{Side::X, x}));
    return out;
  };
  return {{"checked", r.checked},
          {"violations", std::move(violations)},
          {"rareX", xs(r.rareX)},
          {"abundantX", xs(r.abundantX)},
          {"mssCount", toJson(r.mssCount)},
          {"closureSize", r.closureSize},
          {"distinctTraces", r.distinctTraces},
          {"traceBijection", r.traceBijection},
          {"twinsCollapsed", r.twinsCollapsed},
          {"removedIsolated", xs(r.removedIsolated)},
          {"passed", r.passed()}};
}

Json toJson(const RoundTripReport& r) {
  return {{"identical", r.identical}, {"twinsCollapsed", r.twinsCollapsed}, {"recovered", toJson(r.recovered)}};
}

Json toJson(const TwoLayeredReport& r) {
  Json w = Json::array();
  for (const auto& [n, p] : r.pendantWitness) w.push_back({{"neighbor", toJson(n)}, {"pendant", toJson(p)}});
  return {{"vertex", toJson(r.vertex)}, {"twoLayered", true}, {"neighborsChecked", toJson(r.neighborsChecked)},
          {"pendantWitness", std::move(w)}};
}

Json toJson(const Decomposition& d) {
  Json c = Json::array();
  Json h = Json::array();
  for (const auto& e : d.edgesC) c.push_back(toJson(e));
  for (const auto& e : d.edgesH) h.push_back(toJson(e));
  return {{"graph", graphSummary(d.g)},
          {"edgesC", std::move(c)},
          {"edgesH", std::move(h)},
          {"vertexC", vertexMask(d.g, d.vertexC)},
          {"vertexH", vertexMask(d.g, d.vertexH)},
          {"common", toJson(d.commonVertices)}};
}

Json toJson(const Theorem42Hypotheses& h) {
  return {{"sameClass", h.sameClass}, {"notTwoLayered", toJson(h.notTwoLayered)}, {"passed", h.passed()}};
}

Json toJson(const IdentityCheck& c) {
  Json out;
  out["identity"] = c.identity;
  if (c.vertex) out["vertex"] = toJson(*c.vertex);
  out["lhs"] = toJson(c.lhs);
  out["rhs"] = toJson(c.rhs);
  out["holds"] = c.holds;
  return out;
}

Json toJson(const Theorem42Report& r) {
  Json ids = Json::array();
  for (const auto& c : r.identities) ids.push_back(toJson(c));
  return {{"wG", toJson(r.wG)},
          {"wC", toJson(r.wC)},
          {"wH", toJson(r.wH)},
          {"rareC", toJson(r.rareC)},
          {"rareH", toJson(r.rareH)},
          {"rareG", toJson(r.rareG)},
          {"lostRare", toJson(r.lostRare)},
          {"hCommonAsymmetry", toJson(r.hCommonAsymmetry)},
          {"identities", std::move(ids)},
          {"passed", r.passed()}};
}

Json toJson(const Lemma4Report& r) {
  Json out{{"lhs", toJson(r.lhs)}, {"rhs", toJson(r.rhs)}};
  if (r.lhsWithB) out["lhsWithB"] = toJson(*r.lhsWithB);
  if (r.rhsWithB) out["rhsWithB"] = toJson(*r.rhsWithB);
  out["passed"] = r.passed();
  return out;
}

Json toJson(const Lemma6Report& r) {
  Json out{{"size1", r.size1}, {"size2", r.size2}, {"shared", r.shared}};
  if (r.sharedWithB) out["sharedWithB"] = *r.sharedWithB;
  out["passed"] = r.passed();
  return out;
}

Json toJson(const LemmaSweepReport& r) {
  return {{"lemma4Instances", r.lemma4Instances},
          {"lemma6Instances", r.lemma6Instances},
          {"failures", r.failures},
          {"passed", r.passed()}};
}

Json toJson(const SumCheck& s) {
  Json out;
  if (s.vertex) out["vertex"] = toJson(*s.vertex);
  out["sum"] = toJson(s.sum);
  out["direct"] = toJson(s.direct);
  out["holds"] = s.holds();
  return out;
}

Json toJson(const Lemma7Report& r) {
  Json b = Json::array();
  Json a = Json::array();
  for (const auto& s : r.perB) b.push_back(toJson(s));
  for (const auto& s : r.perA) a.push_back(toJson(s));
  return {{"total", toJson(r.total)}, {"perB", std::move(b)}, {"perA", std::move(a)}, {"passed", r.passed()}};
}

Json toJson(const MergeResult& m) {
  Json maps = Json::array();
  for (const auto& part : m.vertexMap) maps.push_back(toJson(part));
  return {{"graph", graphSummary(m.graph)}, {"merged", toJson(m.merged)}, {"vertexMap", std::move(maps)}};
}

Json toJson(const Prop411Report& r) {
  return {{"rareInParts", toJson(r.rareInParts)}, {"lost", toJson(r.lost)}, {"passed", r.passed()}};
}

Json toJson(const RarenessReport& r) {
  return {{"checked", toJson(r.checked)}, {"notRare", toJson(r.notRare)}, {"passed", r.passed()}};
}

Json toJson(const Cor49Report& r) {
  return {{"saturatedClass", std::string(toString(r.saturatedClass))},
          {"checked", toJson(r.rareness.checked)},
          {"notRare", toJson(r.rareness.notRare)},
          {"passed", r.passed()}};
}

Json toJson(const SetVersionReport& r, const Labels& labels) {
  return {{"verdict", std::string(toString(r.verdict))},
          {"verdictRequired", r.verdictRequired},
          {"expectedAbundant", elements(r.expectedAbundant, labels)},
          {"notAbundant", elements(r.notAbundant, labels)},
          {"passed", r.passed()}};
}

Json toJson(const SuiteReport& r, bool timing) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"instanceId", v.instanceId}, {"predicate", v.predicate}, {"detail", v.detail}});
  Json out{{"suite", r.suiteName},
           {"corpus", r.corpus},
           {"reduction", r.reduction},
           {"instancesChecked", r.instancesChecked},
           {"skipped", r.skipped},
           {"corpusSize", r.corpusSize()},
           {"violations", std::move(violations)},
           {"passed", r.passed()}};
  if (timing) out["elapsedMs"] = r.elapsedMs;
  return out;
}

}  // namespace ucc
