#include "ucc/decomp.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "ucc/error.hpp"

namespace ucc {

namespace {

std::size_t degreeWithin(const BipartiteGraph& g, const Bitset& domain, std::size_t v) {
  return (g.adjacency(v) & domain).count();
}

Bitset maskOf(const BipartiteGraph& g, const std::vector<VertexRef>& vs) {
  Bitset m = g.emptyMask();
  for (const auto& v : vs) {
    g.checkVertex(v);
    m.set(g.id(v));
  }
  return m;
}

std::vector<VertexRef> refsOf(const BipartiteGraph& g, const Bitset& mask) {
  std::vector<VertexRef> out;
  mask.forEach([&](std::size_t id) { out.push_back(g.ref(id)); });
  return out;
}

/// Subset of `items` selected by the low bits of `bits`.
Bitset subsetMask(const std::vector<std::size_t>& items, std::uint32_t bits, std::size_t width) {
  Bitset m(width);
  for (std::size_t i = 0; i < items.size(); ++i)
    if ((bits >> i) & 1U) m.set(items[i]);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<TwoLayeredReport> isTwoLayered(const BipartiteGraph& g, const VertexRef& v) {
  g.checkVertex(v);
  TwoLayeredReport report{v, {}, {}};
  const Side other = opposite(v.side);
  bool ok = true;
  g.neighbors(v).forEach([&](std::size_t u) {
    if (!ok) return;
    const VertexRef neighbor{other, u};
    report.neighborsChecked.push_back(neighbor);
    std::optional<VertexRef> witness;
    g.neighbors(neighbor).forEach([&](std::size_t w) {
      if (!witness && g.neighbors({v.side, w}).count() == 1) witness = VertexRef{v.side, w};
    });
    if (!witness)
      ok = false;
    else
      report.pendantWitness.emplace_back(neighbor, *witness);
  });
  if (!ok) return std::nullopt;
  return report;
}

bool isTwoLayeredWithin(const BipartiteGraph& g, const Bitset& domain, std::size_t v,
                        const Bitset& forbidden) {
  bool ok = true;
  (g.adjacency(v) & domain).forEach([&](std::size_t u) {
    if (!ok) return;
    bool found = false;
    ((g.adjacency(u) & domain) - forbidden).forEach([&](std::size_t w) {
      found = found || degreeWithin(g, domain, w) == 1;
    });
    ok = found;
  });
  return ok;
}

// ---------------------------------------------------------------------------

Decomposition validateDecomposition(const BipartiteGraph& g, std::vector<Edge> edgesC,
                                    std::vector<Edge> edgesH) {
  for (auto* part : {&edgesC, &edgesH}) {
    std::sort(part->begin(), part->end());
    part->erase(std::unique(part->begin(), part->end()), part->end());
    for (const auto& e : *part)
      if (e.x >= g.nX() || e.y >= g.nY() || !g.hasEdge(e.x, e.y))
        throw Error(ErrorKind::InvalidInstance, "assigned edge (" + std::to_string(e.x) + "," +
                                                    std::to_string(e.y) + ") is not in the graph");
  }
  std::vector<Edge> both;
  std::set_intersection(edgesC.begin(), edgesC.end(), edgesH.begin(), edgesH.end(),
                        std::back_inserter(both));
  if (!both.empty())
    throw Error(ErrorKind::Overlap, "edge (" + std::to_string(both.front().x) + "," +
                                        std::to_string(both.front().y) + ") assigned to both parts");
  if (edgesC.size() + edgesH.size() != g.edgeCount())
    throw Error(ErrorKind::Undercover, std::to_string(g.edgeCount() - edgesC.size() - edgesH.size()) +
                                           " edges are assigned to neither part");

  Decomposition d;
  d.g = g;
  d.c = BipartiteGraph::build(g.nX(), g.nY(), edgesC);
  d.h = BipartiteGraph::build(g.nX(), g.nY(), edgesH);
  d.edgesC = std::move(edgesC);
  d.edgesH = std::move(edgesH);
  d.vertexC = g.emptyMask();
  d.vertexH = g.emptyMask();
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (d.c.adjacency(v).any() || g.adjacency(v).none()) d.vertexC.set(v);
    if (d.h.adjacency(v).any()) d.vertexH.set(v);
  }
  d.common = d.vertexC & d.vertexH;
  d.commonVertices = refsOf(g, d.common);
  return d;
}

Theorem42Hypotheses theorem42Hypotheses(const Decomposition& d) {
  Theorem42Hypotheses h;
  h.sameClass = d.common.isSubsetOf(d.g.sideMask(Side::X)) || d.common.isSubsetOf(d.g.sideMask(Side::Y));
  for (const auto& v : d.commonVertices)
    if (!isTwoLayered(d.g, v)) h.notTwoLayered.push_back(v);
  return h;
}

bool Theorem42Report::identitiesHold() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityCheck& c) { return c.holds; });
}

Theorem42Report theorem42Check(const Decomposition& d, const EnumerationLimits& limits) {
  const auto hyp = theorem42Hypotheses(d);
  if (!hyp.passed())
    throw Error(ErrorKind::HypothesisFailed,
                hyp.sameClass ? "common vertices are not all 2-layered"
                              : "common vertices span both classes");
  const auto& g = d.g;
  const auto pG = mssProfile(g, limits);
  const auto pC = mssProfile(d.c, d.vertexC, limits);
  const auto pH = mssProfile(d.h, d.vertexH, limits);

  Theorem42Report r;
  r.wG = pG.total;
  r.wC = pC.total;
  r.wH = pH.total;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const bool rareG = rareCount(pG.perVertex[v], pG.total);
    if (rareG) r.rareG.push_back(g.ref(v));
    if (d.vertexC.test(v) && rareCount(pC.perVertex[v], pC.total)) {
      r.rareC.push_back(g.ref(v));
      if (!rareG) r.lostRare.push_back(g.ref(v));
    }
    if (d.vertexH.test(v) && rareCount(pH.perVertex[v], pH.total)) {
      r.rareH.push_back(g.ref(v));
      if (!rareG) (d.common.test(v) ? r.hCommonAsymmetry : r.lostRare).push_back(g.ref(v));
    }
  }
  std::sort(r.lostRare.begin(), r.lostRare.end());
  r.lostRare.erase(std::unique(r.lostRare.begin(), r.lostRare.end()), r.lostRare.end());

  r.identities.push_back({"wG = wC*wH", std::nullopt, pG.total, pC.total * pH.total,
                          pG.total == pC.total * pH.total});
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto ref = g.ref(v);
    if (d.common.test(v)) {
      const MssCount rhs = pC.perVertex[v] * pH.perVertex[v];
      r.identities.push_back({"wG(a) <= wC(a)*wH(a)", ref, pG.perVertex[v], rhs, pG.perVertex[v] <= rhs});
    } else if (d.vertexC.test(v)) {
      const MssCount rhs = pC.perVertex[v] * pH.total;
      r.identities.push_back({"wG(b) = wC(b)*wH", ref, pG.perVertex[v], rhs, pG.perVertex[v] == rhs});
    } else if (d.vertexH.test(v)) {
      const MssCount rhs = pH.perVertex[v] * pC.total;
      r.identities.push_back({"wG(b) = wH(b)*wC", ref, pG.perVertex[v], rhs, pG.perVertex[v] == rhs});
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct ResolvedInstance {
  Bitset common;
  Bitset theta;
  Bitset gamma;
  Bitset gamma2;
  std::optional<std::size_t> b;
};

ResolvedInstance resolve(const BipartiteGraph& c, const Bitset& domain,
                         const std::vector<VertexRef>& common, const LemmaInstance& inst) {
  ResolvedInstance r{maskOf(c, common), maskOf(c, inst.theta), maskOf(c, inst.gamma),
                     maskOf(c, inst.gamma2), std::nullopt};
  if (!r.common.isSubsetOf(domain))
    throw Error(ErrorKind::InvalidInstance, "common vertices outside the part");
  if (!r.theta.isSubsetOf(r.common)) throw Error(ErrorKind::InvalidInstance, "theta is not inside [n]");
  const Bitset thetaC = r.common - r.theta;
  if (!r.gamma.isSubsetOf(thetaC) || !r.gamma2.isSubsetOf(thetaC))
    throw Error(ErrorKind::InvalidInstance, "gamma is not inside the complement of theta");
  if (inst.distinguished) {
    c.checkVertex(*inst.distinguished);
    r.b = c.id(*inst.distinguished);
    if (!domain.test(*r.b)) throw Error(ErrorKind::InvalidInstance, "b is not a vertex of the part");
  }
  return r;
}

void requireTwoLayered(const BipartiteGraph& c, const Bitset& domain, const Bitset& vertices,
                       const Bitset& common) {
  vertices.forEach([&](std::size_t m) {
    if (!isTwoLayeredWithin(c, domain, m, common))
      throw Error(ErrorKind::InvalidInstance,
                  toString(c.ref(m)) + " is not 2-layered through pendants outside [n]");
  });
}

/// Constrained maximal stable sets of C∖Γ containing Θ (and `extra`), avoiding
/// Θᶜ ∪ N_C(Γ).
Bitset deletedPartExclusion(const BipartiteGraph& c, const Bitset& domain, const Bitset& common,
                            const Bitset& theta, const Bitset& gamma) {
  return (common - theta) | c.neighborhood(gamma, domain);
}

}  // namespace

Lemma4Report lemma4Check(const BipartiteGraph& c, const Bitset& domain,
                         const std::vector<VertexRef>& common, const LemmaInstance& inst,
                         const LemmaOptions& options) {
  const auto r = resolve(c, domain, common, inst);
  if (r.b && r.gamma.test(*r.b)) throw Error(ErrorKind::InvalidInstance, "b lies in gamma");
  if (options.requireTwoLayered) requireTwoLayered(c, domain, r.gamma, r.common);

  const Bitset lhsDomain = domain - r.gamma;
  const Bitset lhsExclude = deletedPartExclusion(c, domain, r.common, r.theta, r.gamma);
  const Bitset rhsInclude = r.theta | r.gamma;
  const Bitset rhsExclude = (r.common - r.theta) - r.gamma;

  Lemma4Report report;
  report.lhs = countMaximalStable(c, lhsDomain, r.theta, lhsExclude, options.enumeration);
  report.rhs = countMaximalStable(c, domain, rhsInclude, rhsExclude, options.enumeration);
  if (r.b) {
    Bitset bMask = c.emptyMask();
    bMask.set(*r.b);
    report.lhsWithB = countMaximalStable(c, lhsDomain, r.theta | bMask, lhsExclude, options.enumeration);
    report.rhsWithB = countMaximalStable(c, domain, rhsInclude | bMask, rhsExclude, options.enumeration);
  }
  return report;
}

Lemma4Report lemma4Check(const BipartiteGraph& c, const std::vector<VertexRef>& common,
                         const LemmaInstance& inst, const LemmaOptions& options) {
  return lemma4Check(c, c.allVertices(), common, inst, options);
}

Lemma6Report lemma6Check(const BipartiteGraph& c, const Bitset& domain,
                         const std::vector<VertexRef>& common, const LemmaInstance& inst,
                         const LemmaOptions& options) {
  const auto r = resolve(c, domain, common, inst);
  if (r.gamma == r.gamma2) throw Error(ErrorKind::InvalidInstance, "gamma1 equals gamma2");

  auto collection = [&](const Bitset& gamma, const Bitset& extra) {
    return collectMaximalStable(c, domain - gamma, r.theta | extra,
                                deletedPartExclusion(c, domain, r.common, r.theta, gamma),
                                options.enumeration);
  };
  auto sharedCount = [](const std::vector<Bitset>& a, const std::vector<Bitset>& b) {
    std::vector<Bitset> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return both.size();
  };

  Lemma6Report report;
  const Bitset none = c.emptyMask();
  const auto first = collection(r.gamma, none);
  const auto second = collection(r.gamma2, none);
  report.size1 = first.size();
  report.size2 = second.size();
  report.shared = sharedCount(first, second);
  if (r.b) {
    Bitset bMask = c.emptyMask();
    bMask.set(*r.b);
    report.sharedWithB = sharedCount(collection(r.gamma, bMask), collection(r.gamma2, bMask));
  }
  return report;
}

Lemma6Report lemma6Check(const BipartiteGraph& c, const std::vector<VertexRef>& common,
                         const LemmaInstance& inst, const LemmaOptions& options) {
  return lemma6Check(c, c.allVertices(), common, inst, options);
}

LemmaSweepReport lemmaSweep(const BipartiteGraph& c, const Bitset& domain,
                            const std::vector<VertexRef>& common, const LemmaOptions& options) {
  const std::size_t n = common.size();
  if (n > options.commonLimit)
    throw Error(ErrorKind::CommonSetTooLarge, std::to_string(n) + " common vertices exceed the limit of " +
                                                  std::to_string(options.commonLimit));
  if (options.requireTwoLayered) {
    const Bitset m = maskOf(c, common);
    requireTwoLayered(c, domain, m, m);
  }

  LemmaSweepReport report;
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  auto pick = [&](std::uint32_t bits) {
    std::vector<VertexRef> out;
    for (std::size_t i = 0; i < n; ++i)
      if ((bits >> i) & 1U) out.push_back(common[i]);
    return out;
  };
  auto label = [&](const char* lemma, std::uint32_t theta, std::uint32_t g1, std::uint32_t g2,
                   std::optional<VertexRef> b) {
    std::string s = std::string(lemma) + " theta=" + std::to_string(theta) + " gamma=" + std::to_string(g1);
    if (g2 != g1) s += " gamma2=" + std::to_string(g2);
    if (b) s += " b=" + toString(*b);
    return s;
  };

  for (std::uint32_t theta = 0; theta <= all; ++theta) {
    const std::uint32_t rest = all & ~theta;
    for (std::uint32_t g1 = rest;; g1 = (g1 - 1) & rest) {
      std::vector<std::optional<VertexRef>> bs{std::nullopt};
      domain.forEach([&](std::size_t id) { bs.push_back(c.ref(id)); });
      for (const auto& b : bs) {
        LemmaInstance inst{pick(theta), pick(g1), {}, b};
        if (!b || !maskOf(c, inst.gamma).test(c.id(*b))) {
          ++report.lemma4Instances;
          if (!lemma4Check(c, domain, common, inst, options).passed())
            report.failures.push_back(label("lemma4", theta, g1, g1, b));
        }
        for (std::uint32_t g2 = rest;; g2 = (g2 - 1) & rest) {
          if (g2 != g1) {
            inst.gamma2 = pick(g2);
            ++report.lemma6Instances;
            if (!lemma6Check(c, domain, common, inst, options).passed())
              report.failures.push_back(label("lemma6", theta, g1, g2, b));
          }
          if (g2 == 0) break;
        }
      }
      if (g1 == 0) break;
    }
  }
  return report;
}

bool Lemma7Report::passed() const {
  auto ok = [](const SumCheck& s) { return s.holds(); };
  return total.holds() && std::all_of(perB.begin(), perB.end(), ok) && std::all_of(perA.begin(), perA.end(), ok);
}

Lemma7Report lemma7Check(const Decomposition& d, std::optional<VertexRef> b, std::optional<VertexRef> a,
                         const LemmaOptions& options) {
  const std::size_t n = d.commonVertices.size();
  if (n > options.commonLimit)
    throw Error(ErrorKind::CommonSetTooLarge, std::to_string(n) + " common vertices exceed the limit of " +
                                                  std::to_string(options.commonLimit));
  if (!theorem42Hypotheses(d).passed())
    throw Error(ErrorKind::HypothesisFailed, "decomposition fails the 2-layered common-class hypotheses");

  const auto& g = d.g;
  std::vector<std::size_t> commonIds;
  d.common.forEach([&](std::size_t id) { commonIds.push_back(id); });

  std::vector<std::size_t> bs;
  std::vector<std::size_t> as;
  if (b) {
    g.checkVertex(*b);
    const auto id = g.id(*b);
    if (!d.vertexC.test(id) || d.common.test(id))
      throw Error(ErrorKind::InvalidInstance, "b must lie in V(C) outside [n]");
    bs.push_back(id);
  }
  if (a) {
    g.checkVertex(*a);
    const auto id = g.id(*a);
    if (!d.common.test(id)) throw Error(ErrorKind::InvalidInstance, "a must lie in [n]");
    as.push_back(id);
  }
  if (!b && !a) {
    (d.vertexC - d.common).forEach([&](std::size_t id) { bs.push_back(id); });
    as = commonIds;
  }

  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  const std::size_t width = g.order();

  // term over a part with vertices Δ removed: w_{P∖Δ}(Θ ∪ extra, Θᶜ ∪ N_P(Δ))
  auto partTerm = [&](const BipartiteGraph& part, const Bitset& domain, std::uint32_t theta,
                      std::uint32_t removed, const Bitset& extra) {
    const Bitset thetaMask = subsetMask(commonIds, theta, width);
    const Bitset removedMask = subsetMask(commonIds, removed, width);
    const Bitset exclude = deletedPartExclusion(part, domain, d.common, thetaMask, removedMask);
    return countMaximalStable(part, domain - removedMask, thetaMask | extra, exclude, options.enumeration);
  };

  auto tripleSum = [&](const Bitset& extraC, const Bitset& extraH) {
    MssCount sum = 0;
    for (std::uint32_t theta = 0; theta <= all; ++theta) {
      const std::uint32_t rest = all & ~theta;
      std::vector<MssCount> hTerm(std::size_t{1} << n);
      for (std::uint32_t psi = rest;; psi = (psi - 1) & rest) {
        hTerm[psi] = partTerm(d.h, d.vertexH, theta, psi, extraH);
        if (psi == 0) break;
      }
      for (std::uint32_t gamma = rest;; gamma = (gamma - 1) & rest) {
        const MssCount cTerm = partTerm(d.c, d.vertexC, theta, gamma, extraC);
        if (cTerm != 0) {
          MssCount inner = 0;
          const std::uint32_t free = rest & ~gamma;
          for (std::uint32_t psi = free;; psi = (psi - 1) & free) {
            inner += hTerm[psi];
            if (psi == 0) break;
          }
          sum += cTerm * inner;
        }
        if (gamma == 0) break;
      }
    }
    return sum;
  };

  const auto pG = mssProfile(g, options.enumeration);
  const Bitset none = g.emptyMask();
  Lemma7Report report;
  report.total = {std::nullopt, tripleSum(none, none), pG.total};
  for (auto id : bs) {
    Bitset extra = none;
    extra.set(id);
    report.perB.push_back({g.ref(id), tripleSum(extra, none), pG.perVertex[id]});
  }
  for (auto id : as) {
    Bitset extra = none;
    extra.set(id);
    report.perA.push_back({g.ref(id), tripleSum(extra, extra), pG.perVertex[id]});
  }
  return report;
}

// ---------------------------------------------------------------------------

MergeResult mergeGraphs(const std::vector<MergePart>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidParams, "merge needs at least one part");
  const Side target = parts.front().vertex.side;
  const bool flipResult = target == Side::Y;

  // work in an orientation where every chosen vertex lies in X
  std::vector<Edge> edges;
  std::vector<std::vector<Edge>> partEdges(parts.size());
  std::vector<std::vector<VertexRef>> oriented(parts.size());
  const std::size_t anchor = parts.front().vertex.index;
  std::size_t nextX = 0;
  std::size_t nextY = 0;

  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    part.graph.checkVertex(part.vertex);
    const bool flip = part.vertex.side == Side::Y;
    const BipartiteGraph local = flip ? part.graph.transposed() : part.graph;
    const std::size_t v = part.vertex.index;

    Bitset forbidden = local.emptyMask();
    if (parts.size() > 1) forbidden.set(v);
    if (!isTwoLayeredWithin(local, local.allVertices(), v, forbidden))
      throw Error(ErrorKind::NotTwoLayered, "part " + std::to_string(i) + " vertex " +
                                                toString(part.vertex) + " is not 2-layered" +
                                                (parts.size() > 1 ? " through other pendants" : ""));

    std::vector<std::size_t> xMap(local.nX());
    std::vector<std::size_t> yMap(local.nY());
    if (i == 0) {
      for (std::size_t x = 0; x < local.nX(); ++x) xMap[x] = x;
      for (std::size_t y = 0; y < local.nY(); ++y) yMap[y] = y;
      nextX = local.nX();
      nextY = local.nY();
    } else {
      for (std::size_t x = 0; x < local.nX(); ++x) xMap[x] = x == v ? anchor : nextX++;
      for (std::size_t y = 0; y < local.nY(); ++y) yMap[y] = nextY++;
    }
    for (const auto& e : local.edges()) {
      edges.push_back({xMap[e.x], yMap[e.y]});
      partEdges[i].push_back(edges.back());
    }
    for (std::size_t id = 0; id < part.graph.order(); ++id) {
      const auto ref = part.graph.ref(id);
      const bool inX = (ref.side == Side::X) != flip;
      oriented[i].push_back(inX ? VertexRef{Side::X, xMap[ref.index]} : VertexRef{Side::Y, yMap[ref.index]});
    }
  }

  MergeResult result;
  BipartiteGraph merged = BipartiteGraph::build(nextX, nextY, edges);
  result.merged = {Side::X, anchor};
  if (flipResult) {
    merged = merged.transposed();
    result.merged.side = Side::Y;
    for (auto& list : partEdges)
      for (auto& e : list) std::swap(e.x, e.y);
    for (auto& list : oriented)
      for (auto& ref : list) ref.side = opposite(ref.side);
  }
  result.graph = std::move(merged);
  result.vertexMap = std::move(oriented);
  result.partEdges = std::move(partEdges);

  if (!isTwoLayered(result.graph, result.merged))
    throw Error(ErrorKind::NotTwoLayered, "merged vertex is not 2-layered");
  return result;
}

Decomposition mergeDecomposition(const MergeResult& merged, std::size_t split) {
  std::vector<Edge> c;
  std::vector<Edge> h;
  for (std::size_t i = 0; i < merged.partEdges.size(); ++i) {
    auto& target = i < split ? c : h;
    target.insert(target.end(), merged.partEdges[i].begin(), merged.partEdges[i].end());
  }
  return validateDecomposition(merged.graph, std::move(c), std::move(h));
}

Prop411Report prop411Check(const std::vector<MergePart>& parts, const EnumerationLimits& limits) {
  const auto merged = mergeGraphs(parts);
  const Bitset rareG = rareMask(merged.graph, merged.graph.allVertices(), limits);
  std::set<VertexRef> rare;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i].graph;
    rareMask(part, part.allVertices(), limits).forEach([&](std::size_t id) { rare.insert(merged.vertexMap[i][id]); });
  }
  Prop411Report report;
  report.rareInParts.assign(rare.begin(), rare.end());
  for (const auto& v : report.rareInParts)
    if (!rareG.test(merged.graph.id(v))) report.lost.push_back(v);
  return report;
}

// ---------------------------------------------------------------------------

namespace {

RarenessReport rarenessOf(const BipartiteGraph& g, const std::vector<VertexRef>& vertices,
                          const EnumerationLimits& limits) {
  const Bitset rare = rareMask(g, g.allVertices(), limits);
  RarenessReport r;
  r.checked = vertices;
  for (const auto& v : vertices)
    if (!rare.test(g.id(v))) r.notRare.push_back(v);
  return r;
}

}  // namespace

RarenessReport prop48Check(const BipartiteGraph& g, const VertexRef& v, const EnumerationLimits& limits) {
  const auto nbrs = neighbors(g, v);
  bool hasPendant = false;
  for (const auto& u : nbrs) {
    if (isPendant(g, u))
      hasPendant = true;
    else if (!isTwoLayered(g, u))
      throw Error(ErrorKind::HypothesisFailed, "non-pendant neighbor " + toString(u) + " is not 2-layered");
  }
  if (!hasPendant) throw Error(ErrorKind::HypothesisFailed, toString(v) + " has no pendant neighbor");
  std::vector<VertexRef> checked{v};
  checked.insert(checked.end(), nbrs.begin(), nbrs.end());
  return rarenessOf(g, checked, limits);
}

Cor49Report cor49Check(const BipartiteGraph& g, const EnumerationLimits& limits) {
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.adjacency(v).none())
      throw Error(ErrorKind::HypothesisFailed, toString(g.ref(v)) + " is isolated");

  auto saturated = [&](Side s) {
    for (std::size_t i = 0; i < g.size(s); ++i) {
      bool found = false;
      g.neighbors({s, i}).forEach([&](std::size_t u) { found = found || isPendant(g, {opposite(s), u}); });
      if (!found) return false;
    }
    return true;
  };
  Cor49Report r;
  if (saturated(Side::X))
    r.saturatedClass = Side::X;
  else if (saturated(Side::Y))
    r.saturatedClass = Side::Y;
  else
    throw Error(ErrorKind::HypothesisFailed, "no class is fully adjacent to pendant vertices");
  r.rareness = rarenessOf(g, refsOf(g, g.allVertices()), limits);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ElementId> missing(const std::vector<ElementId>& expected, const std::vector<ElementId>& have) {
  std::vector<ElementId> out;
  std::set_difference(expected.begin(), expected.end(), have.begin(), have.end(), std::back_inserter(out));
  return out;
}

void requireFrequencyOne(const MemberSet& s, const Bitset& freqOne, const char* what) {
  if (!s.intersects(freqOne))
    throw Error(ErrorKind::HypothesisFailed, "member " + s.toString() + " " + what);
}

}  // namespace

SetVersionReport setTheorem42Check(const SetFamily& f1, const SetFamily& f2, const ClosureLimits& limits) {
  if (f1.universeSize() != f2.universeSize())
    throw Error(ErrorKind::InvalidParams, "families over different universes");
  for (const auto& s : f1.sets())
    if (f2.contains(s)) throw Error(ErrorKind::HypothesisFailed, "member " + s.toString() + " is shared");

  const SetFamily both = unite(f1, f2);
  const Bitset shared = universe(f1) & universe(f2);
  const Bitset freqOne = frequencyOneElements(both);
  for (const auto& s : both.sets())
    if (s.intersects(shared)) requireFrequencyOne(s, freqOne, "meets the shared elements without a frequency-1 element");

  SetVersionReport r;
  std::set<ElementId> expected;
  for (const auto* f : {&f1, &f2}) {
    const auto closed = close(*f, limits);
    const auto ab = abundantElements(closed.family);
    expected.insert(ab.begin(), ab.end());
    r.verdictRequired = r.verdictRequired || (closed.family.size() > 1 && !ab.empty());
  }
  const auto closed = close(both, limits);
  const auto have = abundantElements(closed.family);
  r.verdict = closed.family.size() == 1 ? UccVerdict::Degenerate
                                        : (have.empty() ? UccVerdict::Fails : UccVerdict::Holds);
  r.expectedAbundant.assign(expected.begin(), expected.end());
  r.notAbundant = missing(r.expectedAbundant, have);
  return r;
}

SetVersionReport setProp48Check(const SetFamily& f, std::size_t anchor, const ClosureLimits& limits) {
  if (anchor >= f.size())
    throw Error(ErrorKind::IndexOutOfRange, "anchor member " + std::to_string(anchor) + " out of range");
  const Bitset freqOne = frequencyOneElements(f);
  const MemberSet& a = f.sets()[anchor];
  requireFrequencyOne(a, freqOne, "(anchor) has no frequency-1 element");
  for (const auto& s : f.sets())
    if (s.intersects(a)) requireFrequencyOne(s, freqOne, "meets the anchor without a frequency-1 element");

  SetVersionReport r;
  r.verdictRequired = true;
  r.verdict = uccVerdict(f, limits);
  r.expectedAbundant = a.indices();
  r.notAbundant = missing(r.expectedAbundant, abundantElements(close(f, limits).family));
  return r;
}

SetVersionReport setCor49Check(const SetFamily& f, const ClosureLimits& limits) {
  if (f.empty()) throw Error(ErrorKind::HypothesisFailed, "empty family");
  const Bitset freqOne = frequencyOneElements(f);
  for (const auto& s : f.sets()) requireFrequencyOne(s, freqOne, "has no frequency-1 element");

  SetVersionReport r;
  r.verdictRequired = true;
  r.verdict = uccVerdict(f, limits);
  r.expectedAbundant = universe(f).indices();
  r.notAbundant = missing(r.expectedAbundant, abundantElements(close(f, limits).family));
  return r;
}

SetVersionReport setProp411Check(const std::vector<SetFamily>& families, const std::vector<ElementId>& chosen,
                                 const ClosureLimits& limits) {
  if (families.empty() || families.size() != chosen.size())
    throw Error(ErrorKind::InvalidParams, "need one chosen element per family");
  const std::size_t width = families.front().universeSize();
  Bitset seen(width);
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto& f = families[i];
    if (f.universeSize() != width) throw Error(ErrorKind::InvalidParams, "families over different universes");
    const Bitset u = universe(f);
    if (u.intersects(seen)) throw Error(ErrorKind::HypothesisFailed, "universes are not mutually exclusive");
    seen |= u;
    if (chosen[i] >= width || !u.test(chosen[i]))
      throw Error(ErrorKind::HypothesisFailed, "chosen element " + std::to_string(chosen[i]) + " not in its universe");
    Bitset freqOne = frequencyOneElements(f);
    freqOne.reset(chosen[i]);
    for (const auto& s : f.sets())
      if (s.test(chosen[i])) requireFrequencyOne(s, freqOne, "contains the chosen element without another frequency-1 element");
  }

  const ElementId target = chosen.front();
  auto relabel = [&](const MemberSet& s, ElementId from) {
    MemberSet out = s;
    if (from != target && out.test(from)) {
      out.reset(from);
      out.set(target);
    }
    return out;
  };

  SetVersionReport r;
  std::set<ElementId> expected;
  std::vector<MemberSet> merged;
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto closed = close(families[i], limits);
    const auto ab = abundantElements(closed.family);
    for (auto e : ab) expected.insert(e == chosen[i] ? target : e);
    r.verdictRequired = r.verdictRequired || (closed.family.size() > 1 && !ab.empty());
    for (const auto& s : families[i].sets()) merged.push_back(relabel(s, chosen[i]));
  }
  const SetFamily f(width, std::move(merged));
  const auto closed = close(f, limits);
  const auto have = abundantElements(closed.family);
  r.verdict = closed.family.size() == 1 ? UccVerdict::Degenerate
                                        : (have.empty() ? UccVerdict::Fails : UccVerdict::Holds);
  r.expectedAbundant.assign(expected.begin(), expected.end());
  r.notAbundant = missing(r.expectedAbundant, have);
  return r;
}

}  // namespace ucc
